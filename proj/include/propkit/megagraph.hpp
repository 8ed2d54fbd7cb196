#ifndef PROPKIT_MEGAGRAPH_HPP
#define PROPKIT_MEGAGRAPH_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "propkit/color.hpp"
#include "propkit/perm.hpp"
#include "propkit/prop.hpp"

namespace propkit {

struct Generator {
  std::string name;
  ColorList source;
  ColorList target;
};

class FreeMegagraph;

/// An arrow of the free megagraph on a generator set: the formal
/// product tau . gen . sigma. Distinct triples are distinct arrows.
struct FreeArrow {
  int gen = -1;
  Perm left;   // tau, degree |target(gen)|
  Perm right;  // sigma, degree |source(gen)|

  bool operator==(const FreeArrow& rhs) const = default;
  bool operator<(const FreeArrow& rhs) const {
    if (gen != rhs.gen) return gen < rhs.gen;
    if (left != rhs.left) return left < rhs.left;
    return right < rhs.right;
  }
};

/// The free X0-colored Sigma-bimodule on a finite generator list.
class FreeMegagraph {
public:
  FreeMegagraph() = default;
  FreeMegagraph(ColorSet colors, std::vector<Generator> generators);

  const ColorSet& colors() const { return colors_; }
  int generator_count() const { return static_cast<int>(gens_.size()); }
  const Generator& generator(int i) const { return gens_[i]; }
  int generator_index(const std::string& name) const;  // -1 if unknown

  FreeArrow arrow(int gen) const;
  FreeArrow arrow(const std::string& name) const;
  /// s(tau.g.sigma) = s(g).sigma, t(tau.g.sigma) = tau.t(g).
  ColorList source(const FreeArrow& x) const;
  ColorList target(const FreeArrow& x) const;
  /// tau'.(tau.g.sigma).sigma' = (tau'tau).g.(sigma sigma').
  FreeArrow act(const FreeArrow& x, const Perm& tau, const Perm& sigma) const;

  std::string arrow_key(const FreeArrow& x) const;

  /// Structured text: "colors a,b" then one "gen <name> : <src> -> <dst>"
  /// line per generator (lists comma-separated, possibly empty).
  std::string to_string() const;
  static FreeMegagraph parse(std::istream& in);
  static FreeMegagraph parse_string(const std::string& text);

private:
  ColorSet colors_;
  std::vector<Generator> gens_;
};

/// The underlying megagraph of a prop: objects are the prop's colors,
/// arrows its morphisms, actions the prop's actions.
class PropMegagraph {
public:
  explicit PropMegagraph(PropPtr prop) : prop_(std::move(prop)) {}

  const PropPtr& prop() const { return prop_; }
  const ColorSet& colors() const { return prop_->colors(); }
  ColorList source(const Morphism& x) const { return x.source(); }
  ColorList target(const Morphism& x) const { return x.target(); }
  Morphism act(const Morphism& x, const Perm& tau, const Perm& sigma) const {
    return prop_->act(sigma, tau, x);
  }

  /// Checks the equivariance squares t(tau.x) = tau.t(x) and
  /// s(x.sigma) = s(x).sigma plus the interchange, over all listed
  /// arrows and all permutations of the matching degrees.
  bool validate(const std::vector<Morphism>& sample) const;

private:
  PropPtr prop_;
};

/// A megagraph map X -> U(T) out of a free megagraph, specified by a
/// color map and generator images and extended equivariantly.
class MegaMapToProp {
public:
  MegaMapToProp() = default;
  MegaMapToProp(FreeMegagraph src, PropPtr dst, std::vector<int> color_map,
                std::vector<Morphism> gen_images);

  const FreeMegagraph& source_mega() const { return src_; }
  const PropPtr& target_prop() const { return dst_; }
  Color map_color(const Color& c) const;
  ColorList map_colors(const ColorList& cs) const;
  const Morphism& gen_image(int gen) const { return gen_images_[gen]; }

  /// True iff both compatibility squares commute on the generators
  /// (hence, by equivariant extension, on all arrows).
  bool valid() const;
  Morphism apply(const FreeArrow& x) const;

  bool operator==(const MegaMapToProp& rhs) const;

private:
  FreeMegagraph src_;
  PropPtr dst_;
  std::vector<int> color_map_;  // source color index -> target color index
  std::vector<Morphism> gen_images_;
};

/// A megagraph map between free megagraphs, by generator images.
class MegaMapToFree {
public:
  MegaMapToFree() = default;
  MegaMapToFree(FreeMegagraph src, FreeMegagraph dst,
                std::vector<int> color_map, std::vector<FreeArrow> gen_images);

  const FreeMegagraph& source_mega() const { return src_; }
  const FreeMegagraph& target_mega() const { return dst_; }
  Color map_color(const Color& c) const;
  ColorList map_colors(const ColorList& cs) const;

  bool valid() const;
  FreeArrow apply(const FreeArrow& x) const;

  static MegaMapToFree identity(const FreeMegagraph& mg);
  MegaMapToFree compose_after(const MegaMapToFree& first) const;  // this o first

private:
  FreeMegagraph src_, dst_;
  std::vector<int> color_map_;
  std::vector<FreeArrow> gen_images_;
};

/// Enumerates every megagraph map X -> U(T) for a finite-hom prop T,
/// deterministic order.
std::vector<MegaMapToProp> enumerate_mega_maps(const FreeMegagraph& mg,
                                               const PropPtr& target);

}  // namespace propkit

#endif
