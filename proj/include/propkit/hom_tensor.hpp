#ifndef PROPKIT_HOM_TENSOR_HPP
#define PROPKIT_HOM_TENSOR_HPP

#include <map>
#include <memory>
#include <vector>

#include "propkit/presentation.hpp"
#include "propkit/prop_hom.hpp"

namespace propkit {

/// A candidate (p,q) transformation between lists of prop maps R -> T:
/// one component per color of R, living in T(f_1 a .. f_p a; g_1 a .. g_q a).
struct NatTransData {
  PropPtr target;  // T
  std::vector<PropHom> sources;
  std::vector<PropHom> targets;
  std::vector<Morphism> components;  // indexed by R color index

  const Morphism& component(const Color& c) const { return components[c.index()]; }
};

/// The naturality octagon for one morphism phi of R, evaluated in T:
/// both composites of the defining equation, with the four interchange
/// permutations spelled out as block transposes.
bool check_octagon(const NatTransData& xi, const Morphism& phi);

/// Octagon over every morphism in the set.
bool check_natural_on_set(const NatTransData& xi, const std::vector<Morphism>& s);

/// The internal hom prop: colors are prop maps R -> T, hom sets are the
/// (p,q) natural transformations, operations componentwise. R must be a
/// free or presented prop and T finitely enumerable; naturality is
/// decided on R's generators.
class HomProp final : public Prop {
public:
  HomProp(PropPtr r, PropPtr t);

  std::string name() const override;
  const ColorSet& colors() const override { return colors_; }
  const PropPtr& source_prop() const { return r_; }
  const PropPtr& target_prop() const { return t_; }

  int hom_color_count() const { return static_cast<int>(maps_.size()); }
  const PropHom& map_of(const Color& c) const;
  /// The color whose prop map equals the given one.
  Color color_of(const PropHom& h) const;

  Morphism identity(const Color& c) const override;
  Morphism unit() const override;
  Morphism compose_v(const Morphism& f, const Morphism& g) const override;
  Morphism compose_h(const Morphism& f, const Morphism& g) const override;
  Morphism act(const Perm& sigma, const Perm& tau, const Morphism& f) const override;
  bool equal(const Morphism& f, const Morphism& g) const override;
  std::vector<Morphism> hom(const ColorList& source,
                            const ColorList& target) const override;

  Morphism transformation(const ColorList& source, const ColorList& target,
                          std::vector<Morphism> components) const;
  const std::vector<Morphism>& components(const Morphism& f) const;
  NatTransData data_of(const Morphism& f) const;

private:
  NatTransData to_data(const ColorList& source, const ColorList& target,
                       const std::vector<Morphism>& components) const;

  PropPtr r_, t_;
  std::vector<PropHom> maps_;
  std::vector<Morphism> r_gens_;
  ColorSet colors_;
};

std::shared_ptr<const HomProp> make_hom_prop(PropPtr r, PropPtr t);

/// A bilinear map (R, S) -> T on presentations: a color table plus
/// generator images in both variables.
struct BilinearData {
  PresentedPropPtr r, s;
  PropPtr t;
  std::vector<std::vector<int>> color_map;           // [colR][colS] -> colT
  std::vector<std::vector<Morphism>> r_gen_images;   // [genR][colS]
  std::vector<std::vector<Morphism>> s_gen_images;   // [colR][genS]

  Color map_color(const Color& a, const Color& c) const;
  /// chi(a, -): S -> T and chi(-, c): R -> T as prop maps.
  PropHom fix_r_color(const Color& a) const;
  PropHom fix_s_color(const Color& c) const;

  bool operator==(const BilinearData& rhs) const {
    return color_map == rhs.color_map && r_gen_images == rhs.r_gen_images &&
           s_gen_images == rhs.s_gen_images;
  }
  bool operator<(const BilinearData& rhs) const {
    if (color_map != rhs.color_map) return color_map < rhs.color_map;
    if (r_gen_images != rhs.r_gen_images) return r_gen_images < rhs.r_gen_images;
    return s_gen_images < rhs.s_gen_images;
  }
};

/// Both partial maps are prop maps and the bilinear octagon commutes on
/// every generator pair.
bool check_bilinear(const BilinearData& chi);

/// All bilinear maps (R, S) -> T, enumerated and filtered.
std::vector<BilinearData> enumerate_bilinear(const PresentedPropPtr& r,
                                             const PresentedPropPtr& s,
                                             const PropPtr& t);

/// Currying: a bilinear map as a prop map R -> Hom(S, T), and back.
PropHom curry_bilinear(const BilinearData& chi,
                       const std::shared_ptr<const HomProp>& hom_st);
BilinearData uncurry(const PropHom& k, const PresentedPropPtr& r,
                     const PresentedPropPtr& s,
                     const std::shared_ptr<const HomProp>& hom_st);
/// The other variable: R and S exchanged.
PropHom curry_bilinear_flip(const BilinearData& chi,
                            const std::shared_ptr<const HomProp>& hom_rt);

/// The pushout R # S: colors Col R x Col S, a copy of each R generator
/// per S color and vice versa, with both relation families injected.
Presentation sharp_presentation(const Presentation& r, const Presentation& s);

/// R (x) S: the sharp presentation plus one octagon relation per pair
/// of generators.
Presentation tensor_presentation(const Presentation& r, const Presentation& s);

/// Names used by the sharp/tensor presentations.
std::string tensor_color_name(const std::string& r_color, const std::string& s_color);
std::string tensor_rgen_name(const std::string& r_gen, const std::string& s_color);
std::string tensor_sgen_name(const std::string& r_color, const std::string& s_gen);

/// The prop map R (x) S -> T classified by a bilinear map.
PropHom induced_map(const BilinearData& chi, const PresentedPropPtr& tensor);

/// Reads the bilinear map back off a map out of the tensor presentation.
BilinearData restrict_to_bilinear(const PropHom& k, const PresentedPropPtr& r,
                                  const PresentedPropPtr& s,
                                  const PresentedPropPtr& tensor);

/// Boardman-Vogt tensor of operad presentations (single-output
/// generators): shared colors/generators scheme with the interchange
/// relations of the one-output octagon, built independently of
/// tensor_presentation.
Presentation bv_tensor(const Presentation& o, const Presentation& p);

/// |Hom(F(O (x)_BV P), T)| against |Hom(F(O) (x) F(P), T)| for each
/// finite target.
bool bv_compat_check(const Presentation& o, const Presentation& p,
                     const std::vector<PropPtr>& targets, int vertex_bound = 2,
                     int rewrite_depth = 3);

}  // namespace propkit

#endif
