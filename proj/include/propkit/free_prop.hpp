#ifndef PROPKIT_FREE_PROP_HPP
#define PROPKIT_FREE_PROP_HPP

#include <memory>
#include <vector>

#include "propkit/decoration.hpp"
#include "propkit/megagraph.hpp"
#include "propkit/prop.hpp"

namespace propkit {

struct FreeMorphismPayload final : MorphismPayload {
  CanonicalDecoration canon;
};

/// The free prop on a free megagraph: morphisms are equivalence classes
/// of decorations, represented canonically. Hom sets are infinite in
/// general; hom() enumerates up to the configured vertex bound.
class FreeProp final : public Prop {
public:
  explicit FreeProp(FreeMegagraph mg, int default_max_vertices = 3);

  const FreeMegagraph& mega() const { return mg_; }
  int default_max_vertices() const { return bound_; }

  std::string name() const override;
  const ColorSet& colors() const override { return mg_.colors(); }

  Morphism identity(const Color& c) const override;
  Morphism unit() const override;
  Morphism compose_v(const Morphism& f, const Morphism& g) const override;
  Morphism compose_h(const Morphism& f, const Morphism& g) const override;
  Morphism act(const Perm& sigma, const Perm& tau, const Morphism& f) const override;
  std::vector<Morphism> hom(const ColorList& source,
                            const ColorList& target) const override;
  std::string show(const Morphism& f) const override;

  Morphism corolla(const FreeArrow& x) const;
  Morphism corolla(const std::string& gen_name) const;
  /// Canonicalizes an arbitrary valid decoration into a morphism.
  Morphism from_decoration(const Decoration& d) const;
  const CanonicalDecoration& canonical(const Morphism& f) const;

  /// Complete enumeration of the hom set over decorations with at most
  /// max_vertices vertices; deterministic order (vertex count, then
  /// canonical code).
  std::vector<Morphism> enumerate_hom(const ColorList& source,
                                      const ColorList& target,
                                      int max_vertices) const;

private:
  FreeMegagraph mg_;
  int bound_;
};

using FreePropPtr = std::shared_ptr<const FreeProp>;

inline FreePropPtr make_free_prop(FreeMegagraph mg, int default_max_vertices = 3) {
  return std::make_shared<FreeProp>(std::move(mg), default_max_vertices);
}

/// The K map of the adjunction: evaluates a decoration in the target of
/// a megagraph map, by the corolla base cases, vertical splitting off a
/// source vertex, and horizontal factorization. Works on any valid
/// decoration, canonical or not.
Morphism evaluate_decoration(const Decoration& d, const MegaMapToProp& f);

Morphism evaluate_free_morphism(const FreeProp& fp, const Morphism& m,
                                const MegaMapToProp& f);

/// Functorial relabeling F(g) along a megagraph map between free
/// megagraphs.
Morphism map_free_morphism(const FreeProp& src, const FreeProp& dst,
                           const MegaMapToFree& g, const Morphism& m);

}  // namespace propkit

#endif
