#ifndef PROPKIT_PRESENTATION_HPP
#define PROPKIT_PRESENTATION_HPP

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "propkit/free_prop.hpp"
#include "propkit/rewrite.hpp"
#include "propkit/term.hpp"

namespace propkit {

/// Generators and relations: a free megagraph plus pairs of closed
/// terms with equal profiles.
struct Presentation {
  FreeMegagraph mega;
  std::vector<std::pair<Term, Term>> relations;

  /// Parses terms against the megagraph and checks equal profiles.
  void validate() const;

  /// File format: the megagraph block followed by lines
  /// "rel <term> = <term>".
  std::string to_string() const;
  static Presentation parse(std::istream& in);
  static Presentation parse_string(const std::string& text);
};

/// Evaluates a term in the free prop on the presentation's megagraph.
Morphism eval_in_free(const Presentation& p, const FreeProp& fp, const Term& t);

/// The prop presented by generators and relations, explored by bounded
/// rewriting. Morphism handles carry free-prop canonical forms; two
/// handles are equal when the bounded word search connects them, so
/// equality is decided through equal()/word_equal(), never by key.
class PresentedProp final : public Prop {
public:
  PresentedProp(Presentation pres, int vertex_bound = 3, int rewrite_depth = 4);

  const Presentation& presentation() const { return pres_; }
  const FreeProp& free_prop() const { return *free_; }
  int rewrite_depth() const { return depth_; }

  std::string name() const override;
  const ColorSet& colors() const override { return free_->colors(); }
  Morphism identity(const Color& c) const override;
  Morphism unit() const override;
  Morphism compose_v(const Morphism& f, const Morphism& g) const override;
  Morphism compose_h(const Morphism& f, const Morphism& g) const override;
  Morphism act(const Perm& sigma, const Perm& tau, const Morphism& f) const override;
  bool equal(const Morphism& f, const Morphism& g) const override;

  /// Free enumeration up to the vertex bound, merged by rewrite steps
  /// inside the enumerated set; one least representative per class.
  std::vector<Morphism> hom(const ColorList& source,
                            const ColorList& target) const override;

  Morphism generator(const std::string& name) const;
  Morphism eval(const Term& t) const;

  WordVerdict word_equal(const Morphism& a, const Morphism& b) const;
  WordVerdict word_equal(const Term& a, const Term& b) const;

  /// Registers an algebra (a relation-respecting megagraph map into a
  /// finite prop) used to certify `distinct` verdicts.
  void register_separating_algebra(MegaMapToProp algebra);

private:
  Presentation pres_;
  FreePropPtr free_;
  std::shared_ptr<RewriteSystem> rewrites_;
  int depth_;
  std::vector<MegaMapToProp> algebras_;
};

using PresentedPropPtr = std::shared_ptr<PresentedProp>;

PresentedPropPtr make_presented_prop(Presentation pres, int vertex_bound = 3,
                                     int rewrite_depth = 4);

/// A presentation-level prop map: a color map plus one target term per
/// generator.
struct PresentationMap {
  int source = -1, target = -1;       // object indices within a diagram
  std::vector<int> color_map;         // source color index -> target color index
  std::vector<Term> gen_terms;        // per source generator
};

/// Finite colimit of presentations: disjoint union of colors and
/// generators with colors merged along the arrows and one relation
/// inj_src(g) = inj_dst(arrow(g)) per arrow and generator, on top of
/// the injected relations.
Presentation colimit_presentation(const std::vector<Presentation>& objects,
                                  const std::vector<PresentationMap>& arrows);

/// Convenience wrappers built on colimit_presentation.
Presentation coproduct_presentation(const Presentation& a, const Presentation& b);

}  // namespace propkit

#endif
