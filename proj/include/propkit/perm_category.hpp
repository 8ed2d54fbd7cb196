#ifndef PROPKIT_PERM_CATEGORY_HPP
#define PROPKIT_PERM_CATEGORY_HPP

#include <memory>
#include <vector>

#include "propkit/prop.hpp"

namespace propkit {

/// L(Q): the permutative category with objects the finite color lists
/// of Q, monoidal product concatenation, and hom sets inherited from Q.
/// Q must have enumerable homs wherever this is asked to enumerate.
class PermCategory {
public:
  explicit PermCategory(PropPtr prop) : prop_(std::move(prop)) {}

  const PropPtr& underlying_prop() const { return prop_; }

  /// Objects are ColorLists over the underlying prop's colors.
  std::vector<Morphism> hom(const ColorList& a, const ColorList& b) const {
    return prop_->hom(a, b);
  }
  Morphism identity(const ColorList& a) const { return prop_->identity_list(a); }
  Morphism compose(const Morphism& f, const Morphism& g) const {
    return prop_->compose_v(f, g);
  }
  /// The strictly associative product on morphisms.
  Morphism oplus(const Morphism& f, const Morphism& g) const {
    return prop_->compose_h(f, g);
  }
  /// The swap gamma_{a,b}: a + b -> b + a.
  Morphism swap(const ColorList& a, const ColorList& b) const;

  /// The three permutative-category equalities for the given objects.
  bool check_swap_axioms(const ColorList& a, const ColorList& b,
                         const ColorList& c) const;

private:
  PropPtr prop_;
};

PermCategory prop_to_perm(PropPtr prop);

/// U(C) for C = L(Q), truncated to objects of length at most
/// max_object_len so the color set stays finite: colors are the lists,
/// written "[a.b]", and hom((c_i); (d_j)) = Q(flatten c; flatten d).
PropPtr perm_to_prop(const PermCategory& category, int max_object_len);

/// The unit eta_Q: Q -> UL(Q), sending a color to its one-element list.
/// Returns the index of the singleton-list color in perm_to_prop's
/// color set.
int unit_color_index(const PropPtr& q, int color_index);

}  // namespace propkit

#endif
