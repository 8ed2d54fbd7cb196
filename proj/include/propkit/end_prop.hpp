#ifndef PROPKIT_END_PROP_HPP
#define PROPKIT_END_PROP_HPP

#include <memory>
#include <vector>

#include "propkit/prop.hpp"

namespace propkit {

/// The endomorphism prop of a family of finite sets indexed by colors:
/// hom((c_i); (d_k)) is the set of all functions from the product of
/// the X_{c_i} to the product of the X_{d_k}. Elements of a product are
/// mixed-radix tuples; a morphism's payload is its value table.
class EndProp final : public Prop {
public:
  EndProp(ColorSet colors, std::vector<int> set_sizes);

  std::string name() const override;
  const ColorSet& colors() const override { return colors_; }
  int set_size(const Color& c) const;

  Morphism identity(const Color& c) const override;
  Morphism unit() const override;
  Morphism compose_v(const Morphism& f, const Morphism& g) const override;
  Morphism compose_h(const Morphism& f, const Morphism& g) const override;
  Morphism act(const Perm& sigma, const Perm& tau, const Morphism& f) const override;
  std::vector<Morphism> hom(const ColorList& source,
                            const ColorList& target) const override;

  /// The function with the given value table (tuple index -> tuple
  /// index, mixed-radix with the first factor most significant).
  Morphism function(const ColorList& source, const ColorList& target,
                    std::vector<int> table) const;
  const std::vector<int>& table(const Morphism& f) const;

  long domain_size(const ColorList& cs) const;
  /// Decodes a tuple index into factor values.
  std::vector<int> decode(const ColorList& cs, long index) const;
  long encode(const ColorList& cs, const std::vector<int>& values) const;

private:
  ColorSet colors_;
  std::vector<int> sizes_;
};

using EndPropPtr = std::shared_ptr<const EndProp>;

EndPropPtr make_end_prop(ColorSet colors, std::vector<int> set_sizes);
/// Monochrome endomorphism prop on one set of the given size.
EndPropPtr make_end_prop(int set_size);

}  // namespace propkit

#endif
