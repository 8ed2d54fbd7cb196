#ifndef PROPKIT_PROP_HOM_HPP
#define PROPKIT_PROP_HOM_HPP

#include <map>
#include <memory>
#include <vector>

#include "propkit/free_prop.hpp"
#include "propkit/presentation.hpp"
#include "propkit/prop.hpp"

namespace propkit {

/// A prop homomorphism: a color map plus a morphism map commuting with
/// every operation. Three realizations cover the artifact: generator
/// images evaluated through the free-prop adjunction (sources with a
/// megagraph), explicit tables keyed by morphism (finite sources), and
/// the collapse onto the terminal prop.
class PropHom {
public:
  PropHom() = default;

  static PropHom from_generators(PropPtr source, FreeMegagraph mega, PropPtr target,
                                 std::vector<int> color_map,
                                 std::vector<Morphism> gen_images);
  static PropHom from_table(PropPtr source, PropPtr target,
                            std::vector<int> color_map,
                            std::map<std::string, Morphism> images_by_key);
  static PropHom to_terminal(PropPtr source, PropPtr star);
  static PropHom identity_hom(PropPtr prop);

  const PropPtr& source() const { return source_; }
  const PropPtr& target() const { return target_; }
  const std::vector<int>& color_map() const { return color_map_; }

  Color map_color(const Color& c) const;
  ColorList map_colors(const ColorList& cs) const;
  Morphism apply(const Morphism& f) const;

  /// Structural validity: generator images have the mapped profiles and
  /// every relation of a presented source holds in the target (decided
  /// by target equality).
  bool valid() const;

  /// Checks the homomorphism squares on the sample: compositions,
  /// identities, unit, and both actions.
  bool check_homomorphism(const std::vector<Morphism>& sample,
                          int max_perm_degree = 3) const;

  const std::vector<Morphism>& gen_images() const { return gen_images_; }

  bool operator==(const PropHom& rhs) const;
  bool operator<(const PropHom& rhs) const;
  std::string describe() const;

private:
  enum class Strategy { generators, table, terminal, identity };

  Strategy strategy_ = Strategy::identity;
  PropPtr source_, target_;
  std::vector<int> color_map_;
  FreeMegagraph mega_;                     // generators strategy
  std::vector<Morphism> gen_images_;       // generators strategy
  std::map<std::string, Morphism> table_;  // table strategy
};

/// Every prop map from a source presented by generators and relations
/// (a FreeProp or PresentedProp) into a finite-hom target, in a
/// deterministic order: megagraph maps filtered by the relations.
std::vector<PropHom> enumerate_prop_homs(const PropPtr& source, const PropPtr& target);

/// The adjunction transposes. extend turns a megagraph map X -> U(T)
/// into the unique prop map F(X) -> T restricting to it; transpose
/// restricts a prop map along the corolla inclusion.
PropHom extend_mega_map(const std::shared_ptr<const FreeProp>& fp, MegaMapToProp f);
MegaMapToProp adjunction_transpose(const std::shared_ptr<const FreeProp>& fp,
                                   const PropHom& k);

/// A T-algebra is a prop map into an endomorphism prop; checks validity
/// plus the homomorphism squares on the sample.
bool algebra_check(const PropHom& algebra, const std::vector<Morphism>& sample);

}  // namespace propkit

#endif
