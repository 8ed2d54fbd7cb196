#ifndef PROPKIT_OPERAD_HPP
#define PROPKIT_OPERAD_HPP

#include <iosfwd>
#include <map>
#include <memory>
#include <vector>

#include "propkit/prop.hpp"

namespace propkit {

/// Block form of a permutation: permutes consecutive blocks of the
/// given sizes the way sigma permutes their indices; the i-th block of
/// the result is block sigma(i) of the input.
Perm block_permutation(const Perm& sigma, const std::vector<int>& sizes);

/// A colored operad: one-output hom sets with identities, operadic
/// composition gamma, and right symmetric actions. Elements reuse the
/// Morphism handle with singleton targets.
class Operad : public std::enable_shared_from_this<Operad> {
public:
  virtual ~Operad() = default;
  virtual std::string name() const = 0;
  virtual const ColorSet& colors() const = 0;
  virtual Morphism identity(const Color& c) const = 0;
  virtual std::vector<Morphism> hom(const ColorList& inputs, const Color& output) const = 0;
  virtual Morphism gamma(const Morphism& g, const std::vector<Morphism>& fs) const = 0;
  virtual Morphism act(const Perm& sigma, const Morphism& f) const = 0;
  virtual bool equal(const Morphism& f, const Morphism& g) const { return f == g; }
  virtual std::optional<int> max_arity() const { return std::nullopt; }
};

using OperadPtr = std::shared_ptr<const Operad>;

/// U: the one-output part of a prop, with gamma(g, fs) given by g
/// vertically composed onto the horizontal composite of the fs.
class PropOperad final : public Operad {
public:
  explicit PropOperad(PropPtr prop) : prop_(std::move(prop)) {}
  std::string name() const override { return "U(" + prop_->name() + ")"; }
  const ColorSet& colors() const override { return prop_->colors(); }
  Morphism identity(const Color& c) const override { return prop_->identity(c); }
  std::vector<Morphism> hom(const ColorList& inputs, const Color& output) const override;
  Morphism gamma(const Morphism& g, const std::vector<Morphism>& fs) const override;
  Morphism act(const Perm& sigma, const Morphism& f) const override;
  bool equal(const Morphism& f, const Morphism& g) const override {
    return prop_->equal(f, g);
  }
  std::optional<int> max_arity() const override { return prop_->max_profile_len(); }
  const PropPtr& prop() const { return prop_; }

private:
  PropPtr prop_;
};

OperadPtr prop_to_operad(PropPtr prop);
OperadPtr terminal_operad();

/// The operad with identities only; the unit for the BV tensor.
OperadPtr trivial_operad(ColorSet colors);

/// Finite operad with explicit gamma and action tables up to an input
/// arity bound; the file format mirrors the table prop format with
/// one-output profiles.
class TableOperad final : public Operad {
public:
  std::string name() const override { return name_; }
  const ColorSet& colors() const override { return colors_; }
  Morphism identity(const Color& c) const override;
  std::vector<Morphism> hom(const ColorList& inputs, const Color& output) const override;
  Morphism gamma(const Morphism& g, const std::vector<Morphism>& fs) const override;
  Morphism act(const Perm& sigma, const Morphism& f) const override;
  std::optional<int> max_arity() const override { return max_arity_; }

  std::vector<Morphism> all_elements() const;

  static std::shared_ptr<const TableOperad> materialize(const OperadPtr& base,
                                                        int max_arity,
                                                        const std::string& name);
  std::string to_string() const;
  static std::shared_ptr<const TableOperad> parse(std::istream& in);
  static std::shared_ptr<const TableOperad> parse_string(const std::string& text);

private:
  struct Element {
    std::string name;
    std::vector<int> inputs;
    int output;
  };
  Morphism wrap(int id) const;
  int unwrap(const Morphism& f) const;

  std::string name_ = "tableoperad";
  ColorSet colors_;
  int max_arity_ = 0;
  std::vector<Element> elements_;
  std::map<std::string, int> by_name_;
  std::map<std::pair<std::vector<int>, int>, std::vector<int>> homs_;
  std::vector<int> identity_;
  std::map<std::pair<int, std::vector<int>>, int> gamma_;
  std::map<std::pair<int, std::vector<int>>, int> act_;
};

using TableOperadPtr = std::shared_ptr<const TableOperad>;

struct OperadAxiomReport {
  long checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Unit, associativity, and equivariance of gamma on every composable
/// tuple within the arity bound.
OperadAxiomReport check_operad_axioms(const OperadPtr& operad, int max_arity,
                                      long max_instances = 20000);

/// F: the free prop on an operad. An element over (a_1..a_n; b_1..b_m)
/// is a function theta from input positions to output positions
/// together with one operad element per output, fed by its fiber in
/// increasing position order.
class OperadProp final : public Prop {
public:
  explicit OperadProp(OperadPtr operad) : operad_(std::move(operad)) {}

  std::string name() const override { return "F(" + operad_->name() + ")"; }
  const ColorSet& colors() const override { return operad_->colors(); }
  Morphism identity(const Color& c) const override;
  Morphism unit() const override;
  Morphism compose_v(const Morphism& f, const Morphism& g) const override;
  Morphism compose_h(const Morphism& f, const Morphism& g) const override;
  Morphism act(const Perm& sigma, const Perm& tau, const Morphism& f) const override;
  std::vector<Morphism> hom(const ColorList& source, const ColorList& target) const override;
  std::optional<int> max_profile_len() const override { return operad_->max_arity(); }

  const OperadPtr& operad() const { return operad_; }
  Morphism make(const ColorList& source, const ColorList& target,
                std::vector<int> theta, std::vector<Morphism> components) const;
  const std::vector<int>& theta(const Morphism& f) const;
  const std::vector<Morphism>& components(const Morphism& f) const;

private:
  OperadPtr operad_;
};

PropPtr operad_to_prop(OperadPtr operad);

/// UF = id: checks that the one-output part of F(O) is O itself, hom
/// set by hom set, compatibly with gamma and the actions.
bool uf_identity_check(const OperadPtr& operad, int max_arity);

/// A map of operads by explicit element images.
struct OperadHom {
  OperadPtr source, target;
  std::vector<int> color_map;
  std::map<std::string, Morphism> images;  // by source element key

  Color map_color(const Color& c) const;
  Morphism apply(const Morphism& f) const;
  bool operator==(const OperadHom& rhs) const {
    return color_map == rhs.color_map && images == rhs.images;
  }
};

/// All operad maps from a finite table operad, checked against the
/// gamma, identity, and action tables.
std::vector<OperadHom> enumerate_operad_homs(const TableOperadPtr& source,
                                             const OperadPtr& target);

/// Finite categories as unary tables; the bridge to operads.
class TableCategory {
public:
  TableCategory(ColorSet objects, std::vector<std::string> arrow_names,
                std::vector<std::pair<int, int>> arrow_profiles,
                std::vector<int> identities, std::map<std::pair<int, int>, int> compose);

  const ColorSet& objects() const { return objects_; }
  int arrow_count() const { return static_cast<int>(names_.size()); }
  const std::string& arrow_name(int a) const { return names_[a]; }
  int source_of(int a) const { return profiles_[a].first; }
  int target_of(int a) const { return profiles_[a].second; }
  int identity_of(int object) const { return identities_[object]; }
  /// compose(f, g) = f after g.
  int compose(int f, int g) const;
  std::vector<int> hom(int a, int b) const;

private:
  ColorSet objects_;
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> profiles_;
  std::vector<int> identities_;
  std::map<std::pair<int, int>, int> compose_;
};

/// U_0: the linear part of an operad as a category (requires finite
/// unary homs).
TableCategory operad_to_category(const OperadPtr& operad);

/// F_0: the operad with the category's arrows as unary operations and
/// empty higher homs.
OperadPtr category_to_operad(const TableCategory& category);

struct Functor {
  std::vector<int> object_map;
  std::vector<int> arrow_map;
  bool operator==(const Functor& rhs) const = default;
};

std::vector<Functor> enumerate_functors(const TableCategory& c, const TableCategory& d);

}  // namespace propkit

#endif
