#ifndef PROPKIT_TABLE_PROP_HPP
#define PROPKIT_TABLE_PROP_HPP

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "propkit/prop.hpp"

namespace propkit {

/// A finite prop given by explicit hom listings and total composition,
/// identity, and action tables up to a profile-length bound. Lookups
/// beyond the tables are rejected with a clear error. Built either by
/// materializing another finite prop or by parsing the table file
/// format, which is also how test fixtures inject faults.
class TableProp final : public Prop {
public:
  std::string name() const override { return name_; }
  const ColorSet& colors() const override { return colors_; }
  int max_len() const { return max_len_; }
  std::optional<int> max_profile_len() const override { return max_len_; }

  Morphism identity(const Color& c) const override;
  Morphism unit() const override;
  Morphism compose_v(const Morphism& f, const Morphism& g) const override;
  Morphism compose_h(const Morphism& f, const Morphism& g) const override;
  Morphism act(const Perm& sigma, const Perm& tau, const Morphism& f) const override;
  std::vector<Morphism> hom(const ColorList& source,
                            const ColorList& target) const override;

  Morphism element(const std::string& name) const;

  /// Snapshots every hom set and operation of a finite prop on profiles
  /// of length at most max_len.
  static std::shared_ptr<const TableProp> materialize(const PropPtr& base,
                                                      int max_len,
                                                      const std::string& name);

  std::string to_string() const;
  static std::shared_ptr<const TableProp> parse(std::istream& in);
  static std::shared_ptr<const TableProp> parse_string(const std::string& text);

private:
  struct Element {
    std::string name;
    std::vector<int> source, target;  // color indices
  };

  ColorList to_list(const std::vector<int>& idx) const;
  std::vector<int> to_idx(const ColorList& cs) const;
  Morphism wrap(int id) const;
  int unwrap(const Morphism& f) const;
  void check_len(const ColorList& cs, const std::string& where) const;

  std::string name_ = "table";
  ColorSet colors_;
  int max_len_ = 0;
  std::vector<Element> elements_;
  std::map<std::string, int> by_name_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<int>> homs_;
  std::vector<int> identity_;  // per color
  int unit_ = -1;
  std::map<std::pair<int, int>, int> vcomp_;
  std::map<std::pair<int, int>, int> hcomp_;
  std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int> act_;
};

using TablePropPtr = std::shared_ptr<const TableProp>;

}  // namespace propkit

#endif
