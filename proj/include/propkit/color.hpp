#ifndef PROPKIT_COLOR_HPP
#define PROPKIT_COLOR_HPP

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "propkit/perm.hpp"

namespace propkit {

class Color;
class ColorList;

/// An interned, immutable set of color names. Colors belong to exactly
/// one set; colors from distinct sets never compare equal even if their
/// names coincide.
class ColorSet {
public:
  ColorSet() : names_(std::make_shared<const std::vector<std::string>>()) {}
  explicit ColorSet(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_->size()); }
  const std::string& name(int i) const { return (*names_)[i]; }
  Color color(int i) const;
  Color color(const std::string& name) const;  // throws if unknown
  int index_of(const std::string& name) const; // -1 if unknown
  std::vector<Color> all() const;

  bool same_set(const ColorSet& rhs) const { return names_ == rhs.names_; }
  // Identity comparison: two ColorSet values denote the same set of
  // colors only when they share storage.
  bool operator==(const ColorSet& rhs) const { return names_ == rhs.names_; }

private:
  std::shared_ptr<const std::vector<std::string>> names_;
  friend class Color;
};

class Color {
public:
  Color() = default;
  Color(ColorSet owner, int index) : owner_(std::move(owner)), index_(index) {}

  const ColorSet& owner() const { return owner_; }
  int index() const { return index_; }
  const std::string& name() const { return owner_.name(index_); }

  bool operator==(const Color& rhs) const {
    return owner_ == rhs.owner_ && index_ == rhs.index_;
  }
  bool operator!=(const Color& rhs) const { return !(*this == rhs); }
  bool operator<(const Color& rhs) const {
    if (owner_.names_ != rhs.owner_.names_)
      return owner_.names_ < rhs.owner_.names_;
    return index_ < rhs.index_;
  }

private:
  ColorSet owner_;
  int index_ = -1;
};

/// An ordered, possibly empty list of colors from one color set.
class ColorList {
public:
  ColorList() = default;
  explicit ColorList(std::vector<Color> items);

  int size() const { return static_cast<int>(items_.size()); }
  bool empty() const { return items_.empty(); }
  const Color& operator[](int i) const { return items_[i]; }
  const std::vector<Color>& items() const { return items_; }

  ColorList concat(const ColorList& rhs) const;
  /// Right action: result[i] = items[sigma(i)].
  ColorList act_right(const Perm& sigma) const;
  /// Left action: result[k] = items[tau^{-1}(k)].
  ColorList act_left(const Perm& tau) const;

  bool operator==(const ColorList& rhs) const { return items_ == rhs.items_; }
  bool operator!=(const ColorList& rhs) const { return !(*this == rhs); }
  bool operator<(const ColorList& rhs) const { return items_ < rhs.items_; }

  /// Comma-separated names, e.g. "c,c -> ..." pieces use this.
  std::string to_string() const;

private:
  std::vector<Color> items_;
};

inline ColorList colors(std::initializer_list<Color> cs) {
  return ColorList(std::vector<Color>(cs));
}

/// All color lists of length 0..max_len, shortest first, colors in set
/// order within each length.
std::vector<ColorList> all_color_lists(const ColorSet& cs, int max_len);

}  // namespace propkit

#endif
