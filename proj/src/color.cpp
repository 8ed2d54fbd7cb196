#include "propkit/color.hpp"

#include <sstream>

#include "propkit/error.hpp"

namespace propkit {

ColorSet::ColorSet(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      require(name(i) != name(j), "duplicate color name: " + name(i));
}

Color ColorSet::color(int i) const {
  require(i >= 0 && i < size(), "color index out of range");
  return Color(*this, i);
}

Color ColorSet::color(const std::string& name) const {
  int i = index_of(name);
  require(i >= 0, "unknown color: " + name);
  return Color(*this, i);
}

int ColorSet::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if ((*names_)[i] == name) return i;
  return -1;
}

std::vector<Color> ColorSet::all() const {
  std::vector<Color> out;
  out.reserve(size());
  for (int i = 0; i < size(); ++i) out.push_back(Color(*this, i));
  return out;
}

ColorList::ColorList(std::vector<Color> items) : items_(std::move(items)) {
  for (size_t i = 1; i < items_.size(); ++i)
    require(items_[i].owner() == items_[0].owner(),
            "color list mixes colors from different sets");
}

ColorList ColorList::concat(const ColorList& rhs) const {
  std::vector<Color> items = items_;
  items.insert(items.end(), rhs.items_.begin(), rhs.items_.end());
  return ColorList(std::move(items));
}

ColorList ColorList::act_right(const Perm& sigma) const {
  return ColorList(sigma.act_right(items_));
}

ColorList ColorList::act_left(const Perm& tau) const {
  return ColorList(tau.act_left(items_));
}

std::string ColorList::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    if (i) os << ',';
    os << items_[i].name();
  }
  return os.str();
}

std::vector<ColorList> all_color_lists(const ColorSet& cs, int max_len) {
  std::vector<ColorList> out{ColorList()};
  std::vector<std::vector<Color>> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Color>> next;
    for (const auto& p : frontier)
      for (int c = 0; c < cs.size(); ++c) {
        auto q = p;
        q.push_back(cs.color(c));
        next.push_back(q);
      }
    for (const auto& p : next) out.push_back(ColorList(p));
    frontier = std::move(next);
  }
  return out;
}

}  // namespace propkit
