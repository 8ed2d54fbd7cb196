#include "propkit/megagraph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "propkit/error.hpp"

namespace propkit {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

FreeMegagraph::FreeMegagraph(ColorSet colors, std::vector<Generator> generators)
    : colors_(std::move(colors)), gens_(std::move(generators)) {
  for (size_t i = 0; i < gens_.size(); ++i) {
    for (size_t j = i + 1; j < gens_.size(); ++j)
      require(gens_[i].name != gens_[j].name,
              "duplicate generator name: " + gens_[i].name);
    for (const Color& c : gens_[i].source.items())
      require(c.owner() == colors_, "generator source uses a foreign color");
    for (const Color& c : gens_[i].target.items())
      require(c.owner() == colors_, "generator target uses a foreign color");
  }
}

int FreeMegagraph::generator_index(const std::string& name) const {
  for (int i = 0; i < generator_count(); ++i)
    if (gens_[i].name == name) return i;
  return -1;
}

FreeArrow FreeMegagraph::arrow(int gen) const {
  require(gen >= 0 && gen < generator_count(), "generator index out of range");
  return FreeArrow{gen, Perm::identity(gens_[gen].target.size()),
                   Perm::identity(gens_[gen].source.size())};
}

FreeArrow FreeMegagraph::arrow(const std::string& name) const {
  int i = generator_index(name);
  require(i >= 0, "unknown generator: " + name);
  return arrow(i);
}

ColorList FreeMegagraph::source(const FreeArrow& x) const {
  return gens_[x.gen].source.act_right(x.right);
}

ColorList FreeMegagraph::target(const FreeArrow& x) const {
  return gens_[x.gen].target.act_left(x.left);
}

FreeArrow FreeMegagraph::act(const FreeArrow& x, const Perm& tau,
                             const Perm& sigma) const {
  require(tau.degree() == x.left.degree(), "left action degree mismatch");
  require(sigma.degree() == x.right.degree(), "right action degree mismatch");
  return FreeArrow{x.gen, tau * x.left, x.right * sigma};
}

std::string FreeMegagraph::arrow_key(const FreeArrow& x) const {
  return gens_[x.gen].name + x.left.to_string() + x.right.to_string();
}

std::string FreeMegagraph::to_string() const {
  std::ostringstream os;
  os << "colors ";
  for (int i = 0; i < colors_.size(); ++i) {
    if (i) os << ',';
    os << colors_.name(i);
  }
  os << '\n';
  for (const Generator& g : gens_)
    os << "gen " << g.name << " : " << g.source.to_string() << " -> "
       << g.target.to_string() << '\n';
  return os.str();
}

FreeMegagraph FreeMegagraph::parse(std::istream& in) {
  ColorSet colors;
  bool have_colors = false;
  std::vector<Generator> gens;
  std::string line;
  while (std::getline(in, line)) {
    if (size_t h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "colors") {
      std::string rest;
      std::getline(ls, rest);
      colors = ColorSet(split_list(rest));
      have_colors = true;
    } else if (word == "gen") {
      require(have_colors, "megagraph file: 'gen' before 'colors'");
      std::string name, colon, rest;
      ls >> name >> colon;
      require(colon == ":", "megagraph file: expected ':' after generator name");
      std::getline(ls, rest);
      size_t arrow = rest.find("->");
      require(arrow != std::string::npos, "megagraph file: expected '->'");
      auto mk = [&](const std::string& part) {
        std::vector<Color> cs;
        for (const std::string& n : split_list(part)) cs.push_back(colors.color(n));
        return ColorList(std::move(cs));
      };
      gens.push_back(Generator{name, mk(rest.substr(0, arrow)), mk(rest.substr(arrow + 2))});
    } else if (word == "end") {
      break;
    } else {
      fail("megagraph file: unknown directive '" + word + "'");
    }
  }
  require(have_colors, "megagraph file: missing 'colors' line");
  return FreeMegagraph(std::move(colors), std::move(gens));
}

FreeMegagraph FreeMegagraph::parse_string(const std::string& text) {
  std::istringstream is(text);
  return parse(is);
}

bool PropMegagraph::validate(const std::vector<Morphism>& sample) const {
  for (const Morphism& x : sample) {
    int n = x.source().size(), m = x.target().size();
    for (const Perm& sigma : all_perms(n)) {
      Morphism moved = prop_->act(sigma, Perm::identity(m), x);
      if (moved.source() != x.source().act_right(sigma)) return false;
      if (moved.target() != x.target()) return false;
    }
    for (const Perm& tau : all_perms(m)) {
      Morphism moved = prop_->act(Perm::identity(n), tau, x);
      if (moved.target() != x.target().act_left(tau)) return false;
      if (moved.source() != x.source()) return false;
    }
    for (const Perm& sigma : all_perms(std::min(n, 3)))
      for (const Perm& tau : all_perms(std::min(m, 3))) {
        Perm s = sigma.direct_sum(Perm::identity(n - sigma.degree()));
        Perm t = tau.direct_sum(Perm::identity(m - tau.degree()));
        Morphism a = prop_->act(s, Perm::identity(m), prop_->act(Perm::identity(n), t, x));
        Morphism b = prop_->act(Perm::identity(n), t, prop_->act(s, Perm::identity(m), x));
        if (!prop_->equal(a, b)) return false;
      }
  }
  return true;
}

MegaMapToProp::MegaMapToProp(FreeMegagraph src, PropPtr dst,
                             std::vector<int> color_map,
                             std::vector<Morphism> gen_images)
    : src_(std::move(src)),
      dst_(std::move(dst)),
      color_map_(std::move(color_map)),
      gen_images_(std::move(gen_images)) {
  require(static_cast<int>(color_map_.size()) == src_.colors().size(),
          "mega map: color map size mismatch");
  require(static_cast<int>(gen_images_.size()) == src_.generator_count(),
          "mega map: generator image count mismatch");
}

Color MegaMapToProp::map_color(const Color& c) const {
  require(c.owner() == src_.colors(), "mega map: foreign color");
  return dst_->colors().color(color_map_[c.index()]);
}

ColorList MegaMapToProp::map_colors(const ColorList& cs) const {
  std::vector<Color> out;
  out.reserve(cs.size());
  for (int i = 0; i < cs.size(); ++i) out.push_back(map_color(cs[i]));
  return ColorList(std::move(out));
}

bool MegaMapToProp::valid() const {
  for (int g = 0; g < src_.generator_count(); ++g) {
    const Generator& gen = src_.generator(g);
    if (gen_images_[g].source() != map_colors(gen.source)) return false;
    if (gen_images_[g].target() != map_colors(gen.target)) return false;
  }
  return true;
}

Morphism MegaMapToProp::apply(const FreeArrow& x) const {
  return dst_->act(x.right, x.left, gen_images_[x.gen]);
}

bool MegaMapToProp::operator==(const MegaMapToProp& rhs) const {
  return color_map_ == rhs.color_map_ && gen_images_ == rhs.gen_images_;
}

MegaMapToFree::MegaMapToFree(FreeMegagraph src, FreeMegagraph dst,
                             std::vector<int> color_map,
                             std::vector<FreeArrow> gen_images)
    : src_(std::move(src)),
      dst_(std::move(dst)),
      color_map_(std::move(color_map)),
      gen_images_(std::move(gen_images)) {
  require(static_cast<int>(color_map_.size()) == src_.colors().size(),
          "mega map: color map size mismatch");
  require(static_cast<int>(gen_images_.size()) == src_.generator_count(),
          "mega map: generator image count mismatch");
}

Color MegaMapToFree::map_color(const Color& c) const {
  require(c.owner() == src_.colors(), "mega map: foreign color");
  return dst_.colors().color(color_map_[c.index()]);
}

ColorList MegaMapToFree::map_colors(const ColorList& cs) const {
  std::vector<Color> out;
  out.reserve(cs.size());
  for (int i = 0; i < cs.size(); ++i) out.push_back(map_color(cs[i]));
  return ColorList(std::move(out));
}

bool MegaMapToFree::valid() const {
  for (int g = 0; g < src_.generator_count(); ++g) {
    const Generator& gen = src_.generator(g);
    if (dst_.source(gen_images_[g]) != map_colors(gen.source)) return false;
    if (dst_.target(gen_images_[g]) != map_colors(gen.target)) return false;
  }
  return true;
}

FreeArrow MegaMapToFree::apply(const FreeArrow& x) const {
  return dst_.act(gen_images_[x.gen], x.left, x.right);
}

MegaMapToFree MegaMapToFree::identity(const FreeMegagraph& mg) {
  std::vector<int> cmap(mg.colors().size());
  for (size_t i = 0; i < cmap.size(); ++i) cmap[i] = static_cast<int>(i);
  std::vector<FreeArrow> gens;
  for (int g = 0; g < mg.generator_count(); ++g) gens.push_back(mg.arrow(g));
  return MegaMapToFree(mg, mg, std::move(cmap), std::move(gens));
}

MegaMapToFree MegaMapToFree::compose_after(const MegaMapToFree& first) const {
  require(first.dst_.colors() == src_.colors(),
          "mega map composition: object sets do not match");
  std::vector<int> cmap;
  for (int c : first.color_map_) cmap.push_back(color_map_[c]);
  std::vector<FreeArrow> gens;
  for (const FreeArrow& x : first.gen_images_) gens.push_back(apply(x));
  return MegaMapToFree(first.src_, dst_, std::move(cmap), std::move(gens));
}

std::vector<MegaMapToProp> enumerate_mega_maps(const FreeMegagraph& mg,
                                               const PropPtr& target) {
  std::vector<MegaMapToProp> out;
  int nc = mg.colors().size(), tc = target->colors().size();
  if (tc == 0 && nc > 0) return out;
  std::vector<int> cmap(nc, 0);
  auto mapped = [&](const ColorList& cs) {
    std::vector<Color> mc;
    for (int i = 0; i < cs.size(); ++i)
      mc.push_back(target->colors().color(cmap[cs[i].index()]));
    return ColorList(std::move(mc));
  };
  while (true) {
    std::vector<std::vector<Morphism>> choices;
    bool possible = true;
    for (int g = 0; g < mg.generator_count() && possible; ++g) {
      const Generator& gen = mg.generator(g);
      choices.push_back(target->hom(mapped(gen.source), mapped(gen.target)));
      if (choices.back().empty()) possible = false;
    }
    if (possible) {
      std::vector<size_t> pick(choices.size(), 0);
      while (true) {
        std::vector<Morphism> imgs;
        for (size_t g = 0; g < choices.size(); ++g)
          imgs.push_back(choices[g][pick[g]]);
        out.emplace_back(mg, target, cmap, std::move(imgs));
        int i = static_cast<int>(choices.size()) - 1;
        for (; i >= 0; --i) {
          if (++pick[i] < choices[i].size()) break;
          pick[i] = 0;
        }
        if (i < 0) break;
      }
    }
    int i = nc - 1;
    for (; i >= 0; --i) {
      if (++cmap[i] < tc) break;
      cmap[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace propkit
