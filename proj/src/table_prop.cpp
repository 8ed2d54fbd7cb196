#include "propkit/table_prop.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <sstream>

namespace propkit {

namespace {

struct TablePayload final : MorphismPayload {
  int id;
  explicit TablePayload(int i) : id(i) {}
};

std::vector<std::string> split_commas(const std::string& text) {
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

// Enumerates all color-index lists of length 0..max_len.
std::vector<std::vector<int>> all_profiles(int colors, int max_len) {
  std::vector<std::vector<int>> out{{}};
  std::vector<std::vector<int>> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier)
      for (int c = 0; c < colors; ++c) {
        std::vector<int> q = p;
        q.push_back(c);
        next.push_back(q);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

ColorList TableProp::to_list(const std::vector<int>& idx) const {
  std::vector<Color> cs;
  cs.reserve(idx.size());
  for (int i : idx) cs.push_back(colors_.color(i));
  return ColorList(std::move(cs));
}

std::vector<int> TableProp::to_idx(const ColorList& cs) const {
  std::vector<int> idx;
  idx.reserve(cs.size());
  for (int i = 0; i < cs.size(); ++i) {
    require(cs[i].owner() == colors_, "table prop: foreign color");
    idx.push_back(cs[i].index());
  }
  return idx;
}

Morphism TableProp::wrap(int id) const {
  const Element& e = elements_[id];
  return Morphism(to_list(e.source), to_list(e.target),
                  std::make_shared<TablePayload>(id), e.name);
}

int TableProp::unwrap(const Morphism& f) const {
  int id = f.payload_as<TablePayload>().id;
  require(id >= 0 && id < static_cast<int>(elements_.size()),
          "table prop: stale morphism");
  return id;
}

void TableProp::check_len(const ColorList& cs, const std::string& where) const {
  require(cs.size() <= max_len_,
          where + ": profile length " + std::to_string(cs.size()) +
              " exceeds the table bound " + std::to_string(max_len_));
}

Morphism TableProp::identity(const Color& c) const {
  require(c.owner() == colors_, "table prop: foreign color");
  return wrap(identity_[c.index()]);
}

Morphism TableProp::unit() const {
  require(unit_ >= 0, "table prop: missing unit element");
  return wrap(unit_);
}

Morphism TableProp::compose_v(const Morphism& f, const Morphism& g) const {
  require(g.target() == f.source(), "table prop: vertical profile mismatch");
  auto it = vcomp_.find({unwrap(f), unwrap(g)});
  require(it != vcomp_.end(), "table prop: vertical composite outside the table");
  return wrap(it->second);
}

Morphism TableProp::compose_h(const Morphism& f, const Morphism& g) const {
  check_len(f.source().concat(g.source()), "table prop horizontal composition");
  check_len(f.target().concat(g.target()), "table prop horizontal composition");
  auto it = hcomp_.find({unwrap(f), unwrap(g)});
  require(it != hcomp_.end(), "table prop: horizontal composite outside the table");
  return wrap(it->second);
}

Morphism TableProp::act(const Perm& sigma, const Perm& tau, const Morphism& f) const {
  require(sigma.degree() == f.source().size() && tau.degree() == f.target().size(),
          "table prop: action degree mismatch");
  auto it = act_.find({unwrap(f), sigma.images(), tau.images()});
  require(it != act_.end(), "table prop: action outside the table");
  return wrap(it->second);
}

std::vector<Morphism> TableProp::hom(const ColorList& source,
                                     const ColorList& target) const {
  check_len(source, "table prop hom");
  check_len(target, "table prop hom");
  auto it = homs_.find({to_idx(source), to_idx(target)});
  std::vector<Morphism> out;
  if (it == homs_.end()) return out;
  for (int id : it->second) out.push_back(wrap(id));
  return out;
}

Morphism TableProp::element(const std::string& name) const {
  auto it = by_name_.find(name);
  require(it != by_name_.end(), "table prop: unknown element " + name);
  return wrap(it->second);
}

std::shared_ptr<const TableProp> TableProp::materialize(const PropPtr& base,
                                                        int max_len,
                                                        const std::string& name) {
  require(max_len >= 1, "table prop: bound must be at least 1");
  auto tp = std::make_shared<TableProp>();
  tp->name_ = name;
  tp->colors_ = base->colors();  // shares the base's color set
  tp->max_len_ = max_len;

  // Collect hom sets and assign element ids; remember base morphisms.
  std::vector<Morphism> base_of;
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<int>> homs;
  std::map<std::string, int> lookup;  // base profile+key -> id
  auto base_key = [&](const Morphism& m) {
    return m.source().to_string() + "|" + m.target().to_string() + "|" + m.key();
  };
  auto profiles = all_profiles(base->colors().size(), max_len);
  for (const auto& sp : profiles)
    for (const auto& tpz : profiles) {
      ColorList src, dst;
      {
        std::vector<Color> cs;
        for (int i : sp) cs.push_back(base->colors().color(i));
        src = ColorList(cs);
        cs.clear();
        for (int i : tpz) cs.push_back(base->colors().color(i));
        dst = ColorList(cs);
      }
      std::vector<int> ids;
      for (const Morphism& m : base->hom(src, dst)) {
        int id = static_cast<int>(base_of.size());
        base_of.push_back(m);
        lookup[base_key(m)] = id;
        ids.push_back(id);
        tp->elements_.push_back(
            {"m" + std::to_string(id), sp, tpz});
      }
      homs[{sp, tpz}] = ids;
    }
  tp->homs_ = std::move(homs);
  for (size_t id = 0; id < tp->elements_.size(); ++id)
    tp->by_name_[tp->elements_[id].name] = static_cast<int>(id);

  auto find_id = [&](const Morphism& m) {
    auto it = lookup.find(base_key(m));
    require(it != lookup.end(), "materialize: base morphism missing from tables");
    return it->second;
  };

  for (int c = 0; c < tp->colors_.size(); ++c)
    tp->identity_.push_back(find_id(base->identity(base->colors().color(c))));
  tp->unit_ = find_id(base->unit());

  int n = static_cast<int>(base_of.size());
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) {
      const Morphism& mf = base_of[f];
      const Morphism& mg = base_of[g];
      if (mg.target() == mf.source())
        tp->vcomp_[{f, g}] = find_id(base->compose_v(mf, mg));
      if (mf.source().size() + mg.source().size() <= max_len &&
          mf.target().size() + mg.target().size() <= max_len)
        tp->hcomp_[{f, g}] = find_id(base->compose_h(mf, mg));
    }
  for (int f = 0; f < n; ++f) {
    const Morphism& mf = base_of[f];
    for (const Perm& sigma : all_perms(mf.source().size()))
      for (const Perm& tau : all_perms(mf.target().size()))
        tp->act_[{f, sigma.images(), tau.images()}] =
            find_id(base->act(sigma, tau, mf));
  }
  return tp;
}

std::string TableProp::to_string() const {
  std::ostringstream os;
  os << "tableprop " << name_ << '\n';
  os << "colors ";
  for (int i = 0; i < colors_.size(); ++i) {
    if (i) os << ',';
    os << colors_.name(i);
  }
  os << "\nmaxlen " << max_len_ << '\n';
  auto plist = [&](const std::vector<int>& idx) {
    std::string s;
    for (size_t i = 0; i < idx.size(); ++i) {
      if (i) s += ',';
      s += colors_.name(idx[i]);
    }
    return s.empty() ? std::string("-") : s;
  };
  for (const Element& e : elements_)
    os << "mor " << e.name << " : " << plist(e.source) << " -> " << plist(e.target)
       << '\n';
  for (int c = 0; c < colors_.size(); ++c)
    os << "id " << colors_.name(c) << " = " << elements_[identity_[c]].name << '\n';
  os << "unit = " << elements_[unit_].name << '\n';
  for (const auto& [pair, h] : vcomp_)
    os << "vcomp " << elements_[pair.first].name << ' ' << elements_[pair.second].name
       << " = " << elements_[h].name << '\n';
  for (const auto& [pair, h] : hcomp_)
    os << "hcomp " << elements_[pair.first].name << ' ' << elements_[pair.second].name
       << " = " << elements_[h].name << '\n';
  for (const auto& [key, h] : act_)
    os << "act " << elements_[std::get<0>(key)].name << ' '
       << Perm(std::get<1>(key)).to_string() << ' ' << Perm(std::get<2>(key)).to_string()
       << " = " << elements_[h].name << '\n';
  return os.str();
}

std::shared_ptr<const TableProp> TableProp::parse(std::istream& in) {
  auto tp = std::make_shared<TableProp>();
  std::string line;
  bool have_header = false;
  auto elem = [&](const std::string& name) {
    auto it = tp->by_name_.find(name);
    require(it != tp->by_name_.end(), "table file: unknown element " + name);
    return it->second;
  };
  auto parse_perm = [](std::istringstream& ls) {
    std::string tok, acc;
    ls >> acc;
    while (!acc.empty() && acc.back() != ')' && (ls >> tok)) acc += " " + tok;
    return Perm::parse(acc);
  };
  while (std::getline(in, line)) {
    if (size_t h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "tableprop") {
      ls >> tp->name_;
      have_header = true;
    } else if (word == "colors") {
      std::string rest;
      std::getline(ls, rest);
      tp->colors_ = ColorSet(split_commas(rest));
    } else if (word == "maxlen") {
      ls >> tp->max_len_;
    } else if (word == "mor") {
      std::string name, colon, rest;
      ls >> name >> colon;
      require(colon == ":", "table file: expected ':' after element name");
      std::getline(ls, rest);
      size_t arrow = rest.find("->");
      require(arrow != std::string::npos, "table file: expected '->'");
      auto mk = [&](std::string part) {
        std::vector<int> idx;
        for (const std::string& nm : split_commas(part)) {
          if (nm == "-") continue;
          idx.push_back(tp->colors_.color(nm).index());
        }
        return idx;
      };
      Element e{name, mk(rest.substr(0, arrow)), mk(rest.substr(arrow + 2))};
      tp->by_name_[name] = static_cast<int>(tp->elements_.size());
      tp->homs_[{e.source, e.target}].push_back(static_cast<int>(tp->elements_.size()));
      tp->elements_.push_back(std::move(e));
    } else if (word == "id") {
      std::string cname, eq, ename;
      ls >> cname >> eq >> ename;
      int c = tp->colors_.color(cname).index();
      if (static_cast<int>(tp->identity_.size()) <= c) tp->identity_.resize(c + 1, -1);
      tp->identity_[c] = elem(ename);
    } else if (word == "unit") {
      std::string eq, ename;
      ls >> eq >> ename;
      tp->unit_ = elem(ename);
    } else if (word == "vcomp" || word == "hcomp") {
      std::string a, b, eq, r;
      ls >> a >> b >> eq >> r;
      auto& table = word == "vcomp" ? tp->vcomp_ : tp->hcomp_;
      table[{elem(a), elem(b)}] = elem(r);
    } else if (word == "act") {
      std::string a;
      ls >> a;
      Perm sigma = parse_perm(ls);
      Perm tau = parse_perm(ls);
      std::string eq, r;
      ls >> eq >> r;
      tp->act_[{elem(a), sigma.images(), tau.images()}] = elem(r);
    } else {
      fail("table file: unknown directive '" + word + "'");
    }
  }
  require(have_header, "table file: missing 'tableprop' header");
  require(static_cast<int>(tp->identity_.size()) == tp->colors_.size(),
          "table file: missing identity elements");
  return tp;
}

std::shared_ptr<const TableProp> TableProp::parse_string(const std::string& text) {
  std::istringstream is(text);
  return parse(is);
}

}  // namespace propkit
