#include "propkit/presentation.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include "propkit/error.hpp"

namespace propkit {

void Presentation::validate() const {
  FreeProp fp(mega, 0);
  for (const auto& [lhs, rhs] : relations) {
    Morphism l = eval_in_free(*this, fp, lhs);
    Morphism r = eval_in_free(*this, fp, rhs);
    require(l.source() == r.source() && l.target() == r.target(),
            "relation sides have different profiles: " + lhs.to_string() +
                " vs " + rhs.to_string());
  }
}

std::string Presentation::to_string() const {
  std::ostringstream os;
  os << mega.to_string();
  for (const auto& [lhs, rhs] : relations)
    os << "rel " << lhs.to_string() << " = " << rhs.to_string() << '\n';
  return os.str();
}

Presentation Presentation::parse(std::istream& in) {
  // Megagraph directives and "rel" lines may interleave; collect both.
  std::vector<std::string> mega_lines, rel_lines;
  std::string line;
  while (std::getline(in, line)) {
    if (size_t h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream probe(line);
    std::string word;
    if (!(probe >> word)) continue;
    if (word == "rel")
      rel_lines.push_back(line);
    else
      mega_lines.push_back(line);
  }
  std::string mega_text;
  for (const std::string& l : mega_lines) mega_text += l + "\n";
  Presentation p;
  p.mega = FreeMegagraph::parse_string(mega_text);
  for (const std::string& l : rel_lines) {
    std::string body = l.substr(l.find("rel") + 3);
    size_t eq = body.find('=');
    require(eq != std::string::npos, "relation line needs '=': " + l);
    p.relations.emplace_back(Term::parse(body.substr(0, eq)),
                             Term::parse(body.substr(eq + 1)));
  }
  p.validate();
  return p;
}

Presentation Presentation::parse_string(const std::string& text) {
  std::istringstream is(text);
  return parse(is);
}

Morphism eval_in_free(const Presentation& p, const FreeProp& fp, const Term& t) {
  return eval_term(
      t, fp, [&](const std::string& name) { return p.mega.colors().color(name); },
      [&](const std::string& name) { return fp.corolla(name); });
}

PresentedProp::PresentedProp(Presentation pres, int vertex_bound, int rewrite_depth)
    : pres_(std::move(pres)), depth_(rewrite_depth) {
  pres_.validate();
  free_ = make_free_prop(pres_.mega, vertex_bound);
  std::vector<std::pair<Morphism, Morphism>> rules;
  for (const auto& [lhs, rhs] : pres_.relations)
    rules.emplace_back(eval_in_free(pres_, *free_, lhs),
                       eval_in_free(pres_, *free_, rhs));
  rewrites_ = std::make_shared<RewriteSystem>(free_, std::move(rules));
}

std::string PresentedProp::name() const {
  return "presentation with " + std::to_string(pres_.mega.generator_count()) +
         " generators, " + std::to_string(pres_.relations.size()) + " relations";
}

Morphism PresentedProp::identity(const Color& c) const { return free_->identity(c); }
Morphism PresentedProp::unit() const { return free_->unit(); }

Morphism PresentedProp::compose_v(const Morphism& f, const Morphism& g) const {
  return free_->compose_v(f, g);
}

Morphism PresentedProp::compose_h(const Morphism& f, const Morphism& g) const {
  return free_->compose_h(f, g);
}

Morphism PresentedProp::act(const Perm& sigma, const Perm& tau,
                            const Morphism& f) const {
  return free_->act(sigma, tau, f);
}

bool PresentedProp::equal(const Morphism& f, const Morphism& g) const {
  return word_equal(f, g) == WordVerdict::equal;
}

Morphism PresentedProp::generator(const std::string& name) const {
  return free_->corolla(name);
}

Morphism PresentedProp::eval(const Term& t) const {
  return eval_in_free(pres_, *free_, t);
}

WordVerdict PresentedProp::word_equal(const Morphism& a, const Morphism& b) const {
  require(a.source() == b.source() && a.target() == b.target(),
          "word_equal: profile mismatch");
  if (a.key() == b.key()) return WordVerdict::equal;
  if (pres_.relations.empty()) return WordVerdict::distinct;
  WordSearchOptions opt;
  opt.max_depth = depth_;
  WordSearchResult res = word_search(*rewrites_, a, b, opt);
  if (res.verdict != WordVerdict::unknown) return res.verdict;
  for (const MegaMapToProp& alg : algebras_) {
    Morphism ea = evaluate_free_morphism(*free_, a, alg);
    Morphism eb = evaluate_free_morphism(*free_, b, alg);
    if (!alg.target_prop()->equal(ea, eb)) return WordVerdict::distinct;
  }
  return WordVerdict::unknown;
}

WordVerdict PresentedProp::word_equal(const Term& a, const Term& b) const {
  return word_equal(eval(a), eval(b));
}

void PresentedProp::register_separating_algebra(MegaMapToProp algebra) {
  require(algebra.valid(), "separating algebra: invalid megagraph map");
  for (const auto& [lhs, rhs] : pres_.relations) {
    Morphism l = evaluate_free_morphism(*free_, eval(lhs), algebra);
    Morphism r = evaluate_free_morphism(*free_, eval(rhs), algebra);
    require(algebra.target_prop()->equal(l, r),
            "separating algebra does not satisfy the relations");
  }
  algebras_.push_back(std::move(algebra));
}

std::vector<Morphism> PresentedProp::hom(const ColorList& source,
                                         const ColorList& target) const {
  std::vector<Morphism> raw =
      free_->enumerate_hom(source, target, free_->default_max_vertices());
  // Merge classes connected by single rewrite steps within the set.
  std::map<std::string, int> index;
  for (size_t i = 0; i < raw.size(); ++i) index[raw[i].key()] = static_cast<int>(i);
  std::vector<int> parent(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (size_t i = 0; i < raw.size(); ++i)
    for (const Morphism& nb : rewrites_->neighbors(raw[i])) {
      auto it = index.find(nb.key());
      if (it != index.end()) parent[find(static_cast<int>(i))] = find(it->second);
    }
  std::map<int, Morphism> reps;
  for (size_t i = 0; i < raw.size(); ++i) {
    int root = find(static_cast<int>(i));
    auto it = reps.find(root);
    if (it == reps.end() || raw[i].key() < it->second.key())
      reps.insert_or_assign(root, raw[i]);
  }
  std::vector<Morphism> out;
  for (auto& [root, m] : reps) out.push_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

PresentedPropPtr make_presented_prop(Presentation pres, int vertex_bound,
                                     int rewrite_depth) {
  return std::make_shared<PresentedProp>(std::move(pres), vertex_bound, rewrite_depth);
}

namespace {

std::string fresh_name(const std::string& base, int object_index,
                       const std::set<std::string>& taken) {
  if (!taken.count(base)) return base;
  std::string name = base + "_" + std::to_string(object_index);
  while (taken.count(name)) name += "x";
  return name;
}

}  // namespace

Presentation colimit_presentation(const std::vector<Presentation>& objects,
                                  const std::vector<PresentationMap>& arrows) {
  // Inject all colors, renaming on clash, then merge along the arrows
  // with a union-find.
  std::vector<std::vector<int>> color_inj(objects.size());
  std::vector<std::string> color_names;
  std::set<std::string> taken;
  for (size_t i = 0; i < objects.size(); ++i) {
    const ColorSet& cs = objects[i].mega.colors();
    for (int c = 0; c < cs.size(); ++c) {
      std::string nm = fresh_name(cs.name(c), static_cast<int>(i), taken);
      taken.insert(nm);
      color_inj[i].push_back(static_cast<int>(color_names.size()));
      color_names.push_back(nm);
    }
  }
  std::vector<int> parent(color_names.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const PresentationMap& a : arrows) {
    require(a.source >= 0 && a.source < static_cast<int>(objects.size()) &&
                a.target >= 0 && a.target < static_cast<int>(objects.size()),
            "colimit: arrow endpoints out of range");
    const Presentation& src = objects[a.source];
    require(static_cast<int>(a.color_map.size()) == src.mega.colors().size(),
            "colimit: arrow color map has the wrong size");
    require(static_cast<int>(a.gen_terms.size()) == src.mega.generator_count(),
            "colimit: arrow needs one term per source generator");
    for (int c = 0; c < src.mega.colors().size(); ++c)
      parent[find(color_inj[a.source][c])] = find(color_inj[a.target][a.color_map[c]]);
  }
  // Representative colors keep the least injected name.
  std::map<int, std::string> rep_name;
  for (size_t i = 0; i < color_names.size(); ++i) {
    int r = find(static_cast<int>(i));
    auto it = rep_name.find(r);
    if (it == rep_name.end() || color_names[i] < it->second)
      rep_name.insert_or_assign(r, color_names[i]);
  }
  std::vector<std::string> final_colors;
  std::map<int, std::string> color_of_root;
  for (auto& [root, nm] : rep_name) {
    color_of_root[root] = nm;
    final_colors.push_back(nm);
  }
  std::sort(final_colors.begin(), final_colors.end());
  ColorSet colors(final_colors);

  auto color_name_of = [&](size_t obj, const std::string& nm) {
    int idx = objects[obj].mega.colors().index_of(nm);
    require(idx >= 0, "colimit: unknown color " + nm);
    return color_of_root[find(color_inj[obj][idx])];
  };

  // Inject generators with clash-free names.
  std::set<std::string> gen_taken;
  std::vector<std::vector<std::string>> gen_inj(objects.size());
  std::vector<Generator> gens;
  for (size_t i = 0; i < objects.size(); ++i) {
    for (int g = 0; g < objects[i].mega.generator_count(); ++g) {
      const Generator& gen = objects[i].mega.generator(g);
      std::string nm = fresh_name(gen.name, static_cast<int>(i), gen_taken);
      gen_taken.insert(nm);
      gen_inj[i].push_back(nm);
      auto map_list = [&](const ColorList& cl) {
        std::vector<Color> cs;
        for (int k = 0; k < cl.size(); ++k)
          cs.push_back(colors.color(color_name_of(i, cl[k].name())));
        return ColorList(std::move(cs));
      };
      gens.push_back(Generator{nm, map_list(gen.source), map_list(gen.target)});
    }
  }

  Presentation out;
  out.mega = FreeMegagraph(colors, gens);
  auto inject_term = [&](size_t obj, const Term& t) {
    return t.rename(
        [&](const std::string& g) {
          int idx = objects[obj].mega.generator_index(g);
          require(idx >= 0, "colimit: unknown generator " + g);
          return gen_inj[obj][idx];
        },
        [&](const std::string& c) { return color_name_of(obj, c); });
  };
  for (size_t i = 0; i < objects.size(); ++i)
    for (const auto& [lhs, rhs] : objects[i].relations)
      out.relations.emplace_back(inject_term(i, lhs), inject_term(i, rhs));
  for (const PresentationMap& a : arrows)
    for (int g = 0; g < objects[a.source].mega.generator_count(); ++g)
      out.relations.emplace_back(
          Term::gen(gen_inj[a.source][g]),
          inject_term(a.target, a.gen_terms[g]));
  out.validate();
  return out;
}

Presentation coproduct_presentation(const Presentation& a, const Presentation& b) {
  return colimit_presentation({a, b}, {});
}

}  // namespace propkit
