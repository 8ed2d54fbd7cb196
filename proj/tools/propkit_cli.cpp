#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "propkit/axioms.hpp"
#include "propkit/end_prop.hpp"
#include "propkit/error.hpp"
#include "propkit/hom_tensor.hpp"
#include "propkit/operad.hpp"
#include "propkit/prop_hom.hpp"
#include "propkit/table_prop.hpp"

namespace pk = propkit;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

int env_int(const char* name, int fallback) {
  const char* value = std::getenv(name);
  if (!value) return fallback;
  try {
    return std::stoi(value);
  } catch (...) {
    throw pk::Error(std::string("environment variable ") + name +
                    " is not an integer: " + value);
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pk::Error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string sibling(const std::string& fixture_path, const std::string& relative) {
  std::filesystem::path p(fixture_path);
  return (p.parent_path() / relative).string();
}

struct Output {
  bool as_json = false;
  json payload;
  std::ostringstream text;

  void line(const std::string& s) { text << s << '\n'; }
  void flush() {
    if (as_json)
      std::cout << payload.dump(2) << std::endl;
    else
      std::cout << text.str();
  }
};

pk::ColorList parse_profile(const pk::ColorSet& colors, const std::string& spec) {
  std::vector<pk::Color> cs;
  std::string cur;
  auto push = [&] {
    if (!cur.empty()) cs.push_back(colors.color(cur));
    cur.clear();
  };
  for (char ch : spec) {
    if (ch == ',') push();
    else if (!isspace(static_cast<unsigned char>(ch))) cur.push_back(ch);
  }
  push();
  return pk::ColorList(std::move(cs));
}

// --- check fixtures -------------------------------------------------

int check_prop_fixture(const std::string& path, Output& out) {
  pk::TablePropPtr table = pk::TableProp::parse_string(slurp(path));
  std::vector<pk::Morphism> sample =
      pk::enumerate_all_morphisms(table, table->max_len());
  pk::AxiomReport report = pk::check_prop_axioms(table, sample);
  out.payload["report"] = json::array();
  for (const auto& [axiom, count] : report.checked) {
    bool ok = !report.first_fail.count(axiom);
    out.line(axiom + ": " + std::to_string(count) + " instances, " +
             (ok ? "pass" : "FAIL (" + report.first_fail.at(axiom) + ")"));
    out.payload["report"].push_back(
        {{"axiom", axiom},
         {"instances", count},
         {"pass", ok},
         {"counterexample", ok ? "" : report.first_fail.at(axiom)}});
  }
  out.payload["ok"] = report.ok();
  out.line(report.ok() ? "all axioms pass" : "axiom failures found");
  return report.ok() ? kExitOk : kExitCheckFailed;
}

int check_operad_fixture(const std::string& path, Output& out) {
  pk::TableOperadPtr table = pk::TableOperad::parse_string(slurp(path));
  pk::OperadAxiomReport report = pk::check_operad_axioms(
      std::static_pointer_cast<const pk::Operad>(table), *table->max_arity());
  bool uf = pk::uf_identity_check(std::static_pointer_cast<const pk::Operad>(table),
                                  *table->max_arity());
  out.line("operad axiom instances: " + std::to_string(report.checked));
  for (const std::string& failure : report.failures) out.line("FAIL " + failure);
  out.line(std::string("UF identity: ") + (uf ? "pass" : "FAIL"));
  out.payload["instances"] = report.checked;
  out.payload["failures"] = report.failures;
  out.payload["uf_identity"] = uf;
  out.payload["ok"] = report.ok() && uf;
  return report.ok() && uf ? kExitOk : kExitCheckFailed;
}

struct NatFixture {
  pk::PresentedPropPtr source;
  pk::TablePropPtr target;
  pk::NatTransData data;
};

NatFixture load_nat_fixture(const std::string& path) {
  NatFixture fx;
  std::istringstream in(slurp(path));
  std::string line;
  std::map<std::string, pk::PropHom> maps;
  std::vector<std::string> source_names, target_names;
  std::map<int, pk::Morphism> components;
  while (std::getline(in, line)) {
    if (size_t h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "natfixture") continue;
    if (word == "source") {
      std::string rel;
      ls >> rel;
      fx.source = pk::make_presented_prop(
          pk::Presentation::parse_string(slurp(sibling(path, rel))));
    } else if (word == "target") {
      std::string rel;
      ls >> rel;
      fx.target = pk::TableProp::parse_string(slurp(sibling(path, rel)));
    } else if (word == "map") {
      pk::require(fx.source && fx.target, "nat fixture: 'map' before source/target");
      std::string name, colon, rest;
      ls >> name >> colon;
      std::getline(ls, rest);
      // name : a=x,b=y ; m=m3,w=m5
      size_t semi = rest.find(';');
      std::string colors_part = rest.substr(0, semi);
      std::string gens_part = semi == std::string::npos ? "" : rest.substr(semi + 1);
      std::vector<int> cmap(fx.source->colors().size(), -1);
      std::istringstream cs(colors_part);
      std::string assign;
      while (std::getline(cs, assign, ',')) {
        size_t eq = assign.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
          while (!s.empty() && isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
          while (!s.empty() && isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
          return s;
        };
        int ci = fx.source->colors().color(trim(assign.substr(0, eq))).index();
        cmap[ci] = fx.target->colors().color(trim(assign.substr(eq + 1))).index();
      }
      for (int c : cmap)
        pk::require(c >= 0, "nat fixture: incomplete color map for " + name);
      const pk::FreeMegagraph& mg = fx.source->free_prop().mega();
      std::vector<pk::Morphism> images(mg.generator_count(), pk::Morphism());
      std::istringstream gs(gens_part);
      while (std::getline(gs, assign, ',')) {
        size_t eq = assign.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
          while (!s.empty() && isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
          while (!s.empty() && isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
          return s;
        };
        int gi = mg.generator_index(trim(assign.substr(0, eq)));
        pk::require(gi >= 0, "nat fixture: unknown generator in map " + name);
        images[gi] = fx.target->element(trim(assign.substr(eq + 1)));
      }
      pk::PropHom hom = pk::PropHom::from_generators(fx.source, mg, fx.target,
                                                     std::move(cmap), std::move(images));
      pk::require(hom.valid(), "nat fixture: map " + name + " is not a prop map");
      maps.emplace(name, std::move(hom));
    } else if (word == "sources" || word == "targets") {
      std::string name;
      while (ls >> name)
        (word == "sources" ? source_names : target_names).push_back(name);
    } else if (word == "xi") {
      std::string color, eq, elem;
      ls >> color >> eq >> elem;
      components[fx.source->colors().color(color).index()] =
          fx.target->element(elem);
    } else {
      throw pk::Error("nat fixture: unknown directive '" + word + "'");
    }
  }
  pk::require(fx.source && fx.target, "nat fixture: missing source or target");
  fx.data.target = fx.target;
  for (const std::string& n : source_names) {
    pk::require(maps.count(n), "nat fixture: unknown map " + n);
    fx.data.sources.push_back(maps.at(n));
  }
  for (const std::string& n : target_names) {
    pk::require(maps.count(n), "nat fixture: unknown map " + n);
    fx.data.targets.push_back(maps.at(n));
  }
  for (int c = 0; c < fx.source->colors().size(); ++c) {
    pk::require(components.count(c), "nat fixture: missing component for color " +
                                         fx.source->colors().name(c));
    fx.data.components.push_back(components.at(c));
  }
  return fx;
}

int check_nat_fixture(const std::string& path, Output& out) {
  NatFixture fx = load_nat_fixture(path);
  const pk::FreeMegagraph& mg = fx.source->free_prop().mega();
  bool all = true;
  out.payload["generators"] = json::array();
  for (int g = 0; g < mg.generator_count(); ++g) {
    pk::Morphism gen = fx.source->generator(mg.generator(g).name);
    bool ok = pk::check_octagon(fx.data, gen);
    all = all && ok;
    out.line("octagon on " + mg.generator(g).name + ": " + (ok ? "pass" : "FAIL"));
    out.payload["generators"].push_back({{"name", mg.generator(g).name}, {"pass", ok}});
  }
  out.payload["ok"] = all;
  out.line(all ? "natural on all generators" : "octagon violations found");
  return all ? kExitOk : kExitCheckFailed;
}

struct BilinFixture {
  pk::PresentedPropPtr left, right;
  pk::TablePropPtr target;
  pk::BilinearData data;
};

BilinFixture load_bilin_fixture(const std::string& path) {
  BilinFixture fx;
  std::istringstream in(slurp(path));
  std::string line;
  std::vector<std::tuple<std::string, std::string, std::string>> chi_colors;
  std::vector<std::tuple<std::string, std::string, std::string>> rgens, sgens;
  while (std::getline(in, line)) {
    if (size_t h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "bilinfixture") continue;
    if (word == "left" || word == "right") {
      std::string rel;
      ls >> rel;
      auto prop = pk::make_presented_prop(
          pk::Presentation::parse_string(slurp(sibling(path, rel))));
      (word == "left" ? fx.left : fx.right) = prop;
    } else if (word == "target") {
      std::string rel;
      ls >> rel;
      fx.target = pk::TableProp::parse_string(slurp(sibling(path, rel)));
    } else if (word == "chi") {
      // chi a,c = x
      std::string pair, eq, val;
      ls >> pair >> eq >> val;
      size_t comma = pair.find(',');
      pk::require(comma != std::string::npos, "bilinear fixture: chi needs 'a,c'");
      chi_colors.emplace_back(pair.substr(0, comma), pair.substr(comma + 1), val);
    } else if (word == "rgen") {
      // rgen m @ c = m3
      std::string gen, at, color, eq, val;
      ls >> gen >> at >> color >> eq >> val;
      rgens.emplace_back(gen, color, val);
    } else if (word == "sgen") {
      // sgen a | beta = m4
      std::string color, bar, gen, eq, val;
      ls >> color >> bar >> gen >> eq >> val;
      sgens.emplace_back(color, gen, val);
    } else {
      throw pk::Error("bilinear fixture: unknown directive '" + word + "'");
    }
  }
  pk::require(fx.left && fx.right && fx.target,
              "bilinear fixture: missing left/right/target");
  int nr = fx.left->colors().size(), ns = fx.right->colors().size();
  fx.data.r = fx.left;
  fx.data.s = fx.right;
  fx.data.t = fx.target;
  fx.data.color_map.assign(nr, std::vector<int>(ns, -1));
  for (const auto& [a, c, v] : chi_colors)
    fx.data.color_map[fx.left->colors().color(a).index()]
                     [fx.right->colors().color(c).index()] =
        fx.target->colors().color(v).index();
  for (const auto& row : fx.data.color_map)
    for (int v : row) pk::require(v >= 0, "bilinear fixture: incomplete chi table");
  const pk::FreeMegagraph& rmega = fx.left->free_prop().mega();
  const pk::FreeMegagraph& smega = fx.right->free_prop().mega();
  fx.data.r_gen_images.assign(rmega.generator_count(),
                              std::vector<pk::Morphism>(ns, pk::Morphism()));
  fx.data.s_gen_images.assign(nr,
                              std::vector<pk::Morphism>(smega.generator_count(),
                                                        pk::Morphism()));
  for (const auto& [g, c, v] : rgens)
    fx.data.r_gen_images[rmega.generator_index(g)]
                        [fx.right->colors().color(c).index()] =
        fx.target->element(v);
  for (const auto& [a, g, v] : sgens)
    fx.data.s_gen_images[fx.left->colors().color(a).index()]
                        [smega.generator_index(g)] = fx.target->element(v);
  for (const auto& row : fx.data.r_gen_images)
    for (const pk::Morphism& m : row)
      pk::require(m.valid(), "bilinear fixture: missing rgen image");
  for (const auto& row : fx.data.s_gen_images)
    for (const pk::Morphism& m : row)
      pk::require(m.valid(), "bilinear fixture: missing sgen image");
  return fx;
}

int check_bilin_fixture(const std::string& path, Output& out) {
  BilinFixture fx = load_bilin_fixture(path);
  bool ok = pk::check_bilinear(fx.data);
  out.line(std::string("bilinear: ") + (ok ? "pass" : "FAIL"));
  out.payload["ok"] = ok;
  return ok ? kExitOk : kExitCheckFailed;
}

int check_presentation_fixture(const std::string& path, Output& out) {
  pk::Presentation pres = pk::Presentation::parse_string(slurp(path));
  out.line("colors: " + std::to_string(pres.mega.colors().size()));
  out.line("generators: " + std::to_string(pres.mega.generator_count()));
  out.line("relations: " + std::to_string(pres.relations.size()));
  out.payload["colors"] = pres.mega.colors().size();
  out.payload["generators"] = pres.mega.generator_count();
  out.payload["relations"] = pres.relations.size();
  out.payload["ok"] = true;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic engine for colored props: free props on megagraphs, "
               "presentations, internal homs, and tensor products"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable output");

  int max_vertices = env_int("PROPKIT_MAX_VERTICES", 2);
  int word_depth = env_int("PROPKIT_WORD_DEPTH", 4);

  std::string mega_path, term_text, term_file, source_profile, target_profile;
  std::string fixture, fixture_type, left_path, right_path, out_path, diagram_path;
  std::string target_table, assignments, color_assignments;
  int pq_bound = 1;

  CLI::App* normalize = app.add_subcommand("normalize", "canonicalize a morphism term");
  normalize->add_option("--mega", mega_path, "megagraph file")->required();
  normalize->add_option("--term", term_text, "term text");
  normalize->add_option("--term-file", term_file, "file holding one term");

  CLI::App* enumerate = app.add_subcommand("enumerate", "list a hom set of a free prop");
  enumerate->add_option("--mega", mega_path, "megagraph file")->required();
  enumerate->add_option("--source", source_profile, "comma-separated source colors");
  enumerate->add_option("--target", target_profile, "comma-separated target colors");
  enumerate->add_option("--max-vertices", max_vertices, "vertex bound");

  CLI::App* check = app.add_subcommand("check", "run a fixture's checks");
  check->add_option("--type", fixture_type, "prop|operad|nat|bilinear|presentation")
      ->required();
  check->add_option("--file", fixture, "fixture file")->required();

  CLI::App* tensor = app.add_subcommand("tensor", "tensor product of two presentations");
  tensor->add_option("--left", left_path)->required();
  tensor->add_option("--right", right_path)->required();
  tensor->add_option("--out", out_path, "output presentation file");

  CLI::App* sharp = app.add_subcommand("sharp", "pushout R # S of two presentations");
  sharp->add_option("--left", left_path)->required();
  sharp->add_option("--right", right_path)->required();
  sharp->add_option("--out", out_path, "output presentation file");

  CLI::App* colimit = app.add_subcommand("colimit", "colimit of a presentation diagram");
  colimit->add_option("--diagram", diagram_path, "diagram file")->required();
  colimit->add_option("--out", out_path, "output presentation file");

  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "evaluate a term through a megagraph map into a table prop");
  evaluate->add_option("--mega", mega_path)->required();
  evaluate->add_option("--term", term_text)->required();
  evaluate->add_option("--target", target_table, "table prop file")->required();
  evaluate->add_option("--assign", assignments, "gen=element,... images")->required();
  evaluate->add_option("--colors", color_assignments, "color=color,... map");

  CLI::App* homprop = app.add_subcommand(
      "homprop", "enumerate natural transformations into a table prop");
  homprop->add_option("--source", left_path, "presentation file")->required();
  homprop->add_option("--target", target_table, "table prop file")->required();
  homprop->add_option("--pq", pq_bound, "profile length bound for listings");

  CLI11_PARSE(app, argc, argv);

  Output out;
  out.as_json = as_json;

  try {
    if (normalize->parsed()) {
      pk::FreeMegagraph mg = pk::FreeMegagraph::parse_string(slurp(mega_path));
      pk::FreeProp fp(mg, max_vertices);
      if (term_text.empty() && !term_file.empty()) term_text = slurp(term_file);
      pk::require(!term_text.empty(), "normalize: provide --term or --term-file");
      pk::Term t = pk::Term::parse(term_text);
      pk::Morphism m = pk::eval_term(
          t, fp, [&](const std::string& n) { return mg.colors().color(n); },
          [&](const std::string& n) { return fp.corolla(n); });
      out.line("profile " + m.source().to_string() + " -> " + m.target().to_string());
      out.text << fp.show(m);
      out.payload["source"] = m.source().to_string();
      out.payload["target"] = m.target().to_string();
      out.payload["canonical"] = fp.show(m);
      out.payload["key"] = m.key();
      out.payload["ok"] = true;
    } else if (enumerate->parsed()) {
      pk::FreeMegagraph mg = pk::FreeMegagraph::parse_string(slurp(mega_path));
      pk::FreeProp fp(mg, max_vertices);
      pk::ColorList src = parse_profile(mg.colors(), source_profile);
      pk::ColorList dst = parse_profile(mg.colors(), target_profile);
      std::vector<pk::Morphism> all = fp.enumerate_hom(src, dst, max_vertices);
      out.line("count " + std::to_string(all.size()));
      out.payload["count"] = all.size();
      out.payload["morphisms"] = json::array();
      for (const pk::Morphism& m : all) {
        out.line("morphism " + m.key());
        out.payload["morphisms"].push_back(m.key());
      }
      out.payload["ok"] = true;
    } else if (check->parsed()) {
      int code = 0;
      if (fixture_type == "prop") code = check_prop_fixture(fixture, out);
      else if (fixture_type == "operad") code = check_operad_fixture(fixture, out);
      else if (fixture_type == "nat") code = check_nat_fixture(fixture, out);
      else if (fixture_type == "bilinear") code = check_bilin_fixture(fixture, out);
      else if (fixture_type == "presentation")
        code = check_presentation_fixture(fixture, out);
      else
        throw pk::Error("unknown fixture type: " + fixture_type);
      out.flush();
      return code;
    } else if (tensor->parsed() || sharp->parsed()) {
      pk::Presentation l = pk::Presentation::parse_string(slurp(left_path));
      pk::Presentation r = pk::Presentation::parse_string(slurp(right_path));
      pk::Presentation result = tensor->parsed() ? pk::tensor_presentation(l, r)
                                                 : pk::sharp_presentation(l, r);
      if (!out_path.empty()) {
        std::ofstream os(out_path);
        os << result.to_string();
      }
      out.line("generators " + std::to_string(result.mega.generator_count()));
      out.line("relations " + std::to_string(result.relations.size()));
      out.payload["generators"] = result.mega.generator_count();
      out.payload["relations"] = result.relations.size();
      out.payload["ok"] = true;
    } else if (colimit->parsed()) {
      // Diagram file: "object <path>" lines then
      // "arrow <i> <j> : a=x,... ; m=term,..." lines.
      std::istringstream in(slurp(diagram_path));
      std::vector<pk::Presentation> objects;
      std::vector<pk::PresentationMap> arrows;
      std::string line;
      while (std::getline(in, line)) {
        if (size_t h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "object") {
          std::string rel;
          ls >> rel;
          objects.push_back(
              pk::Presentation::parse_string(slurp(sibling(diagram_path, rel))));
        } else if (word == "arrow") {
          pk::PresentationMap a;
          std::string colon, rest;
          ls >> a.source >> a.target >> colon;
          std::getline(ls, rest);
          pk::require(a.source >= 0 && a.source < static_cast<int>(objects.size()) &&
                          a.target >= 0 && a.target < static_cast<int>(objects.size()),
                      "colimit: arrow references an unknown object");
          const pk::Presentation& src = objects[a.source];
          const pk::Presentation& dst = objects[a.target];
          size_t semi = rest.find(';');
          std::string colors_part = rest.substr(0, semi);
          std::string gens_part =
              semi == std::string::npos ? "" : rest.substr(semi + 1);
          a.color_map.assign(src.mega.colors().size(), -1);
          std::istringstream cs(colors_part);
          std::string assign;
          auto trim = [](std::string s) {
            while (!s.empty() && isspace(static_cast<unsigned char>(s.front())))
              s.erase(s.begin());
            while (!s.empty() && isspace(static_cast<unsigned char>(s.back())))
              s.pop_back();
            return s;
          };
          while (std::getline(cs, assign, ',')) {
            size_t eq = assign.find('=');
            if (eq == std::string::npos) continue;
            a.color_map[src.mega.colors().color(trim(assign.substr(0, eq))).index()] =
                dst.mega.colors().color(trim(assign.substr(eq + 1))).index();
          }
          for (int c : a.color_map)
            pk::require(c >= 0, "colimit: incomplete arrow color map");
          a.gen_terms.assign(src.mega.generator_count(), pk::Term::unit());
          std::istringstream gs(gens_part);
          while (std::getline(gs, assign, ',')) {
            size_t eq = assign.find('=');
            if (eq == std::string::npos) continue;
            int gi = src.mega.generator_index(trim(assign.substr(0, eq)));
            pk::require(gi >= 0, "colimit: unknown generator in arrow");
            a.gen_terms[gi] = pk::Term::parse(trim(assign.substr(eq + 1)));
          }
          arrows.push_back(std::move(a));
        } else {
          throw pk::Error("diagram file: unknown directive '" + word + "'");
        }
      }
      pk::Presentation result = pk::colimit_presentation(objects, arrows);
      if (!out_path.empty()) {
        std::ofstream os(out_path);
        os << result.to_string();
      }
      out.line("colors " + std::to_string(result.mega.colors().size()));
      out.line("generators " + std::to_string(result.mega.generator_count()));
      out.line("relations " + std::to_string(result.relations.size()));
      out.payload["colors"] = result.mega.colors().size();
      out.payload["generators"] = result.mega.generator_count();
      out.payload["relations"] = result.relations.size();
      out.payload["ok"] = true;
    } else if (evaluate->parsed()) {
      pk::FreeMegagraph mg = pk::FreeMegagraph::parse_string(slurp(mega_path));
      auto fp = pk::make_free_prop(mg, max_vertices);
      pk::TablePropPtr table = pk::TableProp::parse_string(slurp(target_table));
      std::vector<int> cmap(mg.colors().size(), -1);
      if (mg.colors().size() == table->colors().size() && color_assignments.empty())
        for (int c = 0; c < mg.colors().size(); ++c) cmap[c] = c;
      std::istringstream cs(color_assignments);
      std::string assign;
      while (std::getline(cs, assign, ',')) {
        size_t eq = assign.find('=');
        if (eq == std::string::npos) continue;
        cmap[mg.colors().color(assign.substr(0, eq)).index()] =
            table->colors().color(assign.substr(eq + 1)).index();
      }
      for (int c : cmap) pk::require(c >= 0, "evaluate: incomplete color map");
      std::vector<pk::Morphism> images(mg.generator_count(), pk::Morphism());
      std::istringstream gs(assignments);
      while (std::getline(gs, assign, ',')) {
        size_t eq = assign.find('=');
        if (eq == std::string::npos) continue;
        int gi = mg.generator_index(assign.substr(0, eq));
        pk::require(gi >= 0, "evaluate: unknown generator " + assign.substr(0, eq));
        images[gi] = table->element(assign.substr(eq + 1));
      }
      for (const pk::Morphism& m : images)
        pk::require(m.valid(), "evaluate: missing generator image");
      pk::MegaMapToProp f(mg, table, cmap, images);
      pk::require(f.valid(), "evaluate: generator images have the wrong profiles");
      pk::Term t = pk::Term::parse(term_text);
      pk::Morphism free_m = pk::eval_term(
          t, *fp, [&](const std::string& n) { return mg.colors().color(n); },
          [&](const std::string& n) { return fp->corolla(n); });
      pk::Morphism value = pk::evaluate_free_morphism(*fp, free_m, f);
      out.line("value " + value.key());
      out.line("profile " + value.source().to_string() + " -> " +
               value.target().to_string());
      out.payload["value"] = value.key();
      out.payload["source"] = value.source().to_string();
      out.payload["target"] = value.target().to_string();
      out.payload["ok"] = true;
    } else if (homprop->parsed()) {
      pk::PresentedPropPtr source = pk::make_presented_prop(
          pk::Presentation::parse_string(slurp(left_path)), max_vertices, word_depth);
      pk::TablePropPtr table = pk::TableProp::parse_string(slurp(target_table));
      auto hom = pk::make_hom_prop(source, table);
      out.line("prop maps " + std::to_string(hom->colors().size()));
      out.payload["prop_maps"] = hom->colors().size();
      out.payload["hom_sets"] = json::array();
      for (const pk::ColorList& src :
           pk::all_color_lists(hom->colors(), pq_bound))
        for (const pk::ColorList& dst :
             pk::all_color_lists(hom->colors(), pq_bound)) {
          size_t n = hom->hom(src, dst).size();
          if (src.size() + dst.size() == 0 || n > 0) {
            out.line("hom (" + src.to_string() + ") -> (" + dst.to_string() +
                     "): " + std::to_string(n));
            out.payload["hom_sets"].push_back(
                {{"source", src.to_string()}, {"target", dst.to_string()}, {"count", n}});
          }
        }
      out.payload["ok"] = true;
    }
    out.flush();
    return kExitOk;
  } catch (const pk::Error& e) {
    if (as_json) {
      std::cout << json{{"ok", false}, {"error", e.what()}}.dump(2) << std::endl;
    } else {
      std::cerr << "error: " << e.what() << std::endl;
    }
    return kExitInputError;
  }
}
