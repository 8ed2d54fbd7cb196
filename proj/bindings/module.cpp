#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "propkit/axioms.hpp"
#include "propkit/end_prop.hpp"
#include "propkit/hom_tensor.hpp"
#include "propkit/operad.hpp"
#include "propkit/table_prop.hpp"

namespace py = pybind11;
using namespace propkit;

namespace {

Term parse_term(const std::string& text) { return Term::parse(text); }

Morphism eval_term_in_free(const FreeProp& fp, const std::string& term) {
  Term t = Term::parse(term);
  return eval_term(
      t, fp, [&](const std::string& n) { return fp.mega().colors().color(n); },
      [&](const std::string& n) { return fp.corolla(n); });
}

ColorList profile_of(const ColorSet& colors, const std::vector<std::string>& names) {
  std::vector<Color> cs;
  for (const std::string& n : names) cs.push_back(colors.color(n));
  return ColorList(std::move(cs));
}

struct TableHandle {
  TablePropPtr table;
};

py::dict morphism_info(const FreeProp& fp, const Morphism& m) {
  py::dict out;
  out["source"] = m.source().to_string();
  out["target"] = m.target().to_string();
  out["key"] = m.key();
  out["dump"] = fp.show(m);
  out["vertices"] = fp.canonical(m).dec.graph.vertex_count();
  return out;
}

}  // namespace

PYBIND11_MODULE(_propkit, m) {
  m.doc() = "Symbolic engine for colored props: free props on megagraphs, "
            "presentations with rewriting, internal homs and tensor products";

  py::register_exception<Error>(m, "PropkitError");

  py::class_<Perm>(m, "Perm")
      .def(py::init([](const std::vector<int>& one_line) {
             return Perm::from_one_line(one_line);
           }),
           py::arg("one_line_images"))
      .def_static("identity", &Perm::identity)
      .def_static("parse", &Perm::parse)
      .def("degree", &Perm::degree)
      .def("inverse", &Perm::inverse)
      .def("is_identity", &Perm::is_identity)
      .def("__mul__", &Perm::operator*)
      .def("__eq__", [](const Perm& a, const Perm& b) { return a == b; })
      .def("__repr__", &Perm::to_string);

  m.def("sigma_xy", &sigma_xy, py::arg("x"), py::arg("y"));
  m.def("block_transpose", &block_transpose, py::arg("n"), py::arg("p"));

  py::class_<FreeMegagraph>(m, "Megagraph")
      .def_static("parse", &FreeMegagraph::parse_string)
      .def("__repr__", &FreeMegagraph::to_string)
      .def("color_names",
           [](const FreeMegagraph& mg) {
             std::vector<std::string> names;
             for (int i = 0; i < mg.colors().size(); ++i)
               names.push_back(mg.colors().name(i));
             return names;
           })
      .def("generator_names", [](const FreeMegagraph& mg) {
        std::vector<std::string> names;
        for (int i = 0; i < mg.generator_count(); ++i)
          names.push_back(mg.generator(i).name);
        return names;
      });

  py::class_<FreeProp, std::shared_ptr<FreeProp>>(m, "FreeProp")
      .def(py::init([](const FreeMegagraph& mg, int bound) {
             return std::make_shared<FreeProp>(mg, bound);
           }),
           py::arg("megagraph"), py::arg("max_vertices") = 3)
      .def("normalize",
           [](const FreeProp& fp, const std::string& term) {
             return morphism_info(fp, eval_term_in_free(fp, term));
           })
      .def("equal_terms",
           [](const FreeProp& fp, const std::string& a, const std::string& b) {
             return eval_term_in_free(fp, a) == eval_term_in_free(fp, b);
           })
      .def("enumerate",
           [](const FreeProp& fp, const std::vector<std::string>& source,
              const std::vector<std::string>& target, int max_vertices) {
             std::vector<py::dict> out;
             for (const Morphism& mor : fp.enumerate_hom(
                      profile_of(fp.mega().colors(), source),
                      profile_of(fp.mega().colors(), target), max_vertices))
               out.push_back(morphism_info(fp, mor));
             return out;
           },
           py::arg("source"), py::arg("target"), py::arg("max_vertices"));

  py::class_<Presentation>(m, "Presentation")
      .def_static("parse", &Presentation::parse_string)
      .def("__repr__", &Presentation::to_string)
      .def_property_readonly("generators",
                             [](const Presentation& p) { return p.mega.generator_count(); })
      .def_property_readonly("relations",
                             [](const Presentation& p) { return p.relations.size(); });

  m.def("sharp", &sharp_presentation, py::arg("left"), py::arg("right"));
  m.def("tensor", &tensor_presentation, py::arg("left"), py::arg("right"));
  m.def("bv_tensor", &bv_tensor, py::arg("left"), py::arg("right"));

  py::class_<PresentedProp, std::shared_ptr<PresentedProp>>(m, "PresentedProp")
      .def(py::init([](const Presentation& p, int vertex_bound, int depth) {
             return std::make_shared<PresentedProp>(p, vertex_bound, depth);
           }),
           py::arg("presentation"), py::arg("max_vertices") = 3,
           py::arg("rewrite_depth") = 4)
      .def("word_equal",
           [](const PresentedProp& p, const std::string& a, const std::string& b) {
             switch (p.word_equal(Term::parse(a), Term::parse(b))) {
               case WordVerdict::equal: return "equal";
               case WordVerdict::distinct: return "distinct";
               default: return "unknown";
             }
           })
      .def("hom_count", [](const PresentedProp& p, const std::vector<std::string>& src,
                           const std::vector<std::string>& dst) {
        ColorSet cs = p.colors();
        return p.hom(profile_of(cs, src), profile_of(cs, dst)).size();
      });

  py::class_<TableHandle>(m, "TableProp")
      .def_static("parse",
                  [](const std::string& text) {
                    return TableHandle{TableProp::parse_string(text)};
                  })
      .def("__repr__", [](const TableHandle& t) { return t.table->to_string(); })
      .def("check_axioms", [](const TableHandle& t) {
        AxiomReport r = check_prop_axioms(
            t.table, enumerate_all_morphisms(t.table, t.table->max_len()));
        py::dict out;
        out["ok"] = r.ok();
        out["instances"] = r.total();
        py::dict fails;
        for (const auto& [axiom, detail] : r.first_fail) fails[axiom.c_str()] = detail;
        out["failures"] = fails;
        return out;
      });

  m.def("evaluate",
        [](const FreeMegagraph& mg, const std::string& term,
           const TableHandle& handle,
           const std::map<std::string, std::string>& generator_images,
           const std::map<std::string, std::string>& color_map) {
          const TablePropPtr& table = handle.table;
          std::vector<int> cmap(mg.colors().size(), -1);
          if (color_map.empty() && mg.colors().size() == table->colors().size())
            for (int c = 0; c < mg.colors().size(); ++c) cmap[c] = c;
          for (const auto& [from, to] : color_map)
            cmap[mg.colors().color(from).index()] = table->colors().color(to).index();
          std::vector<Morphism> images(mg.generator_count(), Morphism());
          for (const auto& [gen, elem] : generator_images) {
            int gi = mg.generator_index(gen);
            require(gi >= 0, "unknown generator " + gen);
            images[gi] = table->element(elem);
          }
          for (const Morphism& img : images)
            require(img.valid(), "missing generator image");
          MegaMapToProp f(mg, table, cmap, images);
          require(f.valid(), "generator images have the wrong profiles");
          auto fp = make_free_prop(mg, 3);
          Morphism value =
              evaluate_free_morphism(*fp, eval_term_in_free(*fp, term), f);
          return value.key();
        },
        py::arg("megagraph"), py::arg("term"), py::arg("table"),
        py::arg("generator_images"),
        py::arg("color_map") = std::map<std::string, std::string>{});

  m.def("count_prop_maps",
        [](std::shared_ptr<PresentedProp> source, const TableHandle& target) {
          return enumerate_prop_homs(source, target.table).size();
        },
        py::arg("source"), py::arg("target"));

  m.def("count_prop_maps_end",
        [](std::shared_ptr<PresentedProp> source, int set_size) {
          return enumerate_prop_homs(source, make_end_prop(set_size)).size();
        },
        py::arg("source"), py::arg("set_size"));
}
