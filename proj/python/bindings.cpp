#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "cubegroup/cubegroup.hpp"

namespace py = pybind11;
using namespace cubegroup;

namespace {

Word to_word(const DecoratedGraph& graph, const std::vector<std::string>& names) {
  Word word;
  for (const auto& name : names) word.push_back(graph.index_of(name));
  return word;
}

std::vector<std::string> to_names(const DecoratedGraph& graph, const std::vector<Label>& labels) {
  std::vector<std::string> out;
  for (auto s : labels) out.push_back(graph.name(s));
  return out;
}

py::dict report_dict(const DecoratedGraph& graph, const AdmissibilityReport& report) {
  py::list failures;
  for (const auto& f : report.failures) {
    py::dict item;
    item["seed"] = py::make_tuple(graph.name(f.first), graph.name(f.second));
    item["kind"] =
        f.kind == AdmissibilityFailureKind::NotFourPeriodic ? "NotFourPeriodic" : "Holonomy";
    item["holonomy"] = f.holonomy ? py::cast(format_involution(graph, *f.holonomy)) : py::none();
    failures.append(item);
  }
  py::dict out;
  out["admissible"] = report.admissible;
  out["failures"] = failures;
  return out;
}

py::dict tree_dict(const DecoratedGraph& graph, const OrbitTree& node) {
  py::list children;
  for (const auto& child : node.children) children.append(tree_dict(graph, child));
  py::dict out;
  out["labels"] = to_names(graph, node.labels);
  out["children"] = children;
  return out;
}

}  // namespace

PYBIND11_MODULE(_cubegroup, m) {
  m.doc() = "Cube groups from decorated graphs";

  auto base = py::register_exception<CubeError>(m, "CubeError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<NotADecomposition>(m, "NotADecomposition", base.ptr());

  py::class_<DecoratedGraph>(m, "DecoratedGraph")
      .def_static("parse", &parse_decorated_graph, py::arg("text"))
      .def_static("from_perm_group",
                  [](const std::string& text) {
                    return decorated_graph_from_perm_group(parse_perm_group(text));
                  },
                  py::arg("text"))
      .def_property_readonly("rank", &DecoratedGraph::rank)
      .def_property_readonly("labels", &DecoratedGraph::labels)
      .def("involution",
           [](const DecoratedGraph& g, const std::string& s) {
             return format_involution(g, g.involution(g.index_of(s)));
           })
      .def("serialize", &serialize_decorated_graph)
      .def("admissibility", [](const DecoratedGraph& g) { return report_dict(g, is_admissible(g)); })
      .def("is_admissible", [](const DecoratedGraph& g) { return is_admissible(g).admissible; })
      .def("edge_partition",
           [](const DecoratedGraph& g) {
             std::vector<std::string> out;
             for (const auto& group : edge_partition(g)) out.push_back(format_edge_group(g, group));
             return out;
           })
      .def("relators",
           [](const DecoratedGraph& g) {
             std::vector<std::vector<std::string>> out;
             for (const auto& r : presentation_relators(g)) out.push_back(to_names(g, r));
             return out;
           })
      .def("orbits",
           [](const DecoratedGraph& g) {
             std::vector<std::vector<std::string>> out;
             for (const auto& block : orbits(g).blocks) out.push_back(to_names(g, block));
             return out;
           })
      .def("orbit_tree", [](const DecoratedGraph& g) { return tree_dict(g, orbit_tree(g)); })
      .def("decomposition_ordering",
           [](const DecoratedGraph& g) { return to_names(g, decomposition_ordering(orbit_tree(g))); })
      .def("rho",
           [](const DecoratedGraph& g, const std::vector<std::string>& word) {
             return rho_of_word(g, to_word(g, word)).matrix();
           },
           py::arg("word"), "Signed permutation matrix of a word in application order.")
      .def("rho_via_formula",
           [](const DecoratedGraph& g, const std::vector<std::string>& word) {
             return rho_via_formula(g, to_word(g, word)).matrix();
           },
           py::arg("word"))
      .def("sign_count",
           [](const DecoratedGraph& g, const std::vector<std::string>& word, const std::string& t) {
             return sign_count(g, to_word(g, word), g.index_of(t)).count;
           },
           py::arg("word"), py::arg("target"))
      .def("is_reducible", &is_reducible)
      .def("__eq__", [](const DecoratedGraph& x, const DecoratedGraph& y) { return x == y; })
      .def("__repr__", [](const DecoratedGraph& g) {
        return "<DecoratedGraph rank=" + std::to_string(g.rank()) + ">";
      });

  py::class_<CubeGroup>(m, "CubeGroup")
      .def(py::init(&generate_group), py::arg("graph"))
      .def_property_readonly("order", &CubeGroup::order)
      .def_property_readonly("rank", &CubeGroup::rank)
      .def_property_readonly("graph", &CubeGroup::graph)
      .def_property_readonly("cayley_dimension", [](const CubeGroup& g) { return g.cube().dimension; })
      .def("evaluate",
           [](const CubeGroup& g, const std::vector<std::string>& word) {
             return g.evaluate(to_word(g.graph(), word));
           },
           py::arg("word"), "Element index of a word in application order.")
      .def("multiply", &CubeGroup::multiply)
      .def("subset",
           [](const CubeGroup& g, std::size_t x) {
             std::vector<std::string> out;
             for (auto s : mask_members(g.subset_of(x))) out.push_back(g.graph().name(s));
             return out;
           })
      .def("matrix", [](const CubeGroup& g, std::size_t x) { return g.element(x).matrix.matrix(); })
      .def("cayley_edges",
           [](const CubeGroup& g) {
             std::vector<std::tuple<std::size_t, std::size_t, std::string>> out;
             for (const auto& e : g.cayley().edges) out.emplace_back(e.u, e.v, g.graph().name(e.label));
             return out;
           })
      .def("cayley_dot",
           [](const CubeGroup& g) {
             std::ostringstream out;
             write_cayley_dot(out, g);
             return out.str();
           })
      .def("normal_form",
           [](const CubeGroup& g, const std::vector<std::string>& word,
              std::optional<std::vector<std::string>> ordering) {
             const auto& graph = g.graph();
             const auto order = ordering ? to_word(graph, *ordering)
                                         : decomposition_ordering(orbit_tree(graph));
             const auto nf = normal_form(g, order);
             const auto bits = nf.exponents_of.at(g.evaluate(to_word(graph, word)));
             return exponent_string(bits, order.size());
           },
           py::arg("word"), py::arg("ordering") = py::none());

  py::class_<SweepReport>(m, "SweepReport")
      .def_readonly("rank", &SweepReport::rank)
      .def_readonly("total_graphs", &SweepReport::total_graphs)
      .def_readonly("admissible_count", &SweepReport::admissible_count)
      .def_readonly("verified_count", &SweepReport::verified_count)
      .def_property_readonly("failures",
                             [](const SweepReport& r) {
                               std::vector<std::tuple<std::size_t, std::string, std::string>> out;
                               for (const auto& f : r.failures)
                                 out.emplace_back(f.graph_index, f.check, f.detail);
                               return out;
                             })
      .def("passed", &SweepReport::passed);

  m.def(
      "sweep",
      [](std::size_t rank, std::size_t jobs, bool planar) {
        SweepOptions options;
        options.jobs = jobs;
        options.all_planar_orderings = planar;
        py::gil_scoped_release release;
        return sweep(rank, options);
      },
      py::arg("rank"), py::arg("jobs") = 1, py::arg("planar") = false);
  m.def("involution_count", &involution_count);
}
