#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lachi/constructions.hpp"
#include "lachi/error.hpp"
#include "lachi/harness.hpp"
#include "lachi/io.hpp"
#include "lachi/solver.hpp"

namespace py = pybind11;
using namespace lachi;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_python(const py::object& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

TheoremChoice parse_theorem(const std::string& name) {
  if (name == "auto") return TheoremChoice::Auto;
  if (name == "addpendant") return TheoremChoice::AddPendant;
  if (name == "addpendant2") return TheoremChoice::AddPendant2;
  if (name == "corollary") return TheoremChoice::Corollary;
  throw Error(ErrorCode::ParseError, "unknown theorem '" + name + "'");
}

std::vector<Label> label_list(const EdgeLabeling& f) { return {f.labels().begin(), f.labels().end()}; }

py::tuple labeled(const LabeledGraph& lg) { return py::make_tuple(lg.graph, label_list(lg.labeling)); }

}  // namespace

PYBIND11_MODULE(_lachi, m) {
  m.doc() = "Local antimagic labelings: verification, constructions, exact search and bound predictions";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result(
      [&]() { return py::object(py::exception<Error>(m, "LachiError", PyExc_ValueError)); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::object& type = error_type.get_stored();
      py::object instance = type(e.what());
      instance.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(type.ptr(), instance.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](const std::vector<std::pair<Vertex, Vertex>>& edges, std::string name) {
             return Graph::from_edge_list(edges, std::move(name));
           }),
           py::arg("edges"), py::arg("name") = "")
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("name", &Graph::name)
      .def_property_readonly("edges", &edge_pairs)
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, Vertex v) {
        const auto n = g.neighbors(v);
        return std::vector<Vertex>(n.begin(), n.end());
      })
      .def("is_connected", &Graph::is_connected)
      .def("__repr__", [](const Graph& g) {
        return "<Graph '" + g.name() + "' V=" + std::to_string(g.vertex_count()) +
               " E=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("path", &build_path, py::arg("n"));
  m.def("cycle", &build_cycle, py::arg("n"));
  m.def("star", &build_star, py::arg("k"));
  m.def("wheel", &build_wheel, py::arg("n"));
  m.def(
      "spider",
      [](const std::vector<std::pair<std::size_t, std::size_t>>& legs) {
        std::vector<SpiderLeg> spec;
        for (const auto& [length, multiplicity] : legs) spec.push_back({length, multiplicity});
        return build_spider(spec);
      },
      py::arg("legs"), "legs: list of (length, multiplicity)");
  m.def("pendant_vertices", &pendant_vertices);
  m.def("add_pendant_edges", &add_pendant_edges, py::arg("graph"), py::arg("targets"), py::arg("s"));
  m.def("chromatic_number", &chromatic_number_exact, py::arg("graph"), py::arg("limit") = 16);

  m.def("induced_colors", [](const Graph& g, const std::vector<Label>& labels) {
    return induced_colors(g, EdgeLabeling(labels)).colors;
  });
  m.def("is_local_antimagic",
        [](const Graph& g, const std::vector<Label>& labels) { return is_local_antimagic(g, EdgeLabeling(labels)); });
  m.def("color_count",
        [](const Graph& g, const std::vector<Label>& labels) { return color_count(g, EdgeLabeling(labels)); });
  m.def("extract_profile", [](const Graph& g, const std::vector<Label>& labels) {
    return to_python(to_json(extract_profile(g, EdgeLabeling(labels))));
  });
  m.def("check_pendant_lemma",
        [](const Graph& g, const std::vector<Label>& labels) { return check_pendant_lemma(g, EdgeLabeling(labels)); });

  m.def("label_spider_2n", [](std::size_t n) { return labeled(label_spider_2n(n)); }, py::arg("n"),
        "Returns (graph, labels).");
  m.def("label_star", [](std::size_t k) { return labeled(label_star(k)); }, py::arg("k"));
  m.def("augment_star_leaf", [](std::size_t k, std::size_t i, std::size_t s) { return labeled(augment_star_leaf(k, i, s)); },
        py::arg("k"), py::arg("leaf_class"), py::arg("s"));
  m.def(
      "augment_and_label",
      [](const Graph& g, const std::vector<Label>& labels, std::size_t i, std::size_t s) {
        const Augmentation a = augment_and_label(g, EdgeLabeling(labels), i, s);
        py::dict out;
        out["graph"] = a.graph;
        out["labels"] = label_list(a.labeling);
        out["augmented"] = a.augmented;
        out["local_antimagic"] = a.local_antimagic;
        return out;
      },
      py::arg("graph"), py::arg("labels"), py::arg("class_index"), py::arg("s"));

  m.def(
      "solve",
      [](const Graph& g, std::size_t edge_limit, std::size_t jobs) {
        SolverResult r;
        {
          py::gil_scoped_release release;
          r = solve_chi_la(g, SolverOptions{edge_limit, jobs});
        }
        Json j = to_json(r, 0);
        j.erase("wall_time");
        return to_python(j);
      },
      py::arg("graph"), py::arg("edge_limit") = kDefaultEdgeLimit, py::arg("jobs") = 1);
  m.def("certify", [](const Graph& g, const std::vector<Label>& labels) -> std::optional<std::size_t> {
    const auto r = certify(g, EdgeLabeling(labels));
    if (!r) return std::nullopt;
    return r->chi_la;
  });
  m.def(
      "find_labeling_with_profile",
      [](const Graph& g, const std::vector<std::pair<Color, std::size_t>>& target,
         std::size_t edge_limit) -> std::optional<std::vector<Label>> {
        std::vector<ColorTarget> t;
        for (const auto& [color, multiplicity] : target) t.push_back({color, multiplicity});
        const auto f = find_labeling_with_profile(g, t, edge_limit);
        if (!f) return std::nullopt;
        return label_list(*f);
      },
      py::arg("graph"), py::arg("target"), py::arg("edge_limit") = kDefaultEdgeLimit,
      "target: list of (color, multiplicity)");

  m.def(
      "predict",
      [](const py::object& profile, std::size_t i, std::size_t s, const std::string& theorem) {
        return to_python(to_json(predict(profile_from_json(from_python(profile)), i, s, parse_theorem(theorem))));
      },
      py::arg("profile"), py::arg("class_index"), py::arg("s"), py::arg("theorem") = "auto");
  m.def(
      "run_experiment",
      [](const Graph& g, const std::vector<Label>& labels, std::size_t i, std::size_t s, bool use_solver,
         const std::string& theorem) {
        ExperimentOptions options;
        options.use_solver = use_solver;
        options.theorem = parse_theorem(theorem);
        return to_python(to_json(run_experiment(g, EdgeLabeling(labels), i, s, options)));
      },
      py::arg("graph"), py::arg("labels"), py::arg("class_index"), py::arg("s"), py::arg("use_solver") = false,
      py::arg("theorem") = "auto");
}
