#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "mmw/serialize.hpp"
#include "mmw/sweep.hpp"

namespace py = pybind11;
using namespace mmw;

namespace {

// Results cross the boundary as plain dicts, via the canonical JSON forms.
py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

json from_py(const py::handle& obj) {
  return json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

Graph as_graph(const py::object& obj) {
  if (py::isinstance<Graph>(obj)) return obj.cast<Graph>();
  return graph_from_json(from_py(obj));
}

PartitionInstance as_instance(const std::vector<long long>& items) { return PartitionInstance(items); }

SolverCaps caps_from(int mmw_n, int bw_m, int tw_n) { return SolverCaps{mmw_n, bw_m, tw_n}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact mm-width, branchwidth and treewidth of small graphs, and the PARTITION reductions.";

  auto base = py::register_exception<Error>(m, "MmwError", PyExc_RuntimeError);
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<ResourceLimit>(m, "ResourceLimit", base.ptr());
  py::register_exception<Contradiction>(m, "Contradiction", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             return Graph(n, std::span<const std::pair<int, int>>(edges));
           }),
           py::arg("n"), py::arg("edges"))
      .def_static("from_dict", [](const py::object& d) { return graph_from_json(from_py(d)); })
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("neighbors", [](const Graph& g, int v) {
        check_vertex(g, v);
        return std::vector<int>(g.neighbors(v).begin(), g.neighbors(v).end());
      })
      .def("has_edge", &Graph::has_edge)
      .def("to_dict", [](const Graph& g) { return to_py(to_json(g)); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("complete_graph", &complete_graph);
  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);

  m.def(
      "mm_cut",
      [](const py::object& g, std::vector<int> side) {
        const Graph graph = as_graph(g);
        for (int v : side) check_vertex(graph, v);
        return mm_cut(graph, std::span<const Vertex>(side));
      },
      py::arg("graph"), py::arg("side"));

  m.def(
      "check_symmetric_submodular",
      [](const py::object& g, int trials, std::uint64_t seed) {
        return to_py(to_json(check_symmetric_submodular(mm_cut_function(as_graph(g)), trials, seed)));
      },
      py::arg("graph"), py::arg("trials") = 10000, py::arg("seed") = 0);

  m.def(
      "mmw",
      [](const py::object& g, int cap, int workers) {
        const Graph graph = as_graph(g);
        WidthResult r;
        {
          py::gil_scoped_release release;
          r = mmw_exact(graph, caps_from(cap, 10, 12), workers);
        }
        return to_py(to_json(r));
      },
      py::arg("graph"), py::arg("cap") = 10, py::arg("workers") = 1);

  m.def(
      "branchwidth",
      [](const py::object& g, int cap, int workers) {
        return to_py(to_json(branchwidth_exact(as_graph(g), caps_from(10, cap, 12), workers)));
      },
      py::arg("graph"), py::arg("cap") = 10, py::arg("workers") = 1);

  m.def(
      "treewidth", [](const py::object& g, int cap) { return treewidth_exact(as_graph(g), caps_from(10, 10, cap)); },
      py::arg("graph"), py::arg("cap") = 12);

  m.def(
      "inequality_chain",
      [](const py::object& g, int cap_mmw_n, int cap_bw_m, int cap_tw_n) {
        return to_py(to_json(check_inequality_chain(as_graph(g), caps_from(cap_mmw_n, cap_bw_m, cap_tw_n))));
      },
      py::arg("graph"), py::arg("cap_mmw_n") = 10, py::arg("cap_bw_m") = 10, py::arg("cap_tw_n") = 12);

  m.def("partition2", [](const std::vector<long long>& items) {
    const auto s = as_instance(items);
    return to_py(to_json(partition2_oracle(s), s, 2));
  });
  m.def("partition3", [](const std::vector<long long>& items) {
    const auto s = as_instance(items);
    return to_py(to_json(partition3_oracle(s), s, 3));
  });

  m.def("reduce_partition_to_partition3", [](const std::vector<long long>& items) {
    const auto r = reduce_partition_to_partition3(as_instance(items));
    return to_py({{"instance", to_json(r.instance)}, {"forced_no", r.forced_no}});
  });
  m.def("reduce_partition3_to_splitgraph", [](const std::vector<long long>& items) {
    const auto r = reduce_partition3_to_splitgraph(as_instance(items));
    return to_py({{"graph", to_json(r.graph)}, {"blocks", r.blocks}, {"independent_of", r.independent_of}});
  });

  m.def("lemma3_check", [](const py::object& split_graph) {
    return to_py(to_json(lemma3_check(split_graph_from_json(from_py(split_graph)))));
  });

  m.def(
      "build_tree_representation",
      [](const py::object& split_graph, const py::object& parts) {
        const SplitGraph sg = split_graph_from_json(from_py(split_graph));
        const CliqueTripartition p = clique_tripartition_from_json(from_py(parts));
        return to_py(to_json(build_tree_representation(sg, p)));
      },
      py::arg("split_graph"), py::arg("parts"));

  m.def(
      "validate_tree_representation",
      [](const py::object& g, const py::object& rep, std::optional<int> k) {
        const TreeRepresentation tr = representation_from_json(from_py(rep));
        const auto v = validate_tree_representation(as_graph(g), tr, k.value_or(std::numeric_limits<int>::max()));
        return to_py(to_json(v, tr.host));
      },
      py::arg("graph"), py::arg("rep"), py::arg("k") = py::none());

  m.def(
      "certify",
      [](const std::vector<long long>& items, int cap_mmw_n, int workers) {
        CertifyCaps caps;
        caps.solver.mmw_n = cap_mmw_n;
        caps.workers = workers;
        return to_py(to_json(certify_end_to_end(as_instance(items), caps)));
      },
      py::arg("items"), py::arg("cap_mmw_n") = 10, py::arg("workers") = 1);

  m.def(
      "sweep",
      [](const std::string& kind, int n, int n_min, int max_m, int max_item, int max_total, int workers) {
        const auto k = parse_sweep_kind(kind);
        if (!k) throw InvalidInput("unknown sweep kind '" + kind + "'");
        SweepOptions o;
        o.n = n;
        o.n_min = n_min;
        o.max_m = max_m;
        o.max_item = max_item;
        o.max_total = max_total;
        o.workers = workers;
        SweepReport r;
        {
          py::gil_scoped_release release;
          r = run_sweep(*k, o);
        }
        return to_py(to_json(r));
      },
      py::arg("kind"), py::arg("n") = 5, py::arg("n_min") = -1, py::arg("max_m") = 6, py::arg("max_item") = 6,
      py::arg("max_total") = 9, py::arg("workers") = 1);
}
