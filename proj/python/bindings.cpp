#include "maghom/analysis.hpp"
#include "maghom/error.hpp"
#include "maghom/magnitude.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace maghom;

namespace {

py::object to_py(const Integer& value) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(value.str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<Integer>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

py::list series_to_py(const PowerSeries& s) {
  auto fraction = py::module_::import("fractions").attr("Fraction");
  py::list out;
  for (const auto& c : s.coefficients())
    out.append(fraction(to_py(boost::multiprecision::numerator(c)), to_py(boost::multiprecision::denominator(c))));
  return out;
}

Graph as_graph(const py::object& g) {
  if (py::isinstance<py::str>(g)) return parse_graph_spec(g.cast<std::string>());
  return g.cast<Graph>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Magnitude and magnitude homology of finite graphs";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidGraph>(m, "InvalidGraph", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<GeneratorCapExceeded>(m, "GeneratorCapExceeded", error.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", error.ptr());
  py::register_exception<UsageError>(m, "UsageError", error.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return build_graph(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_static("parse", [](const std::string& spec) { return parse_graph_spec(spec); }, py::arg("spec"))
      .def_property_readonly("name", &Graph::name)
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("is_connected", &Graph::is_connected)
      .def("distances",
           [](const Graph& g) {
             auto d = apsp(g);
             std::vector<std::vector<int>> rows(d.size(), std::vector<int>(d.size()));
             for (std::size_t u = 0; u < d.size(); ++u)
               for (std::size_t v = 0; v < d.size(); ++v) rows[u][v] = d(static_cast<Vertex>(u), static_cast<Vertex>(v));
             return rows;
           })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "<maghom.Graph " + (g.name().empty() ? edge_spec(g) : g.name()) + ">"; });

  m.def("is_tree", [](const py::object& g) { return is_tree(as_graph(g)); });
  m.def("is_pawful", [](const py::object& g) { return is_pawful(as_graph(g)); });
  m.def("is_geodetic", [](const py::object& g) { return is_geodetic(as_graph(g)); });
  m.def("is_ptolemaic", [](const py::object& g) { return is_ptolemaic(as_graph(g)); });
  m.def("is_block_graph", [](const py::object& g) { return is_block_graph(as_graph(g)); });

  m.def("magnitude_series", [](const py::object& g, std::size_t order) { return series_to_py(magnitude_series(as_graph(g), order)); },
        py::arg("graph"), py::arg("order") = kDefaultSeriesOrder, "Coefficients of q^0..q^(order-1) as Fractions.");
  m.def("speyer_magnitude",
        [](const py::object& g) {
          auto r = speyer_magnitude(as_graph(g));
          return py::make_tuple(to_py(r.numerator), to_py(r.denominator));
        },
        py::arg("graph"), "(numerator, denominator) coefficient lists.");
  m.def("chain_euler", [](const py::object& g, int l) { return to_py(chain_euler(as_graph(g), l)); });

  py::class_<HomologyGroup>(m, "HomologyGroup")
      .def_readonly("rank", &HomologyGroup::rank)
      .def_property_readonly("torsion", [](const HomologyGroup& h) { return to_py(h.torsion); })
      .def("__repr__", [](const HomologyGroup& h) { return "<HomologyGroup " + format_group(h) + ">"; });

  py::class_<HomologyTable>(m, "HomologyTable")
      .def_readonly("graph", &HomologyTable::graph)
      .def_readonly("method", &HomologyTable::method)
      .def_readonly("lmax", &HomologyTable::lmax)
      .def("rank", &HomologyTable::rank, py::arg("k"), py::arg("l"))
      .def("__getitem__", [](const HomologyTable& t, std::pair<int, int> kl) { return t.at(kl.first, kl.second); })
      .def("euler_characteristic", [](const HomologyTable& t, int l) { return to_py(t.euler_characteristic(l)); })
      .def("torsion_free", &HomologyTable::torsion_free)
      .def("to_json", &table_to_json)
      .def_static("from_json", [](const std::string& s) { return table_from_json(s); })
      .def("pretty", &format_table_pretty)
      .def("csv", &format_table_csv)
      .def("__eq__", [](const HomologyTable& a, const HomologyTable& b) { return a == b; })
      .def("__repr__", [](const HomologyTable& t) { return format_table_pretty(t); });

  m.def("homology",
        [](const py::object& g, int max_l, const std::string& method, unsigned threads, std::size_t cap) {
          Graph graph = as_graph(g);
          TableOptions options;
          options.method = method;
          options.threads = threads;
          options.cap = cap;
          py::gil_scoped_release release;
          return mh_table(graph, max_l, options);
        },
        py::arg("graph"), py::arg("max_l"), py::arg("method") = "naive", py::arg("threads") = 0,
        py::arg("cap") = kDefaultGeneratorCap);

  m.def("diagonal_check",
        [](const py::object& g, int max_l, const std::string& method) {
          Graph graph = as_graph(g);
          TableOptions options;
          options.method = method;
          DiagonalityReport r;
          {
            py::gil_scoped_release release;
            r = diagonal_check(graph, max_l, options);
          }
          py::dict out;
          out["graph"] = r.graph;
          out["lmax"] = r.lmax;
          out["diagonal"] = r.diagonal;
          out["counterexample"] = r.diagonal ? py::object(py::none()) : py::object(py::make_tuple(r.k, r.l, r.rank));
          out["verdict"] = r.verdict();
          return out;
        },
        py::arg("graph"), py::arg("max_l"), py::arg("method") = "naive");

  m.def("rule_names", &rule_names);
  m.def("validate_rule",
        [](const std::string& rule, const py::object& g, int max_l) {
          Graph graph = as_graph(g);
          auto r = validate_rule(make_rule(rule, graph), graph, max_l);
          py::dict out;
          out["valid"] = r.valid;
          out["diagonal"] = r.diagonal;
          out["sequences_checked"] = r.sequences_checked;
          out["violation"] = r.violation;
          out["morse"] = r.valid && check_morse_rule(make_rule(rule, graph), graph, max_l).empty();
          return out;
        },
        py::arg("rule"), py::arg("graph"), py::arg("max_l"));
  m.def("unmatched",
        [](const std::string& rule, const py::object& g, int k, int l) {
          Graph graph = as_graph(g);
          std::vector<std::vector<Vertex>> out;
          for (auto& s : enumerate_unmatched(make_rule(rule, graph), apsp(graph), k, l)) out.push_back(s.vertices);
          return out;
        },
        py::arg("rule"), py::arg("graph"), py::arg("k"), py::arg("l"));
  m.def("t_odd", [](int m_, int k, int l) { return to_py(t_odd(m_, k, l)); });
  m.def("t_even", [](int m_, int k, int l) { return to_py(t_even(m_, k, l)); });
}
