#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "batchhl/dynamizer.hpp"
#include "batchhl/graph.hpp"
#include "batchhl/labelling.hpp"
#include "batchhl/query.hpp"
#include "batchhl/serialize.hpp"

namespace py = pybind11;
using namespace batchhl;

namespace {

using Edge = std::pair<Vertex, Vertex>;

std::optional<Dist> finite_or_none(Dist d) {
  if (is_finite(d)) return d;
  return std::nullopt;
}

Graph graph_from_edges(const std::vector<Edge>& edges, std::size_t n) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::vector<EdgeUpdate> raw_updates(const std::vector<Edge>& inserts, const std::vector<Edge>& deletes) {
  std::vector<EdgeUpdate> raw;
  for (auto [u, v] : deletes) raw.push_back({u, v, UpdateKind::Delete});
  for (auto [u, v] : inserts) raw.push_back({u, v, UpdateKind::Insert});
  return raw;
}

SearchVariant parse_variant(const std::string& s) {
  if (s == "basic") return SearchVariant::Basic;
  if (s == "improved") return SearchVariant::Improved;
  throw py::value_error("variant must be 'basic' or 'improved'");
}

py::dict report_dict(const UpdateReport& r, std::size_t applied) {
  py::dict d;
  d["updates"] = applied;
  d["affected"] = r.affected;
  d["total_affected"] = r.total_affected();
  d["label_writes"] = r.label_writes;
  return d;
}

/// A graph and its labelling kept in step.
class Oracle {
 public:
  Oracle(const std::vector<Edge>& edges, std::size_t num_vertices, std::size_t k,
         std::optional<std::vector<Vertex>> landmarks, unsigned workers)
      : graph_(graph_from_edges(edges, num_vertices)),
        gamma_(build(graph_,
                     landmarks ? LandmarkSet(*landmarks, graph_.num_vertices()) : select_landmarks(graph_, k),
                     workers)),
        workers_(workers) {}

  std::optional<Dist> distance(Vertex s, Vertex t) {
    QueryEngine engine(graph_, gamma_);
    return finite_or_none(engine.query(s, t).distance);
  }

  std::vector<std::optional<Dist>> distances(const std::vector<Edge>& pairs) {
    QueryEngine engine(graph_, gamma_);
    std::vector<std::optional<Dist>> out;
    out.reserve(pairs.size());
    for (auto [s, t] : pairs) out.push_back(finite_or_none(engine.query(s, t).distance));
    return out;
  }

  py::dict update(const std::vector<Edge>& inserts, const std::vector<Edge>& deletes, const std::string& variant) {
    const auto batch = normalize_batch(graph_, raw_updates(inserts, deletes));
    graph_.apply(batch);
    BatchUpdater updater({parse_variant(variant), workers_});
    return report_dict(updater.apply(graph_, batch, gamma_), batch.size());
  }

  const Graph& graph() const { return graph_; }
  const HighwayCoverLabelling& labelling() const { return gamma_; }

 private:
  Graph graph_;
  HighwayCoverLabelling gamma_;
  unsigned workers_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Batch-dynamic highway cover labelling";

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("num_vertices") = 0)
      .def_static("from_edges", &graph_from_edges, py::arg("edges"), py::arg("num_vertices") = 0)
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("add_edge", &Graph::add_edge)
      .def("remove_edge", &Graph::remove_edge)
      .def("has_edge", &Graph::has_edge)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             auto nb = g.neighbors(v);
             return std::vector<Vertex>(nb.begin(), nb.end());
           })
      .def(py::self == py::self);

  py::class_<HighwayCoverLabelling>(m, "Labelling")
      .def_property_readonly("landmarks",
                             [](const HighwayCoverLabelling& l) {
                               auto vs = l.landmarks().vertices();
                               return std::vector<Vertex>(vs.begin(), vs.end());
                             })
      .def_property_readonly("num_vertices", &HighwayCoverLabelling::num_vertices)
      .def_property_readonly("size", [](const HighwayCoverLabelling& l) { return labelling_size(l); })
      .def("highway", [](const HighwayCoverLabelling& l, LandmarkIndex i,
                         LandmarkIndex j) { return finite_or_none(l.highway(i, j)); })
      .def("label",
           [](const HighwayCoverLabelling& l, Vertex v) {
             std::vector<std::pair<LandmarkIndex, Dist>> out;
             for (const auto& e : l.label(v)) out.emplace_back(e.landmark, e.distance);
             return out;
           })
      .def("landmark_distance", [](const HighwayCoverLabelling& l, LandmarkIndex i,
                                   Vertex v) { return finite_or_none(label_distance(l, i, v)); })
      .def("to_bytes",
           [](const HighwayCoverLabelling& l) {
             const auto bytes = serialize(l);
             return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
           })
      .def_static("from_bytes",
                  [](const py::bytes& b) {
                    const std::string s = b;
                    return deserialize(std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
                  })
      .def(py::self == py::self);

  py::register_exception<LabellingFormatError>(m, "LabellingFormatError", PyExc_ValueError);

  m.def("select_landmarks",
        [](const Graph& g, std::size_t k) {
          const auto chosen = select_landmarks(g, k);
          return std::vector<Vertex>(chosen.vertices().begin(), chosen.vertices().end());
        },
        py::arg("graph"), py::arg("k"));
  m.def("build",
        [](const Graph& g, const std::vector<Vertex>& landmarks, unsigned workers) {
          py::gil_scoped_release release;
          return build(g, LandmarkSet(landmarks, g.num_vertices()), workers);
        },
        py::arg("graph"), py::arg("landmarks"), py::arg("workers") = 1);
  m.def("query",
        [](const HighwayCoverLabelling& l, const Graph& g, Vertex s, Vertex t) {
          return finite_or_none(query(l, g, s, t).distance);
        },
        py::arg("labelling"), py::arg("graph"), py::arg("s"), py::arg("t"), "Exact distance, None if unreachable");
  m.def("update",
        [](const Graph& g, const HighwayCoverLabelling& l, const std::vector<Edge>& inserts,
           const std::vector<Edge>& deletes, const std::string& variant, unsigned workers) {
          const auto batch = normalize_batch(g, raw_updates(inserts, deletes));
          auto updated = apply_batch(g, batch);
          auto next = l;
          BatchUpdater updater({parse_variant(variant), workers});
          updater.apply(updated, batch, next);
          return py::make_tuple(std::move(updated), std::move(next));
        },
        py::arg("graph"), py::arg("labelling"), py::arg("inserts") = std::vector<Edge>{},
        py::arg("deletes") = std::vector<Edge>{}, py::arg("variant") = "improved", py::arg("workers") = 1,
        "Returns (updated graph, updated labelling); the inputs are left untouched");

  py::class_<Oracle>(m, "Oracle")
      .def(py::init<const std::vector<Edge>&, std::size_t, std::size_t, std::optional<std::vector<Vertex>>,
                    unsigned>(),
           py::arg("edges"), py::arg("num_vertices") = 0, py::arg("k") = 20, py::arg("landmarks") = py::none(),
           py::arg("workers") = 1)
      .def("distance", &Oracle::distance, py::arg("s"), py::arg("t"))
      .def("distances", &Oracle::distances, py::arg("pairs"))
      .def("update", &Oracle::update, py::arg("inserts") = std::vector<Edge>{},
           py::arg("deletes") = std::vector<Edge>{}, py::arg("variant") = "improved")
      .def_property_readonly("graph", &Oracle::graph, py::return_value_policy::copy)
      .def_property_readonly("labelling", &Oracle::labelling, py::return_value_policy::copy);
}
