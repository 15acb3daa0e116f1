#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "blowup/assembly.hpp"
#include "blowup/embedding.hpp"
#include "blowup/error.hpp"
#include "blowup/json_io.hpp"
#include "blowup/planar_partition.hpp"
#include "blowup/tree_separator.hpp"
#include "cli.hpp"

namespace py = pybind11;
using namespace blowup;

namespace {

Graph make_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

std::tuple<int, std::string, std::string> run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int rc = cli::run(args, out, err);
  return {rc, out.str(), err.str()};
}

int treewidth(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges, std::size_t limit) {
  return exact_treewidth(make_graph(n, edges), limit).treewidth;
}

// Weights come in as (numerator, denominator) pairs.
std::vector<Vertex> separator(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                              const std::vector<std::pair<std::int64_t, std::int64_t>>& weights, int q) {
  if (weights.size() != n) throw InvalidInput("one weight per vertex expected");
  std::vector<Rational> w;
  w.reserve(n);
  for (const auto& [num, den] : weights) {
    if (den == 0) throw InvalidInput("zero denominator");
    w.emplace_back(num, den);
  }
  return tree_separator(WeightedTree(make_graph(n, edges), std::move(w)), q);
}

std::string planar(const std::string& embedding, Vertex root) {
  const PlanarEmbedding e = io::embedding_from_json(io::parse(embedding));
  return io::canonical(io::to_json(planar_partition(e, bfs_spanning_tree(e.graph, root)).certificate()));
}

std::string decompose(const std::string& document, int d) {
  const io::Json doc = io::parse(document);
  const std::string kind = io::detect_kind(doc);
  if (kind == "structured") return io::canonical(io::to_json(assemble(io::structured_input_from_json(doc), d).certificate));
  AlmostEmbedding ae;
  if (kind == "almost-embedding") {
    ae = io::almost_embedding_from_json(doc);
  } else if (kind == "embedding" || kind == "graph") {
    const PlanarEmbedding e = kind == "embedding" ? io::embedding_from_json(doc) : embed_planar(io::graph_from_json(doc));
    ae.graph = e.graph;
    ae.g0 = e;
    ae.params = {0, 0, 1, 0};
  } else {
    throw ParseError("cannot decompose a " + kind);
  }
  const int k = std::max({ae.params.k, ae.params.g, ae.params.p, ae.params.a, 1});
  return io::canonical(io::to_json(theorem_pipeline(single_torso(ae), k, d).certificate));
}

py::tuple validate(const std::string& graph, const std::string& certificate) {
  io::Json doc = io::parse(graph);
  if (io::detect_kind(doc) != "graph") doc = doc.at("graph");
  const Graph g = io::graph_from_json(doc);
  const ValidationReport r = validate_h_partition(g, io::certificate_from_json(io::parse(certificate), g.vertex_count()));
  py::list violations;
  for (const Violation& v : r.violations) violations.append(py::make_tuple(v.rule, v.witness));
  return py::make_tuple(r.valid, violations);
}

}  // namespace

PYBIND11_MODULE(_blowup, m) {
  m.doc() = "Product structure for graphs of bounded treewidth-like structure";
  // Translators are tried newest first, so the base goes in first.
  auto& base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto& invalid = py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", invalid.ptr());

  m.def("run", &run, py::arg("args"), "Run the command-line tool in process; returns (exit code, stdout, stderr).");
  m.def("treewidth", &treewidth, py::arg("n"), py::arg("edges"), py::arg("limit") = kDefaultOracleLimit);
  m.def("tree_separator", &separator, py::arg("n"), py::arg("edges"), py::arg("weights"), py::arg("q"));
  m.def("planar_partition", &planar, py::arg("embedding"), py::arg("root") = 0);
  m.def("decompose", &decompose, py::arg("document"), py::arg("d") = 0);
  m.def("validate", &validate, py::arg("graph"), py::arg("certificate"));
}
