#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "blowup/assembly.hpp"
#include "blowup/error.hpp"
#include "blowup/exact.hpp"
#include "blowup/generators.hpp"
#include "blowup/json_io.hpp"

namespace blowup::cli {

namespace {

using io::Json;

class PhaseLog {
 public:
  explicit PhaseLog(std::ostream& err) : err_(err), enabled_(std::getenv("BLOWUP_LOG") != nullptr) {}

  template <class F>
  auto run(const std::string& name, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    if (enabled_) err_ << "[blowup] " << name << " ..." << std::endl;
    auto finish = [&] {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      timings_[name] += ms;
      if (enabled_) err_ << "[blowup] " << name << " done in " << ms << " ms" << std::endl;
    };
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      finish();
    } else {
      auto result = f();
      finish();
      return result;
    }
  }

  Json timings() const {
    Json j = Json::object();
    for (const auto& [k, v] : timings_) j[k] = v;
    return j;
  }

 private:
  std::ostream& err_;
  bool enabled_;
  std::map<std::string, std::int64_t> timings_;
};

struct Options {
  std::string kind;
  std::vector<std::int64_t> sizes;
  std::uint64_t seed = 1;
  std::string d = "auto";
  std::size_t oracle_limit = kDefaultOracleLimit;
  std::string out;
  std::string stats_out;
  std::string format = "json";
  std::string input;
  std::string certificate;
  std::string external;
};

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    io::write_file(path, content);
  }
}

int parse_d(const std::string& text) {
  if (text == "auto") return 0;
  std::size_t used = 0;
  int d = 0;
  try {
    d = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--d", "expected an integer or auto");
  }
  if (used != text.size() || d < 4) throw CLI::ValidationError("--d", "expected auto or an integer >= 4");
  return d;
}

std::size_t size_arg(const Options& o, std::size_t i, std::int64_t fallback, std::int64_t lo) {
  const std::int64_t v = i < o.sizes.size() ? o.sizes[i] : fallback;
  if (v < lo) throw ParseError("size parameter " + std::to_string(i + 1) + " must be at least " + std::to_string(lo));
  return static_cast<std::size_t>(v);
}

Json generate(const Options& o) {
  if (o.kind == "grid") {
    if (o.sizes.empty()) throw ParseError("grid needs rows [cols]");
    const std::size_t rows = size_arg(o, 0, 0, 1);
    return io::to_json(grid_embedding(rows, size_arg(o, 1, static_cast<std::int64_t>(rows), 1)));
  }
  if (o.kind == "stacked-triangulation") return io::to_json(stacked_triangulation(size_arg(o, 0, 50, 3), o.seed));
  if (o.kind == "apexed-planar") {
    return io::to_json(apexed_planar(size_arg(o, 0, 50, 3), static_cast<int>(size_arg(o, 1, 2, 0)), o.seed));
  }
  if (o.kind == "planar-with-vortex") {
    return io::to_json(planar_with_vortex(size_arg(o, 0, 12, 3), size_arg(o, 1, 20, 0), static_cast<int>(size_arg(o, 2, 2, 1)),
                                          static_cast<int>(size_arg(o, 3, 1, 0)), o.seed));
  }
  if (o.kind == "clique-sum") {
    CliqueSumOptions c;
    c.torsos = size_arg(o, 0, 5, 1);
    c.torso_size = size_arg(o, 1, 10, 4);
    c.max_apexes = static_cast<int>(size_arg(o, 2, 2, 0));
    c.k = static_cast<int>(size_arg(o, 3, 1, 1));
    return io::to_json(clique_sum(c, o.seed));
  }
  throw ParseError("unknown generator kind \"" + o.kind + "\"");
}

struct Decomposition {
  StructuredInput input;
  AssemblyCertificate result;
  int k = 1;
  std::string kind;
};

// Any input document becomes a structured input; single graphs are one torso.
Decomposition decompose(const Options& o, PhaseLog& log) {
  const int d = parse_d(o.d);
  const Json doc = log.run("read", [&] { return io::read_file(o.input); });
  Decomposition out;
  out.kind = io::detect_kind(doc);
  if (out.kind == "structured") {
    out.input = io::structured_input_from_json(doc);
    out.result = log.run("assemble", [&] { return assemble(out.input, d); });
    return out;
  }
  AlmostEmbedding ae;
  if (out.kind == "almost-embedding") {
    ae = io::almost_embedding_from_json(doc);
  } else if (out.kind == "embedding" || out.kind == "graph") {
    const PlanarEmbedding e = out.kind == "embedding" ? io::embedding_from_json(doc)
                                                      : log.run("embed", [&] { return embed_planar(io::graph_from_json(doc)); });
    ae.graph = e.graph;
    ae.g0 = e;
    ae.params = {0, 0, 1, 0};
  } else {
    throw ParseError("decompose expects a graph, embedding, almost-embedding or structured input");
  }
  out.input = single_torso(ae);
  out.k = std::max({ae.params.k, ae.params.g, ae.params.p, ae.params.a, 1});
  if (!o.external.empty()) {
    const Json ext = io::read_file(o.external);
    const int dd = d > 0 ? d : static_cast<int>(ceil_sqrt(static_cast<std::int64_t>(ae.graph.vertex_count()))) + 3;
    AlmostEmbeddableResult r = log.run("external torso", [&] {
      try {
        (void)almost_embeddable_partition(ae, dd);
        throw InvalidInput("external partition given but not needed");
      } catch (const RequiresExternalPartition& need) {
        const HPartitionCertificate cert = io::certificate_from_json(ext, need.augmented().graph.vertex_count());
        return almost_embeddable_partition(ae, dd, cert);
      }
    });
    out.input.torsos[0] = TorsoResult{std::move(r.s), std::move(r.partition), std::move(r.h), std::move(r.h_td), r.stats};
  }
  out.result = log.run("theorem pipeline", [&] { return theorem_pipeline(out.input, out.k, d); });
  return out;
}

Json run_stats(const Decomposition& dec, const PhaseLog& log, std::size_t oracle_limit) {
  Json stats = io::to_json(dec.result.stats);
  stats["k"] = dec.k;
  stats["input_kind"] = dec.kind;
  stats["timings_ms"] = log.timings();
  const HPartitionCertificate& c = dec.result.certificate;
  Json oracle = Json::object();
  oracle["h_size"] = c.h.vertex_count();
  oracle["h_td_width"] = c.h_td.width();
  if (c.h.vertex_count() <= oracle_limit) {
    oracle["tw_h"] = exact_treewidth(c.h, oracle_limit).treewidth;
    std::vector<Vertex> rest;
    for (std::size_t p = 0; p < c.h.vertex_count(); ++p)
      if (!c.apex_part || static_cast<PartId>(p) != *c.apex_part) rest.push_back(static_cast<Vertex>(p));
    oracle["tw_h_minus_alpha"] = exact_treewidth(induced_subgraph(c.h, rest), oracle_limit).treewidth;
  }
  stats["oracle"] = std::move(oracle);
  return stats;
}

Graph graph_of(const Json& doc) {
  const std::string kind = io::detect_kind(doc);
  if (kind == "graph") return io::graph_from_json(doc);
  if (kind == "certificate") throw ParseError("expected a graph document, got a certificate");
  return io::graph_from_json(doc.at("graph"));
}

// Vertex count implied by a certificate's partition keys.
std::size_t implied_size(const Json& cert) {
  std::size_t n = 0;
  if (cert.contains("partition") && cert["partition"].is_object()) {
    for (const auto& [key, value] : cert["partition"].items()) {
      try {
        n = std::max(n, static_cast<std::size_t>(std::stoull(key)) + 1);
      } catch (const std::exception&) {
        throw ParseError("partition key \"" + key + "\" is not an id");
      }
    }
  }
  return n;
}

int validate(const Options& o, std::ostream& out) {
  const Graph g = graph_of(io::read_file(o.input));
  const HPartitionCertificate cert = io::certificate_from_json(io::read_file(o.certificate), g.vertex_count());
  const ValidationReport report = validate_h_partition(g, cert);
  Json violations = Json::array();
  for (const Violation& v : report.violations) violations.push_back(Json{{"rule", v.rule}, {"witness", v.witness}});
  Json j{{"valid", report.valid},
         {"violations", std::move(violations)},
         {"claimed_width", cert.claimed_width},
         {"part_width", cert.partition.width()},
         {"h_size", cert.h.vertex_count()},
         {"h_td_width", report.width}};
  if (report.valid && cert.h.vertex_count() <= o.oracle_limit) {
    j["tw_h"] = exact_treewidth(cert.h, o.oracle_limit).treewidth;
    if (cert.apex_part) {
      std::vector<Vertex> rest;
      for (std::size_t p = 0; p < cert.h.vertex_count(); ++p)
        if (static_cast<PartId>(p) != *cert.apex_part) rest.push_back(static_cast<Vertex>(p));
      j["tw_h_minus_alpha"] = exact_treewidth(induced_subgraph(cert.h, rest), o.oracle_limit).treewidth;
    }
  }
  emit(o.out, io::canonical(j), out);
  return report.valid ? kExitOk : kExitInvalid;
}

std::string to_dot(const HPartitionCertificate& c) {
  std::vector<std::size_t> sizes(c.h.vertex_count(), 0);
  for (PartId p : c.partition.part_of)
    if (p != kNoPart && static_cast<std::size_t>(p) < sizes.size()) ++sizes[static_cast<std::size_t>(p)];
  std::ostringstream dot;
  dot << "graph H {\n  node [shape=circle];\n";
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    dot << "  " << p << " [label=\"" << p << " (" << sizes[p] << ")\"";
    if (c.apex_part && static_cast<PartId>(p) == *c.apex_part) dot << ", style=filled, fillcolor=gold";
    dot << "];\n";
  }
  for (const Edge& e : c.h.edges()) dot << "  " << e.u << " -- " << e.v << ";\n";
  dot << "}\n";
  return dot.str();
}

int export_certificate(const Options& o, std::ostream& out) {
  const Json doc = io::read_file(o.certificate);
  const HPartitionCertificate cert = io::certificate_from_json(doc, implied_size(doc));
  if (o.format == "dot") {
    emit(o.out, to_dot(cert), out);
  } else if (o.format == "json") {
    emit(o.out, io::canonical(io::to_json(cert)), out);
  } else {
    throw ParseError("unknown format \"" + o.format + "\"");
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Product-structure certificates for almost-embeddable graphs and their clique-sums", "blowup"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;
  PhaseLog log(err);

  auto* gen = app.add_subcommand("generate", "Write a synthetic instance");
  gen->add_option("kind", o.kind, "grid | stacked-triangulation | apexed-planar | planar-with-vortex | clique-sum")->required();
  gen->add_option("sizes", o.sizes, "Size parameters of the chosen kind");
  gen->add_option("--seed", o.seed, "Random seed");
  gen->add_option("--out", o.out, "Output path (default stdout)");
  gen->callback([&] { action = [&] { emit(o.out, io::canonical(generate(o)), out); return kExitOk; }; });

  auto* dec = app.add_subcommand("decompose", "Build an H-partition certificate");
  dec->add_option("input", o.input, "Graph, embedding, almost-embedding or structured input")->required();
  dec->add_option("--d", o.d, "Slice period: integer >= 4 or auto");
  dec->add_option("--out", o.out, "Certificate path (default stdout)");
  dec->add_option("--stats", o.stats_out, "Write run statistics here");
  dec->add_option("--external", o.external, "Certified partition of the augmented surface graph");
  dec->add_option("--oracle-limit", o.oracle_limit, "Largest H checked by the exact treewidth oracle");
  dec->callback([&] {
    action = [&] {
      const Decomposition d = decompose(o, log);
      emit(o.out, io::canonical(io::to_json(d.result.certificate)), out);
      if (!o.stats_out.empty()) io::write_file(o.stats_out, io::canonical(run_stats(d, log, o.oracle_limit)));
      return kExitOk;
    };
  });

  auto* val = app.add_subcommand("validate", "Check a certificate against a graph");
  val->add_option("graph", o.input, "Graph or any input document containing one")->required();
  val->add_option("certificate", o.certificate, "Certificate")->required();
  val->add_option("--oracle-limit", o.oracle_limit, "Largest H checked by the exact treewidth oracle");
  val->add_option("--out", o.out, "Report path (default stdout)");
  val->callback([&] { action = [&] { return validate(o, out); }; });

  auto* exp = app.add_subcommand("export", "Render a certificate");
  exp->add_option("certificate", o.certificate, "Certificate")->required();
  exp->add_option("--format", o.format, "dot | json");
  exp->add_option("--out", o.out, "Output path (default stdout)");
  exp->callback([&] { action = [&] { return export_certificate(o, out); }; });

  auto* st = app.add_subcommand("stats", "Decompose and report statistics only");
  st->add_option("input", o.input, "Input document")->required();
  st->add_option("--d", o.d, "Slice period: integer >= 4 or auto");
  st->add_option("--external", o.external, "Certified partition of the augmented surface graph");
  st->add_option("--oracle-limit", o.oracle_limit, "Largest H checked by the exact treewidth oracle");
  st->add_option("--out", o.out, "Output path (default stdout)");
  st->callback([&] {
    action = [&] {
      const Decomposition d = decompose(o, log);
      emit(o.out, io::canonical(run_stats(d, log, o.oracle_limit)), out);
      return kExitOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    return action();
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace blowup::cli
