#include "blowup/json_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "blowup/error.hpp"

namespace blowup::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::int64_t integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
  return j.get<std::int64_t>();
}

Vertex vertex(const Json& j, std::size_t n, const std::string& what) {
  const std::int64_t v = integer(j, what);
  if (v < 0 || static_cast<std::size_t>(v) >= n) throw ParseError(what + " " + std::to_string(v) + " out of range");
  return static_cast<Vertex>(v);
}

std::vector<Vertex> vertex_list(const Json& j, std::size_t n, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array");
  std::vector<Vertex> out;
  for (const Json& x : j) out.push_back(vertex(x, n, what));
  return out;
}

std::vector<Vertex> sorted_set(const Json& j, std::size_t n, const std::string& what) {
  std::vector<Vertex> out = vertex_list(j, n, what);
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw ParseError(what + " repeats a vertex");
  return out;
}

// Object keys are decimal ids written without padding.
std::int64_t key_id(const std::string& key, const std::string& what) {
  if (key.empty() || key.size() > 18 || !std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      (key.size() > 1 && key[0] == '0')) {
    throw ParseError(what + " key \"" + key + "\" is not an id");
  }
  return std::stoll(key);
}

Json vertex_array(std::span<const Vertex> vs) {
  Json a = Json::array();
  for (Vertex v : vs) a.push_back(v);
  return a;
}

constexpr std::size_t kAnyId = static_cast<std::size_t>(1) << 31;

}  // namespace

std::string canonical(const Json& j) { return j.dump() + "\n"; }

Json parse(const std::string& text) {
  try {
    // Floats never appear in these documents; refuse them while parsing.
    Json::parser_callback_t no_floats = [](int, Json::parse_event_t event, Json& value) {
      if (event == Json::parse_event_t::value && value.is_number_float()) throw ParseError("floating-point value in JSON");
      return true;
    };
    return Json::parse(text, no_floats);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    buffer << in.rdbuf();
  }
  return parse(buffer.str());
}

void write_file(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + path);
    out << content;
    if (!out) throw InvalidInput("cannot write " + path);
  }
  std::filesystem::rename(tmp, path);
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  const std::int64_t n = integer(field(j, "n"), "n");
  if (n < 0 || n >= static_cast<std::int64_t>(kAnyId)) throw ParseError("n out of range");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw ParseError("edges must be an array");
  GraphBuilder b(static_cast<std::size_t>(n));
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair");
    const Vertex u = vertex(e[0], static_cast<std::size_t>(n), "edge endpoint");
    const Vertex v = vertex(e[1], static_cast<std::size_t>(n), "edge endpoint");
    if (u == v) throw ParseError("self-loop at " + std::to_string(u));
    b.add_edge(u, v);
  }
  return b.build();
}

Json to_json(const TreeDecomposition& td) {
  Json bags = Json::object();
  for (std::size_t x = 0; x < td.node_count(); ++x) bags[std::to_string(x)] = vertex_array(td.bags[x]);
  Json edges = Json::array();
  for (std::size_t x = 0; x < td.node_count(); ++x) {
    if (td.tree.parent[x] != kNoVertex) edges.push_back({td.tree.parent[x], static_cast<Vertex>(x)});
  }
  return Json{{"root", td.tree.root}, {"tree_edges", std::move(edges)}, {"bags", std::move(bags)}};
}

TreeDecomposition td_from_json(const Json& j) {
  const Json& bags = field(j, "bags");
  if (!bags.is_object() || bags.empty()) throw ParseError("bags must be a non-empty object");
  const std::size_t nodes = bags.size();
  TreeDecomposition td;
  td.bags.resize(nodes);
  std::vector<char> seen(nodes, 0);
  for (const auto& [key, bag] : bags.items()) {
    const std::int64_t x = key_id(key, "bag");
    if (x >= static_cast<std::int64_t>(nodes)) throw ParseError("bag ids must be 0..count-1");
    seen[static_cast<std::size_t>(x)] = 1;
    td.bags[static_cast<std::size_t>(x)] = sorted_set(bag, kAnyId, "bag vertex");
  }
  const Vertex root = vertex(field(j, "root"), nodes, "root");
  const Json& edges = field(j, "tree_edges");
  if (!edges.is_array() || edges.size() + 1 != nodes) throw ParseError("tree_edges must hold count-1 edges");
  std::vector<std::vector<Vertex>> adj(nodes);
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2) throw ParseError("tree edge must be a pair");
    const Vertex a = vertex(e[0], nodes, "tree node");
    const Vertex b = vertex(e[1], nodes, "tree node");
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  td.tree.root = root;
  td.tree.parent.assign(nodes, kNoVertex);
  std::vector<char> visited(nodes, 0);
  std::vector<Vertex> stack{root};
  visited[static_cast<std::size_t>(root)] = 1;
  std::size_t count = 0;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    ++count;
    for (Vertex y : adj[static_cast<std::size_t>(x)]) {
      if (visited[static_cast<std::size_t>(y)]) continue;
      visited[static_cast<std::size_t>(y)] = 1;
      td.tree.parent[static_cast<std::size_t>(y)] = x;
      stack.push_back(y);
    }
  }
  if (count != nodes) throw ParseError("tree_edges do not form a tree");
  return td;
}

Json to_json(const RootedTree& t) {
  Json parent = Json::array();
  for (Vertex p : t.parent) parent.push_back(p);
  return Json{{"root", t.root}, {"parent", std::move(parent)}};
}

RootedTree tree_from_json(const Json& j) {
  const Json& parent = field(j, "parent");
  if (!parent.is_array()) throw ParseError("parent must be an array");
  RootedTree t;
  t.root = vertex(field(j, "root"), parent.size(), "tree root");
  for (const Json& p : parent) {
    const std::int64_t v = integer(p, "parent");
    if (v < -1 || v >= static_cast<std::int64_t>(parent.size())) throw ParseError("parent out of range");
    t.parent.push_back(static_cast<Vertex>(v));
  }
  try {
    t.validate();
  } catch (const Error& e) {
    throw ParseError(std::string("bad tree: ") + e.what());
  }
  return t;
}

Json to_json(const HPartitionCertificate& c) {
  Json part = Json::object();
  for (std::size_t v = 0; v < c.partition.part_of.size(); ++v) {
    if (c.partition.part_of[v] != kNoPart) part[std::to_string(v)] = c.partition.part_of[v];
  }
  Json out{{"partition", std::move(part)},
           {"H", to_json(c.h)},
           {"H_td", to_json(c.h_td)},
           {"alpha", c.apex_part ? Json(*c.apex_part) : Json(nullptr)},
           {"claimed_width", c.claimed_width}};
  if (c.tree && !c.vertical_paths.empty()) {
    Json paths = Json::object();
    for (const auto& [p, list] : c.vertical_paths) {
      Json a = Json::array();
      for (const auto& path : list) a.push_back(vertex_array(path));
      paths[std::to_string(p)] = std::move(a);
    }
    out["vertical_paths"] = Json{{"tree", to_json(*c.tree)}, {"limit", c.vertical_path_limit}, {"paths", std::move(paths)}};
  }
  return out;
}

HPartitionCertificate certificate_from_json(const Json& j, std::size_t n) {
  HPartitionCertificate c;
  c.h = graph_from_json(field(j, "H"));
  c.h_td = td_from_json(field(j, "H_td"));
  const std::size_t parts = c.h.vertex_count();
  c.partition.part_count = static_cast<PartId>(parts);
  c.partition.part_of.assign(n, kNoPart);
  const Json& part = field(j, "partition");
  if (!part.is_object()) throw ParseError("partition must be an object");
  for (const auto& [key, p] : part.items()) {
    const std::int64_t v = key_id(key, "partition");
    if (v >= static_cast<std::int64_t>(n)) throw ParseError("partition vertex " + key + " out of range");
    c.partition.part_of[static_cast<std::size_t>(v)] = static_cast<PartId>(vertex(p, parts, "part"));
  }
  const Json& alpha = field(j, "alpha");
  if (!alpha.is_null()) c.apex_part = static_cast<PartId>(integer(alpha, "alpha"));
  const std::int64_t width = integer(field(j, "claimed_width"), "claimed_width");
  if (width < 0 || width > static_cast<std::int64_t>(kAnyId)) throw ParseError("claimed_width out of range");
  c.claimed_width = static_cast<int>(width);
  if (j.contains("vertical_paths")) {
    const Json& vp = j["vertical_paths"];
    c.tree = tree_from_json(field(vp, "tree"));
    c.vertical_path_limit = static_cast<int>(integer(field(vp, "limit"), "limit"));
    const Json& paths = field(vp, "paths");
    if (!paths.is_object()) throw ParseError("paths must be an object");
    for (const auto& [key, list] : paths.items()) {
      const auto p = static_cast<PartId>(key_id(key, "paths"));
      if (!list.is_array()) throw ParseError("path list must be an array");
      auto& out = c.vertical_paths[p];
      for (const Json& path : list) out.push_back(vertex_list(path, c.tree->size(), "path vertex"));
    }
  }
  return c;
}

Json to_json(const PlanarEmbedding& e) {
  Json rotation = Json::object();
  for (std::size_t v = 0; v < e.rotation.size(); ++v) {
    if (!e.rotation[v].empty()) rotation[std::to_string(v)] = vertex_array(e.rotation[v]);
  }
  return Json{{"graph", to_json(e.graph)}, {"rotation", std::move(rotation)}};
}

PlanarEmbedding embedding_from_json(const Json& j) {
  Graph g = graph_from_json(field(j, "graph"));
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> rotation(n);
  const Json& rot = field(j, "rotation");
  if (!rot.is_object()) throw ParseError("rotation must be an object");
  for (const auto& [key, list] : rot.items()) {
    const std::int64_t v = key_id(key, "rotation");
    if (v >= static_cast<std::int64_t>(n)) throw ParseError("rotation vertex " + key + " out of range");
    rotation[static_cast<std::size_t>(v)] = vertex_list(list, n, "rotation entry");
  }
  try {
    return PlanarEmbedding::from_rotation(std::move(g), std::move(rotation));
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw ParseError(std::string("bad rotation system: ") + e.what());
  }
}

Json to_json(const AlmostEmbedding& ae) {
  Json vortices = Json::array();
  for (const Vortex& v : ae.vortices) {
    Json bags = Json::array();
    for (const auto& bag : v.bags) bags.push_back(vertex_array(bag));
    vortices.push_back(Json{{"graph", to_json(v.graph)}, {"boundary", vertex_array(v.boundary)}, {"bags", std::move(bags)}});
  }
  const AlmostEmbeddingParams& p = ae.params;
  return Json{{"graph", to_json(ae.graph)},
              {"apex", vertex_array(ae.apex)},
              {"g0", to_json(ae.g0)},
              {"params", Json{{"g", p.g}, {"p", p.p}, {"k", p.k}, {"a", p.a}}},
              {"vortices", std::move(vortices)}};
}

AlmostEmbedding almost_embedding_from_json(const Json& j) {
  AlmostEmbedding ae;
  ae.graph = graph_from_json(field(j, "graph"));
  const std::size_t n = ae.graph.vertex_count();
  ae.apex = sorted_set(field(j, "apex"), n, "apex");
  ae.g0 = embedding_from_json(field(j, "g0"));
  const Json& p = field(j, "params");
  auto param = [&](const char* key) {
    const std::int64_t v = integer(field(p, key), key);
    if (v < 0 || v > 1000000) throw ParseError(std::string("parameter ") + key + " out of range");
    return static_cast<int>(v);
  };
  ae.params = {param("g"), param("p"), param("k"), param("a")};
  const Json& vortices = field(j, "vortices");
  if (!vortices.is_array()) throw ParseError("vortices must be an array");
  for (const Json& vj : vortices) {
    Vortex v;
    v.graph = graph_from_json(field(vj, "graph"));
    v.boundary = vertex_list(field(vj, "boundary"), n, "boundary vertex");
    const Json& bags = field(vj, "bags");
    if (!bags.is_array()) throw ParseError("vortex bags must be an array");
    for (const Json& bag : bags) v.bags.push_back(sorted_set(bag, n, "vortex bag vertex"));
    ae.vortices.push_back(std::move(v));
  }
  return ae;
}

Json to_json(const TorsoResult& r) {
  HPartitionCertificate c;
  c.partition = r.partition;
  c.h = r.h;
  c.h_td = r.h_td;
  Json out = to_json(c);
  out.erase("alpha");
  out.erase("claimed_width");
  out["S"] = vertex_array(r.s);
  return out;
}

TorsoResult torso_result_from_json(const Json& j, std::size_t n) {
  Json full = j;
  full["alpha"] = nullptr;
  full["claimed_width"] = 0;
  const HPartitionCertificate c = certificate_from_json(full, n);
  TorsoResult r;
  r.s = sorted_set(field(j, "S"), n, "S");
  r.partition = c.partition;
  r.h = c.h;
  r.h_td = c.h_td;
  return r;
}

Json to_json(const StructuredInput& si) {
  Json torsos = Json::object();
  for (const auto& [x, data] : si.torsos) {
    torsos[std::to_string(x)] = std::visit([](const auto& d) { return to_json(d); }, data);
  }
  const AssemblyParams& p = si.params;
  return Json{{"graph", to_json(si.graph)},
              {"td", to_json(si.td)},
              {"torsos", std::move(torsos)},
              {"params", Json{{"a", p.a}, {"b", p.b}, {"k", p.k}, {"w", p.w}}}};
}

StructuredInput structured_input_from_json(const Json& j) {
  StructuredInput si;
  si.graph = graph_from_json(field(j, "graph"));
  si.td = td_from_json(field(j, "td"));
  const Json& torsos = field(j, "torsos");
  if (!torsos.is_object()) throw ParseError("torsos must be an object");
  for (const auto& [key, data] : torsos.items()) {
    const std::int64_t x = key_id(key, "torsos");
    if (x >= static_cast<std::int64_t>(si.td.node_count())) throw ParseError("torso node " + key + " out of range");
    const auto node = static_cast<NodeId>(x);
    if (data.contains("g0")) {
      si.torsos.emplace(node, almost_embedding_from_json(data));
    } else {
      si.torsos.emplace(node, torso_result_from_json(data, si.td.bags[static_cast<std::size_t>(x)].size()));
    }
  }
  const Json& p = field(j, "params");
  si.params.a = static_cast<int>(integer(field(p, "a"), "a"));
  si.params.b = integer(field(p, "b"), "b");
  si.params.k = static_cast<int>(integer(field(p, "k"), "k"));
  si.params.w = static_cast<int>(integer(field(p, "w"), "w"));
  return si;
}

Json to_json(const AlmostEmbeddableStats& s) {
  Json vortices = Json::array();
  for (const VortexStats& v : s.vortices) {
    Json blocks = Json::array();
    for (std::size_t b : v.block_sizes) blocks.push_back(b);
    vortices.push_back(Json{{"q", v.q}, {"z_size", v.z_size}, {"block_sizes", std::move(blocks)}});
  }
  return Json{{"n", s.n},         {"k", s.k},         {"d", s.d},
              {"ell", s.ell},     {"s_size", s.s_size}, {"width", s.width},
              {"width_bound", s.width_bound}, {"vortices", std::move(vortices)}};
}

Json to_json(const AssemblyStats& s) {
  Json torsos = Json::object();
  for (const auto& [x, t] : s.torsos) torsos[std::to_string(x)] = to_json(t);
  return Json{{"n", s.n},
              {"q", s.q},
              {"d", s.d},
              {"z_size", s.z_size},
              {"z_slack", static_cast<std::int64_t>(s.q) + 1 - static_cast<std::int64_t>(s.z_size)},
              {"q_size", s.q_size},
              {"bag_sum", s.bag_sum},
              {"separator_sum", s.separator_sum},
              {"alpha_size", s.alpha_size},
              {"width", s.width},
              {"width_bound", s.width_bound},
              {"torsos", std::move(torsos)}};
}

std::string detect_kind(const Json& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  if (j.contains("td")) return "structured";
  if (j.contains("g0")) return "almost-embedding";
  if (j.contains("rotation")) return "embedding";
  if (j.contains("partition")) return "certificate";
  if (j.contains("n") && j.contains("edges")) return "graph";
  throw ParseError("unrecognised document");
}

}  // namespace blowup::io
