#include "blowup/embedding.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

#include "blowup/error.hpp"

namespace blowup {

PlanarEmbedding PlanarEmbedding::from_rotation(Graph graph, std::vector<std::vector<Vertex>> rotation) {
  if (rotation.size() != graph.vertex_count()) throw InvalidInput("rotation system needs one entry per vertex");
  for (std::size_t v = 0; v < rotation.size(); ++v) {
    std::vector<Vertex> sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    const auto nb = graph.neighbors(static_cast<Vertex>(v));
    if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end())) {
      throw InvalidInput("rotation of vertex " + std::to_string(v) + " is not a permutation of its neighbours");
    }
  }
  return PlanarEmbedding{std::move(graph), std::move(rotation)};
}

std::vector<std::vector<Vertex>> PlanarEmbedding::faces() const {
  DartStructure darts(*this);
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(darts.face_count()));
  std::vector<char> seen(darts.dart_count(), 0);
  for (std::size_t d = 0; d < darts.dart_count(); ++d) {
    if (seen[d]) continue;
    auto& walk = out[static_cast<std::size_t>(darts.face_of(static_cast<DartStructure::Dart>(d)))];
    DartStructure::Dart cur = static_cast<DartStructure::Dart>(d);
    do {
      seen[static_cast<std::size_t>(cur)] = 1;
      walk.push_back(darts.tail(cur));
      cur = darts.next_in_face(cur);
    } while (cur != static_cast<DartStructure::Dart>(d));
  }
  return out;
}

bool PlanarEmbedding::satisfies_euler() const {
  DartStructure darts(*this);
  int components = 0;
  connected_components(graph, &components);
  long isolated = 0;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v)
    if (graph.degree(static_cast<Vertex>(v)) == 0) ++isolated;
  const long v = static_cast<long>(graph.vertex_count());
  const long e = static_cast<long>(graph.edge_count());
  const long f = darts.face_count() + isolated;
  return v - e + f == 2L * components;
}

DartStructure::DartStructure(const PlanarEmbedding& embedding) {
  const std::size_t n = embedding.rotation.size();
  offset_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + embedding.rotation[v].size();
  const std::size_t m = offset_[n];
  tail_.resize(m);
  head_.resize(m);
  twin_.assign(m, -1);
  face_.assign(m, -1);
  lookup_.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < embedding.rotation[v].size(); ++i) {
      const Dart d = static_cast<Dart>(offset_[v] + i);
      tail_[static_cast<std::size_t>(d)] = static_cast<Vertex>(v);
      head_[static_cast<std::size_t>(d)] = embedding.rotation[v][i];
      lookup_[v].emplace_back(embedding.rotation[v][i], d);
    }
    std::sort(lookup_[v].begin(), lookup_[v].end());
  }
  for (std::size_t d = 0; d < m; ++d) twin_[d] = dart(head_[d], tail_[d]);
  for (std::size_t d = 0; d < m; ++d) {
    if (face_[d] >= 0) continue;
    Dart cur = static_cast<Dart>(d);
    do {
      face_[static_cast<std::size_t>(cur)] = face_count_;
      cur = next_in_face(cur);
    } while (cur != static_cast<Dart>(d));
    ++face_count_;
  }
}

DartStructure::Dart DartStructure::next_in_face(Dart d) const {
  // d = u -> v; continue with v -> succ_v(u).
  const Dart back = twin_[static_cast<std::size_t>(d)];
  const Vertex v = head_[static_cast<std::size_t>(d)];
  const std::size_t deg = offset_[static_cast<std::size_t>(v) + 1] - offset_[static_cast<std::size_t>(v)];
  const std::size_t pos = static_cast<std::size_t>(back) - offset_[static_cast<std::size_t>(v)];
  return static_cast<Dart>(offset_[static_cast<std::size_t>(v)] + (pos + 1) % deg);
}

DartStructure::Dart DartStructure::dart(Vertex u, Vertex v) const {
  const auto& list = lookup_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(list.begin(), list.end(), std::pair<Vertex, Dart>{v, -1});
  if (it == list.end() || it->first != v) {
    throw InvalidInput("no edge " + std::to_string(u) + "-" + std::to_string(v) + " in embedding");
  }
  return it->second;
}

DartStructure::Dart DartStructure::first_dart(Vertex v) const {
  const std::size_t s = offset_[static_cast<std::size_t>(v)];
  return s == offset_[static_cast<std::size_t>(v) + 1] ? -1 : static_cast<Dart>(s);
}

namespace {

class EdgeSet {
 public:
  explicit EdgeSet(const Graph& g) {
    for (const Edge& e : g.edges()) edges_.emplace(e.u, e.v);
  }
  bool contains(Vertex a, Vertex b) const { return edges_.contains({std::min(a, b), std::max(a, b)}); }
  void insert(Vertex a, Vertex b) { edges_.emplace(std::min(a, b), std::max(a, b)); }

 private:
  std::set<std::pair<Vertex, Vertex>> edges_;
};

void insert_before(std::vector<Vertex>& rot, Vertex anchor, Vertex value) {
  auto it = std::find(rot.begin(), rot.end(), anchor);
  rot.insert(it, value);
}

void insert_after(std::vector<Vertex>& rot, Vertex anchor, Vertex value) {
  auto it = std::find(rot.begin(), rot.end(), anchor);
  rot.insert(it + 1, value);
}

}  // namespace

PlanarEmbedding triangulate_planar(const PlanarEmbedding& embedding) {
  const Graph& g = embedding.graph;
  if (g.vertex_count() < 3) throw InvalidInput("triangulation needs at least 3 vertices");
  if (!is_connected(g)) throw InvalidInput("triangulation needs a connected graph");
  if (!embedding.satisfies_euler()) throw InvalidInput("rotation system is not a planar embedding");

  std::vector<std::vector<Vertex>> rotation = embedding.rotation;
  EdgeSet edges(g);
  GraphBuilder builder(g);
  std::deque<std::vector<Vertex>> pending;
  for (auto& walk : embedding.faces()) pending.push_back(std::move(walk));

  while (!pending.empty()) {
    std::vector<Vertex> walk = std::move(pending.front());
    pending.pop_front();
    if (walk.size() <= 3) continue;
    // Start at the lowest-id corner so that the fan grows from it.
    std::rotate(walk.begin(), std::min_element(walk.begin(), walk.end()), walk.end());
    const std::size_t len = walk.size();
    bool cut = false;
    for (std::size_t step = 0; step < len && !cut; ++step) {
      const std::size_t i = (1 + step) % len;
      const Vertex a = walk[(i + len - 1) % len];
      const Vertex v = walk[i];
      const Vertex b = walk[(i + 1) % len];
      if (a == b || edges.contains(a, b)) continue;
      // Chord a-b inside the face, cutting off the corner at v.
      insert_before(rotation[static_cast<std::size_t>(a)], v, b);
      insert_after(rotation[static_cast<std::size_t>(b)], v, a);
      edges.insert(a, b);
      builder.add_edge(a, b);
      walk.erase(walk.begin() + static_cast<std::ptrdiff_t>(i));
      pending.push_front(std::move(walk));
      cut = true;
    }
    if (!cut) throw InvariantViolation("face admits no chord during triangulation");
  }
  PlanarEmbedding out = PlanarEmbedding::from_rotation(builder.build(), std::move(rotation));
  if (!out.satisfies_euler()) throw InvariantViolation("triangulation broke the embedding");
  return out;
}

PlanarEmbedding embed_planar(const Graph& graph) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>,
                                           boost::property<boost::edge_index_t, int>>;
  using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;
  BoostGraph bg(graph.vertex_count());
  for (const Edge& e : graph.edges()) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
  auto edge_index = boost::get(boost::edge_index, bg);
  int next_index = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(edge_index, *it, next_index++);

  std::vector<std::vector<BoostEdge>> storage(graph.vertex_count());
  auto embedding_map = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, bg));
  const bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                          boost::boyer_myrvold_params::embedding = embedding_map);
  if (!planar) throw InvalidInput("graph is not planar");

  std::vector<std::vector<Vertex>> rotation(graph.vertex_count());
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    for (const BoostEdge& e : storage[v]) {
      const auto s = boost::source(e, bg);
      const auto t = boost::target(e, bg);
      rotation[v].push_back(static_cast<Vertex>(s == v ? t : s));
    }
  }
  PlanarEmbedding out = PlanarEmbedding::from_rotation(graph, std::move(rotation));
  if (!out.satisfies_euler()) throw InvariantViolation("planarity test returned an invalid embedding");
  return out;
}

}  // namespace blowup
