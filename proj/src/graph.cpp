#include "blowup/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "blowup/error.hpp"

namespace blowup {

namespace {

std::string vertex_str(Vertex v) { return std::to_string(v); }

}  // namespace

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  for (const Edge& e : edges) {
    if (!g.has_vertex(e.u) || !g.has_vertex(e.v)) {
      throw InvalidInput("edge endpoint out of range: " + vertex_str(e.u) + "-" + vertex_str(e.v));
    }
    if (e.u == e.v) throw InvalidInput("self-loop at vertex " + vertex_str(e.u));
    g.adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InvalidInput("duplicate edge in edge list");
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& list = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (static_cast<Vertex>(u) < v) out.push_back({static_cast<Vertex>(u), v});
    }
  }
  return out;
}

GraphBuilder::GraphBuilder(const Graph& base) : vertex_count_(base.vertex_count()) {
  for (const Edge& e : base.edges()) edges_.emplace(e.u, e.v);
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertex_count_ ||
      static_cast<std::size_t>(v) >= vertex_count_) {
    throw InvalidInput("edge endpoint out of range: " + vertex_str(u) + "-" + vertex_str(v));
  }
  if (u == v) throw InvalidInput("self-loop at vertex " + vertex_str(u));
  edges_.emplace(std::min(u, v), std::max(u, v));
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  return edges_.contains({std::min(u, v), std::max(u, v)});
}

Graph GraphBuilder::build() const {
  Graph g(vertex_count_);
  for (const auto& [u, v] : edges_) {
    g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  g.edge_count_ = edges_.size();
  return g;
}

std::vector<int> RootedTree::depths() const {
  const std::size_t n = parent.size();
  if (root < 0 || static_cast<std::size_t>(root) >= n) throw InvalidInput("tree root out of range");
  if (parent[static_cast<std::size_t>(root)] != kNoVertex) throw InvalidInput("root has a parent");
  std::vector<int> depth(n, -1);
  depth[static_cast<std::size_t>(root)] = 0;
  std::vector<Vertex> stack;
  for (std::size_t start = 0; start < n; ++start) {
    Vertex v = static_cast<Vertex>(start);
    // Walk up until a vertex of known depth, guarding against cycles.
    while (depth[static_cast<std::size_t>(v)] < 0) {
      stack.push_back(v);
      if (stack.size() > n) throw InvalidInput("parent links contain a cycle");
      Vertex p = parent[static_cast<std::size_t>(v)];
      if (p == kNoVertex) {
        throw InvalidInput("vertex " + vertex_str(v) + " does not reach the root");
      }
      if (p < 0 || static_cast<std::size_t>(p) >= n) throw InvalidInput("parent out of range");
      v = p;
    }
    int d = depth[static_cast<std::size_t>(v)];
    while (!stack.empty()) {
      depth[static_cast<std::size_t>(stack.back())] = ++d;
      stack.pop_back();
    }
  }
  return depth;
}

std::vector<std::vector<Vertex>> RootedTree::children() const {
  std::vector<std::vector<Vertex>> out(parent.size());
  for (std::size_t v = 0; v < parent.size(); ++v) {
    if (parent[v] != kNoVertex) out[static_cast<std::size_t>(parent[v])].push_back(static_cast<Vertex>(v));
  }
  return out;
}

void RootedTree::validate() const { (void)depths(); }

Layering Layering::from_layer_indices(std::vector<int> layer_of) {
  Layering l;
  int max_layer = -1;
  for (int i : layer_of) {
    if (i < 0) throw InvalidInput("negative layer index");
    max_layer = std::max(max_layer, i);
  }
  l.layers.resize(static_cast<std::size_t>(max_layer + 1));
  for (std::size_t v = 0; v < layer_of.size(); ++v) {
    l.layers[static_cast<std::size_t>(layer_of[v])].push_back(static_cast<Vertex>(v));
  }
  l.layer_of = std::move(layer_of);
  return l;
}

namespace {

std::vector<int> bfs_distances(const Graph& g, Vertex root) {
  if (!g.has_vertex(root)) throw InvalidInput("BFS root " + vertex_str(root) + " is not a vertex");
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<Vertex> queue{root};
  dist[static_cast<std::size_t>(root)] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] < 0) throw InvalidInput("graph is disconnected: vertex " + std::to_string(v) + " is unreachable");
  }
  return dist;
}

}  // namespace

Layering bfs_layering(const Graph& g, Vertex root) { return Layering::from_layer_indices(bfs_distances(g, root)); }

RootedTree bfs_spanning_tree(const Graph& g, Vertex root) {
  const std::vector<int> dist = bfs_distances(g, root);
  RootedTree t{root, std::vector<Vertex>(g.vertex_count(), kNoVertex)};
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (static_cast<Vertex>(v) == root) continue;
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
      if (dist[static_cast<std::size_t>(w)] == dist[v] - 1) {
        t.parent[v] = w;  // neighbours are sorted: first hit is the lowest id
        break;
      }
    }
  }
  return t;
}

bool is_bfs_spanning_tree(const Graph& g, const RootedTree& tree) {
  if (tree.size() != g.vertex_count() || !g.has_vertex(tree.root)) return false;
  std::vector<int> dist;
  try {
    dist = bfs_distances(g, tree.root);
  } catch (const InvalidInput&) {
    return false;
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    Vertex p = tree.parent[v];
    if (static_cast<Vertex>(v) == tree.root) {
      if (p != kNoVertex) return false;
      continue;
    }
    if (!g.has_edge(static_cast<Vertex>(v), p)) return false;
    if (dist[static_cast<std::size_t>(p)] != dist[v] - 1) return false;
  }
  return true;
}

bool is_vertical_path(const RootedTree& tree, std::span<const Vertex> path) {
  if (path.empty()) return false;
  const std::size_t n = tree.size();
  for (Vertex v : path) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) return false;
  }
  // Consecutive vertices must be parent/child; a vertical path changes
  // direction at most zero times, so it is monotone in depth.
  if (path.size() == 1) return true;
  auto is_parent = [&](Vertex child, Vertex par) { return tree.parent[static_cast<std::size_t>(child)] == par; };
  bool upward = is_parent(path[0], path[1]);
  bool downward = is_parent(path[1], path[0]);
  if (!upward && !downward) return false;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (upward ? !is_parent(path[i], path[i + 1]) : !is_parent(path[i + 1], path[i])) return false;
  }
  return true;
}

Graph strong_product(const Graph& a, const Graph& b) {
  const std::size_t nb = b.vertex_count();
  GraphBuilder builder(a.vertex_count() * nb);
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    for (const Edge& e : b.edges()) {
      builder.add_edge(product_vertex(static_cast<Vertex>(v), e.u, nb), product_vertex(static_cast<Vertex>(v), e.v, nb));
    }
  }
  for (const Edge& e : a.edges()) {
    for (std::size_t x = 0; x < nb; ++x) {
      builder.add_edge(product_vertex(e.u, static_cast<Vertex>(x), nb), product_vertex(e.v, static_cast<Vertex>(x), nb));
    }
    for (const Edge& f : b.edges()) {
      builder.add_edge(product_vertex(e.u, f.u, nb), product_vertex(e.v, f.v, nb));
      builder.add_edge(product_vertex(e.u, f.v, nb), product_vertex(e.v, f.u, nb));
    }
  }
  return builder.build();
}

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return b.build();
}

Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t v = 1; v < n; ++v) b.add_edge(static_cast<Vertex>(v - 1), static_cast<Vertex>(v));
  return b.build();
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (std::size_t v = 0; v < n; ++v) b.add_edge(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
  return b.build();
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  GraphBuilder b(rows * cols);
  auto id = [&](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) b.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) b.add_edge(id(r, c), id(r + 1, c));
    }
  }
  return b.build();
}

Graph complete_blowup(const Graph& h, int m) {
  if (m < 1) throw InvalidInput("blowup factor must be at least 1");
  return strong_product(h, complete_graph(static_cast<std::size_t>(m)));
}

Contraction contract_vertex_set(const Graph& g, std::span<const Vertex> s, Vertex new_id) {
  if (s.empty()) throw InvalidInput("cannot contract an empty vertex set");
  std::vector<char> in_s(g.vertex_count(), 0);
  for (Vertex v : s) {
    if (!g.has_vertex(v)) throw InvalidInput("contraction vertex out of range");
    in_s[static_cast<std::size_t>(v)] = 1;
  }
  std::size_t s_size = 0;
  for (char c : in_s) s_size += static_cast<std::size_t>(c);
  const std::size_t out_n = g.vertex_count() - s_size + 1;
  if (new_id < 0 || static_cast<std::size_t>(new_id) >= out_n) throw InvalidInput("contraction id out of range");

  // G[S] must be connected.
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{s.front()};
  seen[static_cast<std::size_t>(s.front())] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex w : g.neighbors(v)) {
      if (in_s[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  if (reached != s_size) throw InvalidInput("contracted set does not induce a connected subgraph");

  Contraction out;
  out.image.assign(g.vertex_count(), kNoVertex);
  Vertex next = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (in_s[v]) {
      out.image[v] = new_id;
      continue;
    }
    if (next == new_id) ++next;
    out.image[v] = next++;
  }
  GraphBuilder b(out_n);
  for (const Edge& e : g.edges()) {
    Vertex a = out.image[static_cast<std::size_t>(e.u)];
    Vertex c = out.image[static_cast<std::size_t>(e.v)];
    if (a != c) b.add_edge(a, c);
  }
  out.graph = b.build();
  return out;
}

std::vector<int> connected_components(const Graph& g, int* count) {
  std::vector<int> comp(g.vertex_count(), -1);
  int c = 0;
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = c;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = c;
          stack.push_back(w);
        }
      }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

bool is_connected(const Graph& g) {
  int count = 0;
  connected_components(g, &count);
  return count <= 1;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> local(g.vertex_count(), kNoVertex);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!g.has_vertex(vertices[i])) throw InvalidInput("induced subgraph vertex out of range");
    local[static_cast<std::size_t>(vertices[i])] = static_cast<Vertex>(i);
  }
  GraphBuilder b(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      Vertex j = local[static_cast<std::size_t>(w)];
      if (j != kNoVertex && static_cast<Vertex>(i) < j) b.add_edge(static_cast<Vertex>(i), j);
    }
  }
  return b.build();
}

Graph graph_union(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) throw InvalidInput("graph union needs equal vertex counts");
  GraphBuilder builder(a);
  for (const Edge& e : b.edges()) builder.add_edge(e.u, e.v);
  return builder.build();
}

bool is_subgraph(const Graph& small, const Graph& big) {
  if (small.vertex_count() > big.vertex_count()) return false;
  for (const Edge& e : small.edges()) {
    if (!big.has_edge(e.u, e.v)) return false;
  }
  return true;
}

}  // namespace blowup
