#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace blowup {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on the dense vertex set {0, ..., n-1}.
///
/// Immutable after construction; adjacency lists are kept sorted so that
/// iteration order (and therefore every tie-break downstream) is by vertex id.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  /// Builds a graph from an edge list. Rejects loops, duplicates and
  /// out-of-range endpoints.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }
  bool has_vertex(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < adjacency_.size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  friend class GraphBuilder;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Mutable accumulator for graphs. Duplicate edges are merged silently;
/// loops are rejected.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t vertex_count = 0) : vertex_count_(vertex_count) {}
  explicit GraphBuilder(const Graph& base);

  Vertex add_vertex() { return static_cast<Vertex>(vertex_count_++); }
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  std::size_t vertex_count() const { return vertex_count_; }
  Graph build() const;

 private:
  std::size_t vertex_count_;
  std::set<std::pair<Vertex, Vertex>> edges_;
};

/// Rooted tree given by a parent map; parent[root] == kNoVertex.
struct RootedTree {
  Vertex root = 0;
  std::vector<Vertex> parent;

  std::size_t size() const { return parent.size(); }
  /// Depth of every vertex (root has depth 0). Throws if parent links are not
  /// an arborescence rooted at `root`.
  std::vector<int> depths() const;
  std::vector<std::vector<Vertex>> children() const;
  /// Throws InvalidInput when the parent map is not a tree rooted at `root`.
  void validate() const;
};

/// Layer index per vertex plus the ordered layers V_0, V_1, ...
struct Layering {
  std::vector<int> layer_of;
  std::vector<std::vector<Vertex>> layers;

  static Layering from_layer_indices(std::vector<int> layer_of);
};

Layering bfs_layering(const Graph& g, Vertex root);

/// BFS spanning tree with the lowest-id neighbour in the previous layer as
/// parent.
RootedTree bfs_spanning_tree(const Graph& g, Vertex root);

/// True when `tree` is a spanning tree of `g` whose parent edges each go one
/// BFS layer up from `tree.root`.
bool is_bfs_spanning_tree(const Graph& g, const RootedTree& tree);

bool is_vertical_path(const RootedTree& tree, std::span<const Vertex> path);

/// Vertex (v, x) of A ⊠ B is encoded as v * |V(B)| + x.
Graph strong_product(const Graph& a, const Graph& b);
inline Vertex product_vertex(Vertex v, Vertex x, std::size_t b_size) {
  return static_cast<Vertex>(static_cast<std::size_t>(v) * b_size + static_cast<std::size_t>(x));
}

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph grid_graph(std::size_t rows, std::size_t cols);

/// H ⊠ K_m.
Graph complete_blowup(const Graph& h, int m);

struct Contraction {
  Graph graph;
  /// image[v] is the id of v in the contracted graph.
  std::vector<Vertex> image;
};

/// Contracts the connected set `s` into a single vertex with id `new_id`.
/// Remaining vertices take the other ids in increasing order of their old id.
Contraction contract_vertex_set(const Graph& g, std::span<const Vertex> s, Vertex new_id);

/// Component index per vertex, components numbered by their lowest vertex.
std::vector<int> connected_components(const Graph& g, int* count = nullptr);
bool is_connected(const Graph& g);

/// Subgraph induced on `vertices` (sorted, unique); vertex i of the result is
/// vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Edge-disjoint union of two graphs on the same vertex set.
Graph graph_union(const Graph& a, const Graph& b);

bool is_subgraph(const Graph& small, const Graph& big);

}  // namespace blowup
