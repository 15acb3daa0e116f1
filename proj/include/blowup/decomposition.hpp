#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "blowup/graph.hpp"

namespace blowup {

using NodeId = std::int32_t;

/// Rooted tree-decomposition. Node ids are 0..node_count-1 and independent of
/// host vertex ids; every bag is kept sorted.
struct TreeDecomposition {
  RootedTree tree;
  std::vector<std::vector<Vertex>> bags;

  std::size_t node_count() const { return bags.size(); }
  /// max |bag| - 1; -1 for a decomposition without vertices.
  int width() const;
  /// max |B_x ∩ B_parent(x)| over tree edges; 0 for a single node.
  int adhesion() const;

  static TreeDecomposition single_bag(std::vector<Vertex> bag);
};

struct Violation {
  std::string rule;
  std::string witness;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
  int width = -1;
  int adhesion = 0;

  void add(std::string rule, std::string witness);
  void merge(const ValidationReport& other);
};

ValidationReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

/// G[B_x] with B_x ∩ B_y completed to a clique for every tree neighbour y.
/// Vertex i of the result is the i-th smallest vertex of B_x.
Graph torso(const Graph& g, const TreeDecomposition& td, NodeId x);

/// B_x ∩ B_y for each child y of x, in increasing order of y.
std::vector<std::vector<Vertex>> child_adhesion_cliques(const TreeDecomposition& td, NodeId x);

inline constexpr std::size_t kDefaultOracleLimit = 15;

struct TreewidthResult {
  int treewidth = -1;
  std::vector<Vertex> elimination_order;
};

/// Exact treewidth by dynamic programming over vertex subsets.
TreewidthResult exact_treewidth(const Graph& g, std::size_t limit = kDefaultOracleLimit);

/// Width of the given elimination order (max number of later neighbours in
/// the fill-in graph).
int elimination_width(const Graph& g, std::span<const Vertex> order);

/// Tree-decomposition induced by an elimination order.
TreeDecomposition decomposition_from_elimination(const Graph& g, std::span<const Vertex> order);

/// tw(H ⊠ K_m) <= (tw(H)+1)m - 1, evaluated with the exact oracle.
bool check_blowup_tw_bound(const Graph& h, int m, std::size_t limit = kDefaultOracleLimit);

/// Drops the given vertices from every bag (valid decomposition of G - S).
TreeDecomposition remove_vertices(const TreeDecomposition& td, std::span<const Vertex> removed);

}  // namespace blowup
