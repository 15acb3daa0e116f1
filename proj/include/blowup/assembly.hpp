#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "blowup/almost_embeddable.hpp"
#include "blowup/decomposition.hpp"
#include "blowup/partition.hpp"

namespace blowup {

/// (S_x, P_x, J_x) for one torso, in torso-local ids (index into the sorted bag).
struct TorsoResult {
  std::vector<Vertex> s;
  Partition partition;  // kNoPart exactly on s
  Graph h;
  TreeDecomposition h_td;
  std::optional<AlmostEmbeddableStats> stats;
};

using TorsoData = std::variant<AlmostEmbedding, TorsoResult>;

struct AssemblyParams {
  int a = 0;
  std::int64_t b = 0;
  int k = 1;
  int w = 3;
};

struct StructuredInput {
  Graph graph;
  TreeDecomposition td;
  std::map<NodeId, TorsoData> torsos;
  AssemblyParams params;
};

/// X_x = B_x ∩ B_parent(x), B'_x = B_x \ X_x.
struct SeparatorSplit {
  int q = 1;
  std::vector<NodeId> z_prime;
  std::vector<NodeId> z;  // z_prime plus the root, sorted
  std::vector<Vertex> q_set;
  std::vector<std::vector<Vertex>> adhesion;      // X_x per node
  std::vector<std::vector<Vertex>> private_bag;   // B'_x per node
  std::vector<NodeId> piece_of_node;              // owning z for every node
  std::map<NodeId, std::vector<Vertex>> piece_vertices;  // V(G_z), sorted
};

SeparatorSplit split_by_separator(const Graph& g, const TreeDecomposition& td);

struct PieceResult {
  NodeId z = 0;
  std::vector<Vertex> vertices;  // V(G_z)
  std::vector<Vertex> s;         // S_z ⊆ V(G_z), global ids
  Partition partition;           // over global ids, kNoPart outside V(G_z) \ S_z
  Graph h;
  TreeDecomposition h_td;
  std::size_t component_parts = 0;
};

/// Turns the torso partition at z into an H_z-partition of G_z - S_z.
PieceResult piece_partition(const Graph& g, const TreeDecomposition& td, const SeparatorSplit& split, NodeId z,
                            const TorsoResult& torso, int w);

struct AssemblyStats {
  std::int64_t n = 0;
  int q = 0;
  std::size_t z_size = 0;
  std::size_t q_size = 0;
  std::int64_t bag_sum = 0;       // Σ_z |B_z|
  std::int64_t separator_sum = 0; // Σ_z |S_z|
  std::size_t alpha_size = 0;
  int width = 0;
  std::int64_t width_bound = 0;
  int d = 0;
  std::map<NodeId, AlmostEmbeddableStats> torsos;
};

struct AssemblyCertificate {
  HPartitionCertificate certificate;  // apex_part is α
  SeparatorSplit split;
  std::vector<PieceResult> pieces;
  AssemblyStats stats;
};

/// Resolves the torso data of node x: validates a precomputed result or runs
/// the almost-embeddable partition with the given d.
TorsoResult torso_result(const StructuredInput& si, NodeId x, int d);

/// Checks the per-torso hypotheses (S bound, width, H_x tw, child-adhesion
/// cliques) and throws InvalidInput naming the node.
void check_torso_hypotheses(const StructuredInput& si, NodeId x, const TorsoResult& r);

/// d <= 0 selects ⌈√n⌉ + 3 for the almost-embeddable torsos.
AssemblyCertificate assemble(const StructuredInput& si, int d = 0);

/// Parameters used for k-almost-embeddable torsos glued along cliques
/// of size at most 9k: a = k, adhesion 9k, w = 3, b = (6k+3)·9·⌈√(kn)⌉.
AssemblyParams theorem_params(int k, std::int64_t n);

AssemblyCertificate theorem_pipeline(const StructuredInput& si, int k, int d = 0);

/// Single-torso structured input wrapping one almost-embedding.
StructuredInput single_torso(const AlmostEmbedding& ae);

}  // namespace blowup
