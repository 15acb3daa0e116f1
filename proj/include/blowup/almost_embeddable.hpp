#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "blowup/decomposition.hpp"
#include "blowup/embedding.hpp"
#include "blowup/error.hpp"
#include "blowup/partition.hpp"
#include "blowup/planar_partition.hpp"

namespace blowup {

/// Vortex attached along boundary x_1..x_b with path-decomposition B_1..B_b.
/// Ids are host ids; the vortex vertex set is the union of the bags.
struct Vortex {
  Graph graph;
  std::vector<Vertex> boundary;
  std::vector<std::vector<Vertex>> bags;

  std::vector<Vertex> vertices() const;
};

struct AlmostEmbeddingParams {
  int g = 0;
  int p = 0;
  int k = 1;
  int a = 0;
};

/// G - A = G_0 ∪ G_1 ∪ ... ∪ G_s. The embedding of G_0 is over host ids;
/// V(G_0) is every host vertex that is neither an apex nor inside a vortex.
struct AlmostEmbedding {
  Graph graph;
  std::vector<Vertex> apex;
  PlanarEmbedding g0;
  AlmostEmbeddingParams params;
  std::vector<Vortex> vortices;

  std::vector<Vertex> g0_vertices() const;
};

ValidationReport validate_almost_embedding(const AlmostEmbedding& ae);

/// Greedy split points of a vortex. Indices are 0-based bag positions with
/// a.front() == 0; y[j] is the block after a[j].
struct VortexSplit {
  std::vector<int> a;
  std::vector<Vertex> z;
  std::vector<std::vector<Vertex>> y;
};

VortexSplit split_vortex(const Vortex& vortex, int k, std::int64_t n);

/// Block bounds, |Z| bound, disjoint cover and bag containment.
ValidationReport check_vortex_split(const Vortex& vortex, const VortexSplit& split, int k, std::int64_t n);

/// G_0 with boundary paths, the contracted special vertices and the root r.
/// Ids: untouched G_0 vertices ascending, then z_i followed by that vortex's
/// y_{i,j}, then r.
struct AugmentedSurfaceGraph {
  Graph graph;
  Vertex root = kNoVertex;
  /// G_0' vertex -> host vertices it stands for (empty for r).
  std::vector<std::vector<Vertex>> provenance;
  std::vector<Vertex> z;
  /// y[i][j] is y_{i,j}, or kNoVertex when that block has no boundary vertex.
  std::vector<std::vector<Vertex>> y;
  std::vector<char> special;
  /// Edges added only to make G_0' connected, in G_0' ids.
  std::vector<Edge> connecting_edges;
};

AugmentedSurfaceGraph augment(const AlmostEmbedding& ae, const std::vector<VortexSplit>& splits);

/// l in [3, d-1] minimising |V_l ∪ V_{l+d} ∪ ...|, lowest l on ties.
int choose_slice_offset(const Layering& layering, int d);

/// Partition of G_0' - V̂_l, one copy of H' per layer band.
struct SlicedPartition {
  Partition partition;  // over G_0' vertices, kNoPart on V̂_l
  Graph h;
  TreeDecomposition h_td;
  std::vector<Vertex> removed;  // V̂_l
  std::vector<int> band_of_part;
  std::vector<PartId> source_part;
};

SlicedPartition slice_and_partition(const AugmentedSurfaceGraph& asg, const TripodPartitionResult& base,
                                    const Layering& layering, int ell, int d);

/// Host-level partition: specials expanded, r dropped, empty parts removed.
struct ExpandedPartition {
  Partition partition;  // over host vertices, kNoPart outside
  Graph h;
  TreeDecomposition h_td;
};

ExpandedPartition expand_specials(const SlicedPartition& sliced, const AugmentedSurfaceGraph& asg,
                                  std::size_t host_vertex_count);

struct VortexStats {
  int q = 0;
  std::size_t z_size = 0;
  std::vector<std::size_t> block_sizes;
};

struct AlmostEmbeddableStats {
  std::int64_t n = 0;
  int k = 1;
  int d = 0;
  int ell = 0;
  std::size_t s_size = 0;
  int width = 0;
  std::int64_t width_bound = 0;  // floor of (2g+4p+3)(2√(kn)+d+2k)
  std::vector<VortexStats> vortices;
};

struct AlmostEmbeddableResult {
  std::vector<Vertex> s;  // sorted host ids
  Partition partition;    // kNoPart exactly on s
  Graph h;
  TreeDecomposition h_td;
  AlmostEmbeddableStats stats;
};

/// Raised when G_0' is not handled by the planar toolkit (g >= 1 or s >= 2).
class RequiresExternalPartition : public InvalidInput {
 public:
  RequiresExternalPartition(const std::string& what, AugmentedSurfaceGraph asg)
      : InvalidInput(what), asg_(std::move(asg)) {}
  const AugmentedSurfaceGraph& augmented() const { return asg_; }

 private:
  AugmentedSurfaceGraph asg_;
};

/// BFS tree of G_0' rooted at r; external partitions must use its paths.
RootedTree augmented_bfs_tree(const AugmentedSurfaceGraph& asg);

AlmostEmbeddableResult almost_embeddable_partition(const AlmostEmbedding& ae, int d,
                                                   const std::optional<HPartitionCertificate>& external = std::nullopt);

/// Checks a partition of G - S against H and its decomposition.
ValidationReport validate_partition_minus(const Graph& g, std::span<const Vertex> s, const Partition& partition,
                                          const Graph& h, const TreeDecomposition& h_td, int claimed_width);

}  // namespace blowup
