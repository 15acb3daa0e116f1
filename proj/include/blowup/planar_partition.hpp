#pragma once

#include <map>
#include <vector>

#include "blowup/decomposition.hpp"
#include "blowup/embedding.hpp"
#include "blowup/partition.hpp"

namespace blowup {

/// Partition of a planar graph into parts covered by at most three vertical
/// paths of a BFS tree, with a width-3 decomposition of the quotient.
struct TripodPartitionResult {
  Partition partition;
  Graph h;
  TreeDecomposition h_td;
  std::map<PartId, std::vector<std::vector<Vertex>>> path_cover;
  RootedTree tree;

  /// Certificate with claimed width = widest part and the path cover attached.
  HPartitionCertificate certificate() const;
};

/// Tripod decomposition of a connected planar graph. `tree` must be a BFS
/// spanning tree of embedding.graph.
TripodPartitionResult planar_partition(const PlanarEmbedding& embedding, const RootedTree& tree);

}  // namespace blowup
