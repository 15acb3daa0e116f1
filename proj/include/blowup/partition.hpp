#pragma once

#include <map>
#include <optional>
#include <vector>

#include "blowup/decomposition.hpp"
#include "blowup/graph.hpp"

namespace blowup {

using PartId = std::int32_t;
inline constexpr PartId kNoPart = -1;

/// Assignment of host vertices to part ids 0..part_count-1.
///
/// Vertices mapped to kNoPart are outside the partitioned set (used for
/// partitions of G - S). A part id may be unused, which lets certificates
/// carry H-vertices with no preimage (e.g. an empty apex part).
struct Partition {
  std::vector<PartId> part_of;
  PartId part_count = 0;

  /// part_count defaults to 1 + the largest id present.
  static Partition from_part_of(std::vector<PartId> part_of, PartId part_count = -1);

  std::vector<std::vector<Vertex>> parts() const;
  std::size_t width() const;
  std::size_t assigned_count() const;
};

/// H-partition together with every witness needed to check its claims.
struct HPartitionCertificate {
  Partition partition;
  Graph h;
  TreeDecomposition h_td;
  std::optional<PartId> apex_part;
  int claimed_width = 0;
  /// Optional per-part cover by vertical paths of `tree`.
  std::map<PartId, std::vector<std::vector<Vertex>>> vertical_paths;
  std::optional<RootedTree> tree;
  int vertical_path_limit = 3;
};

/// G / P. With allow_unassigned, vertices outside the partition are ignored;
/// otherwise an unassigned vertex is an error.
Graph quotient(const Graph& g, const Partition& p, bool allow_unassigned = false);

ValidationReport validate_h_partition(const Graph& g, const HPartitionCertificate& cert);

struct ProductEmbedding {
  int blowup = 1;  // p in H ⊠ K_p
  std::vector<std::pair<PartId, int>> coordinates;

  Vertex encoded(Vertex v) const {
    const auto& [part, index] = coordinates[static_cast<std::size_t>(v)];
    return static_cast<Vertex>(part * blowup + index);
  }
};

/// Realises G as a subgraph of H ⊠ K_p (p = claimed width). Intra-part
/// indices follow ascending vertex id. Throws on an invalid certificate.
ProductEmbedding embed_into_product(const Graph& g, const HPartitionCertificate& cert);

ValidationReport validate_layering(const Graph& g, const Layering& layering);

bool check_vertical_path_cover(const RootedTree& tree, std::span<const Vertex> part,
                               const std::vector<std::vector<Vertex>>& paths, int limit);

/// Relabels the decomposition so that the vertices `keep` (sorted) become
/// 0..keep.size()-1; everything else is dropped from the bags.
TreeDecomposition restrict_decomposition(const TreeDecomposition& td, std::span<const Vertex> keep);

}  // namespace blowup
