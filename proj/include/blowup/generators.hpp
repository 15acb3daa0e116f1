#pragma once

#include <cstdint>

#include "blowup/almost_embeddable.hpp"
#include "blowup/assembly.hpp"
#include "blowup/embedding.hpp"

namespace blowup {

/// rows x cols grid with vertex r*cols + c and its straight-line rotation.
PlanarEmbedding grid_embedding(std::size_t rows, std::size_t cols);

/// Random stacked triangulation on n >= 3 vertices: start from a triangle and
/// repeatedly insert a vertex into a uniformly chosen face.
PlanarEmbedding stacked_triangulation(std::size_t n, std::uint64_t seed);

/// Embedding of `base` widened to `n` host ids; extra vertices are isolated.
PlanarEmbedding pad_embedding(const PlanarEmbedding& base, std::size_t n);

/// Stacked triangulation on n vertices plus `apexes` extra vertices, each
/// joined to a random half of everything before it.
AlmostEmbedding apexed_planar(std::size_t n, int apexes, std::uint64_t seed);

/// Wheel on a boundary cycle x_0..x_{b-1} (ids 0..b-1, hub b) with `interior`
/// stacked vertices, one vortex of width <= k hanging off the outer face,
/// and optional apexes. Each x_m lies only in bag m.
AlmostEmbedding planar_with_vortex(std::size_t boundary, std::size_t interior, int k, int apexes,
                                   std::uint64_t seed);

/// Renames every vertex v of `ae` to perm[v].
AlmostEmbedding relabel(const AlmostEmbedding& ae, std::span<const Vertex> perm);

struct CliqueSumOptions {
  std::size_t torsos = 5;
  std::size_t torso_size = 12;  // embedded vertices per torso, at least 4
  int max_apexes = 2;
  bool vortices = true;
  int k = 1;  // vortex width
};

/// Torsos glued one by one onto triangles of an earlier torso's embedded
/// part. Each torso is planar, apexed-planar or planar-with-vortex; torso
/// data uses local ids and the parameters follow the theorem setting.
StructuredInput clique_sum(const CliqueSumOptions& options, std::uint64_t seed);

}  // namespace blowup
