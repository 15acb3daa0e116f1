#pragma once

#include <cstddef>
#include <vector>

#include "blowup/graph.hpp"

namespace blowup {

/// Combinatorial embedding given by a rotation system.
///
/// Face tracing convention: after arriving at v along u -> v, the walk leaves
/// along v -> w where w follows u in the cyclic order of v.
struct PlanarEmbedding {
  Graph graph;
  std::vector<std::vector<Vertex>> rotation;

  /// Checks that every rotation is a permutation of the neighbourhood.
  static PlanarEmbedding from_rotation(Graph graph, std::vector<std::vector<Vertex>> rotation);

  /// Face boundary walks; each walk lists the tails of its darts in order.
  std::vector<std::vector<Vertex>> faces() const;
  /// V - E + F == 2C, counting an isolated vertex as one face.
  bool satisfies_euler() const;
};

/// Dart-level view of an embedding. Dart ids are offset[v] + position in
/// rotation[v] and denote v -> rotation[v][position].
class DartStructure {
 public:
  using Dart = std::int32_t;

  explicit DartStructure(const PlanarEmbedding& embedding);

  std::size_t dart_count() const { return head_.size(); }
  Vertex tail(Dart d) const { return tail_[static_cast<std::size_t>(d)]; }
  Vertex head(Dart d) const { return head_[static_cast<std::size_t>(d)]; }
  Dart twin(Dart d) const { return twin_[static_cast<std::size_t>(d)]; }
  Dart next_in_face(Dart d) const;
  /// Dart u -> v; throws when uv is not an edge.
  Dart dart(Vertex u, Vertex v) const;
  /// First dart leaving v (v -> rotation[v][0]); -1 for isolated vertices.
  Dart first_dart(Vertex v) const;
  int face_of(Dart d) const { return face_[static_cast<std::size_t>(d)]; }
  int face_count() const { return face_count_; }

 private:
  std::vector<std::size_t> offset_;
  std::vector<Vertex> tail_;
  std::vector<Vertex> head_;
  std::vector<Dart> twin_;
  std::vector<int> face_;
  // Per vertex, (neighbour, dart) sorted by neighbour for lookup.
  std::vector<std::vector<std::pair<Vertex, Dart>>> lookup_;
  int face_count_ = 0;
};

/// Adds chords until every face is a triangle (connected, n >= 3). Faces are
/// fanned from their lowest-id vertex; a chord that would duplicate an edge is
/// skipped by rotating to the next ear.
PlanarEmbedding triangulate_planar(const PlanarEmbedding& embedding);

/// Planar embedding of an abstract graph (Boyer-Myrvold). Throws InvalidInput
/// for non-planar graphs.
PlanarEmbedding embed_planar(const Graph& graph);

}  // namespace blowup
