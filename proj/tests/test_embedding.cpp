#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "blowup/embedding.hpp"
#include "blowup/error.hpp"
#include "blowup/generators.hpp"

using namespace blowup;

namespace {

PlanarEmbedding cycle_embedding(std::size_t n) {
  std::vector<std::vector<Vertex>> rot(n);
  for (std::size_t v = 0; v < n; ++v) {
    rot[v] = {static_cast<Vertex>((v + 1) % n), static_cast<Vertex>((v + n - 1) % n)};
  }
  return PlanarEmbedding::from_rotation(cycle_graph(n), rot);
}

bool all_triangles(const PlanarEmbedding& e) {
  const auto faces = e.faces();
  return std::all_of(faces.begin(), faces.end(), [](const auto& f) { return f.size() == 3; });
}

}  // namespace

TEST_CASE("rotation must permute neighbourhoods") {
  const Graph g = path_graph(3);
  CHECK_THROWS_AS(PlanarEmbedding::from_rotation(g, {{1}, {0}, {1}}), InvalidInput);
  CHECK_THROWS_AS(PlanarEmbedding::from_rotation(g, {{1}, {0, 2}}), InvalidInput);
}

TEST_CASE("cycle has two faces") {
  const PlanarEmbedding c = cycle_embedding(5);
  const auto faces = c.faces();
  REQUIRE(faces.size() == 2);
  CHECK(faces[0].size() == 5);
  CHECK(faces[1].size() == 5);
  CHECK(c.satisfies_euler());
}

TEST_CASE("a tree has a single face walk of length 2(n-1)") {
  const PlanarEmbedding p = PlanarEmbedding::from_rotation(path_graph(4), {{1}, {0, 2}, {1, 3}, {2}});
  const auto faces = p.faces();
  REQUIRE(faces.size() == 1);
  CHECK(faces[0].size() == 6);
  CHECK(p.satisfies_euler());
}

TEST_CASE("non-planar rotation fails Euler") {
  // K4 with an inconsistent rotation: genus-1 embedding.
  const Graph k4 = complete_graph(4);
  const PlanarEmbedding bad = PlanarEmbedding::from_rotation(k4, {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
  CHECK_FALSE(bad.satisfies_euler());
}

TEST_CASE("grid embedding") {
  const PlanarEmbedding g = grid_embedding(3, 3);
  CHECK(g.graph.vertex_count() == 9);
  CHECK(g.graph.edge_count() == 12);
  CHECK(g.satisfies_euler());
  CHECK(g.faces().size() == 5);
}

TEST_CASE("triangulation of a triangle is unchanged") {
  const PlanarEmbedding t = cycle_embedding(3);
  const PlanarEmbedding out = triangulate_planar(t);
  CHECK(out.graph == t.graph);
  CHECK(all_triangles(out));
}

TEST_CASE("triangulating C4 on the sphere yields K4") {
  const PlanarEmbedding out = triangulate_planar(cycle_embedding(4));
  CHECK(out.graph.edge_count() == 6);
  CHECK(out.faces().size() == 4);
  CHECK(all_triangles(out));
}

TEST_CASE("triangulating C6 adds six chords") {
  const PlanarEmbedding c6 = cycle_embedding(6);
  const PlanarEmbedding out = triangulate_planar(c6);
  CHECK(out.graph.edge_count() == 12);
  CHECK(all_triangles(out));
  CHECK(is_subgraph(c6.graph, out.graph));
  CHECK(out.satisfies_euler());
}

TEST_CASE("triangulation errors") {
  CHECK_THROWS_AS(triangulate_planar(PlanarEmbedding::from_rotation(path_graph(2), {{1}, {0}})), InvalidInput);
  const Graph two = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK_THROWS_AS(triangulate_planar(PlanarEmbedding::from_rotation(two, {{1}, {0}, {3}, {2}})), InvalidInput);
}

TEST_CASE("triangulating trees and grids keeps the graph simple and planar") {
  for (std::size_t n = 3; n <= 12; ++n) {
    std::vector<std::vector<Vertex>> rot(n);
    std::vector<Edge> edges;
    // Star plus a pendant path, a shape with repeated face vertices.
    for (std::size_t v = 1; v < n; ++v) {
      const Vertex p = v < n / 2 + 1 ? 0 : static_cast<Vertex>(v - 1);
      edges.push_back({p, static_cast<Vertex>(v)});
    }
    const Graph g = Graph::from_edges(n, edges);
    for (std::size_t v = 0; v < n; ++v) {
      auto nb = g.neighbors(static_cast<Vertex>(v));
      rot[v].assign(nb.begin(), nb.end());
    }
    const PlanarEmbedding out = triangulate_planar(PlanarEmbedding::from_rotation(g, rot));
    CHECK(out.graph.edge_count() == 3 * n - 6);
    CHECK(all_triangles(out));
  }
  const PlanarEmbedding grid = triangulate_planar(grid_embedding(6, 7));
  CHECK(grid.graph.edge_count() == 3 * 42 - 6);
  CHECK(all_triangles(grid));
}

TEST_CASE("stacked triangulation has 3n-6 edges") {
  const PlanarEmbedding s = stacked_triangulation(50, 7);
  CHECK(s.graph.vertex_count() == 50);
  CHECK(s.graph.edge_count() == 144);
  CHECK(all_triangles(s));
  CHECK(s.satisfies_euler());
  CHECK(stacked_triangulation(50, 7).rotation == s.rotation);
}

TEST_CASE("planarity embedding") {
  const PlanarEmbedding k4 = embed_planar(complete_graph(4));
  CHECK(k4.satisfies_euler());
  CHECK(embed_planar(grid_graph(5, 5)).satisfies_euler());
  CHECK_THROWS_AS(embed_planar(complete_graph(5)), InvalidInput);
  const Graph k33 = Graph::from_edges(
      6, std::vector<Edge>{{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  CHECK_THROWS_AS(embed_planar(k33), InvalidInput);
}

TEST_CASE("random planar subgraphs re-embed and triangulate") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + rng() % 60;
    const PlanarEmbedding full = stacked_triangulation(n, rng());
    // A BFS tree stays, so the subgraph is connected.
    const RootedTree tree = bfs_spanning_tree(full.graph, 0);
    std::vector<Edge> kept;
    for (const Edge& e : full.graph.edges())
      if (tree.parent[static_cast<std::size_t>(e.u)] == e.v || tree.parent[static_cast<std::size_t>(e.v)] == e.u ||
          rng() % 3 != 0)
        kept.push_back(e);
    const Graph g = Graph::from_edges(n, kept);
    const PlanarEmbedding e = embed_planar(g);
    CHECK(e.graph.edge_count() == kept.size());
    CHECK(e.satisfies_euler());
    const PlanarEmbedding t = triangulate_planar(e);
    CHECK(t.graph.edge_count() == 3 * n - 6);
    CHECK(all_triangles(t));
    for (const Edge& ed : kept) CHECK(t.graph.has_edge(ed.u, ed.v));
  }
}
