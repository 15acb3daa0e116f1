#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "blowup/error.hpp"
#include "blowup/partition.hpp"

using namespace blowup;

namespace {

bool has_rule(const ValidationReport& r, const std::string& rule) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

HPartitionCertificate trivial_certificate(const Graph& g) {
  std::vector<PartId> id(g.vertex_count());
  for (std::size_t v = 0; v < id.size(); ++v) id[v] = static_cast<PartId>(v);
  HPartitionCertificate c;
  c.partition = Partition::from_part_of(id);
  c.h = g;
  const TreewidthResult tw = exact_treewidth(g);
  c.h_td = decomposition_from_elimination(g, tw.elimination_order);
  c.claimed_width = 1;
  return c;
}

HPartitionCertificate antipodal_c4() {
  HPartitionCertificate c;
  c.partition = Partition::from_part_of({0, 1, 0, 1});
  c.h = path_graph(2);
  c.h_td = TreeDecomposition::single_bag({0, 1});
  c.claimed_width = 2;
  return c;
}

}  // namespace

TEST_CASE("quotients") {
  const Graph g = cycle_graph(5);
  CHECK(quotient(g, Partition::from_part_of({0, 1, 2, 3, 4})) == g);
  CHECK(quotient(g, Partition::from_part_of({0, 0, 0, 0, 0})) == Graph::from_edges(1, {}));
  CHECK(quotient(cycle_graph(4), Partition::from_part_of({0, 1, 0, 1})) == path_graph(2));
  CHECK_THROWS_AS(quotient(g, Partition::from_part_of({0, 0, kNoPart, 1, 1})), InvalidInput);
  CHECK(quotient(g, Partition::from_part_of({0, 0, kNoPart, 1, 1}), true).edge_count() == 1);
}

TEST_CASE("trivial certificates") {
  const Graph k1 = Graph::from_edges(1, {});
  CHECK(validate_h_partition(k1, trivial_certificate(k1)).valid);
  const Graph g = grid_graph(3, 3);
  CHECK(validate_h_partition(g, trivial_certificate(g)).valid);
}

TEST_CASE("width claim below actual width") {
  HPartitionCertificate c = antipodal_c4();
  c.claimed_width = 1;
  const ValidationReport r = validate_h_partition(cycle_graph(4), c);
  CHECK_FALSE(r.valid);
  CHECK(has_rule(r, "partition.width"));
}

TEST_CASE("missing H edge") {
  HPartitionCertificate c = antipodal_c4();
  c.h = Graph::from_edges(2, {});
  const ValidationReport r = validate_h_partition(cycle_graph(4), c);
  CHECK(has_rule(r, "quotient.containment"));
  CHECK(r.violations.front().witness.find("0-1") != std::string::npos);
}

TEST_CASE("apex part claim") {
  // H = K_4 with α = 3: H - α = K_3 needs width 2 < 3.
  const Graph g = complete_graph(4);
  HPartitionCertificate c = trivial_certificate(g);
  c.h_td = TreeDecomposition::single_bag({0, 1, 2, 3});
  c.apex_part = 3;
  CHECK(validate_h_partition(g, c).valid);
  // A decomposition where α does not lower the width is rejected.
  const Graph two_triangles = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  HPartitionCertificate d = trivial_certificate(two_triangles);
  d.h_td.tree = RootedTree{0, {kNoVertex, 0}};
  d.h_td.bags = {{0, 1, 2}, {2, 3, 4}};
  d.apex_part = 0;
  CHECK(has_rule(validate_h_partition(two_triangles, d), "apex.width"));
  d.apex_part = 2;
  CHECK(validate_h_partition(two_triangles, d).valid);
  d.apex_part = 9;
  CHECK(has_rule(validate_h_partition(two_triangles, d), "apex.range"));
}

TEST_CASE("vertical path certificates") {
  const Graph p = path_graph(4);
  HPartitionCertificate c;
  c.partition = Partition::from_part_of({0, 0, 1, 1});
  c.h = path_graph(2);
  c.h_td = TreeDecomposition::single_bag({0, 1});
  c.claimed_width = 2;
  c.tree = bfs_spanning_tree(p, 0);
  c.vertical_paths[0] = {{0, 1}};
  c.vertical_paths[1] = {{2}, {3}};
  CHECK(validate_h_partition(p, c).valid);
  c.vertical_path_limit = 1;
  CHECK(has_rule(validate_h_partition(p, c), "vertical_paths.cover"));
  c.vertical_path_limit = 3;
  c.vertical_paths[1] = {{2}};
  CHECK(has_rule(validate_h_partition(p, c), "vertical_paths.cover"));
}

TEST_CASE("check_vertical_path_cover") {
  const RootedTree t{0, {kNoVertex, 0, 0, 1, 2, 3}};
  CHECK(check_vertical_path_cover(t, std::vector<Vertex>{0, 1, 3, 5}, {{0, 1, 3, 5}}, 1));
  CHECK_FALSE(check_vertical_path_cover(t, std::vector<Vertex>{4, 5}, {{4, 2, 0, 1, 3, 5}}, 1));
  CHECK(check_vertical_path_cover(t, std::vector<Vertex>{1, 2, 5}, {{1}, {2}, {5}}, 3));
}

TEST_CASE("product embedding") {
  const Graph g = grid_graph(2, 3);
  const ProductEmbedding id = embed_into_product(g, trivial_certificate(g));
  for (std::size_t v = 0; v < 6; ++v) CHECK(id.encoded(static_cast<Vertex>(v)) == static_cast<Vertex>(v));

  HPartitionCertificate one;
  one.partition = Partition::from_part_of(std::vector<PartId>(6, 0));
  one.h = Graph::from_edges(1, {});
  one.h_td = TreeDecomposition::single_bag({0});
  one.claimed_width = 6;
  const ProductEmbedding kn = embed_into_product(g, one);
  CHECK(kn.blowup == 6);

  const Graph c4 = cycle_graph(4);
  const ProductEmbedding pe = embed_into_product(c4, antipodal_c4());
  const Graph host = strong_product(path_graph(2), complete_graph(2));
  CHECK(pe.encoded(0) == 0);
  CHECK(pe.encoded(1) == 2);
  CHECK(pe.encoded(2) == 1);
  CHECK(pe.encoded(3) == 3);
  for (const Edge& e : c4.edges()) CHECK(host.has_edge(pe.encoded(e.u), pe.encoded(e.v)));

  HPartitionCertificate broken = antipodal_c4();
  broken.claimed_width = 1;
  CHECK_THROWS_AS(embed_into_product(c4, broken), InvalidInput);
}

TEST_CASE("subgraphs of a blowup partition by projection") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph h = trial % 2 ? cycle_graph(4) : path_graph(3);
    const int p = 2 + trial % 2;
    const Graph host = strong_product(h, complete_graph(static_cast<std::size_t>(p)));
    // Random subgraph on all host vertices.
    GraphBuilder b(host.vertex_count());
    for (const Edge& e : host.edges())
      if (rng() % 2) b.add_edge(e.u, e.v);
    const Graph g = b.build();
    std::vector<PartId> proj(g.vertex_count());
    for (std::size_t v = 0; v < proj.size(); ++v) proj[v] = static_cast<PartId>(v / static_cast<std::size_t>(p));
    HPartitionCertificate c;
    c.partition = Partition::from_part_of(proj, static_cast<PartId>(h.vertex_count()));
    c.h = h;
    c.h_td = decomposition_from_elimination(h, exact_treewidth(h).elimination_order);
    c.claimed_width = p;
    CHECK(validate_h_partition(g, c).valid);
    const ProductEmbedding pe = embed_into_product(g, c);
    for (const Edge& e : g.edges()) CHECK(host.has_edge(pe.encoded(e.u), pe.encoded(e.v)));
  }
}

TEST_CASE("layerings") {
  const Graph g = grid_graph(4, 4);
  CHECK(validate_layering(g, bfs_layering(g, 5)).valid);
  CHECK(validate_layering(g, Layering::from_layer_indices(std::vector<int>(16, 0))).valid);
  const ValidationReport bad = validate_layering(path_graph(2), Layering::from_layer_indices({0, 2}));
  CHECK(has_rule(bad, "layering.edge_span"));
}
