#include "blowup/generators.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "blowup/error.hpp"

namespace blowup {

PlanarEmbedding grid_embedding(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw InvalidInput("grid dimensions must be positive");
  const Graph g = grid_graph(rows, cols);
  std::vector<std::vector<Vertex>> rotation(g.vertex_count());
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      auto& rot = rotation[static_cast<std::size_t>(id(r, c))];
      if (c + 1 < cols) rot.push_back(id(r, c + 1));
      if (r + 1 < rows) rot.push_back(id(r + 1, c));
      if (c > 0) rot.push_back(id(r, c - 1));
      if (r > 0) rot.push_back(id(r - 1, c));
    }
  }
  return PlanarEmbedding::from_rotation(g, std::move(rotation));
}

PlanarEmbedding stacked_triangulation(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw InvalidInput("stacked triangulation needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Vertex>> rotation{{1, 2}, {2, 0}, {0, 1}};
  // Faces as dart walks a -> b -> c.
  std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {1, 0, 2}};
  GraphBuilder builder(3);
  builder.add_edge(0, 1);
  builder.add_edge(1, 2);
  builder.add_edge(0, 2);
  auto insert_after = [](std::vector<Vertex>& rot, Vertex anchor, Vertex value) {
    rot.insert(std::find(rot.begin(), rot.end(), anchor) + 1, value);
  };
  for (std::size_t w = 3; w < n; ++w) {
    const std::size_t pick = static_cast<std::size_t>(rng() % faces.size());
    const auto [a, b, c] = faces[pick];
    const auto v = static_cast<Vertex>(builder.add_vertex());
    insert_after(rotation[static_cast<std::size_t>(a)], c, v);
    insert_after(rotation[static_cast<std::size_t>(b)], a, v);
    insert_after(rotation[static_cast<std::size_t>(c)], b, v);
    rotation.push_back({a, c, b});
    builder.add_edge(v, a);
    builder.add_edge(v, b);
    builder.add_edge(v, c);
    faces[pick] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({c, a, v});
  }
  return PlanarEmbedding::from_rotation(builder.build(), std::move(rotation));
}

}  // namespace blowup

namespace blowup {

namespace {

void add_apexes(GraphBuilder& host, std::size_t first, int apexes, std::mt19937_64& rng, std::vector<Vertex>& out) {
  for (int i = 0; i < apexes; ++i) {
    const auto a = static_cast<Vertex>(first + static_cast<std::size_t>(i));
    bool any = false;
    for (Vertex v = 0; v < a; ++v) {
      if (rng() % 2 || (!any && v + 1 == a)) {
        host.add_edge(a, v);
        any = true;
      }
    }
    out.push_back(a);
  }
}

}  // namespace

PlanarEmbedding pad_embedding(const PlanarEmbedding& base, std::size_t n) {
  if (n < base.graph.vertex_count()) throw InvalidInput("padding cannot shrink an embedding");
  GraphBuilder b(n);
  for (const Edge& e : base.graph.edges()) b.add_edge(e.u, e.v);
  PlanarEmbedding out{b.build(), base.rotation};
  out.rotation.resize(n);
  return out;
}

AlmostEmbedding apexed_planar(std::size_t n, int apexes, std::uint64_t seed) {
  if (apexes < 0) throw InvalidInput("apex count must be non-negative");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const PlanarEmbedding base = stacked_triangulation(n, seed);
  const std::size_t total = n + static_cast<std::size_t>(apexes);
  AlmostEmbedding ae;
  GraphBuilder host(total);
  for (const Edge& e : base.graph.edges()) host.add_edge(e.u, e.v);
  add_apexes(host, n, apexes, rng, ae.apex);
  ae.graph = host.build();
  ae.g0 = pad_embedding(base, total);
  ae.params = {0, 0, 1, apexes};
  return ae;
}

AlmostEmbedding planar_with_vortex(std::size_t boundary, std::size_t interior, int k, int apexes,
                                   std::uint64_t seed) {
  if (boundary < 3) throw InvalidInput("vortex boundary needs at least 3 vertices");
  if (k < 1 || apexes < 0) throw InvalidInput("need k >= 1 and apexes >= 0");
  std::mt19937_64 rng(seed);
  const auto hub = static_cast<Vertex>(boundary);
  std::vector<Edge> plane;
  std::vector<std::array<Vertex, 3>> faces;
  for (std::size_t i = 0; i < boundary; ++i) {
    const auto x = static_cast<Vertex>(i);
    const auto nx = static_cast<Vertex>((i + 1) % boundary);
    plane.push_back({x, nx});
    plane.push_back({x, hub});
    faces.push_back({hub, x, nx});
  }
  Vertex next = hub + 1;
  for (std::size_t i = 0; i < interior; ++i) {
    const std::size_t f = rng() % faces.size();
    const auto [a, b, c] = faces[f];
    const Vertex v = next++;
    plane.insert(plane.end(), {{a, v}, {b, v}, {c, v}});
    faces[f] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({c, a, v});
  }
  const auto plane_n = static_cast<std::size_t>(next);

  // Sweep along the boundary keeping at most k live vortex vertices.
  Vortex vortex;
  std::vector<Edge> vortex_edges;
  std::vector<Vertex> live;
  for (std::size_t m = 0; m < boundary; ++m) {
    std::erase_if(live, [&](Vertex) { return rng() % 3 == 0; });
    while (static_cast<int>(live.size()) < k && rng() % 3 != 0) live.push_back(next++);
    std::vector<Vertex> bag = live;
    bag.push_back(static_cast<Vertex>(m));
    std::sort(bag.begin(), bag.end());
    for (std::size_t i = 0; i < bag.size(); ++i)
      for (std::size_t j = i + 1; j < bag.size(); ++j)
        if (rng() % 2) vortex_edges.push_back({bag[i], bag[j]});
    vortex.boundary.push_back(static_cast<Vertex>(m));
    vortex.bags.push_back(std::move(bag));
  }
  const std::size_t total = static_cast<std::size_t>(next) + static_cast<std::size_t>(apexes);

  AlmostEmbedding ae;
  GraphBuilder host(total);
  for (const Edge& e : plane) host.add_edge(e.u, e.v);
  for (const Edge& e : vortex_edges) host.add_edge(e.u, e.v);
  add_apexes(host, static_cast<std::size_t>(next), apexes, rng, ae.apex);
  ae.graph = host.build();
  ae.g0 = pad_embedding(embed_planar(Graph::from_edges(plane_n, plane)), total);
  GraphBuilder vg(total);
  for (const Edge& e : vortex_edges) vg.add_edge(e.u, e.v);
  vortex.graph = vg.build();
  ae.vortices.push_back(std::move(vortex));
  ae.params = {0, 1, k, apexes};
  return ae;
}

}  // namespace blowup

namespace blowup {

AlmostEmbedding relabel(const AlmostEmbedding& ae, std::span<const Vertex> perm) {
  const std::size_t n = ae.graph.vertex_count();
  if (perm.size() != n) throw InvalidInput("relabelling must cover every vertex");
  auto map_graph = [&](const Graph& g) {
    GraphBuilder b(n);
    for (const Edge& e : g.edges()) b.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    return b.build();
  };
  auto map_list = [&](const std::vector<Vertex>& vs) {
    std::vector<Vertex> out;
    for (Vertex v : vs) out.push_back(perm[static_cast<std::size_t>(v)]);
    return out;
  };
  AlmostEmbedding out;
  out.graph = map_graph(ae.graph);
  out.apex = map_list(ae.apex);
  std::sort(out.apex.begin(), out.apex.end());
  std::vector<std::vector<Vertex>> rotation(n);
  for (std::size_t v = 0; v < n; ++v) rotation[static_cast<std::size_t>(perm[v])] = map_list(ae.g0.rotation[v]);
  out.g0 = PlanarEmbedding::from_rotation(map_graph(ae.g0.graph), std::move(rotation));
  out.params = ae.params;
  for (const Vortex& vx : ae.vortices) {
    Vortex nv;
    nv.graph = map_graph(vx.graph);
    nv.boundary = map_list(vx.boundary);
    for (const auto& bag : vx.bags) {
      nv.bags.push_back(map_list(bag));
      std::sort(nv.bags.back().begin(), nv.bags.back().end());
    }
    out.vortices.push_back(std::move(nv));
  }
  return out;
}

StructuredInput clique_sum(const CliqueSumOptions& options, std::uint64_t seed) {
  if (options.torsos == 0 || options.torso_size < 4) throw InvalidInput("clique-sum needs torsos >= 1 and torso_size >= 4");
  if (options.max_apexes < 0 || options.k < 1) throw InvalidInput("clique-sum needs apexes >= 0 and k >= 1");
  std::mt19937_64 rng(seed);
  struct Piece {
    AlmostEmbedding ae;               // generation ids
    std::vector<Vertex> global;       // generation id -> global id
    std::vector<std::array<Vertex, 3>> triangles;  // in global ids
    NodeId parent = kNoVertex;
  };
  std::vector<Piece> pieces;
  Vertex next = 0;
  for (std::size_t t = 0; t < options.torsos; ++t) {
    Piece piece;
    const int apexes = options.max_apexes > 0 ? static_cast<int>(rng() % static_cast<std::uint64_t>(options.max_apexes + 1)) : 0;
    const bool vortex = options.vortices && rng() % 2 == 0;
    std::array<Vertex, 3> glue_local{0, 1, 2};
    if (vortex) {
      const std::size_t boundary = 3 + rng() % std::max<std::size_t>(1, options.torso_size / 2);
      const std::size_t interior = options.torso_size > boundary + 1 ? options.torso_size - boundary - 1 : 0;
      piece.ae = planar_with_vortex(boundary, interior, options.k, apexes, rng());
      glue_local = {0, 1, static_cast<Vertex>(boundary)};
    } else {
      piece.ae = apexed_planar(options.torso_size, apexes, rng());
    }
    const std::size_t m = piece.ae.graph.vertex_count();
    piece.global.assign(m, kNoVertex);
    if (t > 0) {
      // Glue onto a random triangle of an earlier torso.
      std::size_t host = 0;
      do host = rng() % pieces.size();
      while (pieces[host].triangles.empty());
      const auto& tri = pieces[host].triangles[rng() % pieces[host].triangles.size()];
      for (int i = 0; i < 3; ++i) piece.global[static_cast<std::size_t>(glue_local[static_cast<std::size_t>(i)])] = tri[static_cast<std::size_t>(i)];
      piece.parent = static_cast<NodeId>(host);
    }
    for (auto& g : piece.global)
      if (g == kNoVertex) g = next++;
    const Graph& g0 = piece.ae.g0.graph;
    for (const Edge& e : g0.edges()) {
      for (Vertex w : g0.neighbors(e.u)) {
        if (w > e.v && g0.has_edge(e.v, w)) {
          piece.triangles.push_back({piece.global[static_cast<std::size_t>(e.u)], piece.global[static_cast<std::size_t>(e.v)],
                                     piece.global[static_cast<std::size_t>(w)]});
        }
      }
    }
    pieces.push_back(std::move(piece));
  }

  const auto n = static_cast<std::size_t>(next);
  StructuredInput si;
  GraphBuilder g(n);
  int kk = 1;
  for (std::size_t t = 0; t < pieces.size(); ++t) {
    const Piece& piece = pieces[t];
    for (const Edge& e : piece.ae.graph.edges())
      g.add_edge(piece.global[static_cast<std::size_t>(e.u)], piece.global[static_cast<std::size_t>(e.v)]);
    std::vector<Vertex> bag = piece.global;
    std::sort(bag.begin(), bag.end());
    std::vector<Vertex> local(piece.global.size());
    for (std::size_t v = 0; v < local.size(); ++v) {
      local[v] = static_cast<Vertex>(std::lower_bound(bag.begin(), bag.end(), piece.global[v]) - bag.begin());
    }
    si.td.bags.push_back(std::move(bag));
    si.td.tree.parent.push_back(piece.parent);
    si.torsos.emplace(static_cast<NodeId>(t), relabel(piece.ae, local));
    const AlmostEmbeddingParams& p = piece.ae.params;
    kk = std::max({kk, p.k, p.g, p.p, p.a});
  }
  si.td.tree.root = 0;
  si.graph = g.build();
  si.params = theorem_params(kk, static_cast<std::int64_t>(n));
  return si;
}

}  // namespace blowup
