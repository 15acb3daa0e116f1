#include "blowup/almost_embeddable.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "blowup/exact.hpp"

namespace blowup {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

bool sorted_contains(const std::vector<Vertex>& sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::vector<Vertex> Vortex::vertices() const {
  std::vector<Vertex> out;
  for (const auto& bag : bags) out.insert(out.end(), bag.begin(), bag.end());
  return sorted_unique(std::move(out));
}

std::vector<Vertex> AlmostEmbedding::g0_vertices() const {
  std::vector<char> excluded(graph.vertex_count(), 0);
  for (Vertex v : apex)
    if (graph.has_vertex(v)) excluded[static_cast<std::size_t>(v)] = 1;
  for (const Vortex& vortex : vortices) {
    const std::vector<Vertex> boundary = sorted_unique(vortex.boundary);
    for (Vertex v : vortex.vertices()) {
      if (graph.has_vertex(v) && !sorted_contains(boundary, v)) excluded[static_cast<std::size_t>(v)] = 1;
    }
  }
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < excluded.size(); ++v)
    if (!excluded[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

ValidationReport validate_almost_embedding(const AlmostEmbedding& ae) {
  ValidationReport report;
  const std::size_t n = ae.graph.vertex_count();
  const AlmostEmbeddingParams& prm = ae.params;
  if (prm.g < 0 || prm.p < 0 || prm.a < 0 || prm.k < 1) {
    report.add("ae.params", "g,p,a >= 0 and k >= 1 required");
    return report;
  }
  const std::vector<Vertex> apex = sorted_unique(ae.apex);
  if (apex.size() != ae.apex.size()) report.add("ae.apex", "duplicate apex vertex");
  for (Vertex v : apex)
    if (!ae.graph.has_vertex(v)) report.add("ae.apex", "apex " + str(v) + " out of range");
  if (static_cast<int>(apex.size()) > prm.a) report.add("ae.apex", str(static_cast<std::int64_t>(apex.size())) + " apexes > a");
  if (ae.g0.graph.vertex_count() != n) {
    report.add("ae.g0", "embedded graph must use host ids");
    return report;
  }
  if (static_cast<int>(ae.vortices.size()) > prm.p) report.add("ae.vortex_count", "more vortices than p");

  std::vector<int> owner(n, -1);
  for (std::size_t i = 0; i < ae.vortices.size(); ++i) {
    const Vortex& vx = ae.vortices[i];
    const std::string tag = "vortex " + str(static_cast<std::int64_t>(i));
    if (vx.graph.vertex_count() != n) {
      report.add("ae.vortex_graph", tag + " must use host ids");
      continue;
    }
    if (vx.boundary.empty() || vx.boundary.size() != vx.bags.size()) {
      report.add("ae.vortex_boundary", tag + " needs one bag per boundary vertex");
      continue;
    }
    if (sorted_unique(vx.boundary).size() != vx.boundary.size()) report.add("ae.vortex_boundary", tag + " repeats a boundary vertex");
    bool bags_ok = true;
    for (std::size_t j = 0; j < vx.bags.size(); ++j) {
      const auto& bag = vx.bags[j];
      if (!std::is_sorted(bag.begin(), bag.end()) || std::adjacent_find(bag.begin(), bag.end()) != bag.end() ||
          std::any_of(bag.begin(), bag.end(), [&](Vertex v) { return !ae.graph.has_vertex(v); })) {
        report.add("ae.vortex_bags", tag + " bag " + str(static_cast<std::int64_t>(j)) + " not sorted or out of range");
        bags_ok = false;
        continue;
      }
      if (static_cast<int>(bag.size()) > prm.k + 1) {
        report.add("ae.vortex_width", tag + " bag " + str(static_cast<std::int64_t>(j)) + " exceeds k+1 vertices");
      }
      if (!sorted_contains(bag, vx.boundary[j])) report.add("ae.vortex_boundary", tag + " x_j missing from B_j");
    }
    if (!bags_ok) continue;
    // Path-decomposition: contiguous traces and covered edges.
    std::map<Vertex, std::pair<std::size_t, std::size_t>> span;
    std::map<Vertex, std::size_t> hits;
    for (std::size_t j = 0; j < vx.bags.size(); ++j) {
      for (Vertex v : vx.bags[j]) {
        auto [it, fresh] = span.try_emplace(v, j, j);
        if (!fresh) it->second.second = j;
        ++hits[v];
      }
    }
    for (const auto& [v, range] : span) {
      if (range.second - range.first + 1 != hits[v]) report.add("ae.vortex_decomposition", tag + " trace of " + str(v) + " not contiguous");
      if (owner[static_cast<std::size_t>(v)] >= 0) report.add("ae.vortex_disjoint", "vertex " + str(v) + " in two vortices");
      owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
      if (sorted_contains(apex, v)) report.add("ae.vortex_disjoint", "apex " + str(v) + " inside a vortex");
    }
    for (const Edge& e : vx.graph.edges()) {
      auto a = span.find(e.u);
      auto b = span.find(e.v);
      if (a == span.end() || b == span.end() || a->second.second < b->second.first || b->second.second < a->second.first) {
        report.add("ae.vortex_decomposition", tag + " edge " + str(e.u) + "-" + str(e.v) + " uncovered");
        continue;
      }
      bool covered = false;
      const std::size_t lo = std::max(a->second.first, b->second.first);
      const std::size_t hi = std::min(a->second.second, b->second.second);
      covered = lo <= hi;
      if (!covered) report.add("ae.vortex_decomposition", tag + " edge " + str(e.u) + "-" + str(e.v) + " uncovered");
    }
  }
  if (!report.valid) return report;

  const std::vector<Vertex> g0 = ae.g0_vertices();
  for (const Edge& e : ae.g0.graph.edges()) {
    if (!sorted_contains(g0, e.u) || !sorted_contains(g0, e.v)) {
      report.add("ae.g0_vertices", "edge " + str(e.u) + "-" + str(e.v) + " leaves G_0");
    }
  }
  for (const Edge& e : ae.graph.edges()) {
    if (sorted_contains(apex, e.u) || sorted_contains(apex, e.v)) continue;
    bool found = ae.g0.graph.has_edge(e.u, e.v);
    for (const Vortex& vx : ae.vortices) found = found || vx.graph.has_edge(e.u, e.v);
    if (!found) report.add("ae.edge_union", "edge " + str(e.u) + "-" + str(e.v) + " in no piece");
  }
  auto check_subset = [&](const Graph& piece, const std::string& name) {
    for (const Edge& e : piece.edges()) {
      if (!ae.graph.has_edge(e.u, e.v)) report.add("ae.edge_union", name + " edge " + str(e.u) + "-" + str(e.v) + " not in G");
    }
  };
  check_subset(ae.g0.graph, "G_0");
  for (const Vortex& vx : ae.vortices) check_subset(vx.graph, "vortex");

  // Euler genus of the rotation system.
  const DartStructure darts(ae.g0);
  int components = 0;
  connected_components(ae.g0.graph, &components);
  std::int64_t isolated = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (ae.g0.graph.degree(static_cast<Vertex>(v)) == 0) ++isolated;
  const std::int64_t chi = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(ae.g0.graph.edge_count()) +
                           darts.face_count() + isolated;
  const std::int64_t genus = 2 * components - chi;
  if (genus > prm.g) report.add("ae.g0_genus", "rotation system has Euler genus " + str(genus) + " > g");
  return report;
}

VortexSplit split_vortex(const Vortex& vortex, int k, std::int64_t n) {
  if (k < 1 || n < 1) throw InvalidInput("vortex split needs k, n >= 1");
  const std::size_t b = vortex.bags.size();
  if (b == 0) throw InvalidInput("vortex without bags");
  for (const auto& bag : vortex.bags) {
    if (static_cast<int>(bag.size()) > k + 1) throw InvalidInput("vortex bag exceeds width k");
  }
  const std::int64_t kn = static_cast<std::int64_t>(k) * n;
  VortexSplit split;
  split.a.push_back(0);
  std::size_t start = 0;
  while (true) {
    std::set<Vertex> block;
    bool placed = false;
    for (std::size_t m = start + 1; m + 1 < b; ++m) {
      block.insert(vortex.bags[m].begin(), vortex.bags[m].end());
      // Vertices of the block that cannot reach B_start or B_{m+1}.
      std::int64_t finished = 0;
      for (Vertex v : block) {
        if (!sorted_contains(vortex.bags[start], v) && !sorted_contains(vortex.bags[m + 1], v)) ++finished;
      }
      if (finished * finished >= kn) {
        start = m + 1;
        split.a.push_back(static_cast<int>(start));
        placed = true;
        break;
      }
    }
    if (!placed) break;
  }
  std::vector<Vertex> z;
  for (int idx : split.a) z.insert(z.end(), vortex.bags[static_cast<std::size_t>(idx)].begin(),
                                   vortex.bags[static_cast<std::size_t>(idx)].end());
  split.z = sorted_unique(std::move(z));
  for (std::size_t j = 0; j < split.a.size(); ++j) {
    const std::size_t lo = static_cast<std::size_t>(split.a[j]) + 1;
    const std::size_t hi = j + 1 < split.a.size() ? static_cast<std::size_t>(split.a[j + 1]) : b;
    std::vector<Vertex> y;
    for (std::size_t m = lo; m < hi; ++m)
      for (Vertex v : vortex.bags[m])
        if (!sorted_contains(split.z, v)) y.push_back(v);
    split.y.push_back(sorted_unique(std::move(y)));
  }
  return split;
}

ValidationReport check_vortex_split(const Vortex& vortex, const VortexSplit& split, int k, std::int64_t n) {
  ValidationReport report;
  const std::size_t b = vortex.bags.size();
  const std::int64_t kn = static_cast<std::int64_t>(k) * n;
  if (split.a.empty() || split.a.front() != 0) report.add("split.start", "a_1 must be the first bag");
  for (std::size_t j = 0; j < split.a.size(); ++j) {
    if (split.a[j] < 0 || static_cast<std::size_t>(split.a[j]) >= b || (j > 0 && split.a[j] <= split.a[j - 1])) {
      report.add("split.indices", "index " + str(static_cast<std::int64_t>(j)));
      return report;
    }
  }
  if (split.y.size() != split.a.size()) {
    report.add("split.blocks", "one block per split index required");
    return report;
  }
  // Disjoint cover of the vortex by Z and the blocks.
  std::map<Vertex, int> seen;
  for (Vertex v : split.z) ++seen[v];
  for (const auto& y : split.y)
    for (Vertex v : y) ++seen[v];
  const std::vector<Vertex> all = vortex.vertices();
  for (Vertex v : all)
    if (seen[v] != 1) report.add("split.cover", "vertex " + str(v));
  if (seen.size() != all.size()) report.add("split.cover", "sets contain vertices outside the vortex");

  std::vector<Vertex> expected_z;
  for (int idx : split.a) {
    const auto& bag = vortex.bags[static_cast<std::size_t>(idx)];
    expected_z.insert(expected_z.end(), bag.begin(), bag.end());
  }
  if (sorted_unique(expected_z) != split.z) report.add("split.z", "Z differs from the union of split bags");

  const std::size_t q = split.a.size();
  for (std::size_t j = 0; j < q; ++j) {
    const auto size = static_cast<std::int64_t>(split.y[j].size());
    if (j + 1 < q && !geq_sqrt(size, kn)) {
      report.add("split.block_lower", "|Y_" + str(static_cast<std::int64_t>(j + 1)) + "| = " + str(size) + " < sqrt(kn)");
    }
    if (!leq_plus_sqrt(size, k, kn)) {
      report.add("split.block_upper", "|Y_" + str(static_cast<std::int64_t>(j + 1)) + "| = " + str(size) + " > sqrt(kn)+k");
    }
  }
  if (!leq_plus_sqrt(static_cast<std::int64_t>(split.z.size()), k, kn)) {
    report.add("split.z_bound", "|Z| = " + str(static_cast<std::int64_t>(split.z.size())) + " > sqrt(kn)+k");
  }
  for (std::size_t m = 0; m < b; ++m) {
    // Enclosing block: last split index <= m.
    const std::size_t j = static_cast<std::size_t>(
        std::upper_bound(split.a.begin(), split.a.end(), static_cast<int>(m)) - split.a.begin() - 1);
    for (Vertex v : vortex.bags[m]) {
      if (!sorted_contains(split.z, v) && !sorted_contains(split.y[j], v)) {
        report.add("split.bag_containment", "bag " + str(static_cast<std::int64_t>(m)) + " vertex " + str(v));
      }
    }
  }
  return report;
}

AugmentedSurfaceGraph augment(const AlmostEmbedding& ae, const std::vector<VortexSplit>& splits) {
  const std::size_t n = ae.graph.vertex_count();
  const std::size_t s = ae.vortices.size();
  if (splits.size() != s) throw InvalidInput("one split per vortex required");
  const std::vector<Vertex> g0 = ae.g0_vertices();
  if (g0.empty()) throw InvalidInput("embedded part G_0 is empty");

  // Role of boundary vertices: (vortex, block) for path vertices, (vortex, -1) for split points.
  std::vector<std::pair<int, int>> role(n, {-1, -1});
  for (std::size_t i = 0; i < s; ++i) {
    const auto& a = splits[i].a;
    for (std::size_t m = 0; m < ae.vortices[i].boundary.size(); ++m) {
      const auto it = std::upper_bound(a.begin(), a.end(), static_cast<int>(m));
      const int block = static_cast<int>(it - a.begin()) - 1;
      const bool split_point = a[static_cast<std::size_t>(block)] == static_cast<int>(m);
      role[static_cast<std::size_t>(ae.vortices[i].boundary[m])] = {static_cast<int>(i), split_point ? -1 : block};
    }
  }

  // Pre-contraction graph on host ids plus one extra id per z_i.
  GraphBuilder pre(n + s);
  for (const Edge& e : ae.g0.graph.edges()) pre.add_edge(e.u, e.v);
  for (std::size_t i = 0; i < s; ++i) {
    const auto& bd = ae.vortices[i].boundary;
    const auto zi = static_cast<Vertex>(n + i);
    for (std::size_t m = 0; m < bd.size(); ++m) {
      if (m + 1 < bd.size()) pre.add_edge(bd[m], bd[m + 1]);
      pre.add_edge(zi, bd[m]);
    }
  }
  std::vector<char> active(n + s, 0);
  for (Vertex v : g0) active[static_cast<std::size_t>(v)] = 1;
  for (std::size_t i = 0; i < s; ++i) active[n + i] = 1;
  const Graph pre_graph = pre.build();

  // Join components through their lowest-id vertices.
  std::vector<int> comp(n + s, -1);
  std::vector<Vertex> reps;
  std::vector<Edge> joins;
  for (std::size_t v = 0; v < n + s; ++v) {
    if (!active[v] || comp[v] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(static_cast<Vertex>(v));
    std::vector<Vertex> stack{static_cast<Vertex>(v)};
    comp[v] = c;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : pre_graph.neighbors(u)) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = c;
          stack.push_back(w);
        }
      }
    }
  }
  for (std::size_t c = 1; c < reps.size(); ++c) joins.push_back({reps[0], reps[c]});

  // Final ids.
  AugmentedSurfaceGraph out;
  std::vector<Vertex> image(n + s, kNoVertex);
  Vertex next = 0;
  for (Vertex v : g0) {
    if (role[static_cast<std::size_t>(v)].first < 0) {
      image[static_cast<std::size_t>(v)] = next++;
      out.provenance.push_back({v});
    }
  }
  out.z.assign(s, kNoVertex);
  out.y.assign(s, {});
  for (std::size_t i = 0; i < s; ++i) {
    out.z[i] = next++;
    image[n + i] = out.z[i];
    out.provenance.push_back(splits[i].z);
    const auto& a = splits[i].a;
    const std::size_t b = ae.vortices[i].boundary.size();
    out.y[i].assign(a.size(), kNoVertex);
    for (std::size_t j = 0; j < a.size(); ++j) {
      const std::size_t hi = j + 1 < a.size() ? static_cast<std::size_t>(a[j + 1]) : b;
      if (static_cast<std::size_t>(a[j]) + 1 >= hi) continue;
      out.y[i][j] = next++;
      out.provenance.push_back(splits[i].y[j]);
    }
    for (std::size_t m = 0; m < b; ++m) {
      const Vertex x = ae.vortices[i].boundary[m];
      const auto [vi, block] = role[static_cast<std::size_t>(x)];
      image[static_cast<std::size_t>(x)] = block < 0 ? out.z[i] : out.y[i][static_cast<std::size_t>(block)];
    }
  }
  out.root = next++;
  out.provenance.emplace_back();

  GraphBuilder builder(static_cast<std::size_t>(next));
  for (const Edge& e : pre_graph.edges()) {
    const Vertex u = image[static_cast<std::size_t>(e.u)];
    const Vertex v = image[static_cast<std::size_t>(e.v)];
    if (u != v) builder.add_edge(u, v);
  }
  for (const Edge& e : joins) {
    const Vertex u = image[static_cast<std::size_t>(e.u)];
    const Vertex v = image[static_cast<std::size_t>(e.v)];
    builder.add_edge(u, v);
    out.connecting_edges.push_back({std::min(u, v), std::max(u, v)});
  }
  if (s == 0) {
    builder.add_edge(out.root, 0);
  } else {
    for (Vertex zi : out.z) builder.add_edge(out.root, zi);
  }
  out.graph = builder.build();
  out.special.assign(static_cast<std::size_t>(next), 0);
  for (std::size_t i = 0; i < s; ++i) {
    out.special[static_cast<std::size_t>(out.z[i])] = 1;
    for (Vertex y : out.y[i])
      if (y != kNoVertex) out.special[static_cast<std::size_t>(y)] = 1;
  }
  return out;
}

int choose_slice_offset(const Layering& layering, int d) {
  if (d < 4) throw InvalidInput("slice period d must be at least 4");
  int best = 3;
  std::size_t best_size = 0;
  for (int ell = 3; ell <= d - 1; ++ell) {
    std::size_t size = 0;
    for (std::size_t i = static_cast<std::size_t>(ell); i < layering.layers.size(); i += static_cast<std::size_t>(d)) {
      size += layering.layers[i].size();
    }
    if (ell == 3 || size < best_size) {
      best = ell;
      best_size = size;
    }
  }
  return best;
}

SlicedPartition slice_and_partition(const AugmentedSurfaceGraph& asg, const TripodPartitionResult& base,
                                    const Layering& layering, int ell, int d) {
  const std::size_t n = asg.graph.vertex_count();
  if (base.partition.part_of.size() != n || layering.layer_of.size() != n) {
    throw InvalidInput("base partition and layering must cover G_0'");
  }
  if (d < 4 || ell < 3 || ell >= d) throw InvalidInput("slice parameters out of range");
  SlicedPartition out;
  std::vector<int> band(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    const int layer = layering.layer_of[v];
    if (layer < ell) {
      band[v] = 0;
    } else if ((layer - ell) % d == 0) {
      out.removed.push_back(static_cast<Vertex>(v));
    } else {
      band[v] = (layer - ell) / d + 1;
    }
  }
  std::map<std::pair<int, PartId>, PartId> ids;
  for (std::size_t v = 0; v < n; ++v)
    if (band[v] >= 0) ids.try_emplace({band[v], base.partition.part_of[v]}, 0);
  PartId next = 0;
  for (auto& [key, id] : ids) {
    id = next++;
    out.band_of_part.push_back(key.first);
    out.source_part.push_back(key.second);
  }
  out.partition.part_of.assign(n, kNoPart);
  out.partition.part_count = next;
  for (std::size_t v = 0; v < n; ++v) {
    if (band[v] >= 0) out.partition.part_of[v] = ids.at({band[v], base.partition.part_of[v]});
  }

  GraphBuilder h(static_cast<std::size_t>(next));
  for (const auto& [key, id] : ids) {
    for (Vertex other : base.h.neighbors(key.second)) {
      auto it = ids.find({key.first, other});
      if (it != ids.end()) h.add_edge(id, it->second);
    }
  }
  out.h = h.build();

  // One copy of the base decomposition per non-empty band.
  std::map<int, std::vector<std::pair<PartId, PartId>>> by_band;  // band -> (source, new)
  for (const auto& [key, id] : ids) by_band[key.first].emplace_back(key.second, id);
  const std::size_t base_nodes = base.h_td.node_count();
  for (const auto& [b, members] : by_band) {
    std::map<PartId, PartId> local(members.begin(), members.end());
    const auto offset = static_cast<NodeId>(out.h_td.bags.size());
    for (std::size_t x = 0; x < base_nodes; ++x) {
      std::vector<Vertex> bag;
      for (Vertex part : base.h_td.bags[x]) {
        auto it = local.find(part);
        if (it != local.end()) bag.push_back(it->second);
      }
      std::sort(bag.begin(), bag.end());
      out.h_td.bags.push_back(std::move(bag));
      const Vertex p = base.h_td.tree.parent[x];
      if (p != kNoVertex) {
        out.h_td.tree.parent.push_back(p + offset);
      } else {
        out.h_td.tree.parent.push_back(offset == 0 ? kNoVertex : base.h_td.tree.root);
      }
    }
  }
  out.h_td.tree.root = base.h_td.tree.root;
  if (out.h_td.bags.empty()) out.h_td = TreeDecomposition::single_bag({});
  return out;
}

ExpandedPartition expand_specials(const SlicedPartition& sliced, const AugmentedSurfaceGraph& asg,
                                  std::size_t host_vertex_count) {
  std::vector<PartId> host(host_vertex_count, kNoPart);
  const std::size_t n = asg.graph.vertex_count();
  for (std::size_t v = 0; v < n; ++v) {
    const PartId p = sliced.partition.part_of[v];
    const bool special = asg.special[v] || static_cast<Vertex>(v) == asg.root;
    if (special && (p == kNoPart || sliced.band_of_part[static_cast<std::size_t>(p)] != 0)) {
      throw InvariantViolation("special vertex " + std::to_string(v) + " outside the first band");
    }
    if (p == kNoPart || static_cast<Vertex>(v) == asg.root) continue;
    for (Vertex u : asg.provenance[v]) {
      if (host[static_cast<std::size_t>(u)] != kNoPart) throw InvariantViolation("host vertex expanded twice");
      host[static_cast<std::size_t>(u)] = p;
    }
  }
  std::vector<std::size_t> size(static_cast<std::size_t>(sliced.partition.part_count), 0);
  for (PartId p : host)
    if (p != kNoPart) ++size[static_cast<std::size_t>(p)];
  std::vector<Vertex> keep;
  std::vector<PartId> renumber(size.size(), kNoPart);
  for (std::size_t p = 0; p < size.size(); ++p) {
    if (size[p] == 0) continue;
    renumber[p] = static_cast<PartId>(keep.size());
    keep.push_back(static_cast<Vertex>(p));
  }
  ExpandedPartition out;
  for (PartId& p : host)
    if (p != kNoPart) p = renumber[static_cast<std::size_t>(p)];
  out.partition = Partition{std::move(host), static_cast<PartId>(keep.size())};
  out.h = induced_subgraph(sliced.h, keep);
  out.h_td = restrict_decomposition(sliced.h_td, keep);
  return out;
}

RootedTree augmented_bfs_tree(const AugmentedSurfaceGraph& asg) { return bfs_spanning_tree(asg.graph, asg.root); }

ValidationReport validate_partition_minus(const Graph& g, std::span<const Vertex> s, const Partition& partition,
                                          const Graph& h, const TreeDecomposition& h_td, int claimed_width) {
  ValidationReport report;
  const std::size_t n = g.vertex_count();
  if (partition.part_of.size() != n) {
    report.add("partition.size", "partition does not cover the host graph");
    return report;
  }
  std::vector<char> in_s(n, 0);
  for (Vertex v : s) {
    if (!g.has_vertex(v)) {
      report.add("separator.range", std::to_string(v));
      return report;
    }
    in_s[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Vertex> keep;
  for (std::size_t v = 0; v < n; ++v) {
    const PartId p = partition.part_of[v];
    if (in_s[v] && p != kNoPart) report.add("separator.assignment", "separator vertex " + std::to_string(v) + " has a part");
    if (!in_s[v] && p == kNoPart) report.add("partition.assignment", "vertex " + std::to_string(v) + " has no part");
    if (!in_s[v]) keep.push_back(static_cast<Vertex>(v));
  }
  if (!report.valid) return report;
  HPartitionCertificate cert;
  cert.partition.part_count = static_cast<PartId>(h.vertex_count());
  for (Vertex v : keep) cert.partition.part_of.push_back(partition.part_of[static_cast<std::size_t>(v)]);
  cert.h = h;
  cert.h_td = h_td;
  cert.claimed_width = claimed_width;
  report.merge(validate_h_partition(induced_subgraph(g, keep), cert));
  return report;
}

AlmostEmbeddableResult almost_embeddable_partition(const AlmostEmbedding& ae, int d,
                                                   const std::optional<HPartitionCertificate>& external) {
  const ValidationReport input = validate_almost_embedding(ae);
  if (!input.valid) {
    throw InvalidInput("invalid almost-embedding: " + input.violations.front().rule + " " + input.violations.front().witness);
  }
  if (d < 4) throw InvalidInput("slice period d must be at least 4");
  const AlmostEmbeddingParams& prm = ae.params;
  const auto n = static_cast<std::int64_t>(ae.graph.vertex_count());
  const int k = prm.k;
  const std::size_t s = ae.vortices.size();

  AlmostEmbeddableResult result;
  result.stats.n = n;
  result.stats.k = k;
  result.stats.d = d;

  std::vector<VortexSplit> splits;
  for (const Vortex& vx : ae.vortices) {
    splits.push_back(split_vortex(vx, k, n));
    VortexStats vs;
    vs.q = static_cast<int>(splits.back().a.size());
    vs.z_size = splits.back().z.size();
    for (const auto& y : splits.back().y) vs.block_sizes.push_back(y.size());
    result.stats.vortices.push_back(std::move(vs));
  }
  AugmentedSurfaceGraph asg = augment(ae, splits);
  const RootedTree tree = augmented_bfs_tree(asg);
  const Layering layering = bfs_layering(asg.graph, asg.root);
  for (std::size_t i = 0; i < s; ++i) {
    if (layering.layer_of[static_cast<std::size_t>(asg.z[i])] != 1) throw InvariantViolation("z vertex not in layer 1");
    for (Vertex y : asg.y[i]) {
      if (y != kNoVertex && layering.layer_of[static_cast<std::size_t>(y)] > 2) throw InvariantViolation("y vertex below layer 2");
    }
  }

  TripodPartitionResult base;
  if (prm.g == 0 && s <= 1) {
    PlanarEmbedding embedding;
    try {
      embedding = embed_planar(asg.graph);
    } catch (const InvalidInput&) {
      throw InvalidInput("augmented surface graph is not planar; vortex boundaries must follow a face of G_0");
    }
    base = planar_partition(embedding, tree);
  } else {
    if (!external) {
      throw RequiresExternalPartition("g >= 1 or more than one vortex: supply a certified partition of G_0'", std::move(asg));
    }
    HPartitionCertificate cert = *external;
    cert.tree = tree;
    cert.vertical_path_limit = std::max(2 * prm.g + 4 * prm.p, 3);
    cert.apex_part.reset();
    const ValidationReport report = validate_h_partition(asg.graph, cert);
    if (!report.valid) {
      throw InvalidInput("external partition rejected: " + report.violations.front().rule + " " + report.violations.front().witness);
    }
    if (cert.vertical_paths.empty()) throw InvalidInput("external partition lacks vertical paths");
    if (cert.h_td.width() > 3) throw InvalidInput("external partition decomposition wider than 3");
    base.partition = cert.partition;
    base.h = cert.h;
    base.h_td = cert.h_td;
    base.path_cover = cert.vertical_paths;
    base.tree = tree;
  }

  const int ell = choose_slice_offset(layering, d);
  result.stats.ell = ell;
  const SlicedPartition sliced = slice_and_partition(asg, base, layering, ell, d);
  ExpandedPartition expanded = expand_specials(sliced, asg, ae.graph.vertex_count());

  std::vector<Vertex> s_set(ae.apex.begin(), ae.apex.end());
  for (Vertex v : sliced.removed) {
    if (asg.special[static_cast<std::size_t>(v)] || v == asg.root) throw InvariantViolation("special vertex in the separator");
    s_set.insert(s_set.end(), asg.provenance[static_cast<std::size_t>(v)].begin(),
                 asg.provenance[static_cast<std::size_t>(v)].end());
  }
  result.s = sorted_unique(std::move(s_set));
  result.partition = std::move(expanded.partition);
  result.h = std::move(expanded.h);
  result.h_td = std::move(expanded.h_td);
  for (Vertex v : result.s) {
    if (result.partition.part_of[static_cast<std::size_t>(v)] != kNoPart) throw InvariantViolation("separator vertex kept a part");
  }
  const int width = static_cast<int>(result.partition.width());
  result.stats.width = width;
  result.stats.s_size = result.s.size();

  const ValidationReport check = validate_partition_minus(ae.graph, result.s, result.partition, result.h, result.h_td, width);
  if (!check.valid) {
    throw InvariantViolation("almost-embeddable partition failed validation (" + check.violations.front().rule + " " +
                             check.violations.front().witness +
                             "); a boundary vertex inside a block that also lies in a split bag is not supported");
  }
  if (result.h_td.width() > 3) throw InvariantViolation("quotient decomposition wider than 3");
  const auto size_s = static_cast<std::int64_t>(result.s.size());
  if (size_s * (d - 3) > n + static_cast<std::int64_t>(prm.a) * (d - 3)) {
    throw InvariantViolation("|S| exceeds n/(d-3) + a");
  }
  const std::int64_t c = 2 * prm.g + 4 * prm.p + 3;
  result.stats.width_bound = c * (d + 2 * k) + isqrt(4 * c * c * k * n);
  if (width > result.stats.width_bound) throw InvariantViolation("part width exceeds (2g+4p+3)(2sqrt(kn)+d+2k)");
  for (const Vortex& vx : ae.vortices) {
    for (const auto& bag : vx.bags) {
      std::set<PartId> parts;
      for (Vertex v : bag)
        if (result.partition.part_of[static_cast<std::size_t>(v)] != kNoPart)
          parts.insert(result.partition.part_of[static_cast<std::size_t>(v)]);
      if (parts.size() > 2) throw InvariantViolation("vortex bag meets more than two parts");
    }
  }
  return result;
}

}  // namespace blowup
