#include "blowup/assembly.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "blowup/error.hpp"
#include "blowup/exact.hpp"
#include "blowup/tree_separator.hpp"

namespace blowup {

namespace {

std::string node_tag(NodeId x) { return "node " + std::to_string(x) + ": "; }

bool contains(const std::vector<Vertex>& sorted, Vertex v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

std::vector<Vertex> set_difference(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// (v - a)·√n <= c, i.e. v <= c/√n + a.
bool within_scaled_sqrt(std::int64_t v, std::int64_t a, std::int64_t c, std::int64_t n) {
  if (v <= a) return true;
  const std::int64_t over = v - a;
  return over * over * n <= c * c;
}

// v <= m·√n.
bool within_multiple_sqrt(std::int64_t v, std::int64_t m, std::int64_t n) { return v <= 0 || v * v <= m * m * n; }

}  // namespace

SeparatorSplit split_by_separator(const Graph& g, const TreeDecomposition& td) {
  const ValidationReport report = validate_tree_decomposition(g, td);
  if (!report.valid) {
    throw InvalidInput("invalid tree-decomposition: " + report.violations.front().rule + " " +
                       report.violations.front().witness);
  }
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  if (n == 0) throw InvalidInput("graph without vertices");
  const std::size_t nodes = td.node_count();
  SeparatorSplit out;
  out.adhesion.resize(nodes);
  out.private_bag.resize(nodes);
  GraphBuilder tree(nodes);
  std::vector<Rational> weights(nodes);
  for (std::size_t x = 0; x < nodes; ++x) {
    const Vertex p = td.tree.parent[x];
    if (p != kNoVertex) {
      std::set_intersection(td.bags[x].begin(), td.bags[x].end(), td.bags[static_cast<std::size_t>(p)].begin(),
                            td.bags[static_cast<std::size_t>(p)].end(), std::back_inserter(out.adhesion[x]));
      tree.add_edge(static_cast<Vertex>(x), p);
    }
    out.private_bag[x] = set_difference(td.bags[x], out.adhesion[x]);
    weights[x] = Rational(static_cast<std::int64_t>(out.private_bag[x].size()));
  }
  out.q = static_cast<int>(std::max<std::int64_t>(1, ceil_sqrt(n) - 1));
  const WeightedTree wt(tree.build(), std::move(weights));
  out.z_prime = tree_separator(wt, out.q, Rational(n));
  out.z = out.z_prime;
  out.z.push_back(td.tree.root);
  std::sort(out.z.begin(), out.z.end());
  out.z.erase(std::unique(out.z.begin(), out.z.end()), out.z.end());

  for (NodeId z : out.z) out.q_set.insert(out.q_set.end(), out.adhesion[static_cast<std::size_t>(z)].begin(),
                                          out.adhesion[static_cast<std::size_t>(z)].end());
  std::sort(out.q_set.begin(), out.q_set.end());
  out.q_set.erase(std::unique(out.q_set.begin(), out.q_set.end()), out.q_set.end());

  // Owner of each node: nearest ancestor-or-self in Z.
  out.piece_of_node.assign(nodes, -1);
  const auto children = td.tree.children();
  std::vector<NodeId> stack{td.tree.root};
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    const Vertex p = td.tree.parent[static_cast<std::size_t>(x)];
    const bool in_z = std::binary_search(out.z.begin(), out.z.end(), x);
    out.piece_of_node[static_cast<std::size_t>(x)] = in_z ? x : out.piece_of_node[static_cast<std::size_t>(p)];
    for (Vertex c : children[static_cast<std::size_t>(x)]) stack.push_back(c);
  }
  for (NodeId z : out.z) out.piece_vertices[z];
  for (std::size_t x = 0; x < nodes; ++x) {
    auto& vs = out.piece_vertices[out.piece_of_node[x]];
    for (Vertex v : out.private_bag[x])
      if (!contains(out.q_set, v)) vs.push_back(v);
  }
  for (auto& [z, vs] : out.piece_vertices) std::sort(vs.begin(), vs.end());
  return out;
}

PieceResult piece_partition(const Graph& g, const TreeDecomposition& td, const SeparatorSplit& split, NodeId z,
                            const TorsoResult& torso, int w) {
  const std::vector<Vertex>& bag = td.bags[static_cast<std::size_t>(z)];
  if (torso.partition.part_of.size() != bag.size()) throw InvalidInput(node_tag(z) + "torso partition size differs from the bag");
  PieceResult out;
  out.z = z;
  out.vertices = split.piece_vertices.at(z);
  const std::size_t n = g.vertex_count();

  for (Vertex i : torso.s) {
    const Vertex v = bag[static_cast<std::size_t>(i)];
    if (contains(out.vertices, v)) out.s.push_back(v);
  }
  std::sort(out.s.begin(), out.s.end());

  // Torso parts restricted to B_z ∩ V(G_z) minus S_z; empty parts dropped.
  std::vector<PartId> local(n, kNoPart);
  std::vector<char> used(static_cast<std::size_t>(torso.partition.part_count), 0);
  for (std::size_t i = 0; i < bag.size(); ++i) {
    const Vertex v = bag[i];
    if (!contains(out.vertices, v) || contains(out.s, v)) continue;
    const PartId p = torso.partition.part_of[i];
    if (p == kNoPart) throw InvalidInput(node_tag(z) + "torso vertex outside S without a part");
    local[static_cast<std::size_t>(v)] = p;
    used[static_cast<std::size_t>(p)] = 1;
  }
  std::vector<Vertex> keep;
  std::vector<PartId> renumber(used.size(), kNoPart);
  for (std::size_t p = 0; p < used.size(); ++p) {
    if (!used[p]) continue;
    renumber[p] = static_cast<PartId>(keep.size());
    keep.push_back(static_cast<Vertex>(p));
  }
  out.partition.part_of.assign(n, kNoPart);
  for (std::size_t v = 0; v < n; ++v)
    if (local[v] != kNoPart) out.partition.part_of[v] = renumber[static_cast<std::size_t>(local[v])];
  const Graph jz = induced_subgraph(torso.h, keep);
  TreeDecomposition jtd = restrict_decomposition(torso.h_td, keep);
  if (jtd.node_count() == 0) jtd = TreeDecomposition::single_bag({});

  // Components of G_z below B_z become parts hanging off their neighbourhood.
  std::vector<char> below(n, 0);
  for (Vertex v : out.vertices)
    if (!contains(bag, v)) below[static_cast<std::size_t>(v)] = 1;
  auto in_alpha = [&](Vertex u) { return contains(split.q_set, u) || contains(out.s, u); };
  PartId next = static_cast<PartId>(keep.size());
  GraphBuilder h(jz);
  std::vector<std::pair<PartId, std::vector<Vertex>>> leaves;
  for (Vertex start : out.vertices) {
    if (!below[static_cast<std::size_t>(start)] || out.partition.part_of[static_cast<std::size_t>(start)] != kNoPart) continue;
    const PartId c = next++;
    std::set<Vertex> nbr_parts;
    std::vector<Vertex> stack{start};
    out.partition.part_of[static_cast<std::size_t>(start)] = c;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (below[static_cast<std::size_t>(u)]) {
          if (out.partition.part_of[static_cast<std::size_t>(u)] == kNoPart) {
            out.partition.part_of[static_cast<std::size_t>(u)] = c;
            stack.push_back(u);
          }
        } else if (in_alpha(u)) {
          continue;
        } else if (contains(out.vertices, u)) {
          nbr_parts.insert(out.partition.part_of[static_cast<std::size_t>(u)]);
        } else {
          throw InvariantViolation(node_tag(z) + "edge " + std::to_string(v) + "-" + std::to_string(u) + " leaves the piece");
        }
      }
    }
    const std::vector<Vertex> nj(nbr_parts.begin(), nbr_parts.end());
    if (static_cast<int>(nj.size()) > w) throw InvariantViolation(node_tag(z) + "component meets more than w parts");
    h.add_vertex();
    for (Vertex p : nj) h.add_edge(c, p);
    leaves.emplace_back(c, nj);
    ++out.component_parts;
  }
  out.partition.part_count = next;
  out.h = h.build();

  out.h_td = jtd;
  for (const auto& [c, nj] : leaves) {
    NodeId host = jtd.tree.root;
    bool found = nj.empty();
    for (std::size_t x = 0; x < jtd.node_count() && !found; ++x) {
      if (std::includes(jtd.bags[x].begin(), jtd.bags[x].end(), nj.begin(), nj.end())) {
        host = static_cast<NodeId>(x);
        found = true;
      }
    }
    if (!found) throw InvariantViolation(node_tag(z) + "neighbourhood of a component lies in no bag of J");
    std::vector<Vertex> leaf = nj;
    leaf.push_back(c);
    std::sort(leaf.begin(), leaf.end());
    out.h_td.bags.push_back(std::move(leaf));
    out.h_td.tree.parent.push_back(host);
  }
  return out;
}

TorsoResult torso_result(const StructuredInput& si, NodeId x, int d) {
  auto it = si.torsos.find(x);
  if (it == si.torsos.end()) throw InvalidInput(node_tag(x) + "no torso data");
  if (const auto* pre = std::get_if<TorsoResult>(&it->second)) return *pre;
  const AlmostEmbedding& ae = std::get<AlmostEmbedding>(it->second);
  if (!(ae.graph == torso(si.graph, si.td, x))) throw InvalidInput(node_tag(x) + "almost-embedding graph is not the torso");
  AlmostEmbeddableResult r = almost_embeddable_partition(ae, d);
  return TorsoResult{std::move(r.s), std::move(r.partition), std::move(r.h), std::move(r.h_td), std::move(r.stats)};
}

void check_torso_hypotheses(const StructuredInput& si, NodeId x, const TorsoResult& r) {
  const Graph tor = torso(si.graph, si.td, x);
  const int width = static_cast<int>(r.partition.width());
  const ValidationReport report = validate_partition_minus(tor, r.s, r.partition, r.h, r.h_td, width);
  if (!report.valid) {
    throw InvalidInput(node_tag(x) + "torso partition invalid: " + report.violations.front().rule + " " +
                       report.violations.front().witness);
  }
  const auto n = static_cast<std::int64_t>(si.graph.vertex_count());
  const auto bag = static_cast<std::int64_t>(si.td.bags[static_cast<std::size_t>(x)].size());
  if (!within_scaled_sqrt(static_cast<std::int64_t>(r.s.size()), si.params.a, bag, n)) {
    throw InvalidInput(node_tag(x) + "|S_x| exceeds |B_x|/sqrt(n) + a");
  }
  if (width > si.params.b) throw InvalidInput(node_tag(x) + "torso partition wider than b");
  if (r.h_td.width() > si.params.w) throw InvalidInput(node_tag(x) + "torso quotient decomposition wider than w");
  const auto& bagv = si.td.bags[static_cast<std::size_t>(x)];
  for (const auto& clique : child_adhesion_cliques(si.td, x)) {
    std::set<PartId> parts;
    for (Vertex v : clique) {
      const auto i = static_cast<std::size_t>(std::lower_bound(bagv.begin(), bagv.end(), v) - bagv.begin());
      if (r.partition.part_of[i] != kNoPart) parts.insert(r.partition.part_of[i]);
    }
    if (static_cast<int>(parts.size()) > si.params.w) {
      throw InvalidInput(node_tag(x) + "child-adhesion clique meets more than w parts");
    }
  }
}

AssemblyCertificate assemble(const StructuredInput& si, int d) {
  const auto n = static_cast<std::int64_t>(si.graph.vertex_count());
  const AssemblyParams& prm = si.params;
  if (prm.a < 0 || prm.k < 0 || prm.w < 0 || prm.b < 0) throw InvalidInput("assembly parameters must be non-negative");
  AssemblyCertificate out;
  out.split = split_by_separator(si.graph, si.td);
  if (si.td.adhesion() > prm.k) throw InvalidInput("tree-decomposition adhesion exceeds k");
  const SeparatorSplit& split = out.split;
  const std::int64_t root_n = ceil_sqrt(n);
  AssemblyStats& st = out.stats;
  st.n = n;
  st.q = split.q;
  st.d = d > 0 ? d : static_cast<int>(root_n) + 3;
  st.z_size = split.z.size();
  st.q_size = split.q_set.size();

  for (NodeId z : split.z) {
    const TorsoResult r = torso_result(si, z, st.d);
    check_torso_hypotheses(si, z, r);
    if (r.stats) st.torsos[z] = *r.stats;
    out.pieces.push_back(piece_partition(si.graph, si.td, split, z, r, prm.w));
    st.bag_sum += static_cast<std::int64_t>(si.td.bags[static_cast<std::size_t>(z)].size());
    st.separator_sum += static_cast<std::int64_t>(out.pieces.back().s.size());
  }

  // Disjoint cover V(G) = Q ⊎ V(G_z).
  std::vector<int> cover(static_cast<std::size_t>(n), 0);
  for (Vertex v : split.q_set) ++cover[static_cast<std::size_t>(v)];
  for (const PieceResult& p : out.pieces)
    for (Vertex v : p.vertices) ++cover[static_cast<std::size_t>(v)];
  for (std::size_t v = 0; v < cover.size(); ++v) {
    if (cover[v] != 1) throw InvariantViolation("vertex " + std::to_string(v) + " not covered exactly once by Q and the pieces");
  }

  // α = part 0; piece parts follow in order of z.
  HPartitionCertificate& cert = out.certificate;
  cert.partition.part_of.assign(static_cast<std::size_t>(n), 0);
  std::vector<PartId> offset;
  PartId total = 1;
  for (const PieceResult& p : out.pieces) {
    offset.push_back(total);
    total += p.partition.part_count;
  }
  cert.partition.part_count = total;
  GraphBuilder h(static_cast<std::size_t>(total));
  cert.h_td.tree.root = 0;
  cert.h_td.tree.parent = {kNoVertex};
  cert.h_td.bags = {{0}};
  for (std::size_t i = 0; i < out.pieces.size(); ++i) {
    const PieceResult& p = out.pieces[i];
    const PartId off = offset[i];
    for (std::size_t v = 0; v < p.partition.part_of.size(); ++v) {
      if (p.partition.part_of[v] != kNoPart) cert.partition.part_of[v] = p.partition.part_of[v] + off;
    }
    for (const Edge& e : p.h.edges()) h.add_edge(e.u + off, e.v + off);
    const auto node_off = static_cast<NodeId>(cert.h_td.bags.size());
    for (std::size_t x = 0; x < p.h_td.node_count(); ++x) {
      std::vector<Vertex> bag{0};
      for (Vertex part : p.h_td.bags[x]) bag.push_back(part + off);
      std::sort(bag.begin(), bag.end());
      cert.h_td.bags.push_back(std::move(bag));
      const Vertex parent = p.h_td.tree.parent[x];
      cert.h_td.tree.parent.push_back(parent == kNoVertex ? 0 : parent + node_off);
    }
  }
  for (PartId p = 1; p < total; ++p) h.add_edge(0, p);
  cert.h = h.build();
  cert.apex_part = 0;
  cert.claimed_width = static_cast<int>(cert.partition.width());

  const auto parts = cert.partition.parts();
  st.alpha_size = parts.front().size();
  st.width = cert.claimed_width;
  st.width_bound = std::max<std::int64_t>(prm.b, (prm.a + 2 * prm.k + 1) * root_n);

  const ValidationReport report = validate_h_partition(si.graph, cert);
  if (!report.valid) {
    throw InvariantViolation("assembled certificate invalid: " + report.violations.front().rule + " " +
                             report.violations.front().witness);
  }
  const auto q = static_cast<std::int64_t>(split.q);
  if (static_cast<std::int64_t>(split.z.size()) > q + 1) throw InvariantViolation("|Z| exceeds q + 1");
  if (static_cast<std::int64_t>(split.q_set.size()) > prm.k * (q + 1)) throw InvariantViolation("|Q| exceeds k(q+1)");
  if (st.bag_sum > n + prm.k * q) throw InvariantViolation("sum of |B_z| exceeds n + kq");
  if (!within_multiple_sqrt(st.separator_sum, prm.a + prm.k + 1, n)) throw InvariantViolation("sum of |S_z| exceeds (a+k+1)sqrt(n)");
  if (!within_multiple_sqrt(static_cast<std::int64_t>(st.alpha_size), prm.a + 2 * prm.k + 1, n)) {
    throw InvariantViolation("alpha part exceeds (a+2k+1)sqrt(n)");
  }
  if (st.width > st.width_bound) throw InvariantViolation("width exceeds max{b, (a+2k+1)ceil(sqrt(n))}");
  for (const PieceResult& p : out.pieces) {
    const auto bag = static_cast<std::int64_t>(si.td.bags[static_cast<std::size_t>(p.z)].size());
    if (!within_scaled_sqrt(static_cast<std::int64_t>(p.s.size()), prm.a, bag, n)) {
      throw InvariantViolation(node_tag(p.z) + "|S_z| exceeds |B_z|/sqrt(n) + a");
    }
    if (static_cast<std::int64_t>(p.partition.width()) > std::max(prm.b, root_n)) {
      throw InvariantViolation(node_tag(p.z) + "piece width exceeds max{b, ceil(sqrt(n))}");
    }
  }
  if (cert.h_td.width() > prm.w + 1) throw InvariantViolation("H decomposition wider than w + 1");
  std::vector<Vertex> rest;
  for (PartId p = 1; p < total; ++p) rest.push_back(p);
  if (restrict_decomposition(cert.h_td, rest).width() > prm.w) throw InvariantViolation("H - alpha decomposition wider than w");
  return out;
}

AssemblyParams theorem_params(int k, std::int64_t n) {
  if (k < 1) throw InvalidInput("k must be positive");
  AssemblyParams p;
  p.a = k;
  p.k = 9 * k;
  p.w = 3;
  p.b = (6 * static_cast<std::int64_t>(k) + 3) * 9 * ceil_sqrt(static_cast<std::int64_t>(k) * n);
  return p;
}

AssemblyCertificate theorem_pipeline(const StructuredInput& si, int k, int d) {
  const auto n = static_cast<std::int64_t>(si.graph.vertex_count());
  if (k < 1 || n < k) throw InvalidInput("theorem pipeline needs n >= k >= 1");
  StructuredInput input = si;
  input.params = theorem_params(k, n);
  for (const auto& [x, data] : input.torsos) {
    if (const auto* ae = std::get_if<AlmostEmbedding>(&data)) {
      const AlmostEmbeddingParams& p = ae->params;
      if (p.g > k || p.p > k || p.k > k || p.a > k) throw InvalidInput(node_tag(x) + "torso is not k-almost-embeddable");
    }
  }
  AssemblyCertificate out = assemble(input, d);
  if (out.stats.width > input.params.b) throw InvariantViolation("width exceeds (6k+3)*9*ceil(sqrt(kn))");
  out.stats.width_bound = input.params.b;
  if (out.certificate.h_td.width() > 4) throw InvariantViolation("H decomposition wider than 4");
  return out;
}

StructuredInput single_torso(const AlmostEmbedding& ae) {
  StructuredInput si;
  si.graph = ae.graph;
  std::vector<Vertex> all(ae.graph.vertex_count());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<Vertex>(v);
  si.td = TreeDecomposition::single_bag(std::move(all));
  si.torsos.emplace(0, ae);
  const int k = std::max({ae.params.k, ae.params.g, ae.params.p, ae.params.a, 1});
  si.params = theorem_params(k, static_cast<std::int64_t>(ae.graph.vertex_count()));
  return si;
}

}  // namespace blowup
