#include "blowup/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <set>
#include <string>

#include "blowup/error.hpp"

namespace blowup {

int TreeDecomposition::width() const {
  std::size_t best = 0;
  for (const auto& bag : bags) best = std::max(best, bag.size());
  return static_cast<int>(best) - 1;
}

namespace {

std::size_t intersection_size(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::vector<Vertex> intersection(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const std::vector<Vertex>& sorted, Vertex v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

}  // namespace

int TreeDecomposition::adhesion() const {
  std::size_t best = 0;
  for (std::size_t x = 0; x < bags.size(); ++x) {
    Vertex p = tree.parent[x];
    if (p != kNoVertex) best = std::max(best, intersection_size(bags[x], bags[static_cast<std::size_t>(p)]));
  }
  return static_cast<int>(best);
}

TreeDecomposition TreeDecomposition::single_bag(std::vector<Vertex> bag) {
  std::sort(bag.begin(), bag.end());
  TreeDecomposition td;
  td.tree = RootedTree{0, {kNoVertex}};
  td.bags.push_back(std::move(bag));
  return td;
}

void ValidationReport::add(std::string rule, std::string witness) {
  valid = false;
  violations.push_back({std::move(rule), std::move(witness)});
}

void ValidationReport::merge(const ValidationReport& other) {
  for (const auto& v : other.violations) add(v.rule, v.witness);
}

ValidationReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  ValidationReport report;
  if (td.bags.empty()) {
    if (g.vertex_count() > 0) report.add("td.nonempty", "decomposition has no nodes");
    return report;
  }
  if (td.tree.size() != td.bags.size()) {
    report.add("td.tree", "tree size differs from bag count");
    return report;
  }
  try {
    td.tree.validate();
  } catch (const InvalidInput& e) {
    report.add("td.tree", e.what());
    return report;
  }
  std::vector<std::vector<NodeId>> nodes_of(g.vertex_count());
  for (std::size_t x = 0; x < td.bags.size(); ++x) {
    const auto& bag = td.bags[x];
    if (!std::is_sorted(bag.begin(), bag.end()) || std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
      report.add("td.bag_sorted", "node " + std::to_string(x));
    }
    for (Vertex v : bag) {
      if (!g.has_vertex(v)) {
        report.add("td.bag_range", "node " + std::to_string(x) + " vertex " + std::to_string(v));
        continue;
      }
      nodes_of[static_cast<std::size_t>(v)].push_back(static_cast<NodeId>(x));
    }
  }
  if (!report.valid) return report;

  // (a) every edge lies in some bag
  for (const Edge& e : g.edges()) {
    const auto& nu = nodes_of[static_cast<std::size_t>(e.u)];
    const auto& nv = nodes_of[static_cast<std::size_t>(e.v)];
    const auto& shorter = nu.size() <= nv.size() ? nu : nv;
    Vertex other = nu.size() <= nv.size() ? e.v : e.u;
    bool covered = std::any_of(shorter.begin(), shorter.end(),
                               [&](NodeId x) { return contains(td.bags[static_cast<std::size_t>(x)], other); });
    if (!covered) report.add("td.edge_coverage", std::to_string(e.u) + "-" + std::to_string(e.v));
  }
  // (b) nodes containing v induce a non-empty subtree: exactly one of them
  // has a parent that does not contain v.
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& nodes = nodes_of[v];
    if (nodes.empty()) {
      report.add("td.vertex_coverage", std::to_string(v));
      continue;
    }
    int tops = 0;
    for (NodeId x : nodes) {
      Vertex p = td.tree.parent[static_cast<std::size_t>(x)];
      if (p == kNoVertex || !contains(td.bags[static_cast<std::size_t>(p)], static_cast<Vertex>(v))) ++tops;
    }
    if (tops != 1) report.add("td.vertex_connectivity", std::to_string(v));
  }
  report.width = td.width();
  report.adhesion = td.adhesion();
  return report;
}

Graph torso(const Graph& g, const TreeDecomposition& td, NodeId x) {
  if (x < 0 || static_cast<std::size_t>(x) >= td.node_count()) throw InvalidInput("torso: node out of range");
  if (td.tree.size() != td.node_count()) throw InvalidInput("torso: tree size differs from bag count");
  const auto& bag = td.bags[static_cast<std::size_t>(x)];
  for (Vertex v : bag) {
    if (!g.has_vertex(v)) throw InvalidInput("torso: bag vertex out of range");
  }
  GraphBuilder b(induced_subgraph(g, bag));
  auto local = [&](Vertex v) { return static_cast<Vertex>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin()); };
  auto add_clique = [&](const std::vector<Vertex>& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
      for (std::size_t j = i + 1; j < set.size(); ++j) b.add_edge(local(set[i]), local(set[j]));
  };
  Vertex parent = td.tree.parent[static_cast<std::size_t>(x)];
  if (parent != kNoVertex) add_clique(intersection(bag, td.bags[static_cast<std::size_t>(parent)]));
  for (std::size_t y = 0; y < td.node_count(); ++y) {
    if (td.tree.parent[y] == x) add_clique(intersection(bag, td.bags[y]));
  }
  return b.build();
}

std::vector<std::vector<Vertex>> child_adhesion_cliques(const TreeDecomposition& td, NodeId x) {
  if (x < 0 || static_cast<std::size_t>(x) >= td.node_count()) {
    throw InvalidInput("child_adhesion_cliques: node " + std::to_string(x) + " does not exist");
  }
  std::vector<std::vector<Vertex>> out;
  for (std::size_t y = 0; y < td.node_count(); ++y) {
    if (td.tree.parent[y] == x) out.push_back(intersection(td.bags[static_cast<std::size_t>(x)], td.bags[y]));
  }
  return out;
}

TreewidthResult exact_treewidth(const Graph& g, std::size_t limit) {
  const std::size_t n = g.vertex_count();
  if (n > limit) {
    throw SizeLimitExceeded("exact treewidth oracle limited to " + std::to_string(limit) + " vertices, got " +
                            std::to_string(n));
  }
  if (n > 24) throw SizeLimitExceeded("exact treewidth oracle cannot exceed 24 vertices");
  if (n == 0) return {-1, {}};

  using Mask = std::uint32_t;
  std::vector<Mask> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
  }
  // Number of vertices outside S ∪ {v} reachable from v through S.
  auto q_value = [&](Mask s, std::size_t v) {
    Mask reach = Mask{1} << v;
    Mask frontier = reach;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= s & ~reach;
      reach |= next;
      frontier = next;
    }
    Mask boundary = 0;
    for (Mask r = reach; r; r &= r - 1) boundary |= adj[static_cast<std::size_t>(std::countr_zero(r))];
    boundary &= ~reach & ~s;
    return std::popcount(boundary);
  };

  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  constexpr int kUnset = std::numeric_limits<int>::max();
  std::vector<int> tw(std::size_t{1} << n, kUnset);
  std::vector<std::int8_t> last(std::size_t{1} << n, -1);
  tw[0] = std::numeric_limits<int>::min();
  for (Mask s = 1; s <= full && s != 0; ++s) {
    int best = kUnset;
    std::int8_t best_v = -1;
    for (Mask bits = s; bits; bits &= bits - 1) {
      const std::size_t v = static_cast<std::size_t>(std::countr_zero(bits));
      const Mask rest = s & ~(Mask{1} << v);
      const int value = std::max(tw[rest], q_value(rest, v));
      if (value < best) {
        best = value;
        best_v = static_cast<std::int8_t>(v);
      }
    }
    tw[s] = best;
    last[s] = best_v;
    if (s == full) break;
  }
  TreewidthResult result;
  result.treewidth = tw[full];
  for (Mask s = full; s; s &= ~(Mask{1} << last[s])) result.elimination_order.push_back(last[s]);
  std::reverse(result.elimination_order.begin(), result.elimination_order.end());
  return result;
}

int elimination_width(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.vertex_count();
  if (order.size() != n) throw InvalidInput("elimination order must list every vertex once");
  std::vector<std::set<Vertex>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].insert(e.v);
    adj[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  std::vector<char> done(n, 0);
  int width = n == 0 ? -1 : 0;
  for (Vertex v : order) {
    if (!g.has_vertex(v) || done[static_cast<std::size_t>(v)]) throw InvalidInput("invalid elimination order");
    const auto& nb = adj[static_cast<std::size_t>(v)];
    width = std::max(width, static_cast<int>(nb.size()));
    for (Vertex a : nb) {
      adj[static_cast<std::size_t>(a)].erase(v);
      for (Vertex b : nb)
        if (a != b) adj[static_cast<std::size_t>(a)].insert(b);
    }
    done[static_cast<std::size_t>(v)] = 1;
    adj[static_cast<std::size_t>(v)].clear();
  }
  return width;
}

TreeDecomposition decomposition_from_elimination(const Graph& g, std::span<const Vertex> order) {
  const std::size_t n = g.vertex_count();
  if (order.size() != n) throw InvalidInput("elimination order must list every vertex once");
  if (n == 0) return TreeDecomposition::single_bag({});
  std::vector<std::size_t> position(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.has_vertex(order[i]) || position[static_cast<std::size_t>(order[i])] != n) {
      throw InvalidInput("invalid elimination order");
    }
    position[static_cast<std::size_t>(order[i])] = i;
  }
  std::vector<std::set<Vertex>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].insert(e.v);
    adj[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  TreeDecomposition td;
  td.bags.resize(n);
  td.tree.parent.assign(n, kNoVertex);
  td.tree.root = static_cast<Vertex>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    const auto& nb = adj[static_cast<std::size_t>(v)];
    std::vector<Vertex> bag(nb.begin(), nb.end());
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags[i] = std::move(bag);
    std::size_t parent_pos = n;
    for (Vertex a : nb) parent_pos = std::min(parent_pos, position[static_cast<std::size_t>(a)]);
    if (i + 1 < n) td.tree.parent[i] = static_cast<Vertex>(parent_pos == n ? n - 1 : parent_pos);
    for (Vertex a : nb) {
      adj[static_cast<std::size_t>(a)].erase(v);
      for (Vertex b : nb)
        if (a != b) adj[static_cast<std::size_t>(a)].insert(b);
    }
  }
  return td;
}

bool check_blowup_tw_bound(const Graph& h, int m, std::size_t limit) {
  if (m < 1) throw InvalidInput("blowup factor must be at least 1");
  if (h.vertex_count() * static_cast<std::size_t>(m) > limit) {
    throw SizeLimitExceeded("blowup exceeds oracle limit");
  }
  const int tw_h = exact_treewidth(h, limit).treewidth;
  const int tw_blowup = exact_treewidth(complete_blowup(h, m), limit).treewidth;
  return tw_blowup <= (tw_h + 1) * m - 1;
}

TreeDecomposition remove_vertices(const TreeDecomposition& td, std::span<const Vertex> removed) {
  std::vector<Vertex> drop(removed.begin(), removed.end());
  std::sort(drop.begin(), drop.end());
  TreeDecomposition out = td;
  for (auto& bag : out.bags) {
    std::erase_if(bag, [&](Vertex v) { return std::binary_search(drop.begin(), drop.end(), v); });
  }
  return out;
}

}  // namespace blowup
