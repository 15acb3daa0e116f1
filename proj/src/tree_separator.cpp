#include "blowup/tree_separator.hpp"

#include <algorithm>
#include <string>

#include "blowup/error.hpp"

namespace blowup {

WeightedTree::WeightedTree(Graph tree, std::vector<Rational> weights)
    : tree_(std::move(tree)), weights_(std::move(weights)) {
  if (weights_.size() != tree_.vertex_count()) throw InvalidInput("one weight per tree vertex required");
  if (tree_.vertex_count() == 0) throw InvalidInput("weighted tree must have a vertex");
  if (tree_.edge_count() + 1 != tree_.vertex_count() || !is_connected(tree_)) {
    throw InvalidInput("weighted tree graph is not a tree");
  }
  for (const Rational& w : weights_) {
    if (w < 0) throw InvalidInput("tree weights must be non-negative");
    total_ += w;
  }
}

namespace {

// Rooted view of the alive part of the tree.
struct RootedAlive {
  std::vector<Vertex> parent;
  std::vector<int> depth;
  std::vector<Rational> subtree;
  std::vector<Vertex> order;  // preorder
};

RootedAlive root_alive(const WeightedTree& wt, const std::vector<char>& alive, Vertex root) {
  const Graph& t = wt.tree();
  RootedAlive r;
  r.parent.assign(t.vertex_count(), kNoVertex);
  r.depth.assign(t.vertex_count(), -1);
  r.subtree.assign(t.vertex_count(), Rational(0));
  std::vector<Vertex> stack{root};
  r.depth[static_cast<std::size_t>(root)] = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    r.order.push_back(v);
    for (Vertex w : t.neighbors(v)) {
      if (!alive[static_cast<std::size_t>(w)] || r.depth[static_cast<std::size_t>(w)] >= 0) continue;
      r.depth[static_cast<std::size_t>(w)] = r.depth[static_cast<std::size_t>(v)] + 1;
      r.parent[static_cast<std::size_t>(w)] = v;
      stack.push_back(w);
    }
  }
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    const std::size_t v = static_cast<std::size_t>(*it);
    r.subtree[v] += wt.weights()[v];
    if (r.parent[v] != kNoVertex) r.subtree[static_cast<std::size_t>(r.parent[v])] += r.subtree[v];
  }
  return r;
}

Vertex single_separator(const WeightedTree& wt, const std::vector<char>& alive, Vertex root, const Rational& budget) {
  const Graph& t = wt.tree();
  const RootedAlive r = root_alive(wt, alive, root);
  const Rational& total = r.subtree[static_cast<std::size_t>(root)];
  const Rational half = budget / 2;
  std::vector<Vertex> sorted = r.order;
  std::sort(sorted.begin(), sorted.end());
  for (Vertex v : sorted) {
    bool sink = true;
    for (Vertex w : t.neighbors(v)) {
      if (!alive[static_cast<std::size_t>(w)]) continue;
      // Weight of the side of T - vw that contains w.
      const Rational w_side = r.parent[static_cast<std::size_t>(w)] == v
                                  ? r.subtree[static_cast<std::size_t>(w)]
                                  : total - r.subtree[static_cast<std::size_t>(v)];
      const Rational v_side = total - w_side;
      if (w_side > half) {
        sink = false;  // oriented v -> w
      } else if (!(v_side > half) && w < v) {
        sink = false;  // unoriented, directed toward the lower id
      }
      if (!sink) break;
    }
    if (sink) return v;
  }
  throw InvariantViolation("no sink in an acyclic orientation");
}

std::vector<Vertex> separate(const WeightedTree& wt, std::vector<char> alive, Vertex root, Rational budget, int q) {
  std::vector<Vertex> z;
  while (true) {
    if (q == 1) {
      z.push_back(single_separator(wt, alive, root, budget));
      return z;
    }
    const Rational threshold = budget / (q + 1);
    const RootedAlive r = root_alive(wt, alive, root);
    std::vector<Rational> f(wt.tree().vertex_count(), Rational(0));
    for (Vertex v : r.order) {
      const Vertex p = r.parent[static_cast<std::size_t>(v)];
      if (p != kNoVertex) f[static_cast<std::size_t>(p)] = std::max(f[static_cast<std::size_t>(p)], r.subtree[static_cast<std::size_t>(v)]);
    }
    if (f[static_cast<std::size_t>(root)] <= threshold) {
      z.push_back(root);
      return z;
    }
    Vertex deepest = kNoVertex;
    for (Vertex v : r.order) {
      if (f[static_cast<std::size_t>(v)] < threshold) continue;
      const int d = r.depth[static_cast<std::size_t>(v)];
      if (deepest == kNoVertex || d > r.depth[static_cast<std::size_t>(deepest)] ||
          (d == r.depth[static_cast<std::size_t>(deepest)] && v < deepest)) {
        deepest = v;
      }
    }
    Vertex cut = kNoVertex;
    for (Vertex w : wt.tree().neighbors(deepest)) {
      if (alive[static_cast<std::size_t>(w)] && r.parent[static_cast<std::size_t>(w)] == deepest &&
          r.subtree[static_cast<std::size_t>(w)] >= threshold) {
        cut = w;  // neighbours are sorted, so this is the lowest id
        break;
      }
    }
    if (cut == kNoVertex) throw InvariantViolation("heavy child missing in tree separator");
    z.push_back(cut);
    // Drop the subtree rooted at `cut`.
    std::vector<Vertex> stack{cut};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      alive[static_cast<std::size_t>(v)] = 0;
      for (Vertex w : wt.tree().neighbors(v)) {
        if (alive[static_cast<std::size_t>(w)] && r.parent[static_cast<std::size_t>(w)] == v) stack.push_back(w);
      }
    }
    budget -= threshold;
    --q;
  }
}

}  // namespace

std::vector<Vertex> tree_separator(const WeightedTree& wt, int q) { return tree_separator(wt, q, wt.total()); }

std::vector<Vertex> tree_separator(const WeightedTree& wt, int q, const Rational& budget) {
  if (q < 1) throw InvalidInput("tree separator needs q >= 1");
  if (budget < wt.total()) throw InvalidInput("weight budget below total tree weight");
  std::vector<char> alive(wt.tree().vertex_count(), 1);
  std::vector<Vertex> z = separate(wt, std::move(alive), 0, budget, q);
  std::sort(z.begin(), z.end());
  return z;
}

std::vector<Rational> component_weights(const WeightedTree& wt, std::span<const Vertex> z) {
  const Graph& t = wt.tree();
  std::vector<char> removed(t.vertex_count(), 0);
  for (Vertex v : z) {
    if (!t.has_vertex(v)) throw InvalidInput("separator vertex out of range");
    removed[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Rational> out;
  std::vector<char> seen(t.vertex_count(), 0);
  for (std::size_t s = 0; s < t.vertex_count(); ++s) {
    if (removed[s] || seen[s]) continue;
    Rational weight = 0;
    std::vector<Vertex> stack{static_cast<Vertex>(s)};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      weight += wt.weights()[static_cast<std::size_t>(v)];
      for (Vertex w : t.neighbors(v)) {
        if (!removed[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    out.push_back(weight);
  }
  return out;
}

bool validate_separator(const WeightedTree& wt, std::span<const Vertex> z, int q) {
  std::vector<Vertex> unique(z.begin(), z.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  if (static_cast<int>(unique.size()) > q || q < 0) return false;
  for (const Rational& w : component_weights(wt, unique)) {
    if (w * (q + 1) > wt.total()) return false;
  }
  return true;
}

}  // namespace blowup
