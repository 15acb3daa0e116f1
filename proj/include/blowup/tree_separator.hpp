#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "blowup/graph.hpp"

namespace blowup {

using Rational = boost::multiprecision::cpp_rational;

/// A tree with non-negative exact vertex weights.
class WeightedTree {
 public:
  /// Throws InvalidInput unless `tree` is a tree and all weights are >= 0.
  WeightedTree(Graph tree, std::vector<Rational> weights);

  const Graph& tree() const { return tree_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& total() const { return total_; }

 private:
  Graph tree_;
  std::vector<Rational> weights_;
  Rational total_;
};

/// At most q vertices whose removal leaves components of weight at most
/// total/(q+1). Follows the inductive construction: q = 1 orients every edge
/// toward the heavy side and picks a sink; larger q peels off a subtree of
/// weight at least total/(q+1) and recurses with q-1. Result is sorted.
std::vector<Vertex> tree_separator(const WeightedTree& wt, int q);

/// Same construction against an explicit weight budget n >= total.
std::vector<Vertex> tree_separator(const WeightedTree& wt, int q, const Rational& budget);

bool validate_separator(const WeightedTree& wt, std::span<const Vertex> z, int q);

/// Weights of the components of T - Z.
std::vector<Rational> component_weights(const WeightedTree& wt, std::span<const Vertex> z);

}  // namespace blowup
