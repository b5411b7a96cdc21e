#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "optnet/graph.hpp"
#include "optnet/metric_space.hpp"

namespace testutil {

using optnet::Rat;

// Random metric with entries in [1, 2] (triangle inequality automatic),
// rational with denominator `den`.
inline optnet::FiniteMetricSpace random_metric(std::mt19937_64& rng, int n, int den = 1000) {
  std::uniform_int_distribution<int> d(den, 2 * den);
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m[i][j] = m[j][i] = Rat(d(rng), den);
  return optnet::make_metric_space(m);
}

// Random binary tree topology with n boundary leaves, chosen uniformly from
// the deterministic enumeration.
inline optnet::TreeTopology random_binary_topology(std::mt19937_64& rng, int n) {
  auto all = optnet::enumerate_binary_topologies(n);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

// Random nonnegative weighted binary tree; leaf edges strictly positive so
// boundary points stay distinct.
inline optnet::WeightedTree random_weighted_tree(std::mt19937_64& rng, int n,
                                                 bool allow_zero_interior = true) {
  optnet::WeightedTree tree;
  tree.topology = random_binary_topology(rng, n);
  std::uniform_int_distribution<int> w(1, 50);
  std::uniform_int_distribution<int> z(0, 4);
  for (auto [u, v] : tree.topology.edges) {
    const bool interior = !tree.topology.is_boundary(u) && !tree.topology.is_boundary(v);
    if (interior && allow_zero_interior && z(rng) == 0)
      tree.weights.push_back(Rat(0));
    else
      tree.weights.push_back(Rat(w(rng), 10));
  }
  return tree;
}

// Canonical string of a boundary-labeled weighted tree, rooted at boundary
// leaf 0; equal strings <=> isomorphic trees with equal weights.
inline std::string canonical_tree_string(const optnet::WeightedTree& tree) {
  const auto& top = tree.topology;
  std::vector<std::vector<std::pair<int, int>>> adj(top.num_vertices);  // (neighbor, edge)
  for (int e = 0; e < top.num_edges(); ++e) {
    adj[top.edges[e].first].push_back({top.edges[e].second, e});
    adj[top.edges[e].second].push_back({top.edges[e].first, e});
  }
  std::vector<int> boundary_pos(top.num_vertices, -1);
  for (std::size_t i = 0; i < top.boundary.size(); ++i)
    boundary_pos[top.boundary[i]] = static_cast<int>(i);

  std::function<std::string(int, int)> encode = [&](int v, int parent) {
    std::vector<std::string> parts;
    for (auto [w, e] : adj[v]) {
      if (w == parent) continue;
      parts.push_back("(" + optnet::rat_to_string(tree.weights[e]) + ":" + encode(w, v) + ")");
    }
    std::sort(parts.begin(), parts.end());
    std::string s = boundary_pos[v] >= 0 ? "L" + std::to_string(boundary_pos[v]) : "I";
    for (const auto& p : parts) s += p;
    return s;
  };
  return encode(top.boundary[0], -1);
}

}  // namespace testutil
