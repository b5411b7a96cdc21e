#pragma once

#include <array>
#include <utility>
#include <vector>

#include "optnet/graph.hpp"
#include "optnet/lp.hpp"
#include "optnet/metric_space.hpp"

namespace optnet {

// Minimal parametric filling of `space` with tree type `topology`: minimize
// the total edge weight subject to d_omega(p, q) >= rho(p, q) for all
// boundary pairs. Weights are free when allow_negative is set, else >= 0.
struct MpfResult {
  Rat value;
  WeightedTree tree;
};
MpfResult mpf(const FiniteMetricSpace& space, const TreeTopology& topology, bool allow_negative);

// Minimal filling: minimum of mpf_- over all full binary topologies. The
// returned tree is a nonnegative optimal filling with zero-weight interior
// edges contracted.
struct MfResult {
  Rat value;
  WeightedTree tree;
  int topology_index = -1;
};
MfResult mf(const FiniteMetricSpace& space, int nmax = 8);

// Closed form for n = 4: value = (min + max) / 2 over the three pairings
// rho12+rho34, rho13+rho24, rho14+rho23; pairing = the argmin pairing (the
// mustaches of the optimal binary type).
struct FourPointMf {
  Rat value;
  std::array<std::pair<int, int>, 2> pairing;
};
FourPointMf four_point_mf(const FiniteMetricSpace& space);

// Star filling of an additive space: the edge to p_i weighs the Gromov
// product (p_j, p_k)_{p_i}, which is independent of the choice of j, k.
// Throws when the space is not additive or the products are inconsistent.
WeightedTree star_weights(const FiniteMetricSpace& space);

// A k-multitour stored as the multiset of boundary pairs traversed by the
// irreducible boundary paths of an Euler cycle of the 2k-multiplied tree.
// Pairs index boundary positions 0..n-1. For k = 1 `order` carries the
// cyclic boundary order of the planar tour.
struct Multitour {
  int k = 1;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> order;

  Rat half_perimeter(const FiniteMetricSpace& space) const;
};

// Tours = cyclic boundary orders induced by planar embeddings (all cyclic
// order assignments at interior vertices), deduplicated up to rotation and
// reflection. Requires a full binary topology.
std::vector<Multitour> enumerate_tours(const TreeTopology& topology);

// All k-multitours as pair multisets: every tree edge is covered exactly 2k
// times by the pair paths and the pair multigraph is connected. Guards:
// k <= 2, n <= 7.
std::vector<Multitour> enumerate_multitours(const TreeTopology& topology, int k);

// Eremin's formula: max multitour half-perimeter with multiplicity <= kmax.
// Always a lower bound for mpf_-; exact is set when the bound attains it.
struct EreminResult {
  Rat lower_bound;
  bool exact = false;
  Multitour witness;
};
EreminResult eremin_value(const FiniteMetricSpace& space, const TreeTopology& topology,
                          int kmax = 2);

// Recovers the generating tree of an additive space: mf with zero-weight
// edges contracted, verified to realize rho exactly with nonnegative weights.
WeightedTree reconstruct_additive_tree(const FiniteMetricSpace& space);

// Image of a filling in the max-norm space R^n_inf: every tree vertex maps
// to its distance vector to the boundary in the graph "filling + complete
// boundary graph weighted by rho". The boundary restriction is the
// Kuratowski embedding.
struct KuratowskiNetwork {
  TreeTopology topology;
  std::vector<std::vector<Rat>> positions;  // vertex -> point of R^n_inf
  std::vector<Rat> edge_lengths;            // l_inf length per topology edge

  Rat total_length() const;
};
KuratowskiNetwork kuratowski_network(const FiniteMetricSpace& space, const WeightedTree& filling);

}  // namespace optnet
