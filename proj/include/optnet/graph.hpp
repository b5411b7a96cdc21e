#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "optnet/rational.hpp"

namespace optnet {

/// Simple weighted graph: no self-loops, no duplicate edges.
struct WeightedGraph {
  struct Edge {
    int u = 0;
    int v = 0;
    double w = 0.0;
  };

  int num_vertices = 0;
  std::vector<Edge> edges;

  void add_edge(int u, int v, double w);
  bool is_connected() const;
};

/// Abstract tree with an ordered boundary (terminal) vertex list.
/// Interior vertices are the non-boundary ones.
struct TreeTopology {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> boundary;

  int num_edges() const { return static_cast<int>(edges.size()); }
  bool is_boundary(int v) const;
  std::vector<int> degrees() const;
  std::vector<std::vector<int>> adjacency() const;  // vertex -> incident edge ids
  bool is_tree() const;
  /// Full binary: boundary vertices of degree 1, interior vertices of degree 3.
  bool is_full_binary() const;
};

/// TreeTopology plus signed edge weights.
struct WeightedTree {
  TreeTopology topology;
  std::vector<Rat> weights;

  Rat total_weight() const;
  /// Pairwise d_omega distances between all vertices (path sums).
  std::vector<std::vector<Rat>> vertex_distances() const;
};

struct MstResult {
  WeightedGraph tree;
  double weight = 0.0;
};

/// Kruskal with deterministic tie-break (weight, min endpoint, max endpoint).
/// Throws on disconnected input.
MstResult kruskal_mst(const WeightedGraph& graph);

/// Exact Kruskal weight of the complete graph on a rational distance matrix.
Rat kruskal_mst_exact(const std::vector<std::vector<Rat>>& dist);

/// Kirchhoff matrix-tree count, exact integer arithmetic.
/// Returns 0 for disconnected input.
BigInt spanning_tree_count(const WeightedGraph& graph);

/// All spanning trees as edge-id lists, each exactly once. Guard: n <= 10.
void enumerate_spanning_trees(const WeightedGraph& graph,
                              const std::function<void(const std::vector<int>&)>& emit);
std::vector<std::vector<int>> enumerate_spanning_trees(const WeightedGraph& graph);

/// All boundary-labeled binary topologies with n leaves (leaves 0..n-1,
/// interior vertices n..2n-3), built deterministically by leaf insertion.
/// Count is (2n-5)!! for n >= 3.
void enumerate_binary_topologies(int n, const std::function<void(const TreeTopology&)>& emit);
std::vector<TreeTopology> enumerate_binary_topologies(int n);

/// Edge ids of the unique simple path from u to v; empty when u == v.
std::vector<int> tree_path(const TreeTopology& topology, int u, int v);

}  // namespace optnet
