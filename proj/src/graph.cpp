#include "optnet/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace optnet {
namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

void WeightedGraph::add_edge(int u, int v, double w) {
  if (u == v) throw std::invalid_argument("WeightedGraph: self-loop");
  if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
    throw std::invalid_argument("WeightedGraph: vertex out of range");
  for (const auto& e : edges)
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u))
      throw std::invalid_argument("WeightedGraph: duplicate edge");
  edges.push_back({u, v, w});
}

bool WeightedGraph::is_connected() const {
  if (num_vertices == 0) return false;
  UnionFind uf(num_vertices);
  int components = num_vertices;
  for (const auto& e : edges)
    if (uf.unite(e.u, e.v)) --components;
  return components == 1;
}

bool TreeTopology::is_boundary(int v) const {
  return std::find(boundary.begin(), boundary.end(), v) != boundary.end();
}

std::vector<int> TreeTopology::degrees() const {
  std::vector<int> deg(num_vertices, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::vector<std::vector<int>> TreeTopology::adjacency() const {
  std::vector<std::vector<int>> adj(num_vertices);
  for (int e = 0; e < num_edges(); ++e) {
    adj[edges[e].first].push_back(e);
    adj[edges[e].second].push_back(e);
  }
  return adj;
}

bool TreeTopology::is_tree() const {
  if (num_vertices == 0 || num_edges() != num_vertices - 1) return false;
  UnionFind uf(num_vertices);
  for (const auto& [u, v] : edges)
    if (!uf.unite(u, v)) return false;
  return true;
}

bool TreeTopology::is_full_binary() const {
  if (!is_tree()) return false;
  auto deg = degrees();
  for (int v = 0; v < num_vertices; ++v) {
    if (is_boundary(v)) {
      if (deg[v] != 1 && num_vertices > 1) return false;
    } else if (deg[v] != 3) {
      return false;
    }
  }
  return true;
}

Rat WeightedTree::total_weight() const {
  Rat sum = 0;
  for (const auto& w : weights) sum += w;
  return sum;
}

std::vector<std::vector<Rat>> WeightedTree::vertex_distances() const {
  const int n = topology.num_vertices;
  auto adj = topology.adjacency();
  std::vector<std::vector<Rat>> dist(n, std::vector<Rat>(n, 0));
  for (int s = 0; s < n; ++s) {
    std::vector<char> seen(n, 0);
    std::queue<int> queue;
    queue.push(s);
    seen[s] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int e : adj[v]) {
        int to = topology.edges[e].first == v ? topology.edges[e].second : topology.edges[e].first;
        if (seen[to]) continue;
        seen[to] = 1;
        dist[s][to] = dist[s][v] + weights[e];
        queue.push(to);
      }
    }
  }
  return dist;
}

MstResult kruskal_mst(const WeightedGraph& graph) {
  if (!graph.is_connected()) throw std::invalid_argument("kruskal_mst: disconnected graph");
  std::vector<int> order(graph.edges.size());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int i) {
    const auto& e = graph.edges[i];
    return std::make_tuple(e.w, std::min(e.u, e.v), std::max(e.u, e.v));
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
  UnionFind uf(graph.num_vertices);
  MstResult result;
  result.tree.num_vertices = graph.num_vertices;
  for (int i : order) {
    const auto& e = graph.edges[i];
    if (uf.unite(e.u, e.v)) {
      result.tree.edges.push_back(e);
      result.weight += e.w;
    }
  }
  return result;
}

Rat kruskal_mst_exact(const std::vector<std::vector<Rat>>& dist) {
  const int n = static_cast<int>(dist.size());
  if (n < 2) throw std::invalid_argument("kruskal_mst_exact: need n >= 2");
  struct E {
    Rat w;
    int u, v;
  };
  std::vector<E> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({dist[i][j], i, j});
  std::sort(edges.begin(), edges.end(), [](const E& a, const E& b) {
    if (a.w != b.w) return a.w < b.w;
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  UnionFind uf(n);
  Rat total = 0;
  for (const auto& e : edges)
    if (uf.unite(e.u, e.v)) total += e.w;
  return total;
}

BigInt spanning_tree_count(const WeightedGraph& graph) {
  const int n = graph.num_vertices;
  if (n < 2) throw std::invalid_argument("spanning_tree_count: need n >= 2");
  if (!graph.is_connected()) return 0;
  // Principal minor of the Kirchhoff matrix, Bareiss fraction-free elimination.
  const int m = n - 1;
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(m, 0));
  for (const auto& e : graph.edges) {
    if (e.u < m) ++a[e.u][e.u];
    if (e.v < m) ++a[e.v][e.v];
    if (e.u < m && e.v < m) {
      a[e.u][e.v] -= 1;
      a[e.v][e.u] -= 1;
    }
  }
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < m; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < m; ++r)
        if (a[r][k] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i)
      for (int j = k + 1; j < m; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[m - 1][m - 1] : -a[m - 1][m - 1];
}

namespace {

// Backtracking over edges in order: include (if acyclic) or exclude (if the
// remaining edges can still connect the current forest).
void spanning_rec(const WeightedGraph& graph, int edge_index, int picked,
                  std::vector<int>& chosen, UnionFind& uf,
                  const std::function<void(const std::vector<int>&)>& emit) {
  const int need = graph.num_vertices - 1;
  if (picked == need) {
    emit(chosen);
    return;
  }
  if (edge_index >= static_cast<int>(graph.edges.size())) return;
  int remaining = static_cast<int>(graph.edges.size()) - edge_index;
  if (picked + remaining < need) return;

  const auto& e = graph.edges[edge_index];
  if (uf.find(e.u) != uf.find(e.v)) {
    UnionFind saved = uf;
    uf.unite(e.u, e.v);
    chosen.push_back(edge_index);
    spanning_rec(graph, edge_index + 1, picked + 1, chosen, uf, emit);
    chosen.pop_back();
    uf = saved;
  }
  // Exclude: only worth recursing if the rest can still connect everything.
  UnionFind probe = uf;
  int components = graph.num_vertices - picked;
  for (int i = edge_index + 1; i < static_cast<int>(graph.edges.size()); ++i)
    if (probe.unite(graph.edges[i].u, graph.edges[i].v)) --components;
  if (components == 1) spanning_rec(graph, edge_index + 1, picked, chosen, uf, emit);
}

}  // namespace

void enumerate_spanning_trees(const WeightedGraph& graph,
                              const std::function<void(const std::vector<int>&)>& emit) {
  if (graph.num_vertices > 10)
    throw std::invalid_argument("enumerate_spanning_trees: size guard exceeded (n <= 10)");
  if (!graph.is_connected())
    throw std::invalid_argument("enumerate_spanning_trees: disconnected graph");
  UnionFind uf(graph.num_vertices);
  std::vector<int> chosen;
  spanning_rec(graph, 0, 0, chosen, uf, emit);
}

std::vector<std::vector<int>> enumerate_spanning_trees(const WeightedGraph& graph) {
  std::vector<std::vector<int>> out;
  enumerate_spanning_trees(graph, [&](const std::vector<int>& t) { out.push_back(t); });
  return out;
}

namespace {

void topologies_rec(int n, int next_leaf, TreeTopology& tree,
                    const std::function<void(const TreeTopology&)>& emit) {
  if (next_leaf == n) {
    emit(tree);
    return;
  }
  // Subdivide each existing edge with a fresh interior vertex and hang the
  // next leaf from it. Interior ids n..2n-3 appear in insertion order.
  const int interior = n + next_leaf - 2;
  const int edge_count = tree.num_edges();
  for (int e = 0; e < edge_count; ++e) {
    auto [a, b] = tree.edges[e];
    tree.edges[e] = {a, interior};
    tree.edges.push_back({interior, b});
    tree.edges.push_back({interior, next_leaf});
    topologies_rec(n, next_leaf + 1, tree, emit);
    tree.edges.pop_back();
    tree.edges.pop_back();
    tree.edges[e] = {a, b};
  }
}

}  // namespace

void enumerate_binary_topologies(int n, const std::function<void(const TreeTopology&)>& emit) {
  if (n < 2) throw std::invalid_argument("enumerate_binary_topologies: need n >= 2");
  TreeTopology tree;
  tree.num_vertices = n == 2 ? 2 : 2 * n - 2;
  tree.boundary.resize(n);
  std::iota(tree.boundary.begin(), tree.boundary.end(), 0);
  if (n == 2) {
    tree.edges = {{0, 1}};
    emit(tree);
    return;
  }
  tree.edges = {{0, 1}};
  topologies_rec(n, 2, tree, emit);
}

std::vector<TreeTopology> enumerate_binary_topologies(int n) {
  std::vector<TreeTopology> out;
  enumerate_binary_topologies(n, [&](const TreeTopology& t) { out.push_back(t); });
  return out;
}

std::vector<int> tree_path(const TreeTopology& topology, int u, int v) {
  if (u < 0 || v < 0 || u >= topology.num_vertices || v >= topology.num_vertices)
    throw std::invalid_argument("tree_path: vertex out of range");
  if (u == v) return {};
  auto adj = topology.adjacency();
  std::vector<int> parent_edge(topology.num_vertices, -1);
  std::vector<int> parent(topology.num_vertices, -1);
  std::queue<int> queue;
  queue.push(u);
  parent[u] = u;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop();
    if (x == v) break;
    for (int e : adj[x]) {
      int to = topology.edges[e].first == x ? topology.edges[e].second : topology.edges[e].first;
      if (parent[to] >= 0) continue;
      parent[to] = x;
      parent_edge[to] = e;
      queue.push(to);
    }
  }
  if (parent[v] < 0) throw std::invalid_argument("tree_path: vertices not connected");
  std::vector<int> path;
  for (int x = v; x != u; x = parent[x]) path.push_back(parent_edge[x]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace optnet
