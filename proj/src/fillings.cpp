#include "optnet/fillings.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace optnet {
namespace {

// Path constraint rows of the filling LP: one row per boundary pair, with a
// unit coefficient on every edge of the tree path.
void add_path_constraints(const FiniteMetricSpace& space, const TreeTopology& topology,
                          LpProblem& problem) {
  const int n = space.n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<Rat> row(topology.num_edges(), Rat(0));
      for (int e : tree_path(topology, topology.boundary[i], topology.boundary[j])) row[e] = 1;
      problem.constraints.push_back(std::move(row));
      problem.bounds.push_back(space.at(i, j));
    }
}

Rat additivity_eps(const FiniteMetricSpace& space) {
  return rat_from_double(kMetricEps) * space.max_distance();
}

// Value of mpf_- through the dual LP, which is much smaller (one equality
// row per edge instead of one inequality per boundary pair):
//   maximize sum rho(p,q) y_pq  s.t.  sum_{pq: e in path(p,q)} y_pq = 1, y >= 0.
Rat mpf_minus_value(const FiniteMetricSpace& space, const TreeTopology& topology) {
  const int n = space.n;
  const int num_pairs = n * (n - 1) / 2;
  LpProblem dual;
  dual.objective.reserve(num_pairs);
  dual.constraints.assign(topology.num_edges(), std::vector<Rat>(num_pairs, Rat(0)));
  int col = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++col) {
      dual.objective.push_back(-space.at(i, j));  // minimize the negation
      for (int e : tree_path(topology, topology.boundary[i], topology.boundary[j]))
        dual.constraints[e][col] = 1;
    }
  dual.bounds.assign(topology.num_edges(), Rat(1));
  dual.nonneg.assign(num_pairs, true);
  dual.equality.assign(topology.num_edges(), true);
  LpSolution sol = lp_solve(dual);
  if (sol.status != LpStatus::Optimal)
    throw std::logic_error("mpf_minus_value: dual LP must have an optimum");
  return -sol.value;
}

// Half-perimeter of one planar tour (the natural rotation system); a cheap
// lower bound for mpf_- by weak duality.
Rat tour_lower_bound(const FiniteMetricSpace& space, const TreeTopology& topology) {
  std::vector<std::vector<int>> nb(topology.num_vertices);
  for (auto [a, b] : topology.edges) {
    nb[a].push_back(b);
    nb[b].push_back(a);
  }
  std::vector<int> boundary_pos(topology.num_vertices, -1);
  for (std::size_t i = 0; i < topology.boundary.size(); ++i)
    boundary_pos[topology.boundary[i]] = static_cast<int>(i);
  std::vector<int> order;
  int u = topology.boundary[0];
  int v = nb[u][0];
  const int start_u = u, start_v = v;
  do {
    if (boundary_pos[v] >= 0) order.push_back(boundary_pos[v]);
    const auto& r = nb[v];
    const int idx = static_cast<int>(std::find(r.begin(), r.end(), u) - r.begin());
    const int w = r[(idx + 1) % r.size()];
    u = v;
    v = w;
  } while (!(u == start_u && v == start_v));
  Rat sum = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    sum += space.at(order[i], order[(i + 1) % order.size()]);
  return sum / 2;
}

}  // namespace

MpfResult mpf(const FiniteMetricSpace& space, const TreeTopology& topology, bool allow_negative) {
  if (!topology.is_tree()) throw std::invalid_argument("mpf: topology is not a tree");
  if (static_cast<int>(topology.boundary.size()) != space.n)
    throw std::invalid_argument("mpf: boundary size does not match the space");

  LpProblem problem;
  problem.objective.assign(topology.num_edges(), Rat(1));
  problem.nonneg.assign(topology.num_edges(), !allow_negative);
  add_path_constraints(space, topology, problem);

  LpSolution sol = lp_solve(problem);
  if (sol.status != LpStatus::Optimal)
    throw std::logic_error("mpf: filling LP must have an optimum");
  MpfResult result;
  result.value = sol.value;
  result.tree.topology = topology;
  result.tree.weights = std::move(sol.x);
  return result;
}

namespace {

// Contracts zero-weight edges with an interior endpoint; the boundary
// endpoint (or the lower-id vertex) survives.
WeightedTree contract_zero_edges(const WeightedTree& tree) {
  const auto& top = tree.topology;
  std::vector<int> parent(top.num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<char> is_boundary(top.num_vertices, 0);
  for (int b : top.boundary) is_boundary[b] = 1;
  for (int e = 0; e < top.num_edges(); ++e) {
    auto [a, b] = top.edges[e];
    if (tree.weights[e] != 0) continue;
    if (is_boundary[a] && is_boundary[b]) continue;
    int ra = find(a), rb = find(b);
    if (ra == rb) continue;
    if (is_boundary[rb] || (!is_boundary[ra] && rb < ra)) std::swap(ra, rb);
    parent[rb] = ra;
  }
  std::vector<int> rep_id(top.num_vertices, -1);
  int next = 0;
  for (int v = 0; v < top.num_vertices; ++v)
    if (find(v) == v) rep_id[v] = next++;
  WeightedTree out;
  out.topology.num_vertices = next;
  for (int b : top.boundary) out.topology.boundary.push_back(rep_id[find(b)]);
  for (int e = 0; e < top.num_edges(); ++e) {
    int ra = rep_id[find(top.edges[e].first)], rb = rep_id[find(top.edges[e].second)];
    if (ra == rb) continue;
    out.topology.edges.push_back({std::min(ra, rb), std::max(ra, rb)});
    out.weights.push_back(tree.weights[e]);
  }
  return out;
}

}  // namespace

MfResult mf(const FiniteMetricSpace& space, int nmax) {
  if (space.n < 2) throw std::invalid_argument("mf: need n >= 2");
  if (space.n > nmax) throw std::invalid_argument("mf: size guard exceeded");

  // Phase 1: the generalized minimum over all binary topologies. A single
  // tour half-perimeter is a lower bound for mpf_- (weak duality), so a
  // topology whose bound already matches the running minimum cannot improve
  // it and its LP is skipped; such topologies stay tie candidates.
  auto topologies = enumerate_binary_topologies(space.n);
  std::vector<std::optional<Rat>> values(topologies.size());
  std::vector<Rat> bounds(topologies.size());
  bool have = false;
  Rat best;
  for (std::size_t i = 0; i < topologies.size(); ++i) {
    bounds[i] = tour_lower_bound(space, topologies[i]);
    if (have && bounds[i] >= best) continue;
    values[i] = mpf_minus_value(space, topologies[i]);
    if (!have || *values[i] < best) {
      best = *values[i];
      have = true;
    }
  }

  // Phase 2: recover a nonnegative optimal filling among the candidate
  // topologies via a feasibility LP (total weight pinned to the minimum).
  // The mpf-minimizing topology also achieves mpf_- = best (IOST), and its
  // tour bound is <= best, so it is always among the candidates.
  for (std::size_t i = 0; i < topologies.size(); ++i) {
    if (values[i] ? *values[i] != best : bounds[i] != best) continue;
    LpProblem problem;
    const int m = topologies[i].num_edges();
    problem.objective.assign(m, Rat(1));
    problem.nonneg.assign(m, true);
    add_path_constraints(space, topologies[i], problem);
    // Sum of weights <= best, i.e. -sum >= -best.
    problem.constraints.push_back(std::vector<Rat>(m, Rat(-1)));
    problem.bounds.push_back(-best);
    LpSolution sol = lp_solve(problem);
    if (sol.status != LpStatus::Optimal) continue;
    MfResult result;
    result.value = best;
    result.topology_index = static_cast<int>(i);
    WeightedTree tree;
    tree.topology = topologies[i];
    tree.weights = std::move(sol.x);
    result.tree = contract_zero_edges(tree);
    return result;
  }
  throw std::logic_error("mf: no nonnegative optimal filling found");
}

FourPointMf four_point_mf(const FiniteMetricSpace& space) {
  if (space.n != 4) throw std::invalid_argument("four_point_mf: need n = 4");
  struct Pairing {
    Rat sum;
    std::array<std::pair<int, int>, 2> pairs;
  };
  std::vector<Pairing> pairings = {
      {space.at(0, 1) + space.at(2, 3), {{{0, 1}, {2, 3}}}},
      {space.at(0, 2) + space.at(1, 3), {{{0, 2}, {1, 3}}}},
      {space.at(0, 3) + space.at(1, 2), {{{0, 3}, {1, 2}}}},
  };
  const Pairing* lo = &pairings[0];
  const Pairing* hi = &pairings[0];
  for (const auto& p : pairings) {
    if (p.sum < lo->sum) lo = &p;
    if (p.sum > hi->sum) hi = &p;
  }
  FourPointMf result;
  result.value = (lo->sum + hi->sum) / 2;
  result.pairing = lo->pairs;
  return result;
}

WeightedTree star_weights(const FiniteMetricSpace& space) {
  const int n = space.n;
  if (n < 3) throw std::invalid_argument("star_weights: need n >= 3");
  if (!check_four_point(space).additive())
    throw std::invalid_argument("star_weights: space is not additive");
  const Rat eps = additivity_eps(space);

  WeightedTree tree;
  tree.topology.num_vertices = n + 1;
  for (int i = 0; i < n; ++i) {
    tree.topology.boundary.push_back(i);
    tree.topology.edges.push_back({i, n});
  }
  tree.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    bool first = true;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = j + 1; k < n; ++k) {
        if (k == i) continue;
        const Rat w = gromov_product(space, i, j, k);
        if (first) {
          tree.weights[i] = w;
          first = false;
        } else if (abs(w - tree.weights[i]) > eps) {
          std::ostringstream msg;
          msg << "star_weights: inconsistent Gromov products at point " << i << " (pair " << j
              << "," << k << ")";
          throw std::invalid_argument(msg.str());
        }
      }
    }
  }
  return tree;
}

Rat Multitour::half_perimeter(const FiniteMetricSpace& space) const {
  Rat sum = 0;
  for (auto [p, q] : pairs) sum += space.at(p, q);
  return sum / (2 * k);
}

namespace {

// Canonical representative of a cyclic order up to rotation and reflection.
std::vector<int> canonical_cycle(std::vector<int> order) {
  const int n = static_cast<int>(order.size());
  std::vector<int> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (int s = 0; s < n; ++s) {
      std::vector<int> candidate(n);
      for (int i = 0; i < n; ++i) candidate[i] = order[(s + i) % n];
      if (best.empty() || candidate < best) best = candidate;
    }
    std::reverse(order.begin(), order.end());
  }
  return best;
}

}  // namespace

std::vector<Multitour> enumerate_tours(const TreeTopology& topology) {
  if (!topology.is_full_binary())
    throw std::invalid_argument("enumerate_tours: topology must be full binary");
  const int n = static_cast<int>(topology.boundary.size());

  // Neighbor lists; each interior vertex gets one of two cyclic orders.
  std::vector<std::vector<int>> nb(topology.num_vertices);
  for (auto [a, b] : topology.edges) {
    nb[a].push_back(b);
    nb[b].push_back(a);
  }
  std::vector<int> boundary_pos(topology.num_vertices, -1);
  for (int i = 0; i < n; ++i) boundary_pos[topology.boundary[i]] = i;
  std::vector<int> interior;
  for (int v = 0; v < topology.num_vertices; ++v)
    if (boundary_pos[v] < 0) interior.push_back(v);

  std::set<std::vector<int>> seen;
  std::vector<Multitour> tours;
  const int assignments = interior.empty() ? 1 : (1 << interior.size());
  for (int mask = 0; mask < assignments; ++mask) {
    std::vector<std::vector<int>> rot = nb;
    for (std::size_t t = 0; t < interior.size(); ++t)
      if (mask & (1 << t)) std::swap(rot[interior[t]][1], rot[interior[t]][2]);
    // Face walk of the plane tree: follow darts, turning to the successor of
    // the arrival edge in the rotation at each vertex.
    std::vector<int> order;
    int u = topology.boundary[0];
    int v = rot[u][0];
    const int start_u = u, start_v = v;
    do {
      if (boundary_pos[v] >= 0) order.push_back(boundary_pos[v]);
      const auto& r = rot[v];
      const int idx =
          static_cast<int>(std::find(r.begin(), r.end(), u) - r.begin());
      const int w = r[(idx + 1) % r.size()];
      u = v;
      v = w;
    } while (!(u == start_u && v == start_v));
    auto canon = canonical_cycle(order);
    if (!seen.insert(canon).second) continue;
    Multitour tour;
    tour.k = 1;
    tour.order = canon;
    for (int i = 0; i < n; ++i) {
      int p = canon[i], q = canon[(i + 1) % n];
      tour.pairs.push_back({std::min(p, q), std::max(p, q)});
    }
    std::sort(tour.pairs.begin(), tour.pairs.end());
    tours.push_back(std::move(tour));
  }
  return tours;
}

namespace {

struct MultitourSearch {
  int n = 0;
  int target = 0;  // required coverage 2k per edge
  std::vector<std::pair<int, int>> pair_types;
  std::vector<std::vector<int>> pair_edges;  // pair type -> covered edge ids
  std::vector<int> last_cover;               // edge -> last pair type touching it
  std::vector<int> remaining;                // edge -> remaining coverage
  std::vector<int> counts;                   // chosen multiplicity per pair type
  std::vector<Multitour>* out = nullptr;
  int k = 0;

  bool connected() const {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int components = n;
    for (std::size_t t = 0; t < pair_types.size(); ++t) {
      if (counts[t] == 0) continue;
      int ra = find(pair_types[t].first), rb = find(pair_types[t].second);
      if (ra != rb) {
        parent[ra] = rb;
        --components;
      }
    }
    return components == 1;
  }

  void emit() {
    if (!connected()) return;
    Multitour mt;
    mt.k = k;
    for (std::size_t t = 0; t < pair_types.size(); ++t)
      for (int c = 0; c < counts[t]; ++c) mt.pairs.push_back(pair_types[t]);
    out->push_back(std::move(mt));
  }

};

}  // namespace

std::vector<Multitour> enumerate_multitours(const TreeTopology& topology, int k) {
  if (!topology.is_full_binary())
    throw std::invalid_argument("enumerate_multitours: topology must be full binary");
  if (k < 1 || k > 2) throw std::invalid_argument("enumerate_multitours: k guard exceeded (k <= 2)");
  const int n = static_cast<int>(topology.boundary.size());
  if (n > 7) throw std::invalid_argument("enumerate_multitours: size guard exceeded (n <= 7)");

  MultitourSearch s;
  s.n = n;
  s.k = k;
  s.target = 2 * k;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      s.pair_types.push_back({i, j});
      s.pair_edges.push_back(tree_path(topology, topology.boundary[i], topology.boundary[j]));
    }
  s.last_cover.assign(topology.num_edges(), -1);
  for (std::size_t t = 0; t < s.pair_types.size(); ++t)
    for (int e : s.pair_edges[t]) s.last_cover[e] = static_cast<int>(t);
  s.remaining.assign(topology.num_edges(), s.target);
  s.counts.assign(s.pair_types.size(), 0);
  std::vector<Multitour> result;
  s.out = &result;

  // Recursion over pair-type multiplicities; counts tracked implicitly by the
  // loop depth, so mirror them for the connectivity check.
  std::function<void(int)> rec = [&](int t) {
    if (t == static_cast<int>(s.pair_types.size())) {
      for (int r : s.remaining)
        if (r != 0) return;
      s.emit();
      return;
    }
    int max_count = s.target;
    for (int e : s.pair_edges[t]) max_count = std::min(max_count, s.remaining[e]);
    for (int c = 0; c <= max_count; ++c) {
      s.counts[t] = c;
      for (int e : s.pair_edges[t]) s.remaining[e] -= c;
      bool ok = true;
      for (int e : s.pair_edges[t])
        if (s.last_cover[e] == t && s.remaining[e] != 0) ok = false;
      if (ok) rec(t + 1);
      for (int e : s.pair_edges[t]) s.remaining[e] += c;
    }
    s.counts[t] = 0;
  };
  rec(0);
  return result;
}

EreminResult eremin_value(const FiniteMetricSpace& space, const TreeTopology& topology,
                          int kmax) {
  if (static_cast<int>(topology.boundary.size()) != space.n)
    throw std::invalid_argument("eremin_value: boundary size does not match the space");
  EreminResult result;
  bool have = false;
  for (int k = 1; k <= kmax; ++k) {
    for (auto& mt : enumerate_multitours(topology, k)) {
      const Rat p = mt.half_perimeter(space);
      if (!have || p > result.lower_bound) {
        result.lower_bound = p;
        result.witness = std::move(mt);
        have = true;
      }
    }
  }
  if (!have) throw std::logic_error("eremin_value: no multitour found");
  result.exact = result.lower_bound == mpf_minus_value(space, topology);
  return result;
}

WeightedTree reconstruct_additive_tree(const FiniteMetricSpace& space) {
  if (!check_four_point(space).additive())
    throw std::invalid_argument("reconstruct_additive_tree: space is not additive");
  MfResult result = mf(space);
  for (const Rat& w : result.tree.weights)
    if (w < 0) throw std::logic_error("reconstruct_additive_tree: negative weight in filling");
  // The generating tree must realize rho exactly.
  auto dist = result.tree.vertex_distances();
  const auto& boundary = result.tree.topology.boundary;
  for (int i = 0; i < space.n; ++i)
    for (int j = i + 1; j < space.n; ++j)
      if (dist[boundary[i]][boundary[j]] != space.at(i, j))
        throw std::logic_error("reconstruct_additive_tree: tree does not realize the metric");
  return result.tree;
}

Rat KuratowskiNetwork::total_length() const {
  Rat sum = 0;
  for (const Rat& w : edge_lengths) sum += w;
  return sum;
}

KuratowskiNetwork kuratowski_network(const FiniteMetricSpace& space, const WeightedTree& filling) {
  const auto& top = filling.topology;
  if (static_cast<int>(top.boundary.size()) != space.n)
    throw std::invalid_argument("kuratowski_network: boundary size does not match the space");
  // Verify the filling property d_omega >= rho.
  auto tree_dist = filling.vertex_distances();
  for (int i = 0; i < space.n; ++i)
    for (int j = i + 1; j < space.n; ++j)
      if (tree_dist[top.boundary[i]][top.boundary[j]] < space.at(i, j))
        throw std::invalid_argument("kuratowski_network: tree is not a filling of the space");

  // Shortest paths in the extension: tree edges with omega plus the complete
  // boundary graph weighted by rho.
  const int V = top.num_vertices;
  const Rat inf = Rat(1) + 2 * space.max_distance() * V +
                  2 * abs(filling.total_weight()) * V;
  std::vector<std::vector<Rat>> d(V, std::vector<Rat>(V, inf));
  for (int v = 0; v < V; ++v) d[v][v] = 0;
  for (int e = 0; e < top.num_edges(); ++e) {
    auto [a, b] = top.edges[e];
    d[a][b] = std::min(d[a][b], filling.weights[e]);
    d[b][a] = d[a][b];
  }
  for (int i = 0; i < space.n; ++i)
    for (int j = 0; j < space.n; ++j)
      if (i != j) {
        int a = top.boundary[i], b = top.boundary[j];
        d[a][b] = std::min(d[a][b], space.at(i, j));
      }
  for (int m = 0; m < V; ++m)
    for (int i = 0; i < V; ++i)
      for (int j = 0; j < V; ++j)
        if (d[i][m] + d[m][j] < d[i][j]) d[i][j] = d[i][m] + d[m][j];

  KuratowskiNetwork net;
  net.topology = top;
  net.positions.assign(V, std::vector<Rat>(space.n));
  for (int v = 0; v < V; ++v)
    for (int i = 0; i < space.n; ++i) net.positions[v][i] = d[v][top.boundary[i]];
  for (auto [a, b] : top.edges) {
    Rat len = 0;
    for (int i = 0; i < space.n; ++i)
      len = std::max(len, Rat(abs(net.positions[a][i] - net.positions[b][i])));
    net.edge_lengths.push_back(len);
  }
  return net;
}

}  // namespace optnet
