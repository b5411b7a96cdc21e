#include "optnet/steiner.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace optnet {
namespace {

Point2 rotate(Point2 p, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

double angle_between(Point2 u, Point2 v) {
  const double nu = norm(u), nv = norm(v);
  if (nu == 0.0 || nv == 0.0) return 0.0;
  return std::acos(std::clamp(dot(u, v) / (nu * nv), -1.0, 1.0));
}

// Third vertex of the equilateral triangle on segment (a, b); side picks the
// half-plane (left of a->b for +1).
Point2 equilateral_third(Point2 a, Point2 b, int side) {
  return a + rotate(b - a, side > 0 ? M_PI / 3.0 : -M_PI / 3.0);
}

std::optional<Point2> line_intersection(Point2 a1, Point2 a2, Point2 b1, Point2 b2) {
  const Point2 da = a2 - a1, db = b2 - b1;
  const double den = cross(da, db);
  if (den == 0.0) return std::nullopt;
  const double t = cross(b1 - a1, db) / den;
  return a1 + t * da;
}

}  // namespace

TorricelliResult torricelli_point(Point2 a, Point2 b, Point2 c) {
  const Point2 pts[3] = {a, b, c};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (dist(pts[i], pts[j]) == 0.0)
        throw std::invalid_argument("torricelli_point: coincident points");
  // Angle at vertex i is >= 120 degrees iff 2 * dot <= -|u||v|.
  for (int i = 0; i < 3; ++i) {
    const Point2 u = pts[(i + 1) % 3] - pts[i];
    const Point2 v = pts[(i + 2) % 3] - pts[i];
    if (2.0 * dot(u, v) <= -norm(u) * norm(v)) {
      TorricelliResult r;
      r.point = pts[i];
      r.smt3 = norm(u) + norm(v);
      r.degenerate = true;
      return r;
    }
  }
  // Simpson lines from two sides; the outward equilateral vertex lies on the
  // opposite side from the remaining triangle vertex.
  auto outward = [&](Point2 p, Point2 q, Point2 other) {
    Point2 e = equilateral_third(p, q, +1);
    if (orient2d(p, q, e) == orient2d(p, q, other)) e = equilateral_third(p, q, -1);
    return e;
  };
  const Point2 ea = outward(b, c, a);  // opposite vertex a
  const Point2 eb = outward(c, a, b);
  auto t = line_intersection(a, ea, b, eb);
  TorricelliResult r;
  r.point = t ? *t : (1.0 / 3.0) * (a + b + c);
  r.smt3 = dist(a, ea);
  r.degenerate = false;
  return r;
}

namespace {

struct MergeRecord {
  int node = -1;      // interior vertex acting as pseudo-terminal
  int leaf_a = -1;    // cherry leaves consumed by the merge
  int leaf_b = -1;
  Point2 pseudo;      // equilateral third point
  int consumed_by = -1;  // index of the later record that consumed `node`, or -1
};

struct MelzakState {
  const TreeTopology* topology = nullptr;
  std::vector<std::vector<int>> neighbors;  // vertex -> adjacent vertices (live)
  std::vector<char> alive;
  std::vector<char> has_pos;
  std::vector<Point2> pos;  // pseudo positions during the forward trace
  std::vector<MergeRecord> records;
  double best_length = 0.0;
  bool found = false;
  std::vector<Point2> best_positions;
  int branches = 0;
};

void erase_value(std::vector<int>& v, int x) {
  v.erase(std::remove(v.begin(), v.end(), x), v.end());
}

// Second intersection of segment [from, to] with the circle through (p, q,
// from), required to lie strictly inside the segment and on the arc opposite
// `from` relative to chord pq.
std::optional<Point2> backtrace_point(Point2 p, Point2 q, Point2 from, Point2 to) {
  // Circumcenter of (p, q, from).
  const double d = 2.0 * ((p.x - from.x) * (q.y - from.y) - (p.y - from.y) * (q.x - from.x));
  if (d == 0.0) return std::nullopt;
  const double sp = dot(p - from, p - from), sq = dot(q - from, q - from);
  Point2 center = from + (1.0 / d) * Point2{sp * (q.y - from.y) - sq * (p.y - from.y),
                                            sq * (p.x - from.x) - sp * (q.x - from.x)};
  const double radius = dist(center, from);
  // Line from + t * dir, |from + t*dir - center| = radius; t = 0 is `from`.
  const Point2 dir = to - from;
  const double a = dot(dir, dir);
  if (a == 0.0) return std::nullopt;
  const Point2 f = from - center;
  const double b = 2.0 * dot(f, dir);
  const double t = -b / a;  // second root (first root is t = 0)
  constexpr double kTol = 1e-12;
  if (t <= kTol || t >= 1.0 - kTol) return std::nullopt;
  Point2 s = from + t * dir;
  // Smaller-arc test: s and `from` on opposite sides of chord pq.
  if (orient2d(p, q, s) * orient2d(p, q, from) >= 0) return std::nullopt;
  return s;
}

void melzak_branch(MelzakState& st) {
  // Collect live leaves.
  std::vector<int> leaves;
  for (int v = 0; v < st.topology->num_vertices; ++v)
    if (st.alive[v] && st.neighbors[v].size() == 1) leaves.push_back(v);

  if (leaves.size() == 2) {
    ++st.branches;
    const int u = leaves[0], v = leaves[1];
    // Back trace in reverse merge order.
    std::vector<Point2> final_pos = st.pos;
    std::vector<char> final_known(st.topology->num_vertices, 0);
    for (int t : st.topology->boundary) final_known[t] = 1;
    for (int i = static_cast<int>(st.records.size()) - 1; i >= 0; --i) {
      const auto& rec = st.records[i];
      int anchor_vertex;
      if (rec.consumed_by >= 0) {
        anchor_vertex = st.records[rec.consumed_by].node;
      } else {
        anchor_vertex = rec.node == u ? v : u;  // survived to the base edge
      }
      const Point2 anchor =
          final_known[anchor_vertex] ? final_pos[anchor_vertex] : st.pos[anchor_vertex];
      auto s = backtrace_point(st.pos[rec.leaf_a], st.pos[rec.leaf_b], rec.pseudo, anchor);
      if (!s) return;
      final_pos[rec.node] = *s;
      final_known[rec.node] = 1;
    }
    double length = 0.0;
    for (auto [a, b] : st.topology->edges) length += dist(final_pos[a], final_pos[b]);
    if (!st.found || length < st.best_length) {
      st.found = true;
      st.best_length = length;
      st.best_positions = final_pos;
    }
    return;
  }

  // Deterministic cherry: lowest interior vertex with two leaf neighbors.
  int y = -1, xa = -1, xb = -1;
  for (int v = 0; v < st.topology->num_vertices && y < 0; ++v) {
    if (!st.alive[v] || st.neighbors[v].size() != 3) continue;
    std::vector<int> leaf_nb;
    for (int w : st.neighbors[v])
      if (st.neighbors[w].size() == 1) leaf_nb.push_back(w);
    if (leaf_nb.size() >= 2) {
      y = v;
      std::sort(leaf_nb.begin(), leaf_nb.end());
      xa = leaf_nb[0];
      xb = leaf_nb[1];
    }
  }
  if (y < 0) return;  // should not happen for full binary topologies

  for (int side : {+1, -1}) {
    const Point2 pseudo = equilateral_third(st.pos[xa], st.pos[xb], side);
    if (dist(pseudo, st.pos[xa]) == 0.0) continue;  // coincident merge points
    // Mark earlier records whose node is one of the consumed leaves.
    std::vector<std::pair<int, int>> patched;  // (record index, previous consumed_by)
    const int rec_index = static_cast<int>(st.records.size());
    for (int i = 0; i < rec_index; ++i)
      if (st.records[i].node == xa || st.records[i].node == xb) {
        patched.push_back({i, st.records[i].consumed_by});
        st.records[i].consumed_by = rec_index;
      }
    st.records.push_back({y, xa, xb, pseudo, -1});
    st.alive[xa] = st.alive[xb] = 0;
    erase_value(st.neighbors[y], xa);
    erase_value(st.neighbors[y], xb);
    const Point2 saved = st.pos[y];
    st.pos[y] = pseudo;
    st.has_pos[y] = 1;

    melzak_branch(st);

    st.pos[y] = saved;
    st.neighbors[y].push_back(xa);
    st.neighbors[y].push_back(xb);
    st.alive[xa] = st.alive[xb] = 1;
    st.records.pop_back();
    for (auto [i, prev] : patched) st.records[i].consumed_by = prev;
  }
}

}  // namespace

std::optional<MelzakResult> melzak_solve(const TreeTopology& topology,
                                         const std::vector<Point2>& terminals) {
  if (!topology.is_full_binary())
    throw std::invalid_argument("melzak_solve: topology must be full binary");
  if (terminals.size() != topology.boundary.size())
    throw std::invalid_argument("melzak_solve: terminal count mismatch");

  if (topology.boundary.size() == 2) {
    MelzakResult r;
    r.network.topology = topology;
    r.network.positions.resize(topology.num_vertices);
    r.network.positions[topology.boundary[0]] = terminals[0];
    r.network.positions[topology.boundary[1]] = terminals[1];
    r.length = dist(terminals[0], terminals[1]);
    r.branches_explored = 1;
    return r;
  }

  MelzakState st;
  st.topology = &topology;
  st.alive.assign(topology.num_vertices, 1);
  st.has_pos.assign(topology.num_vertices, 0);
  st.pos.resize(topology.num_vertices);
  st.neighbors.assign(topology.num_vertices, {});
  for (auto [a, b] : topology.edges) {
    st.neighbors[a].push_back(b);
    st.neighbors[b].push_back(a);
  }
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    st.pos[topology.boundary[i]] = terminals[i];
    st.has_pos[topology.boundary[i]] = 1;
  }
  melzak_branch(st);
  if (!st.found) return std::nullopt;
  MelzakResult r;
  r.network.topology = topology;
  r.network.positions = st.best_positions;
  r.length = st.best_length;
  r.branches_explored = st.branches;
  return r;
}

namespace {

double diameter(const std::vector<Point2>& pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, dist(pts[i], pts[j]));
  return d;
}

}  // namespace

PlaneNetwork relax_topology(const TreeTopology& topology, const std::vector<Point2>& terminals,
                            const RelaxOptions& options) {
  if (!topology.is_tree()) throw std::invalid_argument("relax_topology: not a tree");
  if (terminals.size() != topology.boundary.size())
    throw std::invalid_argument("relax_topology: terminal count mismatch");
  PlaneNetwork net;
  net.topology = topology;
  net.positions.resize(topology.num_vertices);
  std::vector<char> fixed(topology.num_vertices, 0);
  Point2 centroid{0.0, 0.0};
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    net.positions[topology.boundary[i]] = terminals[i];
    fixed[topology.boundary[i]] = 1;
    centroid = centroid + (1.0 / terminals.size()) * terminals[i];
  }
  std::vector<int> steiner;
  for (int v = 0; v < topology.num_vertices; ++v)
    if (!fixed[v]) steiner.push_back(v);
  const double diam = std::max(diameter(terminals), 1e-300);
  for (std::size_t k = 0; k < steiner.size(); ++k)
    net.positions[steiner[k]] =
        centroid + Point2{1e-6 * diam * (1.0 + k), 1e-6 * diam * (2.0 + 0.5 * k)};

  auto adjacency = topology.adjacency();
  auto neighbor_of = [&](int e, int v) {
    return topology.edges[e].first == v ? topology.edges[e].second : topology.edges[e].first;
  };

  int iter = 0;
  bool pruned = false;
  auto run_sweeps = [&]() {
    double prev_length = net.length();
    for (; iter < options.max_iterations; ++iter) {
      for (int v : steiner) {
        std::vector<Point2> nb;
        for (int e : adjacency[v]) nb.push_back(net.positions[neighbor_of(e, v)]);
        if (nb.size() == 3) {
          if (dist(nb[0], nb[1]) == 0.0 || dist(nb[0], nb[2]) == 0.0 ||
              dist(nb[1], nb[2]) == 0.0) {
            // Two neighbors coincide; the Fermat point is that location.
            net.positions[v] = dist(nb[0], nb[1]) == 0.0 ? nb[0] : nb[2];
            if (dist(nb[0], nb[2]) == 0.0) net.positions[v] = nb[0];
          } else {
            net.positions[v] = torricelli_point(nb[0], nb[1], nb[2]).point;
          }
        } else if (nb.size() == 2) {
          net.positions[v] = 0.5 * (nb[0] + nb[1]);
        } else {
          throw std::invalid_argument("relax_topology: interior vertex of unsupported degree");
        }
      }
      const double length = net.length();
      if (prev_length - length < options.eps_relax * diam) break;
      if (options.prune_above >= 0.0 && iter >= options.prune_check_iterations &&
          length > options.prune_above) {
        pruned = true;
        break;
      }
      prev_length = length;
    }
  };

  // The per-vertex Torricelli update can stall when Steiner points coincide:
  // each sees the other as a zero-length neighbor and the (convex) objective
  // is not smooth there. Anneal first on the smoothed objective
  // sum sqrt(|e|^2 + eps^2) via IRLS/Weiszfeld sweeps -- smooth, so block
  // descent reaches its global minimum -- shrinking eps toward 0, then let
  // the exact Torricelli sweeps polish from a point near the true optimum.
  auto irls_sweep = [&](double eps2) {
    for (int v : steiner) {
      const Point2 p = net.positions[v];
      Point2 acc{0.0, 0.0};
      double total = 0.0;
      for (int e : adjacency[v]) {
        const Point2 q = net.positions[neighbor_of(e, v)];
        const double dx = p.x - q.x, dy = p.y - q.y;
        const double w = 1.0 / std::sqrt(dx * dx + dy * dy + eps2);
        acc = acc + w * q;
        total += w;
      }
      net.positions[v] = (1.0 / total) * acc;
    }
  };
  for (double scale = 1e-2; scale >= 1e-10 && !pruned; scale *= 1e-2) {
    const double eps2 = scale * scale * diam * diam;
    double prev_length = net.length();
    for (int s = 0; s < 300 && iter < options.max_iterations; ++s, ++iter) {
      irls_sweep(eps2);
      const double length = net.length();
      if (std::abs(prev_length - length) < options.eps_relax * diam) break;
      if (options.prune_above >= 0.0 && iter >= options.prune_check_iterations &&
          length > options.prune_above) {
        pruned = true;
        break;
      }
      prev_length = length;
    }
  }

  run_sweeps();
  return net;
}

namespace {

// Contract edges shorter than 1e-9 * diameter that touch a Steiner vertex.
PlaneNetwork contract_short_edges(const PlaneNetwork& net, double diam) {
  const auto& top = net.topology;
  const double threshold = 1e-9 * diam;
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
    if (net.edge_length(e) >= threshold) continue;
    if (is_boundary[a] && is_boundary[b]) continue;
    int ra = find(a), rb = find(b);
    if (ra == rb) continue;
    // Keep the boundary representative when present.
    if (is_boundary[rb]) std::swap(ra, rb);
    parent[rb] = ra;
  }
  std::vector<int> rep_id(top.num_vertices, -1);
  PlaneNetwork out;
  int next = 0;
  for (int v = 0; v < top.num_vertices; ++v)
    if (find(v) == v) {
      rep_id[v] = next++;
      out.positions.push_back(net.positions[v]);
    }
  out.topology.num_vertices = next;
  for (int b : top.boundary) out.topology.boundary.push_back(rep_id[find(b)]);
  std::vector<std::pair<int, int>> seen;
  for (auto [a, b] : top.edges) {
    int ra = rep_id[find(a)], rb = rep_id[find(b)];
    if (ra == rb) continue;
    auto key = std::minmax(ra, rb);
    if (std::find(seen.begin(), seen.end(), std::pair<int, int>(key)) != seen.end()) continue;
    seen.push_back(key);
    out.topology.edges.push_back({ra, rb});
  }
  return out;
}

}  // namespace

SmtResult smt(const std::vector<Point2>& terminals, int nmax) {
  const int n = static_cast<int>(terminals.size());
  if (n < 2) throw std::invalid_argument("smt: need n >= 2");
  if (n > nmax) throw std::invalid_argument("smt: size guard exceeded");
  const double diam = diameter(terminals);

  SmtResult best;
  int index = 0;
  enumerate_binary_topologies(n, [&](const TreeTopology& topology) {
    double length;
    PlaneNetwork net;
    auto melzak = melzak_solve(topology, terminals);
    if (melzak) {
      length = melzak->length;
      net = std::move(melzak->network);
    } else {
      RelaxOptions options;
      options.prune_above = best.topology_index >= 0 ? best.length * (1.0 + 1e-9) : -1.0;
      net = relax_topology(topology, terminals, options);
      length = net.length();
    }
    if (best.topology_index < 0 || length < best.length) {
      best.length = length;
      best.network = std::move(net);
      best.topology_index = index;
    }
    ++index;
  });
  best.network = contract_short_edges(best.network, diam);
  best.length = best.network.length();
  return best;
}

LocalStructureReport check_local_structure(const PlaneNetwork& network) {
  const auto& top = network.topology;
  auto adjacency = top.adjacency();
  LocalStructureReport report;
  report.min_angle = M_PI;
  const double k120 = 2.0 * M_PI / 3.0;
  for (int v = 0; v < top.num_vertices; ++v) {
    const int deg = static_cast<int>(adjacency[v].size());
    report.max_degree = std::max(report.max_degree, deg);
    if (deg > 3) {
      std::ostringstream msg;
      msg << "vertex " << v << " has degree " << deg;
      report.violations.push_back(msg.str());
    }
    std::vector<Point2> dirs;
    for (int e : adjacency[v]) {
      int w = top.edges[e].first == v ? top.edges[e].second : top.edges[e].first;
      dirs.push_back(network.positions[w] - network.positions[v]);
    }
    for (std::size_t i = 0; i < dirs.size(); ++i)
      for (std::size_t j = i + 1; j < dirs.size(); ++j) {
        const double angle = angle_between(dirs[i], dirs[j]);
        report.min_angle = std::min(report.min_angle, angle);
        if (angle < k120 - kAngleEps) {
          std::ostringstream msg;
          msg << "angle " << angle << " rad at vertex " << v << " below 120 degrees";
          report.violations.push_back(msg.str());
        } else if (deg == 3 && angle > k120 + kAngleEps) {
          std::ostringstream msg;
          msg << "angle " << angle << " rad at degree-3 vertex " << v << " exceeds 120 degrees";
          report.violations.push_back(msg.str());
        }
      }
    if (deg == 2 && !top.is_boundary(v)) {
      const double angle = angle_between(dirs[0], dirs[1]);
      if (angle < M_PI - kAngleEps) {
        std::ostringstream msg;
        msg << "interior degree-2 vertex " << v << " is not straight";
        report.violations.push_back(msg.str());
      }
    }
  }
  return report;
}

}  // namespace optnet
