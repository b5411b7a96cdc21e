#include "optnet/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace optnet {

double dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }
double norm(Point2 p) { return std::hypot(p.x, p.y); }
double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }

namespace {

int sign_of(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

int orient2d_exact(Point2 a, Point2 b, Point2 c) {
  Rat ax = rat_from_double(a.x), ay = rat_from_double(a.y);
  Rat bx = rat_from_double(b.x), by = rat_from_double(b.y);
  Rat cx = rat_from_double(c.x), cy = rat_from_double(c.y);
  return sign_of((bx - ax) * (cy - ay) - (by - ay) * (cx - ax));
}

}  // namespace

int orient2d(Point2 a, Point2 b, Point2 c) {
  const double det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  const double mag = std::abs((b.x - a.x) * (c.y - a.y)) + std::abs((b.y - a.y) * (c.x - a.x));
  // Forward-error filter; fall back to exact arithmetic near zero.
  if (std::abs(det) > 8.0 * std::numeric_limits<double>::epsilon() * mag) return det > 0 ? 1 : -1;
  return orient2d_exact(a, b, c);
}

int incircle(Point2 a, Point2 b, Point2 c, Point2 d) {
  // Exact 3x3 determinant of the lifted points relative to d.
  auto col = [&](Point2 p) {
    Rat px = rat_from_double(p.x) - rat_from_double(d.x);
    Rat py = rat_from_double(p.y) - rat_from_double(d.y);
    return std::array<Rat, 3>{px, py, px * px + py * py};
  };
  auto A = col(a), B = col(b), C = col(c);
  Rat det = A[0] * (B[1] * C[2] - B[2] * C[1]) - A[1] * (B[0] * C[2] - B[2] * C[0]) +
            A[2] * (B[0] * C[1] - B[1] * C[0]);
  return sign_of(det);
}

double PlaneNetwork::edge_length(int e) const {
  return dist(positions[topology.edges[e].first], positions[topology.edges[e].second]);
}

double PlaneNetwork::length() const {
  double sum = 0.0;
  for (int e = 0; e < topology.num_edges(); ++e) sum += edge_length(e);
  return sum;
}

bool DelaunayGraph::has_edge(int i, int j) const {
  for (auto [u, v] : edges)
    if ((u == i && v == j) || (u == j && v == i)) return true;
  return false;
}

namespace {

struct RatPoint {
  Rat x, y;
};

// Voronoi cells of points i and j share a segment of positive length iff the
// feasible parameter interval on their bisector is nondegenerate. The
// bisector is x(t) = m + t*d with m the midpoint and d perpendicular to
// (p_j - p_i); the constraint |x - p_i|^2 <= |x - p_k|^2 is linear in t.
bool cells_adjacent(const std::vector<RatPoint>& pts, int i, int j) {
  const RatPoint& a = pts[i];
  const RatPoint& b = pts[j];
  RatPoint m{(a.x + b.x) / 2, (a.y + b.y) / 2};
  RatPoint d{a.y - b.y, b.x - a.x};
  bool has_lo = false, has_hi = false;
  Rat lo, hi;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (static_cast<int>(k) == i || static_cast<int>(k) == j) continue;
    const RatPoint& c = pts[k];
    // q(t) = |m + t d - a|^2 - |m + t d - c|^2 = const + t * coef <= 0.
    Rat cst = (m.x - a.x) * (m.x - a.x) + (m.y - a.y) * (m.y - a.y) -
              (m.x - c.x) * (m.x - c.x) - (m.y - c.y) * (m.y - c.y);
    Rat coef = 2 * (d.x * (c.x - a.x) + d.y * (c.y - a.y));
    if (coef == 0) {
      if (cst > 0) return false;  // k dominates the whole bisector
      continue;
    }
    Rat bound = -cst / coef;
    if (coef > 0) {
      if (!has_hi || bound < hi) hi = bound, has_hi = true;
    } else {
      if (!has_lo || bound > lo) lo = bound, has_lo = true;
    }
    if (has_lo && has_hi && lo >= hi) return false;
  }
  return true;
}

}  // namespace

DelaunayGraph delaunay_graph(const std::vector<Point2>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 2) throw std::invalid_argument("delaunay_graph: need n >= 2");
  std::vector<RatPoint> pts(n);
  for (int i = 0; i < n; ++i)
    pts[i] = {rat_from_double(points[i].x), rat_from_double(points[i].y)};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pts[i].x == pts[j].x && pts[i].y == pts[j].y)
        throw std::invalid_argument("delaunay_graph: duplicate points");
  DelaunayGraph graph;
  graph.points = points;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (cells_adjacent(pts, i, j)) graph.edges.push_back({i, j});
  return graph;
}

EmstResult euclidean_mst(const std::vector<Point2>& points) {
  auto delaunay = delaunay_graph(points);
  WeightedGraph graph;
  graph.num_vertices = static_cast<int>(points.size());
  for (auto [i, j] : delaunay.edges) graph.add_edge(i, j, dist(points[i], points[j]));
  auto mst = kruskal_mst(graph);
  EmstResult result;
  result.length = mst.weight;
  result.network.topology.num_vertices = graph.num_vertices;
  result.network.topology.boundary.resize(graph.num_vertices);
  for (int i = 0; i < graph.num_vertices; ++i) result.network.topology.boundary[i] = i;
  for (const auto& e : mst.tree.edges) result.network.topology.edges.push_back({e.u, e.v});
  result.network.positions = points;
  return result;
}

namespace {

// Indices of hull vertices (monotone chain); collinear sets yield the two
// extremes of the segment.
std::vector<int> hull_vertices(const std::vector<Point2>& pts, const std::vector<int>& idx) {
  std::vector<int> sorted = idx;
  std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
    if (pts[a].x != pts[b].x) return pts[a].x < pts[b].x;
    return pts[a].y < pts[b].y;
  });
  const int k = static_cast<int>(sorted.size());
  if (k <= 2) return sorted;
  std::vector<int> hull;
  auto build = [&](auto begin, auto end) {
    std::size_t base = hull.size();
    for (auto it = begin; it != end; ++it) {
      while (hull.size() >= base + 2 &&
             orient2d(pts[hull[hull.size() - 2]], pts[hull.back()], pts[*it]) <= 0)
        hull.pop_back();
      hull.push_back(*it);
    }
    hull.pop_back();
  };
  build(sorted.begin(), sorted.end());
  build(sorted.rbegin(), sorted.rend());
  return hull;
}

bool on_segment(Point2 p, Point2 a, Point2 b) {
  if (orient2d(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

std::vector<std::vector<int>> convexity_levels(const std::vector<Point2>& points) {
  std::vector<int> remaining(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) remaining[i] = static_cast<int>(i);
  std::vector<std::vector<int>> levels;
  while (!remaining.empty()) {
    auto hull = hull_vertices(points, remaining);
    std::vector<int> level, rest;
    for (int p : remaining) {
      bool boundary = false;
      if (hull.size() <= 2) {
        boundary = hull.size() < 2 || on_segment(points[p], points[hull[0]], points[hull[1]]);
      } else {
        for (std::size_t e = 0; e < hull.size() && !boundary; ++e)
          boundary = on_segment(points[p], points[hull[e]], points[hull[(e + 1) % hull.size()]]);
      }
      (boundary ? level : rest).push_back(p);
    }
    levels.push_back(std::move(level));
    remaining = std::move(rest);
  }
  return levels;
}

int twisting_number(const PlaneNetwork& network) {
  const auto& top = network.topology;
  if (!top.is_tree()) throw std::invalid_argument("twisting_number: not a tree");
  for (int e = 0; e < top.num_edges(); ++e)
    if (network.edge_length(e) == 0.0)
      throw std::invalid_argument("twisting_number: zero-length edge");

  const int m = top.num_edges();
  int best = 0;
  for (int e1 = 0; e1 < m; ++e1)
    for (int e2 = 0; e2 < m; ++e2) {
      if (e1 == e2) continue;
      // Path starting with edge e1 and finishing with e2: the endpoint pair
      // whose connecting path contains both edges.
      std::vector<int> path;
      int start = -1;
      for (int x : {top.edges[e1].first, top.edges[e1].second}) {
        for (int y : {top.edges[e2].first, top.edges[e2].second}) {
          auto candidate = tree_path(top, x, y);
          if (std::find(candidate.begin(), candidate.end(), e1) != candidate.end() &&
              std::find(candidate.begin(), candidate.end(), e2) != candidate.end()) {
            path = std::move(candidate);
            start = x;
          }
        }
      }
      std::vector<int> seq = {start};
      for (int edge : path) {
        int prev = seq.back();
        seq.push_back(top.edges[edge].first == prev ? top.edges[edge].second
                                                    : top.edges[edge].first);
      }
      int tw = 0;
      for (std::size_t i = 1; i + 1 < seq.size(); ++i)
        tw += orient2d(network.positions[seq[i - 1]], network.positions[seq[i]],
                       network.positions[seq[i + 1]]);
      best = std::max(best, tw);
    }
  return best;
}

}  // namespace optnet
