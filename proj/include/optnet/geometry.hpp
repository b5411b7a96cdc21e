#pragma once

#include <vector>

#include "optnet/graph.hpp"
#include "optnet/rational.hpp"

namespace optnet {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
double dist(Point2 a, Point2 b);
double norm(Point2 p);
double dot(Point2 a, Point2 b);
double cross(Point2 a, Point2 b);

/// Sign of the signed area of triangle (a, b, c): +1 left turn, -1 right
/// turn, 0 collinear. Double filter with exact rational fallback.
int orient2d(Point2 a, Point2 b, Point2 c);

/// Sign of the incircle determinant: +1 when d is strictly inside the
/// circle through a, b, c (counterclockwise), -1 outside, 0 cocircular.
int incircle(Point2 a, Point2 b, Point2 c, Point2 d);

/// Geometric realization of a topology: vertex -> plane point.
struct PlaneNetwork {
  TreeTopology topology;
  std::vector<Point2> positions;

  double edge_length(int e) const;
  double length() const;
};

struct DelaunayGraph {
  std::vector<Point2> points;
  std::vector<std::pair<int, int>> edges;

  bool has_edge(int i, int j) const;
};

/// Dual of the Voronoi diagram: (i, j) is an edge iff the cells of A_i and
/// A_j share a segment of positive length. Decided exactly by intersecting
/// the half-plane constraints with the bisector line.
DelaunayGraph delaunay_graph(const std::vector<Point2>& points);

struct EmstResult {
  PlaneNetwork network;
  double length = 0.0;
};

/// Kruskal restricted to Delaunay edges.
EmstResult euclidean_mst(const std::vector<Point2>& points);

/// Convex-hull peeling; level k holds the indices of points on the hull
/// boundary (vertices and points interior to hull edges) of what remains.
std::vector<std::vector<int>> convexity_levels(const std::vector<Point2>& points);

/// Max over ordered edge pairs of (left turns - right turns) along the
/// connecting path; turns evaluated by orient2d at path-interior vertices.
/// Exactly straight passages count as no turn.
int twisting_number(const PlaneNetwork& network);

}  // namespace optnet
