#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "optnet/steiner.hpp"

using namespace optnet;

namespace {

const double kSqrt3 = std::sqrt(3.0);

std::vector<Point2> random_points(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> d(0.0, 10.0);
  std::vector<Point2> pts(n);
  for (auto& p : pts) p = {d(rng), d(rng)};
  return pts;
}

double min_pairwise_distance(const std::vector<Point2>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, dist(pts[i], pts[j]));
  return best;
}

}  // namespace

TEST_CASE("torricelli_point: equilateral triangle") {
  Point2 a{0, 0}, b{1, 0}, c{0.5, kSqrt3 / 2};
  auto r = torricelli_point(a, b, c);
  CHECK_FALSE(r.degenerate);
  CHECK(r.point.x == doctest::Approx(0.5));
  CHECK(r.point.y == doctest::Approx(kSqrt3 / 6));
  CHECK(r.smt3 == doctest::Approx(kSqrt3));  // 3 * circumradius = 3/sqrt(3)
}

TEST_CASE("torricelli_point: obtuse (>= 120 degrees) collapses to the vertex") {
  // Angle at the origin is 150 degrees.
  Point2 a{0, 0}, b{1, 0}, c{-kSqrt3 / 2, 0.5};
  auto r = torricelli_point(a, b, c);
  CHECK(r.degenerate);
  CHECK(r.point.x == doctest::Approx(0.0));
  CHECK(r.point.y == doctest::Approx(0.0));
  CHECK(r.smt3 == doctest::Approx(dist(a, b) + dist(a, c)));

  // Exactly 120 degrees also counts as degenerate.
  Point2 c120{-0.5, kSqrt3 / 2};
  CHECK(torricelli_point(a, b, c120).degenerate);
}

TEST_CASE("torricelli_point: 120-degree angles from the interior point") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    auto pts = random_points(rng, 3);
    auto r = torricelli_point(pts[0], pts[1], pts[2]);
    const double total = dist(r.point, pts[0]) + dist(r.point, pts[1]) + dist(r.point, pts[2]);
    CHECK(total == doctest::Approx(r.smt3).epsilon(1e-9));
    if (r.degenerate) continue;
    for (int i = 0; i < 3; ++i) {
      Point2 u = pts[i] - r.point;
      Point2 v = pts[(i + 1) % 3] - r.point;
      const double angle = std::acos(dot(u, v) / (norm(u) * norm(v)));
      CHECK(angle == doctest::Approx(2.0 * M_PI / 3.0).epsilon(1e-6));
    }
  }
}

TEST_CASE("melzak_solve: equilateral triangle via the star topology") {
  std::vector<Point2> pts = {{0, 0}, {1, 0}, {0.5, kSqrt3 / 2}};
  TreeTopology star;
  star.num_vertices = 4;
  star.boundary = {0, 1, 2};
  star.edges = {{0, 3}, {1, 3}, {2, 3}};
  auto r = melzak_solve(star, pts);
  REQUIRE(r.has_value());
  CHECK(r->length == doctest::Approx(kSqrt3).epsilon(1e-12));
  CHECK(r->network.positions[3].x == doctest::Approx(0.5));
  CHECK(r->network.positions[3].y == doctest::Approx(kSqrt3 / 6));
}

TEST_CASE("melzak_solve fails on topologies whose Steiner points degenerate") {
  // Obtuse triangle: the full star has no nondegenerate realization.
  std::vector<Point2> pts = {{0, 0}, {1, 0}, {-kSqrt3, 1}};
  TreeTopology star;
  star.num_vertices = 4;
  star.boundary = {0, 1, 2};
  star.edges = {{0, 3}, {1, 3}, {2, 3}};
  CHECK_FALSE(melzak_solve(star, pts).has_value());
}

TEST_CASE("smt: unit square is 1 + sqrt(3)") {
  std::vector<Point2> square = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  auto r = smt(square);
  CHECK(r.length == doctest::Approx(1.0 + kSqrt3).epsilon(1e-9));
  // Two Steiner points of degree 3.
  int steiner = 0;
  auto deg = r.network.topology.degrees();
  for (int v = 0; v < r.network.topology.num_vertices; ++v)
    if (!r.network.topology.is_boundary(v)) {
      ++steiner;
      CHECK(deg[v] == 3);
    }
  CHECK(steiner == 2);
  CHECK(check_local_structure(r.network).passes());
}

TEST_CASE("smt: collinear and two-point degenerate inputs") {
  auto two = smt({{0, 0}, {3, 4}});
  CHECK(two.length == doctest::Approx(5.0));
  CHECK(two.network.topology.num_edges() == 1);

  auto line = smt({{0, 0}, {1, 0}, {2, 0}, {4, 0}});
  CHECK(line.length == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("melzak and relaxation agree on every topology") {
  std::mt19937_64 rng(73);
  int compared = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + trial % 2;
    auto pts = random_points(rng, n);
    if (min_pairwise_distance(pts) < 0.5) continue;
    for (const auto& topology : enumerate_binary_topologies(n)) {
      auto exact = melzak_solve(topology, pts);
      if (!exact) continue;
      auto relaxed = relax_topology(topology, pts);
      CHECK(relaxed.length() == doctest::Approx(exact->length).epsilon(1e-7));
      ++compared;
    }
  }
  // Most topologies fail the Melzak back trace for random terminals, so
  // roughly one branch per trial survives to be compared.
  CHECK(compared > 20);
}

TEST_CASE("smt never exceeds the Euclidean MST and respects the Steiner ratio") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 20; ++trial) {
    auto pts = random_points(rng, 4 + trial % 3);
    if (min_pairwise_distance(pts) < 0.5) continue;
    auto s = smt(pts);
    auto m = euclidean_mst(pts);
    CHECK(s.length <= m.length + 1e-9);
    CHECK(s.length >= kSqrt3 / 2.0 * m.length - 1e-9);
  }
}

TEST_CASE("smt guard") {
  std::vector<Point2> many(9);
  for (int i = 0; i < 9; ++i) many[i] = {static_cast<double>(i), static_cast<double>(i * i)};
  CHECK_THROWS_AS(smt(many), std::invalid_argument);
}

TEST_CASE("check_local_structure flags bad networks") {
  // Right-angle path: 90 degrees < 120 degrees.
  PlaneNetwork bend;
  bend.topology.num_vertices = 3;
  bend.topology.boundary = {0, 2};
  bend.topology.edges = {{0, 1}, {1, 2}};
  bend.positions = {{0, 0}, {1, 0}, {1, 1}};
  auto report = check_local_structure(bend);
  CHECK_FALSE(report.passes());
  CHECK(report.min_angle == doctest::Approx(M_PI / 2.0));

  // Degree-4 vertex.
  PlaneNetwork cross;
  cross.topology.num_vertices = 5;
  cross.topology.boundary = {0, 1, 2, 3};
  cross.topology.edges = {{0, 4}, {1, 4}, {2, 4}, {3, 4}};
  cross.positions = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {0, 0}};
  auto r2 = check_local_structure(cross);
  CHECK_FALSE(r2.passes());
  CHECK(r2.max_degree == 4);
}
