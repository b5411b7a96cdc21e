#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "optnet/geometry.hpp"
#include "optnet/metric_space.hpp"

namespace optnet {

// Per-instance ratio report: sr = smt/mst, sgr = mf/mst, ssr = mf/smt.
struct RatioReport {
  std::string description;
  std::vector<Point2> points;
  double mst = 0.0;
  double smt = 0.0;
  double mf = 0.0;
  double sr = 1.0;
  double sgr = 1.0;
  double ssr = 1.0;
};

// Computes mst/smt/mf and all three ratios for plane points (2 <= n <= 8)
// and asserts the invariant chain mf <= smt <= mst, sr > 1/2,
// sgr >= n/(2n-2) within floating slack.
RatioReport ratio_report(const std::vector<Point2>& points);

// Steiner-Gromov ratio of a finite metric space: mf / mst, both exact; the
// mst is Kruskal on the complete distance graph. Asserts the Pakhomova
// bound sgr >= n/(2n-2) >= 1/2.
Rat sgr_metric(const FiniteMetricSpace& space);

enum class RatioKind { Sr, Sgr, Ssr };

// Randomized empirical search for the degree-n ratio infimum: seeded random
// configurations in the unit square, each followed by a perturbation
// descent (coordinate-wise Gaussian, decaying scale, 50 steps). Returns the
// worst (smallest) ratio found; reproducible for a fixed seed. Guard:
// n <= 7 for sr/ssr, n <= 8 for sgr.
struct RatioSearchResult {
  RatioReport worst;
  double ratio = 1.0;
  int trial = -1;  // restart index that produced the minimum
};
RatioSearchResult ratio_search(RatioKind kind, int n, int trials, std::uint64_t seed);

}  // namespace optnet
