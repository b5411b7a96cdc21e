#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "optnet/graph.hpp"
#include "optnet/rational.hpp"

namespace optnet {

/// Validated finite metric space with exact rational distances.
struct FiniteMetricSpace {
  int n = 0;
  std::vector<std::vector<Rat>> dist;
  std::vector<std::string> labels;

  const Rat& at(int i, int j) const { return dist[i][j]; }
  double at_d(int i, int j) const { return to_double(dist[i][j]); }
  Rat max_distance() const;
};

struct MetricViolation {
  enum class Kind { NotSquare, Asymmetry, NegativeEntry, NonzeroDiagonal, ZeroOffDiagonal, Triangle };
  Kind kind;
  int i = -1, j = -1, k = -1;
  std::string describe() const;
};

struct MetricValidation {
  bool ok = false;
  std::vector<MetricViolation> violations;
  std::optional<FiniteMetricSpace> space;
};

/// Relative tolerance used by metric validation and additivity tests.
inline constexpr double kMetricEps = 1e-9;

/// Checks symmetry, positivity and the triangle inequality (within
/// kMetricEps relative to the largest distance); lists every violation.
MetricValidation validate_metric(const std::vector<std::vector<Rat>>& matrix,
                                 std::vector<std::string> labels = {});
/// Throwing variant.
FiniteMetricSpace make_metric_space(const std::vector<std::vector<Rat>>& matrix,
                                    std::vector<std::string> labels = {});
FiniteMetricSpace make_metric_space_from_doubles(const std::vector<std::vector<double>>& matrix);

/// (p_j, p_k)_{p_i} = (rho_ij + rho_ik - rho_jk) / 2.
Rat gromov_product(const FiniteMetricSpace& space, int i, int j, int k);

enum class AdditivityClass { Additive, PseudoAdditive, Neither };

struct AdditivityReport {
  AdditivityClass cls = AdditivityClass::Additive;
  std::optional<std::array<int, 4>> witness;  // violating 4-tuple when cls == Neither
  bool additive() const { return cls == AdditivityClass::Additive; }
};

/// Four-point rule: for each 4-tuple the two largest of the three pair sums
/// must be equal (additive); weak rule asks only that some two are equal
/// (pseudo-additive). Spaces with n <= 3 are additive by convention.
AdditivityReport check_four_point(const FiniteMetricSpace& space);

struct KuratowskiImage {
  std::vector<std::vector<Rat>> points;  // point i = row i of the distance matrix

  Rat linf_distance(int i, int j) const;
};

/// Rows of the distance matrix as points of R^n with the max norm; an exact isometry.
KuratowskiImage kuratowski_embed(const FiniteMetricSpace& space);

/// Half-perimeter of the tour visiting points in the given cyclic order.
Rat half_perimeter(const FiniteMetricSpace& space, const std::vector<int>& order);

struct MinHalfPerimeter {
  Rat value;
  std::vector<int> order;
};

/// Scans all (n-1)!/2 cyclic orders (position 0 fixed, direction quotiented);
/// ties broken by lexicographically smallest order.
MinHalfPerimeter min_half_perimeter(const FiniteMetricSpace& space);

/// Boundary restriction of d_omega; throws if it is not a metric.
FiniteMetricSpace metric_from_weighted_tree(const WeightedTree& tree);

}  // namespace optnet
