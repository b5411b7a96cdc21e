#include "optnet/metric_space.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace optnet {

Rat FiniteMetricSpace::max_distance() const {
  Rat best = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) best = std::max(best, dist[i][j]);
  return best;
}

std::string MetricViolation::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::NotSquare: out << "matrix is not square (row " << i << ")"; break;
    case Kind::Asymmetry: out << "asymmetry at (" << i << "," << j << ")"; break;
    case Kind::NegativeEntry: out << "negative entry at (" << i << "," << j << ")"; break;
    case Kind::NonzeroDiagonal: out << "nonzero diagonal at (" << i << "," << i << ")"; break;
    case Kind::ZeroOffDiagonal: out << "zero off-diagonal at (" << i << "," << j << ")"; break;
    case Kind::Triangle:
      out << "triangle violation at (" << i << "," << k << ") via " << j;
      break;
  }
  return out.str();
}

MetricValidation validate_metric(const std::vector<std::vector<Rat>>& matrix,
                                 std::vector<std::string> labels) {
  MetricValidation result;
  const int n = static_cast<int>(matrix.size());
  if (n < 2) {
    result.violations.push_back({MetricViolation::Kind::NotSquare, n});
    return result;
  }
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(matrix[i].size()) != n) {
      result.violations.push_back({MetricViolation::Kind::NotSquare, i});
      return result;
    }
  Rat max_dist = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) max_dist = std::max(max_dist, matrix[i][j]);
  const Rat eps = rat_from_double(kMetricEps) * max_dist;

  for (int i = 0; i < n; ++i) {
    if (matrix[i][i] != 0)
      result.violations.push_back({MetricViolation::Kind::NonzeroDiagonal, i, i});
    for (int j = i + 1; j < n; ++j) {
      if (matrix[i][j] != matrix[j][i])
        result.violations.push_back({MetricViolation::Kind::Asymmetry, i, j});
      if (matrix[i][j] < 0)
        result.violations.push_back({MetricViolation::Kind::NegativeEntry, i, j});
      else if (matrix[i][j] == 0)
        result.violations.push_back({MetricViolation::Kind::ZeroOffDiagonal, i, j});
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = i + 1; k < n; ++k) {
        if (j == i || j == k) continue;
        if (matrix[i][k] > matrix[i][j] + matrix[j][k] + eps)
          result.violations.push_back({MetricViolation::Kind::Triangle, i, j, k});
      }
  if (result.violations.empty()) {
    result.ok = true;
    FiniteMetricSpace space;
    space.n = n;
    space.dist = matrix;
    space.labels = std::move(labels);
    result.space = std::move(space);
  }
  return result;
}

FiniteMetricSpace make_metric_space(const std::vector<std::vector<Rat>>& matrix,
                                    std::vector<std::string> labels) {
  auto validation = validate_metric(matrix, std::move(labels));
  if (!validation.ok) {
    std::ostringstream out;
    out << "invalid metric:";
    for (const auto& v : validation.violations) out << " " << v.describe() << ";";
    throw std::invalid_argument(out.str());
  }
  return *std::move(validation.space);
}

FiniteMetricSpace make_metric_space_from_doubles(const std::vector<std::vector<double>>& matrix) {
  std::vector<std::vector<Rat>> exact(matrix.size());
  for (std::size_t i = 0; i < matrix.size(); ++i)
    for (double x : matrix[i]) exact[i].push_back(rat_from_double(x));
  return make_metric_space(exact);
}

Rat gromov_product(const FiniteMetricSpace& space, int i, int j, int k) {
  if (i < 0 || j < 0 || k < 0 || i >= space.n || j >= space.n || k >= space.n)
    throw std::invalid_argument("gromov_product: index out of range");
  if (i == j || i == k || j == k)
    throw std::invalid_argument("gromov_product: indices must be distinct");
  return (space.at(i, j) + space.at(i, k) - space.at(j, k)) / 2;
}

AdditivityReport check_four_point(const FiniteMetricSpace& space) {
  AdditivityReport report;
  if (space.n <= 3) return report;
  const Rat eps = rat_from_double(kMetricEps) * space.max_distance();
  bool additive = true;
  bool pseudo = true;
  for (int i = 0; i < space.n && pseudo; ++i)
    for (int j = i + 1; j < space.n && pseudo; ++j)
      for (int k = j + 1; k < space.n && pseudo; ++k)
        for (int l = k + 1; l < space.n; ++l) {
          std::array<Rat, 3> sums = {space.at(i, j) + space.at(k, l),
                                     space.at(i, k) + space.at(j, l),
                                     space.at(i, l) + space.at(j, k)};
          std::sort(sums.begin(), sums.end());
          const bool top_equal = sums[2] - sums[1] <= eps;
          const bool low_equal = sums[1] - sums[0] <= eps;
          if (!top_equal) {
            additive = false;
            if (!low_equal) {
              pseudo = false;
              report.witness = {i, j, k, l};
              break;
            }
          }
        }
  report.cls = additive ? AdditivityClass::Additive
               : pseudo ? AdditivityClass::PseudoAdditive
                        : AdditivityClass::Neither;
  return report;
}

Rat KuratowskiImage::linf_distance(int i, int j) const {
  Rat best = 0;
  for (std::size_t c = 0; c < points[i].size(); ++c) {
    Rat d = points[i][c] - points[j][c];
    if (d < 0) d = -d;
    best = std::max(best, d);
  }
  return best;
}

KuratowskiImage kuratowski_embed(const FiniteMetricSpace& space) {
  return {space.dist};
}

Rat half_perimeter(const FiniteMetricSpace& space, const std::vector<int>& order) {
  const int n = space.n;
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("half_perimeter: order must list all points");
  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("half_perimeter: order is not a permutation cycle");
    seen[v] = 1;
  }
  Rat sum = 0;
  for (int i = 0; i < n; ++i) sum += space.at(order[i], order[(i + 1) % n]);
  return sum / 2;
}

MinHalfPerimeter min_half_perimeter(const FiniteMetricSpace& space) {
  const int n = space.n;
  if (n > 11) throw std::invalid_argument("min_half_perimeter: size guard exceeded");
  std::vector<int> rest(n - 1);
  for (int i = 1; i < n; ++i) rest[i - 1] = i;
  MinHalfPerimeter best;
  bool first = true;
  std::vector<int> order(n);
  order[0] = 0;
  do {
    // Quotient direction: keep the representative with order[1] < order[n-1].
    if (n > 2 && rest.front() > rest.back()) continue;
    std::copy(rest.begin(), rest.end(), order.begin() + 1);
    Rat value = half_perimeter(space, order);
    if (first || value < best.value || (value == best.value && order < best.order)) {
      best = {value, order};
      first = false;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

FiniteMetricSpace metric_from_weighted_tree(const WeightedTree& tree) {
  if (!tree.topology.is_tree())
    throw std::invalid_argument("metric_from_weighted_tree: topology is not a tree");
  auto dist = tree.vertex_distances();
  const auto& boundary = tree.topology.boundary;
  const int n = static_cast<int>(boundary.size());
  std::vector<std::vector<Rat>> matrix(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) matrix[i][j] = dist[boundary[i]][boundary[j]];
  return make_metric_space(matrix);
}

}  // namespace optnet
