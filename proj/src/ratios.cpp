#include "optnet/ratios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "optnet/fillings.hpp"
#include "optnet/graph.hpp"
#include "optnet/steiner.hpp"

namespace optnet {
namespace {

double complete_mst(const std::vector<Point2>& points) {
  const int n = static_cast<int>(points.size());
  WeightedGraph graph;
  graph.num_vertices = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) graph.add_edge(i, j, dist(points[i], points[j]));
  return kruskal_mst(graph).weight;
}

FiniteMetricSpace metric_from_points(const std::vector<Point2>& points) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d[i][j] = d[j][i] = rat_from_double(dist(points[i], points[j]));
  return make_metric_space(d);
}

// mf with closed forms for n <= 4 (triangle half-perimeter, four-point
// pairing formula); exact LP otherwise.
double mf_value(const std::vector<Point2>& points) {
  const int n = static_cast<int>(points.size());
  if (n == 2) return dist(points[0], points[1]);
  if (n == 3) {
    return 0.5 * (dist(points[0], points[1]) + dist(points[0], points[2]) +
                  dist(points[1], points[2]));
  }
  if (n == 4) {
    const double s1 = dist(points[0], points[1]) + dist(points[2], points[3]);
    const double s2 = dist(points[0], points[2]) + dist(points[1], points[3]);
    const double s3 = dist(points[0], points[3]) + dist(points[1], points[2]);
    return 0.5 * (std::min({s1, s2, s3}) + std::max({s1, s2, s3}));
  }
  return to_double(mf(metric_from_points(points)).value);
}

int thread_budget() {
  if (const char* env = std::getenv("OPTNET_THREADS")) {
    const int t = std::atoi(env);
    if (t >= 1) return t;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(std::min<unsigned>(hc, 8));
}

}  // namespace

RatioReport ratio_report(const std::vector<Point2>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 2 || n > 8) throw std::invalid_argument("ratio_report: need 2 <= n <= 8");

  RatioReport report;
  {
    std::ostringstream desc;
    desc << n << " plane points";
    report.description = desc.str();
  }
  report.points = points;
  report.mst = complete_mst(points);
  report.smt = smt(points).length;
  report.mf = mf_value(points);
  report.sr = report.smt / report.mst;
  report.sgr = report.mf / report.mst;
  report.ssr = report.mf / report.smt;

  const double slack = 1e-9 * report.mst;
  const double pakhomova = static_cast<double>(n) / (2.0 * n - 2.0);
  if (!(report.mf <= report.smt + slack && report.smt <= report.mst + slack))
    throw std::logic_error("ratio_report: mf <= smt <= mst violated");
  if (!(report.sr > 0.5 && report.sr <= 1.0 + 1e-9))
    throw std::logic_error("ratio_report: sr out of (1/2, 1]");
  if (!(report.sgr >= pakhomova - 1e-9))
    throw std::logic_error("ratio_report: Pakhomova bound violated");
  return report;
}

Rat sgr_metric(const FiniteMetricSpace& space) {
  if (space.n < 2) throw std::invalid_argument("sgr_metric: need n >= 2");
  const Rat mst = kruskal_mst_exact(space.dist);
  const Rat value = mf(space).value / mst;
  const Rat bound(space.n, 2 * space.n - 2);
  if (value < bound || 2 * value < 1) throw std::logic_error("sgr_metric: lower bound violated");
  return value;
}

namespace {

double search_ratio(RatioKind kind, const std::vector<Point2>& points) {
  const double mst = complete_mst(points);
  switch (kind) {
    case RatioKind::Sr:
      return smt(points).length / mst;
    case RatioKind::Sgr:
      return mf_value(points) / mst;
    case RatioKind::Ssr:
      return mf_value(points) / smt(points).length;
  }
  throw std::invalid_argument("search_ratio: unknown kind");
}

bool well_separated(const std::vector<Point2>& points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (dist(points[i], points[j]) < 1e-3) return false;
  return true;
}

}  // namespace

RatioSearchResult ratio_search(RatioKind kind, int n, int trials, std::uint64_t seed) {
  if (trials <= 0) throw std::invalid_argument("ratio_search: trial budget must be positive");
  const int nmax = kind == RatioKind::Sgr ? 8 : 7;
  if (n < 2 || n > nmax) throw std::invalid_argument("ratio_search: size guard exceeded");

  constexpr int kDescentSteps = 50;
  std::vector<double> best_ratio(trials);
  std::vector<std::vector<Point2>> best_points(trials);

  auto run_trial = [&](int trial) {
    // Independent per-trial stream so parallel scheduling cannot change results.
    std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(trial + 1)));
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<Point2> current(n);
    do {
      for (auto& p : current) p = {uni(rng), uni(rng)};
    } while (!well_separated(current));
    double ratio = search_ratio(kind, current);

    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int step = 0; step < kDescentSteps; ++step) {
      const double scale = 0.15 * std::pow(0.92, step);
      std::vector<Point2> candidate = current;
      for (auto& p : candidate) {
        p.x += scale * gauss(rng);
        p.y += scale * gauss(rng);
      }
      if (!well_separated(candidate)) continue;
      const double candidate_ratio = search_ratio(kind, candidate);
      if (candidate_ratio < ratio) {
        ratio = candidate_ratio;
        current = std::move(candidate);
      }
    }
    best_ratio[trial] = ratio;
    best_points[trial] = std::move(current);
  };

  const int threads = std::min(thread_budget(), trials);
  if (threads <= 1) {
    for (int t = 0; t < trials; ++t) run_trial(t);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (int t = w; t < trials; t += threads) run_trial(t);
      });
    for (auto& th : pool) th.join();
  }

  // Deterministic reduction: smallest ratio, ties to the lowest trial index.
  int argmin = 0;
  for (int t = 1; t < trials; ++t)
    if (best_ratio[t] < best_ratio[argmin]) argmin = t;

  RatioSearchResult result;
  result.ratio = best_ratio[argmin];
  result.trial = argmin;
  result.worst = ratio_report(best_points[argmin]);
  {
    std::ostringstream desc;
    desc << "ratio_search kind=" << static_cast<int>(kind) << " n=" << n << " trials=" << trials
         << " seed=" << seed << " trial=" << argmin;
    result.worst.description = desc.str();
  }
  return result;
}

}  // namespace optnet
