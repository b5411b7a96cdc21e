#include "optnet/lp.hpp"

#include <stdexcept>

namespace optnet {
namespace {

// Tableau simplex over exact rationals. Standard form:
//   minimize c.y  s.t.  T y = d,  y >= 0,  d >= 0,
// with free variables already split into positive/negative parts.
class Simplex {
 public:
  Simplex(std::vector<std::vector<Rat>> rows, std::vector<Rat> rhs, std::vector<Rat> cost)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), cost_(std::move(cost)),
        m_(static_cast<int>(rows_.size())),
        n_(static_cast<int>(cost_.size())) {}

  LpStatus run(std::vector<Rat>& solution, Rat& value) {
    // Phase 1: artificial variable per row.
    basis_.assign(m_, -1);
    std::vector<Rat> phase1_cost(n_ + m_, 0);
    for (int i = 0; i < m_; ++i) {
      rows_[i].resize(n_ + m_, Rat(0));
      rows_[i][n_ + i] = 1;
      basis_[i] = n_ + i;
      phase1_cost[n_ + i] = 1;
    }
    const int total = n_ + m_;
    if (!optimize(phase1_cost, total)) return LpStatus::Unbounded;  // cannot happen in phase 1
    Rat phase1_value = 0;
    for (int i = 0; i < m_; ++i)
      if (basis_[i] >= n_) phase1_value += rhs_[i];
    if (phase1_value != 0) return LpStatus::Infeasible;
    // Drive remaining artificials out of the basis where possible.
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      int enter = -1;
      for (int j = 0; j < n_; ++j)
        if (rows_[i][j] != 0) {
          enter = j;
          break;
        }
      if (enter >= 0) pivot(i, enter);
    }
    // Drop redundant rows still carried by an artificial, and the artificial columns.
    int keep = 0;
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] >= n_) continue;
      if (keep != i) {
        rows_[keep] = std::move(rows_[i]);
        rhs_[keep] = rhs_[i];
        basis_[keep] = basis_[i];
      }
      rows_[keep].resize(n_);
      ++keep;
    }
    m_ = keep;
    rows_.resize(m_);
    rhs_.resize(m_);
    basis_.resize(m_);
    // Phase 2 over the original columns only.
    if (!optimize(cost_, n_)) return LpStatus::Unbounded;
    solution.assign(n_, Rat(0));
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_) solution[basis_[i]] = rhs_[i];
    value = 0;
    for (int j = 0; j < n_; ++j) value += cost_[j] * solution[j];
    return LpStatus::Optimal;
  }

 private:
  void pivot(int row, int col) {
    Rat p = rows_[row][col];
    for (auto& x : rows_[row]) x /= p;
    rhs_[row] /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == row || rows_[i][col] == 0) continue;
      Rat f = rows_[i][col];
      for (std::size_t j = 0; j < rows_[i].size(); ++j) rows_[i][j] -= f * rows_[row][j];
      rhs_[i] -= f * rhs_[row];
    }
    basis_[row] = col;
  }

  // Dantzig's rule (most negative reduced cost) for speed, falling back to
  // Bland's anti-cycling rule after a streak of degenerate pivots; leaving =
  // tightest ratio, ties to the lowest-index basic variable (Bland-safe).
  bool optimize(const std::vector<Rat>& cost, int usable_cols) {
    constexpr int kDegenerateStreakLimit = 40;
    int degenerate_streak = 0;
    std::vector<char> is_basic(rows_.empty() ? 0 : rows_[0].size(), 0);
    for (;;) {
      is_basic.assign(is_basic.size(), 0);
      for (int i = 0; i < m_; ++i) is_basic[basis_[i]] = 1;
      const bool bland = degenerate_streak >= kDegenerateStreakLimit;
      int enter = -1;
      Rat enter_reduced;
      for (int j = 0; j < usable_cols; ++j) {
        if (is_basic[j]) continue;
        Rat r = cost[j];
        for (int i = 0; i < m_; ++i) {
          const Rat& cb = cost[basis_[i]];
          if (cb != 0 && rows_[i][j] != 0) r -= cb * rows_[i][j];
        }
        if (r < 0 && (enter < 0 || r < enter_reduced)) {
          enter = j;
          enter_reduced = std::move(r);
          if (bland) break;  // lowest index suffices
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best_ratio = 0;
      for (int i = 0; i < m_; ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rat ratio = rhs_[i] / rows_[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded direction
      degenerate_streak = best_ratio == 0 ? degenerate_streak + 1 : 0;
      pivot(leave, enter);
    }
  }

  std::vector<std::vector<Rat>> rows_;
  std::vector<Rat> rhs_;
  std::vector<Rat> cost_;
  int m_, n_;
  std::vector<int> basis_;
};

}  // namespace

LpSolution lp_solve(const LpProblem& problem) {
  const int n = problem.num_vars();
  const int m = problem.num_constraints();
  if (static_cast<int>(problem.nonneg.size()) != n)
    throw std::invalid_argument("lp_solve: nonneg size mismatch");
  for (const auto& row : problem.constraints)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("lp_solve: constraint width mismatch");
  if (!problem.equality.empty() && static_cast<int>(problem.equality.size()) != m)
    throw std::invalid_argument("lp_solve: equality size mismatch");

  // Column mapping: nonneg variable -> one column; free variable -> pair (+,-).
  std::vector<int> pos_col(n), neg_col(n, -1);
  int cols = 0;
  for (int j = 0; j < n; ++j) {
    pos_col[j] = cols++;
    if (!problem.nonneg[j]) neg_col[j] = cols++;
  }
  // A x - s = b with a slack s >= 0 per inequality row; normalize rhs >= 0.
  int slacks = 0;
  std::vector<int> slack_col(m, -1);
  for (int i = 0; i < m; ++i)
    if (problem.equality.empty() || !problem.equality[i]) slack_col[i] = slacks++;
  std::vector<std::vector<Rat>> rows(m, std::vector<Rat>(cols + slacks, Rat(0)));
  std::vector<Rat> rhs(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      rows[i][pos_col[j]] = problem.constraints[i][j];
      if (neg_col[j] >= 0) rows[i][neg_col[j]] = -problem.constraints[i][j];
    }
    if (slack_col[i] >= 0) rows[i][cols + slack_col[i]] = -1;
    rhs[i] = problem.bounds[i];
    if (rhs[i] < 0) {
      for (auto& x : rows[i]) x = -x;
      rhs[i] = -rhs[i];
    }
  }
  std::vector<Rat> cost(cols + slacks, Rat(0));
  for (int j = 0; j < n; ++j) {
    cost[pos_col[j]] = problem.objective[j];
    if (neg_col[j] >= 0) cost[neg_col[j]] = -problem.objective[j];
  }

  Simplex simplex(std::move(rows), std::move(rhs), std::move(cost));
  std::vector<Rat> y;
  Rat value;
  LpSolution result;
  result.status = simplex.run(y, value);
  if (result.status != LpStatus::Optimal) return result;
  result.value = value;
  result.x.resize(n);
  for (int j = 0; j < n; ++j) {
    result.x[j] = y[pos_col[j]];
    if (neg_col[j] >= 0) result.x[j] -= y[neg_col[j]];
  }
  return result;
}

}  // namespace optnet
