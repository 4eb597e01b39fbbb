#pragma once

// Small dense two-phase simplex for
//   minimize c.x  subject to  A x <= b,  0 <= x <= u.
// Bland's rule is used throughout, so degenerate problems terminate.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace cubegeo::lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Problem {
  std::size_t num_vars = 0;
  std::vector<double> cost;               // size num_vars
  std::vector<std::vector<double>> rows;  // each size num_vars
  std::vector<double> rhs;                // size rows
  std::vector<double> upper;              // size num_vars, kInfinity when unbounded above

  explicit Problem(std::size_t n = 0) : num_vars(n), cost(n, 0.0), upper(n, kInfinity) {}

  void add_row(std::vector<double> row, double b) {
    if (row.size() != num_vars) throw std::invalid_argument("lp row has wrong width");
    rows.push_back(std::move(row));
    rhs.push_back(b);
  }
};

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

struct Solution {
  Status status = Status::Infeasible;
  double objective = 0.0;
  std::vector<double> x;
};

namespace detail {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  double& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const double inv = 1.0 / at(pr, pc);
    double* prow = &data_[pr * cols_];
    for (std::size_t c = 0; c < cols_; ++c) prow[c] *= inv;
    prow[pc] = 1.0;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      double* row = &data_[r * cols_];
      const double f = row[pc];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < cols_; ++c) row[c] -= f * prow[c];
      row[pc] = 0.0;
    }
  }

 private:
  std::size_t rows_, cols_;
  std::vector<double> data_;
};

inline constexpr double kPivotEps = 1e-11;

// Minimizes the objective stored in the last row over the columns allowed by
// `usable`; the rightmost column is the RHS. Returns false if unbounded.
inline Status run_simplex(Tableau& t, std::vector<std::size_t>& basis,
                          const std::vector<bool>& usable, std::size_t max_iter) {
  const std::size_t m = t.rows() - 1, rhs = t.cols() - 1, obj = m;
  for (std::size_t it = 0; it < max_iter; ++it) {
    std::size_t enter = rhs;
    for (std::size_t c = 0; c < rhs; ++c) {
      if (usable[c] && t.at(obj, c) < -kPivotEps) {
        enter = c;
        break;
      }
    }
    if (enter == rhs) return Status::Optimal;
    std::size_t leave = m;
    double best = kInfinity;
    for (std::size_t r = 0; r < m; ++r) {
      const double a = t.at(r, enter);
      if (a > kPivotEps) {
        const double ratio = t.at(r, rhs) / a;
        if (leave == m || ratio < best - 1e-14 ||
            (std::abs(ratio - best) <= 1e-14 && basis[r] < basis[leave])) {
          best = ratio;
          leave = r;
        }
      }
    }
    if (leave == m) return Status::Unbounded;
    t.pivot(leave, enter);
    basis[leave] = enter;
  }
  return Status::IterationLimit;
}

}  // namespace detail

inline Solution solve(const Problem& p, std::size_t max_iter = 10000) {
  const std::size_t n = p.num_vars;
  if (p.cost.size() != n || p.upper.size() != n || p.rows.size() != p.rhs.size()) {
    throw std::invalid_argument("lp problem dimensions are inconsistent");
  }
  // Collect rows including finite upper bounds.
  std::vector<std::vector<double>> rows = p.rows;
  std::vector<double> rhs = p.rhs;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::isfinite(p.upper[j])) {
      std::vector<double> row(n, 0.0);
      row[j] = 1.0;
      rows.push_back(std::move(row));
      rhs.push_back(p.upper[j]);
    }
  }
  const std::size_t m = rows.size();
  std::size_t num_art = 0;
  for (double b : rhs) num_art += b < 0 ? 1 : 0;

  // Columns: x (n) | slack (m) | artificial (num_art) | rhs
  const std::size_t art0 = n + m, rhs_col = n + m + num_art;
  detail::Tableau t(m + 1, rhs_col + 1);
  std::vector<std::size_t> basis(m);
  std::size_t next_art = art0;
  for (std::size_t r = 0; r < m; ++r) {
    const double s = rhs[r] < 0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t.at(r, j) = s * rows[r][j];
    t.at(r, n + r) = s;
    t.at(r, rhs_col) = s * rhs[r];
    if (s < 0) {
      t.at(r, next_art) = 1.0;
      basis[r] = next_art++;
    } else {
      basis[r] = n + r;
    }
  }

  std::vector<bool> usable(rhs_col, true);
  if (num_art > 0) {
    // Phase 1: minimize the sum of artificials.
    for (std::size_t r = 0; r < m; ++r) {
      if (basis[r] >= art0) {
        for (std::size_t c = 0; c <= rhs_col; ++c) t.at(m, c) -= t.at(r, c);
        t.at(m, basis[r]) = 0.0;
      }
    }
    auto st = detail::run_simplex(t, basis, usable, max_iter);
    if (st == Status::IterationLimit) return {st, 0.0, {}};
    if (-t.at(m, rhs_col) > 1e-9) return {Status::Infeasible, 0.0, {}};
    // Drive artificials out of the basis where possible.
    for (std::size_t r = 0; r < m; ++r) {
      if (basis[r] < art0) continue;
      for (std::size_t c = 0; c < art0; ++c) {
        if (std::abs(t.at(r, c)) > detail::kPivotEps) {
          t.pivot(r, c);
          basis[r] = c;
          break;
        }
      }
    }
    for (std::size_t c = art0; c < rhs_col; ++c) usable[c] = false;
  }

  // Phase 2 objective row: reduced costs of c.
  for (std::size_t c = 0; c <= rhs_col; ++c) t.at(m, c) = 0.0;
  for (std::size_t j = 0; j < n; ++j) t.at(m, j) = p.cost[j];
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t b = basis[r];
    const double cb = b < n ? p.cost[b] : 0.0;
    if (cb == 0.0) continue;
    for (std::size_t c = 0; c <= rhs_col; ++c) t.at(m, c) -= cb * t.at(r, c);
  }
  auto st = detail::run_simplex(t, basis, usable, max_iter);
  if (st != Status::Optimal) return {st, 0.0, {}};

  Solution sol{Status::Optimal, 0.0, std::vector<double>(n, 0.0)};
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < n) sol.x[basis[r]] = t.at(r, rhs_col);
  }
  for (std::size_t j = 0; j < n; ++j) {
    sol.x[j] = std::max(sol.x[j], 0.0);
    if (std::isfinite(p.upper[j])) sol.x[j] = std::min(sol.x[j], p.upper[j]);
    sol.objective += p.cost[j] * sol.x[j];
  }
  return sol;
}

}  // namespace cubegeo::lp
