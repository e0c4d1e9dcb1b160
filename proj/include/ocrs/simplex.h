// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense two-phase tableau simplex for small LPs, over double or Rational.
//
//   maximize  c.x   subject to  a_r.x (<=|>=|=) b_r,  x >= 0.
//
// Entering columns follow the largest reduced cost; after a run of
// degenerate pivots the rule switches to Bland's, which cannot cycle.

#ifndef OCRS_SIMPLEX_H_
#define OCRS_SIMPLEX_H_

#include <cstdlib>
#include <string>
#include <vector>

#include "glog/logging.h"
#include "ocrs/rational.h"

namespace ocrs {

enum class RowSense { kLe, kGe, kEq };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

inline std::string LpStatusName(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kIterationLimit:
      return "iteration_limit";
  }
  return "unknown";
}

template <typename T>
struct LinearProgram {
  struct Row {
    std::vector<T> coef;
    RowSense sense;
    T rhs;
  };
  int num_vars = 0;
  std::vector<T> objective;
  std::vector<Row> rows;

  explicit LinearProgram(int n = 0) : num_vars(n), objective(n, T(0)) {}
  void AddRow(std::vector<T> coef, RowSense sense, T rhs) {
    CHECK_EQ(static_cast<int>(coef.size()), num_vars);
    rows.push_back({std::move(coef), sense, std::move(rhs)});
  }
};

template <typename T>
struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  T objective = T(0);
  std::vector<T> x;
  int iterations = 0;
};

template <typename T>
struct SimplexTolerance {
  static T Pivot() { return T(1e-11); }
  static T Cost() { return T(1e-10); }
  static T Feasibility() { return T(1e-9); }
};
template <>
struct SimplexTolerance<Rational> {
  static Rational Pivot() { return Rational(0); }
  static Rational Cost() { return Rational(0); }
  static Rational Feasibility() { return Rational(0); }
};

namespace internal {

template <typename T>
class Tableau {
 public:
  Tableau(int rows, int cols)
      : a_(rows, std::vector<T>(cols + 1, T(0))), basis_(rows, -1), cols_(cols) {}

  std::vector<T>& row(int r) { return a_[r]; }
  T& rhs(int r) { return a_[r][cols_]; }
  int rows() const { return static_cast<int>(a_.size()); }
  int cols() const { return cols_; }
  std::vector<int>& basis() { return basis_; }

  void Pivot(int pr, int pc, std::vector<T>& obj) {
    std::vector<T>& p = a_[pr];
    const T inv = T(1) / p[pc];
    for (T& v : p) v *= inv;
    p[pc] = T(1);
    for (int r = 0; r < rows(); ++r) {
      if (r == pr || a_[r][pc] == T(0)) continue;
      const T f = a_[r][pc];
      for (int j = 0; j <= cols_; ++j) {
        if (p[j] != T(0)) a_[r][j] -= f * p[j];
      }
      a_[r][pc] = T(0);
    }
    if (obj[pc] != T(0)) {
      const T f = obj[pc];
      for (int j = 0; j <= cols_; ++j) {
        if (p[j] != T(0)) obj[j] -= f * p[j];
      }
      obj[pc] = T(0);
    }
    basis_[pr] = pc;
  }

  // Maximizes the objective whose reduced costs are in obj (size cols+1;
  // obj[cols] holds minus the current value). Columns with allowed[j] false
  // never enter.
  LpStatus Optimize(std::vector<T>& obj, const std::vector<char>& allowed,
                    int max_iterations, int* iterations) {
    const T cost_tol = SimplexTolerance<T>::Cost();
    const T piv_tol = SimplexTolerance<T>::Pivot();
    int degenerate_run = 0;
    while (true) {
      if (*iterations >= max_iterations) return LpStatus::kIterationLimit;
      const bool bland = degenerate_run > 50;
      int pc = -1;
      for (int j = 0; j < cols_; ++j) {
        if (!allowed[j] || !(obj[j] > cost_tol)) continue;
        if (pc < 0 || (!bland && obj[j] > obj[pc])) pc = j;
        if (bland) break;
      }
      if (pc < 0) return LpStatus::kOptimal;
      int pr = -1;
      T best_ratio(0);
      for (int r = 0; r < rows(); ++r) {
        if (!(a_[r][pc] > piv_tol)) continue;
        const T ratio = a_[r][cols_] / a_[r][pc];
        if (pr < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[pr])) {
          pr = r;
          best_ratio = ratio;
        }
      }
      if (pr < 0) return LpStatus::kUnbounded;
      degenerate_run = best_ratio == T(0) ? degenerate_run + 1 : 0;
      Pivot(pr, pc, obj);
      ++*iterations;
    }
  }

 private:
  std::vector<std::vector<T>> a_;
  std::vector<int> basis_;
  int cols_;
};

}  // namespace internal

template <typename T>
LpResult<T> SolveLp(const LinearProgram<T>& lp, int max_iterations = 200000) {
  const int n = lp.num_vars;
  const int m = static_cast<int>(lp.rows.size());
  // Column layout: structural | slack/surplus (one per inequality) |
  // artificial (one per >= or = row).
  std::vector<int> slack_col(m, -1), art_col(m, -1);
  int cols = n;
  std::vector<RowSense> sense(m);
  std::vector<bool> flip(m, false);
  for (int r = 0; r < m; ++r) {
    sense[r] = lp.rows[r].sense;
    if (lp.rows[r].rhs < T(0)) {
      flip[r] = true;
      if (sense[r] == RowSense::kLe) {
        sense[r] = RowSense::kGe;
      } else if (sense[r] == RowSense::kGe) {
        sense[r] = RowSense::kLe;
      }
    }
    if (sense[r] != RowSense::kEq) slack_col[r] = cols++;
  }
  const int first_art = cols;
  for (int r = 0; r < m; ++r) {
    if (sense[r] != RowSense::kLe) art_col[r] = cols++;
  }
  internal::Tableau<T> tab(m, cols);
  for (int r = 0; r < m; ++r) {
    std::vector<T>& row = tab.row(r);
    const T sign = flip[r] ? T(-1) : T(1);
    for (int j = 0; j < n; ++j) row[j] = sign * lp.rows[r].coef[j];
    tab.rhs(r) = sign * lp.rows[r].rhs;
    if (slack_col[r] >= 0) {
      row[slack_col[r]] = sense[r] == RowSense::kLe ? T(1) : T(-1);
    }
    if (art_col[r] >= 0) {
      row[art_col[r]] = T(1);
      tab.basis()[r] = art_col[r];
    } else {
      tab.basis()[r] = slack_col[r];
    }
  }

  LpResult<T> result;
  std::vector<char> allowed(cols, 1);
  // Phase 1: maximize -(sum of artificials).
  if (first_art < cols) {
    std::vector<T> obj(cols + 1, T(0));
    for (int r = 0; r < m; ++r) {
      if (art_col[r] < 0) continue;
      for (int j = 0; j <= cols; ++j) {
        if (j != art_col[r]) obj[j] += tab.row(r)[j];
      }
    }
    LpStatus s = tab.Optimize(obj, allowed, max_iterations, &result.iterations);
    if (s == LpStatus::kIterationLimit) {
      result.status = s;
      return result;
    }
    if (obj[cols] > SimplexTolerance<T>::Feasibility()) {
      result.status = LpStatus::kInfeasible;
      return result;
    }
    // Drive remaining artificials out of the basis.
    for (int r = 0; r < tab.rows(); ++r) {
      if (tab.basis()[r] < first_art) continue;
      int pc = -1;
      for (int j = 0; j < first_art; ++j) {
        const T v = tab.row(r)[j];
        if (v > SimplexTolerance<T>::Pivot() ||
            v < -SimplexTolerance<T>::Pivot()) {
          pc = j;
          break;
        }
      }
      if (pc >= 0) {
        std::vector<T> dummy(cols + 1, T(0));
        tab.Pivot(r, pc, dummy);
      }
    }
    for (int j = first_art; j < cols; ++j) allowed[j] = 0;
  }
  // Phase 2.
  std::vector<T> obj(cols + 1, T(0));
  for (int j = 0; j < n; ++j) obj[j] = lp.objective[j];
  for (int r = 0; r < tab.rows(); ++r) {
    const int b = tab.basis()[r];
    if (b >= n || obj[b] == T(0)) continue;
    const T f = obj[b];
    for (int j = 0; j <= cols; ++j) obj[j] -= f * tab.row(r)[j];
  }
  result.status =
      tab.Optimize(obj, allowed, max_iterations, &result.iterations);
  if (result.status != LpStatus::kOptimal) return result;
  result.x.assign(n, T(0));
  for (int r = 0; r < tab.rows(); ++r) {
    if (tab.basis()[r] < n) result.x[tab.basis()[r]] = tab.rhs(r);
  }
  result.objective = T(0);
  for (int j = 0; j < n; ++j) result.objective += lp.objective[j] * result.x[j];
  return result;
}

}  // namespace ocrs

#endif  // OCRS_SIMPLEX_H_
