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

// Column generation for the best mixture of deterministic schemes.
//
//   (P)  max beta  s.t.  sum_c q[i][c] lambda_c >= beta x_i,  sum lambda = 1
//   (D)  min gamma s.t.  sum_i q[i][c] mu_i <= gamma,  sum_i x_i mu_i = 1
//
// Columns are greedy orders (priced by sorting on mu) or grid weight vectors
// fed to a secretary algorithm (priced by rounding mu onto the grid).

#ifndef OCRS_LP_ENGINE_H_
#define OCRS_LP_ENGINE_H_

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "ocrs/matroid.h"
#include "ocrs/prior.h"
#include "ocrs/random.h"
#include "ocrs/schemes.h"
#include "ocrs/secretary.h"
#include "ocrs/simplex.h"
#include "ocrs/subsampling.h"

namespace ocrs {

struct LpColumn {
  std::variant<Permutation, WeightVector> id;
  // q[i] = Pr[i selected], estimated or exact.
  std::vector<double> q;
};

std::string ColumnIdString(const LpColumn& c);

struct LpSolution {
  double beta = 0.0;
  std::vector<double> lambda;
  std::vector<double> mu;
  double gamma = 0.0;
  // |beta - gamma| as returned by the two solves.
  double duality_gap = 0.0;
};

inline constexpr double kLpFeasibilityTolerance = 1e-9;

// Solves (P) and (D) restricted to `columns` with the in-repo simplex.
// Elements with x_i = 0 carry no constraint and get mu_i = 0. Fails when no
// column is given, x has no positive entry, or the solver stalls.
absl::StatusOr<LpSolution> SolveRestricted(
    const std::vector<std::vector<double>>& columns,
    const std::vector<double>& x);

// Elements by decreasing mu, ties by ascending index.
Permutation SeparationPiMu(const std::vector<double>& mu);

struct WeightGrid {
  int n = 0;
  double eps = 0.0;
  double p_min = 0.0;
  // Values are step() * i for i = 0..max_index.
  int64_t max_index = 0;

  double step() const { return eps / n; }
  double max_value() const { return step() * max_index; }
  int64_t size() const { return max_index + 1; }
  std::vector<double> values() const;
};

// {eps i / n : i = 0..ceil(n / (eps p_min))}.
absl::StatusOr<WeightGrid> MakeWeightGrid(int n, double eps, double p_min);

// Per-coordinate floor onto the grid. Fails for negative coordinates or
// coordinates above max_value().
absl::StatusOr<WeightVector> RoundToGrid(const std::vector<double>& mu,
                                         const WeightGrid& grid);

// ceil(2 ln(2/delta) / (eta^2 p_min^2)), with ln(1/delta) given directly so
// tiny delta does not underflow.
int64_t CoefficientSampleCount(double eta, double log_inv_delta, double p_min);
inline int64_t CoefficientSampleCountForDelta(double eta, double delta,
                                              double p_min) {
  return CoefficientSampleCount(eta, -std::log(delta), p_min);
}

struct XqEstimate {
  std::vector<double> x;
  std::vector<double> q;
  int64_t samples = 0;
};

using SchemeRunner = std::function<SubsetMask(const SubsetMask& a, Rng& rng)>;

// Empirical Pr[i in A] and Pr[i selected] over `samples` draws of A.
XqEstimate EstimateXq(const SchemeRunner& runner, const Prior& p,
                      int64_t samples, Rng& rng);

enum class ColumnMode { kExact, kMonteCarlo };

struct LpBuildConfig {
  double eps = 0.1;
  // Target level; sets the estimation accuracy eta = eps' * alpha.
  double alpha = 0.5;
  ColumnMode mode = ColumnMode::kExact;
  std::optional<double> p_min;
  std::optional<int64_t> sample_override;
  // 0 means 50 n.
  int max_iterations = 0;
};

struct LpBuildReport {
  std::string pipeline;
  double eps = 0.0;
  double eps_prime = 0.0;
  double eta = 0.0;
  double log_inv_delta = 0.0;
  double gap_tolerance = 0.0;
  int64_t samples_per_column = 0;
  std::vector<double> x;
  std::vector<double> beta_trajectory;
  std::vector<double> gamma_trajectory;
  std::vector<std::string> columns;
  int iterations = 0;
  int iteration_cap = 0;
  bool hit_cap = false;
  bool converged = false;
  double beta = 0.0;
  double gamma = 0.0;
  std::vector<double> mu;
  // sum_i q[i][priced column] mu_i at the last pricing step.
  double certificate = 0.0;
  // Secretary pipeline only.
  std::optional<WeightGrid> grid;
  std::string secretary;
  double secretary_c = 0.0;
};

// Column generation over greedy orders; returns a permutation mixture.
absl::StatusOr<Scheme> BuildLpScheme(const Matroid& m, const PriorPtr& p,
                                     const LpBuildConfig& cfg, Rng& rng,
                                     LpBuildReport* report = nullptr);

// Column generation over grid weight vectors run through `secretary`;
// returns a weight mixture. `c` is the secretary's competitive ratio and
// only enters the report.
absl::StatusOr<Scheme> BuildSecretaryReduction(const Matroid& m,
                                               const PriorPtr& p,
                                               SecretaryKind secretary,
                                               double c,
                                               const LpBuildConfig& cfg,
                                               Rng& rng,
                                               LpBuildReport* report = nullptr);

}  // namespace ocrs

#endif  // OCRS_LP_ENGINE_H_
