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

#include "ocrs/lp_engine.h"

#include <algorithm>
#include <cmath>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"

namespace ocrs {
namespace {

struct Budget {
  double eps_prime;
  double eta;
  double log_inv_delta;
  double gap_tolerance;
  int64_t samples;
};

// One pricing round's outcome.
struct Priced {
  LpColumn column;
  bool cached;
};

// Column generation shared by both pipelines. `price` maps a dual vector to
// the id of the column to test; `evaluate` fills in its q.
template <typename Id>
absl::StatusOr<std::vector<std::pair<Id, double>>> RunColumnGeneration(
    const std::vector<double>& x, const Id& initial,
    const std::function<absl::StatusOr<Id>(const std::vector<double>&)>& price,
    const std::function<absl::StatusOr<std::vector<double>>(const Id&)>&
        evaluate,
    int cap, double tol, LpBuildReport* report) {
  std::vector<Id> ids;
  std::vector<std::vector<double>> qs;
  absl::flat_hash_map<Id, int> cache;
  auto add = [&](const Id& id, std::vector<double> q) {
    cache[id] = static_cast<int>(ids.size());
    ids.push_back(id);
    qs.push_back(std::move(q));
    report->columns.push_back(ColumnIdString({id, {}}));
  };
  absl::StatusOr<std::vector<double>> q0 = evaluate(initial);
  if (!q0.ok()) return q0.status();
  add(initial, *std::move(q0));

  LpSolution sol;
  report->iteration_cap = cap;
  for (int iter = 0;; ++iter) {
    absl::StatusOr<LpSolution> s = SolveRestricted(qs, x);
    if (!s.ok()) return s.status();
    sol = *std::move(s);
    report->beta_trajectory.push_back(sol.beta);
    report->gamma_trajectory.push_back(sol.gamma);
    report->iterations = iter + 1;
    absl::StatusOr<Id> id = price(sol.mu);
    if (!id.ok()) return id.status();
    std::vector<double> q;
    if (auto it = cache.find(*id); it != cache.end()) {
      q = qs[it->second];
    } else {
      absl::StatusOr<std::vector<double>> e = evaluate(*id);
      if (!e.ok()) return e.status();
      q = *std::move(e);
    }
    double value = 0.0;
    for (size_t i = 0; i < q.size(); ++i) value += q[i] * sol.mu[i];
    report->certificate = value;
    if (value <= sol.gamma + tol || cache.contains(*id)) {
      report->converged = true;
      break;
    }
    if (static_cast<int>(ids.size()) >= cap) {
      report->hit_cap = true;
      LOG(WARNING) << "column generation hit its cap of " << cap
                   << " columns; returning the best mixture so far";
      break;
    }
    add(*id, std::move(q));
  }
  report->beta = sol.beta;
  report->gamma = sol.gamma;
  report->mu = sol.mu;

  std::vector<std::pair<Id, double>> mixture;
  double total = 0.0;
  for (size_t c = 0; c < ids.size(); ++c) {
    if (sol.lambda[c] > 1e-15) {
      mixture.push_back({ids[c], sol.lambda[c]});
      total += sol.lambda[c];
    }
  }
  for (auto& [id, lambda] : mixture) lambda /= total;
  return mixture;
}

absl::Status CheckBuildConfig(const Matroid& m, const Prior& p,
                              const LpBuildConfig& cfg) {
  if (!(cfg.eps > 0.0 && cfg.eps < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("eps = %g outside (0,1)", cfg.eps));
  }
  if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("alpha = %g outside (0,1]", cfg.alpha));
  }
  if (p.n() != m.ground_size()) {
    return absl::InvalidArgumentError("prior and matroid sizes differ");
  }
  if (m.ground_size() < 1) return absl::InvalidArgumentError("empty ground set");
  return absl::OkStatus();
}

// x and the per-column sample count, exact or estimated.
absl::StatusOr<std::vector<double>> Marginals(const Prior& p,
                                              const LpBuildConfig& cfg,
                                              int64_t samples, Rng& rng) {
  if (cfg.mode == ColumnMode::kExact) {
    std::optional<std::vector<double>> x = p.ExactMarginals();
    if (!x || !p.ExactSupport()) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "exact columns need a prior with a listed support; got %s",
          p.kind()));
    }
    return *x;
  }
  return EstimateXq([](const SubsetMask& a, Rng&) { return SubsetMask(a.n()); },
                    p, samples, rng)
      .x;
}

absl::StatusOr<Budget> MakeBudget(const Prior& p, const LpBuildConfig& cfg,
                                  double eps_share, double log_columns,
                                  Rng& rng) {
  Budget b;
  const int n = p.n();
  b.eps_prime = cfg.eps / eps_share;
  b.eta = b.eps_prime * cfg.alpha;
  // delta = eps' / (n (#columns + 1)).
  b.log_inv_delta = std::log(static_cast<double>(n)) + log_columns -
                    std::log(b.eps_prime);
  b.gap_tolerance = std::min(1e-6, cfg.eps * cfg.alpha / 10.0);
  b.samples = 0;
  if (cfg.mode == ColumnMode::kMonteCarlo) {
    double p_min;
    if (cfg.p_min) {
      p_min = *cfg.p_min;
    } else {
      absl::StatusOr<PMinResult> r = PMin(p, &rng);
      if (!r.ok()) return r.status();
      p_min = r->value;
    }
    b.samples = cfg.sample_override
                    ? *cfg.sample_override
                    : CoefficientSampleCount(b.eta, b.log_inv_delta, p_min);
  }
  return b;
}

void FillBudget(const LpBuildConfig& cfg, const Budget& b,
                const std::vector<double>& x, LpBuildReport* report) {
  report->eps = cfg.eps;
  report->eps_prime = b.eps_prime;
  report->eta = b.eta;
  report->log_inv_delta = b.log_inv_delta;
  report->gap_tolerance = b.gap_tolerance;
  report->samples_per_column = b.samples;
  report->x = x;
}

// Exact q from the support, or an estimate from `samples` draws.
absl::StatusOr<std::vector<double>> ColumnQ(
    const Prior& p, const LpBuildConfig& cfg, int64_t samples,
    const std::function<absl::StatusOr<std::vector<double>>(const SubsetMask&)>&
        exact_given_a,
    const SchemeRunner& runner, Rng& rng) {
  if (cfg.mode == ColumnMode::kMonteCarlo) {
    return EstimateXq(runner, p, samples, rng).q;
  }
  std::vector<double> q(p.n(), 0.0);
  const std::optional<std::vector<Atom>> support = p.ExactSupport();
  for (const Atom& atom : *support) {
    absl::StatusOr<std::vector<double>> given = exact_given_a(atom.set);
    if (!given.ok()) return given.status();
    for (int i = 0; i < p.n(); ++i) q[i] += atom.prob * (*given)[i];
  }
  return q;
}

}  // namespace

std::string ColumnIdString(const LpColumn& c) {
  if (const auto* pi = std::get_if<Permutation>(&c.id)) return pi->ToString();
  return absl::StrCat(
      "w=(", absl::StrJoin(std::get<WeightVector>(c.id).values(), ","), ")");
}

absl::StatusOr<LpSolution> SolveRestricted(
    const std::vector<std::vector<double>>& columns,
    const std::vector<double>& x) {
  if (columns.empty()) return absl::InvalidArgumentError("no columns");
  const int n = static_cast<int>(x.size());
  const int k = static_cast<int>(columns.size());
  std::vector<int> live;
  for (int i = 0; i < n; ++i) {
    if (x[i] < 0.0) return absl::InvalidArgumentError("negative x");
    if (x[i] > 0.0) live.push_back(i);
  }
  if (live.empty()) return absl::InvalidArgumentError("x has no positive entry");
  for (const auto& q : columns) {
    if (static_cast<int>(q.size()) != n) {
      return absl::InvalidArgumentError("column length differs from x");
    }
  }

  // Primal: variables lambda_0..lambda_{k-1}, beta.
  LinearProgram<double> primal(k + 1);
  primal.objective[k] = 1.0;
  for (int i : live) {
    std::vector<double> row(k + 1);
    for (int c = 0; c < k; ++c) row[c] = columns[c][i];
    row[k] = -x[i];
    primal.AddRow(std::move(row), RowSense::kGe, 0.0);
  }
  {
    std::vector<double> row(k + 1, 1.0);
    row[k] = 0.0;
    primal.AddRow(std::move(row), RowSense::kEq, 1.0);
  }
  // Dual: variables mu over live elements, gamma; maximize -gamma.
  const int l = static_cast<int>(live.size());
  LinearProgram<double> dual(l + 1);
  dual.objective[l] = -1.0;
  for (int c = 0; c < k; ++c) {
    std::vector<double> row(l + 1);
    for (int t = 0; t < l; ++t) row[t] = columns[c][live[t]];
    row[l] = -1.0;
    dual.AddRow(std::move(row), RowSense::kLe, 0.0);
  }
  {
    std::vector<double> row(l + 1, 0.0);
    for (int t = 0; t < l; ++t) row[t] = x[live[t]];
    dual.AddRow(std::move(row), RowSense::kEq, 1.0);
  }

  const LpResult<double> pr = SolveLp(primal);
  const LpResult<double> dr = SolveLp(dual);
  if (pr.status != LpStatus::kOptimal || dr.status != LpStatus::kOptimal) {
    return absl::InternalError(absl::StrFormat(
        "restricted LP not solved: primal %s, dual %s",
        LpStatusName(pr.status), LpStatusName(dr.status)));
  }
  LpSolution sol;
  sol.lambda.assign(pr.x.begin(), pr.x.begin() + k);
  for (double& v : sol.lambda) v = std::max(v, 0.0);
  sol.beta = pr.x[k];
  sol.mu.assign(n, 0.0);
  for (int t = 0; t < l; ++t) sol.mu[live[t]] = std::max(dr.x[t], 0.0);
  sol.gamma = dr.x[l];
  sol.duality_gap = std::abs(sol.beta - sol.gamma);
  if (sol.duality_gap > 1e-7) {
    LOG(WARNING) << "restricted LP duality gap " << sol.duality_gap
                 << " (numerical degeneracy)";
  }
  return sol;
}

Permutation SeparationPiMu(const std::vector<double>& mu) {
  for (double v : mu) CHECK_GE(v, 0.0) << "mu must be nonnegative";
  return *Permutation::Create(DecreasingWeightOrder(mu));
}

std::vector<double> WeightGrid::values() const {
  std::vector<double> v(size());
  for (int64_t i = 0; i <= max_index; ++i) v[i] = step() * i;
  return v;
}

absl::StatusOr<WeightGrid> MakeWeightGrid(int n, double eps, double p_min) {
  if (n < 1) return absl::InvalidArgumentError("n must be >= 1");
  if (!(eps > 0.0 && eps < 1.0)) {
    return absl::InvalidArgumentError("grid eps outside (0,1)");
  }
  if (!(p_min > 0.0 && p_min <= 1.0)) {
    return absl::InvalidArgumentError("grid p_min outside (0,1]");
  }
  WeightGrid g;
  g.n = n;
  g.eps = eps;
  g.p_min = p_min;
  // The tiny slack keeps exact quotients such as 2/(0.5*1) from rounding up.
  g.max_index =
      static_cast<int64_t>(std::ceil(n / (eps * p_min) * (1.0 - 1e-12)));
  return g;
}

absl::StatusOr<WeightVector> RoundToGrid(const std::vector<double>& mu,
                                         const WeightGrid& grid) {
  if (static_cast<int>(mu.size()) != grid.n) {
    return absl::InvalidArgumentError("mu length differs from grid n");
  }
  const double step = grid.step();
  std::vector<double> out(mu.size());
  for (size_t i = 0; i < mu.size(); ++i) {
    if (!(mu[i] >= 0.0)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("mu[%d] = %g is negative", i, mu[i]));
    }
    int64_t k = static_cast<int64_t>(std::floor(mu[i] / step));
    if (step * (k + 1) <= mu[i]) ++k;
    if (k > 0 && step * k > mu[i]) --k;
    if (k > grid.max_index) {
      return absl::OutOfRangeError(absl::StrFormat(
          "mu[%d] = %g above grid maximum %g", i, mu[i], grid.max_value()));
    }
    out[i] = step * k;
  }
  return WeightVector::Create(std::move(out));
}

int64_t CoefficientSampleCount(double eta, double log_inv_delta,
                               double p_min) {
  return static_cast<int64_t>(std::ceil(2.0 * (std::log(2.0) + log_inv_delta) /
                                        (eta * eta * p_min * p_min)));
}

XqEstimate EstimateXq(const SchemeRunner& runner, const Prior& p,
                      int64_t samples, Rng& rng) {
  CHECK_GE(samples, 1);
  const int n = p.n();
  std::vector<int64_t> xc(n, 0), qc(n, 0);
  for (int64_t t = 0; t < samples; ++t) {
    const SubsetMask a = p.Sample(rng);
    a.ForEach([&](int i) { ++xc[i]; });
    runner(a, rng).ForEach([&](int i) { ++qc[i]; });
  }
  XqEstimate est;
  est.samples = samples;
  est.x.resize(n);
  est.q.resize(n);
  for (int i = 0; i < n; ++i) {
    est.x[i] = static_cast<double>(xc[i]) / samples;
    est.q[i] = static_cast<double>(qc[i]) / samples;
  }
  return est;
}

absl::StatusOr<Scheme> BuildLpScheme(const Matroid& m, const PriorPtr& p,
                                     const LpBuildConfig& cfg, Rng& rng,
                                     LpBuildReport* report) {
  if (absl::Status s = CheckBuildConfig(m, *p, cfg); !s.ok()) return s;
  LpBuildReport local;
  if (report == nullptr) report = &local;
  *report = LpBuildReport();
  report->pipeline = "greedy_orders";
  const int n = m.ground_size();
  // #columns = n!.
  const double log_columns = std::lgamma(n + 1.0) + std::log1p(std::exp(-std::lgamma(n + 1.0)));
  absl::StatusOr<Budget> budget = MakeBudget(*p, cfg, 6.0, log_columns, rng);
  if (!budget.ok()) return budget.status();
  absl::StatusOr<std::vector<double>> x =
      Marginals(*p, cfg, budget->samples, rng);
  if (!x.ok()) return x.status();
  FillBudget(cfg, *budget, *x, report);

  auto evaluate = [&](const Permutation& pi) {
    return ColumnQ(
        *p, cfg, budget->samples,
        [&](const SubsetMask& a) -> absl::StatusOr<std::vector<double>> {
          std::vector<double> sel(n, 0.0);
          GreedyOrdered(m, pi, a).ForEach([&](int i) { sel[i] = 1.0; });
          return sel;
        },
        [&](const SubsetMask& a, Rng&) { return GreedyOrdered(m, pi, a); },
        rng);
  };
  auto price = [](const std::vector<double>& mu) -> absl::StatusOr<Permutation> {
    return SeparationPiMu(mu);
  };
  const int cap = cfg.max_iterations > 0 ? cfg.max_iterations : 50 * n;
  absl::StatusOr<std::vector<std::pair<Permutation, double>>> mixture =
      RunColumnGeneration<Permutation>(*x, SeparationPiMu(*x), price, evaluate,
                                       cap, budget->gap_tolerance, report);
  if (!mixture.ok()) return mixture.status();
  return PermutationMixtureScheme{*std::move(mixture)};
}

absl::StatusOr<Scheme> BuildSecretaryReduction(const Matroid& m,
                                               const PriorPtr& p,
                                               SecretaryKind secretary,
                                               double c,
                                               const LpBuildConfig& cfg,
                                               Rng& rng,
                                               LpBuildReport* report) {
  if (absl::Status s = CheckBuildConfig(m, *p, cfg); !s.ok()) return s;
  LpBuildReport local;
  if (report == nullptr) report = &local;
  *report = LpBuildReport();
  report->pipeline = "secretary_reduction";
  report->secretary = SecretaryKindName(secretary);
  report->secretary_c = c;
  const int n = m.ground_size();
  const auto alg = MakeSecretary(secretary);

  // Grid and sample counts need p_min; the grid also covers 1/min x so that
  // rounding never leaves it.
  double p_min;
  if (cfg.p_min) {
    p_min = *cfg.p_min;
  } else {
    absl::StatusOr<PMinResult> r = PMin(*p, &rng);
    if (!r.ok()) return r.status();
    p_min = r->value;
  }
  LpBuildConfig with_pmin = cfg;
  with_pmin.p_min = p_min;
  absl::StatusOr<WeightGrid> grid0 = MakeWeightGrid(n, cfg.eps, p_min);
  if (!grid0.ok()) return grid0.status();
  // #columns = |W|^n.
  const double log_columns = n * std::log(static_cast<double>(grid0->size()));
  absl::StatusOr<Budget> budget =
      MakeBudget(*p, with_pmin, 7.0, log_columns, rng);
  if (!budget.ok()) return budget.status();
  absl::StatusOr<std::vector<double>> x =
      Marginals(*p, cfg, budget->samples, rng);
  if (!x.ok()) return x.status();
  FillBudget(cfg, *budget, *x, report);
  double min_x = 1.0;
  for (double v : *x) {
    if (v > 0.0) min_x = std::min(min_x, v);
  }
  absl::StatusOr<WeightGrid> grid =
      MakeWeightGrid(n, cfg.eps, std::min(p_min, min_x));
  if (!grid.ok()) return grid.status();
  report->grid = *grid;

  auto evaluate = [&](const WeightVector& w) {
    return ColumnQ(
        *p, cfg, budget->samples,
        [&](const SubsetMask& a) {
          return SecretarySelectionProbabilities(*alg, w, m, a);
        },
        [&](const SubsetMask& a, Rng& r) {
          return SecretaryWrap(*alg, w, m, a, DrawArrival(*alg, w, r));
        },
        rng);
  };
  auto price = [&](const std::vector<double>& mu) {
    return RoundToGrid(mu, *grid);
  };
  double sum_x = 0.0;
  for (double v : *x) sum_x += v;
  absl::StatusOr<WeightVector> initial =
      RoundToGrid(std::vector<double>(n, 1.0 / sum_x), *grid);
  if (!initial.ok()) return initial.status();
  const int cap = cfg.max_iterations > 0 ? cfg.max_iterations : 50 * n;
  absl::StatusOr<std::vector<std::pair<WeightVector, double>>> mixture =
      RunColumnGeneration<WeightVector>(*x, *initial, price, evaluate, cap,
                                        budget->gap_tolerance, report);
  if (!mixture.ok()) return mixture.status();
  return WeightMixtureScheme{secretary, *std::move(mixture)};
}

}  // namespace ocrs
