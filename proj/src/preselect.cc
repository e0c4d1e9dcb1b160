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

#include "ocrs/preselect.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "boost/math/special_functions/binomial.hpp"

namespace ocrs {
namespace {

// Builder holding a greedy basis X of t; j is outside span(t) iff j is not
// in X and X + j stays independent.
std::unique_ptr<IndependentSetBuilder> BasisBuilder(const Matroid& m,
                                                    const SubsetMask& t) {
  auto builder = m.NewBuilder();
  t.ForEach([&](int e) { builder->TryAdd(e); });
  return builder;
}

bool Unspanned(const IndependentSetBuilder& basis, int j) {
  return !basis.current().Contains(j) && basis.CanAdd(j);
}

// Per-candidate statistic and threshold for the elements of s_i.
struct StepEstimate {
  std::vector<double> statistic;
  std::vector<char> qualifies;
  double threshold = 0.0;
};

class StepEvaluator {
 public:
  StepEvaluator(const Matroid& m, const Prior& p, PreselectKind kind,
                const PreselectConfig& cfg, std::optional<std::vector<Atom>> support,
                int64_t samples)
      : m_(m),
        p_(p),
        kind_(kind),
        cfg_(cfg),
        support_(std::move(support)),
        samples_(samples) {}

  StepEstimate Evaluate(const SubsetMask& s_i, Rng& rng) const {
    const int n = m_.ground_size();
    const double rho = cfg_.alpha / 2.0;
    StepEstimate est;
    est.statistic.assign(n, 0.0);
    est.qualifies.assign(n, 0);
    const double base =
        kind_ == PreselectKind::kIndependent ? cfg_.alpha / 2.0 : cfg_.alpha;
    if (cfg_.mode == PreselectMode::kExact) {
      est.threshold = base;
      s_i.ForEach([&](int j) {
        est.statistic[j] =
            kind_ == PreselectKind::kIndependent
                ? ExactUnspannedIndependent(m_, *support_, s_i, rho, j)
                : ExactUnspannedPrefix(m_, *support_, s_i, j);
        est.qualifies[j] =
            est.statistic[j] >= base - cfg_.exact_tolerance;
      });
      return est;
    }
    est.threshold = (1.0 - cfg_.eps / 4.0) * base;
    const SpanStats stats =
        kind_ == PreselectKind::kIndependent
            ? CountSpanStatsIndependent(m_, p_, s_i, rho, samples_, rng)
            : CountSpanStatsPrefix(m_, p_, s_i, samples_, rng);
    s_i.ForEach([&](int j) {
      const int64_t a = stats.active[j];
      if (a == 0) return;
      est.statistic[j] = static_cast<double>(stats.unspanned[j]) / a;
      est.qualifies[j] = static_cast<double>(stats.unspanned[j]) >=
                         est.threshold * static_cast<double>(a);
    });
    return est;
  }

 private:
  const Matroid& m_;
  const Prior& p_;
  PreselectKind kind_;
  const PreselectConfig& cfg_;
  std::optional<std::vector<Atom>> support_;
  int64_t samples_;
};

// Sets up the evaluator: exact support checks or the per-step sample count.
absl::StatusOr<StepEvaluator> MakeEvaluator(const Matroid& m, const Prior& p,
                                            PreselectKind kind,
                                            const PreselectConfig& cfg,
                                            Rng& rng, int64_t* samples,
                                            double* p_min) {
  if (absl::Status s = ValidatePreselectConfig(cfg); !s.ok()) return s;
  const int n = m.ground_size();
  if (p.n() != n) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "prior over %d elements, matroid over %d", p.n(), n));
  }
  *samples = 0;
  *p_min = 0.0;
  if (cfg.mode == PreselectMode::kExact) {
    std::optional<std::vector<Atom>> support = p.ExactSupport();
    if (!support) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "exact mode needs a prior with a listed support; got %s", p.kind()));
    }
    if (n > 64) {
      return absl::OutOfRangeError(absl::StrFormat(
          "ExactModeTooLarge: ground set of %d elements", n));
    }
    if (kind == PreselectKind::kIndependent) {
      for (const Atom& a : *support) {
        if (a.set.Cardinality() > kExactIndependentLimit) {
          return absl::OutOfRangeError(absl::StrFormat(
              "ExactModeTooLarge: active set of %d elements exceeds %d",
              a.set.Cardinality(), kExactIndependentLimit));
        }
      }
    } else if (n > kExactPrefixLimit) {
      return absl::OutOfRangeError(absl::StrFormat(
          "ExactModeTooLarge: %d elements exceeds %d", n, kExactPrefixLimit));
    }
    return StepEvaluator(m, p, kind, cfg, std::move(support), 0);
  }
  if (cfg.p_min) {
    *p_min = *cfg.p_min;
  } else {
    absl::StatusOr<PMinResult> r = PMin(p, &rng);
    if (!r.ok()) return r.status();
    *p_min = r->value;
  }
  *samples = cfg.sample_override
                 ? *cfg.sample_override
                 : PreselectSampleCount(n, cfg.alpha, cfg.eps, *p_min);
  return StepEvaluator(m, p, kind, cfg, std::nullopt, *samples);
}

}  // namespace

absl::Status ValidatePreselectConfig(const PreselectConfig& cfg) {
  if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("alpha = %g outside (0,1]", cfg.alpha));
  }
  if (!(cfg.eps > 0.0 && cfg.eps <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("eps = %g outside (0,1]", cfg.eps));
  }
  if (cfg.sample_override && *cfg.sample_override < 1) {
    return absl::InvalidArgumentError("sample override must be >= 1");
  }
  if (cfg.p_min && !(*cfg.p_min > 0.0 && *cfg.p_min <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("p_min = %g outside (0,1]", *cfg.p_min));
  }
  return absl::OkStatus();
}

int64_t PreselectSampleCount(int n, double alpha, double eps, double p_min) {
  return static_cast<int64_t>(std::ceil(128.0 * std::log(4.0 * n / eps) /
                                        (alpha * alpha * eps * eps * p_min)));
}

SpanStats CountSpanStatsIndependent(const Matroid& m, const Prior& p,
                                    const SubsetMask& s_i, double rho,
                                    int64_t samples, Rng& rng) {
  CHECK_GE(samples, 1);
  const int n = m.ground_size();
  SpanStats st{samples, std::vector<int64_t>(n, 0),
               std::vector<int64_t>(n, 0)};
  for (int64_t l = 0; l < samples; ++l) {
    const SubsetMask a = p.Sample(rng) & s_i;
    const auto x = BasisBuilder(m, TRho(a, rho, rng));
    a.ForEach([&](int j) {
      ++st.active[j];
      if (Unspanned(*x, j)) ++st.unspanned[j];
    });
  }
  return st;
}

SpanStats CountSpanStatsPrefix(const Matroid& m, const Prior& p,
                               const SubsetMask& s_i, int64_t samples,
                               Rng& rng) {
  CHECK_GE(samples, 1);
  const int n = m.ground_size();
  SpanStats st{samples, std::vector<int64_t>(n, 0),
               std::vector<int64_t>(n, 0)};
  std::vector<int> sigma = s_i.Elements();
  for (int64_t l = 0; l < samples; ++l) {
    const SubsetMask a = p.Sample(rng) & s_i;
    std::shuffle(sigma.begin(), sigma.end(), rng);
    // Greedy along sigma keeps a basis of the active prefix, so j is
    // unspanned exactly when greedy accepts it.
    auto builder = m.NewBuilder();
    for (int j : sigma) {
      if (!a.Contains(j)) continue;
      ++st.active[j];
      if (builder->TryAdd(j)) ++st.unspanned[j];
    }
  }
  return st;
}

double ExactUnspannedIndependent(const Matroid& m,
                                 const std::vector<Atom>& support,
                                 const SubsetMask& s_i, double rho, int j) {
  double active = 0.0;
  double unspanned = 0.0;
  for (const Atom& atom : support) {
    if (!atom.set.Contains(j) || !s_i.Contains(j)) continue;
    active += atom.prob;
    const SubsetMask a = atom.set & s_i;
    const int size = a.Cardinality();
    ForEachSubset(a, [&](const SubsetMask& t) {
      const int k = t.Cardinality();
      const double w = std::pow(rho, k) * std::pow(1.0 - rho, size - k);
      if (w > 0.0 && Unspanned(*BasisBuilder(m, t), j)) {
        unspanned += atom.prob * w;
      }
    });
  }
  return active > 0.0 ? unspanned / active : 0.0;
}

double ExactUnspannedPrefix(const Matroid& m, const std::vector<Atom>& support,
                            const SubsetMask& s_i, int j) {
  double active = 0.0;
  double unspanned = 0.0;
  for (const Atom& atom : support) {
    if (!atom.set.Contains(j) || !s_i.Contains(j)) continue;
    active += atom.prob;
    const SubsetMask others = (atom.set & s_i).Without(j);
    const int a = others.Cardinality() + 1;
    ForEachSubset(others, [&](const SubsetMask& q) {
      if (!Unspanned(*BasisBuilder(m, q), j)) return;
      const double w =
          1.0 / (a * boost::math::binomial_coefficient<double>(
                         a - 1, q.Cardinality()));
      unspanned += atom.prob * w;
    });
  }
  return active > 0.0 ? unspanned / active : 0.0;
}

Permutation PreselectResult::permutation() const {
  CHECK(ok()) << "preselection failed at position " << failed_position;
  return *Permutation::Create(order);
}

absl::StatusOr<PreselectResult> Preselect(const Matroid& m, const Prior& p,
                                          PreselectKind kind,
                                          const PreselectConfig& cfg,
                                          Rng& rng) {
  PreselectResult result;
  absl::StatusOr<StepEvaluator> eval = MakeEvaluator(
      m, p, kind, cfg, rng, &result.samples_per_step, &result.p_min);
  if (!eval.ok()) return eval.status();
  const int n = m.ground_size();
  result.order.assign(n, -1);
  SubsetMask s = SubsetMask::Full(n);
  for (int pos = n - 1; pos >= 0; --pos) {
    const StepEstimate est = eval->Evaluate(s, rng);
    PreselectStep step{pos, -1, 0.0, est.threshold};
    for (int j : s.Elements()) {
      if (est.qualifies[j]) {
        step.element = j;
        step.statistic = est.statistic[j];
        break;
      }
    }
    result.steps.push_back(step);
    if (step.element < 0) {
      result.status = PreselectResult::Status::kNoQualifyingElement;
      result.failed_position = pos;
      return result;
    }
    result.order[pos] = step.element;
    s.Erase(step.element);
  }
  return result;
}

absl::StatusOr<std::vector<PreselectStep>> CheckOrder(
    const Matroid& m, const Prior& p, PreselectKind kind,
    const PreselectConfig& cfg, const Permutation& order, Rng& rng) {
  int64_t samples = 0;
  double p_min = 0.0;
  absl::StatusOr<StepEvaluator> eval =
      MakeEvaluator(m, p, kind, cfg, rng, &samples, &p_min);
  if (!eval.ok()) return eval.status();
  const int n = m.ground_size();
  if (order.n() != n) return absl::InvalidArgumentError("order size mismatch");
  std::vector<PreselectStep> steps;
  SubsetMask s = SubsetMask::Full(n);
  for (int pos = n - 1; pos >= 0; --pos) {
    const StepEstimate est = eval->Evaluate(s, rng);
    const int j = order[pos];
    steps.push_back({pos, est.qualifies[j] ? j : -1, est.statistic[j],
                     est.threshold});
    s.Erase(j);
  }
  return steps;
}

}  // namespace ocrs
