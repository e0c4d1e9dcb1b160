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

#include "ocrs/schemes.h"

#include <cmath>

#include "absl/strings/match.h"
#include "absl/strings/str_format.h"
#include "ocrs/rational.h"

namespace ocrs {
namespace {

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <typename... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

template <typename T>
const T& Draw(const std::vector<std::pair<T, double>>& components, Rng& rng) {
  double total = 0.0;
  for (const auto& c : components) total += c.second;
  double u = UniformDouble(rng) * total;
  for (const auto& c : components) {
    if (u < c.second) return c.first;
    u -= c.second;
  }
  // Rounding left u past the last positive weight.
  for (auto it = components.rbegin(); it != components.rend(); ++it) {
    if (it->second > 0.0) return it->first;
  }
  return components.back().first;
}

template <typename T>
absl::Status CheckMixture(const std::vector<std::pair<T, double>>& comps) {
  if (comps.empty()) return absl::InvalidArgumentError("empty mixture");
  double total = 0.0;
  for (const auto& c : comps) {
    if (!(c.second >= 0.0)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("negative mixture weight %g", c.second));
    }
    total += c.second;
  }
  if (std::abs(total - 1.0) > kMixtureTolerance) {
    return absl::InvalidArgumentError(
        absl::StrFormat("mixture weights sum to %.12g", total));
  }
  return absl::OkStatus();
}

absl::Status CheckPermutationSize(const Permutation& pi, int n) {
  if (pi.n() != n) {
    return absl::InvalidArgumentError(
        absl::StrFormat("order over %d elements, expected %d", pi.n(), n));
  }
  return absl::OkStatus();
}

uint64_t Binomial(int n, int k) {
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

uint64_t Factorial(int n) {
  uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

absl::StatusOr<Scheme> BuildPreselected(const Matroid& m, const Prior& p,
                                        PreselectKind kind,
                                        const PreselectConfig& cfg, Rng& rng,
                                        PreselectResult* report) {
  const int n = m.ground_size();
  auto make = [&](Permutation pi) -> Scheme {
    if (kind == PreselectKind::kIndependent) {
      return Alg1Scheme{std::move(pi), cfg.alpha / 2.0};
    }
    return Alg3Scheme{std::move(pi)};
  };
  if (cfg.alpha == 0.0) {
    if (report) {
      *report = PreselectResult();
      report->order = Permutation::Identity(n).order();
    }
    return make(Permutation::Identity(n));
  }
  absl::StatusOr<PreselectResult> r = Preselect(m, p, kind, cfg, rng);
  if (!r.ok()) return r.status();
  if (report) *report = *r;
  if (!r->ok()) {
    return absl::AbortedError(absl::StrFormat(
        "%s: no element qualifies for position %d", kNoQualifyingElement,
        r->failed_position));
  }
  return make(r->permutation());
}

absl::StatusOr<SchemeRun> BuildAndRun(const Matroid& m, const Prior& p,
                                      PreselectKind kind,
                                      const PreselectConfig& cfg, Rng& rng) {
  absl::StatusOr<Scheme> s = BuildPreselected(m, p, kind, cfg, rng, nullptr);
  if (!s.ok()) return s.status();
  const SubsetMask a = p.Sample(rng);
  SchemeRun run;
  run.pi = kind == PreselectKind::kIndependent ? std::get<Alg1Scheme>(*s).pi
                                               : std::get<Alg3Scheme>(*s).pi;
  run.selected = RunScheme(m, *s, a, rng);
  return run;
}

}  // namespace

std::string SchemeKindName(const Scheme& s) {
  return std::visit(
      Overloaded{
          [](const GreedyOrderedScheme&) { return "greedy_ordered"; },
          [](const Alg1Scheme&) { return "alg1"; },
          [](const Alg3Scheme&) { return "alg3"; },
          [](const PermutationMixtureScheme&) { return "permutation_mixture"; },
          [](const WeightMixtureScheme&) { return "weight_mixture"; },
      },
      s);
}

absl::Status ValidateScheme(const Scheme& s, int n) {
  return std::visit(
      Overloaded{
          [&](const GreedyOrderedScheme& g) {
            return CheckPermutationSize(g.pi, n);
          },
          [&](const Alg1Scheme& g) {
            if (!(g.rho >= 0.0 && g.rho <= 1.0)) {
              return absl::InvalidArgumentError("rho outside [0,1]");
            }
            return CheckPermutationSize(g.pi, n);
          },
          [&](const Alg3Scheme& g) { return CheckPermutationSize(g.pi, n); },
          [&](const PermutationMixtureScheme& g) {
            for (const auto& [pi, lambda] : g.components) {
              if (absl::Status st = CheckPermutationSize(pi, n); !st.ok()) {
                return st;
              }
            }
            return CheckMixture(g.components);
          },
          [&](const WeightMixtureScheme& g) {
            for (const auto& [w, lambda] : g.components) {
              if (w.size() != n) {
                return absl::InvalidArgumentError(absl::StrFormat(
                    "weight vector of length %d, expected %d", w.size(), n));
              }
            }
            return CheckMixture(g.components);
          },
      },
      s);
}

SubsetMask GreedyOrdered(const Matroid& m, const Permutation& pi,
                         const SubsetMask& allowed) {
  CHECK_EQ(pi.n(), m.ground_size()) << "dimension mismatch";
  CHECK_EQ(allowed.n(), m.ground_size()) << "dimension mismatch";
  auto builder = m.NewBuilder();
  for (int e : pi.order()) {
    if (allowed.Contains(e)) builder->TryAdd(e);
  }
  return builder->current();
}

SubsetMask RunScheme(const Matroid& m, const Scheme& s, const SubsetMask& a,
                     Rng& rng) {
  const int n = m.ground_size();
  return std::visit(
      Overloaded{
          [&](const GreedyOrderedScheme& g) {
            return GreedyOrdered(m, g.pi, a);
          },
          [&](const Alg1Scheme& g) {
            const SubsetMask t = TRho(SubsetMask::Full(n), g.rho, rng);
            return GreedyOrdered(m, g.pi, a & t);
          },
          [&](const Alg3Scheme& g) {
            const SubsetMask t = PrefixSubsample(n, rng);
            return GreedyOrdered(m, g.pi, a & t);
          },
          [&](const PermutationMixtureScheme& g) {
            return GreedyOrdered(m, Draw(g.components, rng), a);
          },
          [&](const WeightMixtureScheme& g) {
            const WeightVector& w = Draw(g.components, rng);
            const auto alg = MakeSecretary(g.secretary);
            return SecretaryWrap(*alg, w, m, a, DrawArrival(*alg, w, rng));
          },
      },
      s);
}

bool IsNoQualifyingElement(const absl::Status& s) {
  return s.code() == absl::StatusCode::kAborted &&
         absl::StartsWith(s.message(), kNoQualifyingElement);
}

absl::StatusOr<Scheme> BuildAlg1(const Matroid& m, const Prior& p,
                                 const PreselectConfig& cfg, Rng& rng,
                                 PreselectResult* report) {
  return BuildPreselected(m, p, PreselectKind::kIndependent, cfg, rng, report);
}

absl::StatusOr<Scheme> BuildAlg3(const Matroid& m, const Prior& p,
                                 const PreselectConfig& cfg, Rng& rng,
                                 PreselectResult* report) {
  return BuildPreselected(m, p, PreselectKind::kPrefix, cfg, rng, report);
}

absl::StatusOr<SchemeRun> RunAlg1(const Matroid& m, const Prior& p,
                                  const PreselectConfig& cfg, Rng& rng) {
  return BuildAndRun(m, p, PreselectKind::kIndependent, cfg, rng);
}

absl::StatusOr<SchemeRun> RunAlg3(const Matroid& m, const Prior& p,
                                  const PreselectConfig& cfg, Rng& rng) {
  return BuildAndRun(m, p, PreselectKind::kPrefix, cfg, rng);
}

template <typename Scalar>
absl::Status ForEachOutcome(
    const Matroid& m, const Scheme& s, const SubsetMask& a,
    bool sentinel_by_subsets,
    const std::function<void(const Scalar&, const SubsetMask&)>& f) {
  const int n = m.ground_size();
  auto too_large = [&](const char* what, int size, int limit) {
    return absl::OutOfRangeError(absl::StrFormat(
        "enumeration too large: %s of size %d exceeds %d", what, size, limit));
  };
  return std::visit(
      Overloaded{
          [&](const GreedyOrderedScheme& g) {
            f(Scalar(1), GreedyOrdered(m, g.pi, a));
            return absl::OkStatus();
          },
          [&](const Alg1Scheme& g) {
            const int size = a.Cardinality();
            if (size > kMaxPrefixSubsetEnumeration) {
              return too_large("active set", size,
                               kMaxPrefixSubsetEnumeration);
            }
            const Scalar rho = FromDouble<Scalar>(g.rho);
            std::vector<Scalar> keep(size + 1, Scalar(1)),
                drop(size + 1, Scalar(1));
            for (int k = 1; k <= size; ++k) {
              keep[k] = keep[k - 1] * rho;
              drop[k] = drop[k - 1] * (Scalar(1) - rho);
            }
            ForEachSubset(a, [&](const SubsetMask& t) {
              const int k = t.Cardinality();
              const Scalar w = keep[k] * drop[size - k];
              if (w != Scalar(0)) f(w, GreedyOrdered(m, g.pi, t));
            });
            return absl::OkStatus();
          },
          [&](const Alg3Scheme& g) {
            if (!sentinel_by_subsets) {
              if (n > kMaxPermutationEnumeration) {
                return too_large("sentinel permutation", n + 1,
                                 kMaxPermutationEnumeration + 1);
              }
              const Scalar w = Scalar(1) / Scalar(Factorial(n + 1));
              ForEachPermutation(n + 1, [&](const Permutation& sigma) {
                f(w, GreedyOrdered(m, g.pi, a & SentinelPrefix(sigma)));
              });
              return absl::OkStatus();
            }
            if (n > kMaxPrefixSubsetEnumeration) {
              return too_large("ground set", n, kMaxPrefixSubsetEnumeration);
            }
            std::vector<Scalar> weight(n + 1);
            for (int k = 0; k <= n; ++k) {
              weight[k] = Scalar(1) / (Scalar(n + 1) * Scalar(Binomial(n, k)));
            }
            ForEachSubset(SubsetMask::Full(n), [&](const SubsetMask& t) {
              f(weight[t.Cardinality()], GreedyOrdered(m, g.pi, a & t));
            });
            return absl::OkStatus();
          },
          [&](const PermutationMixtureScheme& g) {
            for (const auto& [pi, lambda] : g.components) {
              f(FromDouble<Scalar>(lambda), GreedyOrdered(m, pi, a));
            }
            return absl::OkStatus();
          },
          [&](const WeightMixtureScheme& g) {
            const auto alg = MakeSecretary(g.secretary);
            for (const auto& [w, lambda] : g.components) {
              const Scalar lam = FromDouble<Scalar>(lambda);
              if (std::optional<Permutation> order = alg->PreselectedOrder(w)) {
                f(lam, SecretaryWrap(*alg, w, m, a, *order));
                continue;
              }
              if (n > kMaxPermutationEnumeration) {
                return too_large("random arrival", n,
                                 kMaxPermutationEnumeration);
              }
              const Scalar each = lam / Scalar(Factorial(n));
              ForEachPermutation(n, [&](const Permutation& arrival) {
                f(each, SecretaryWrap(*alg, w, m, a, arrival));
              });
            }
            return absl::OkStatus();
          },
      },
      s);
}

template absl::Status ForEachOutcome<double>(
    const Matroid&, const Scheme&, const SubsetMask&, bool,
    const std::function<void(const double&, const SubsetMask&)>&);
template absl::Status ForEachOutcome<Rational>(
    const Matroid&, const Scheme&, const SubsetMask&, bool,
    const std::function<void(const Rational&, const SubsetMask&)>&);

absl::StatusOr<std::vector<double>> SecretarySelectionProbabilities(
    const SecretaryAlg& alg, const WeightVector& w, const Matroid& m,
    const SubsetMask& a) {
  std::vector<double> q(m.ground_size(), 0.0);
  const Scheme s = WeightMixtureScheme{alg.kind(), {{w, 1.0}}};
  absl::Status st = ForEachOutcome<double>(
      m, s, a, false, [&](const double& weight, const SubsetMask& sel) {
        sel.ForEach([&](int i) { q[i] += weight; });
      });
  if (!st.ok()) return st;
  return q;
}

}  // namespace ocrs
