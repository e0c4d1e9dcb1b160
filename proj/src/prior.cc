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

#include "ocrs/prior.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"

namespace ocrs {
namespace {

// Merges duplicates, drops zero atoms, sorts by set.
std::vector<Atom> Canonicalize(std::vector<Atom> atoms) {
  std::map<SubsetMask, double> merged;
  for (Atom& a : atoms) merged[a.set] += a.prob;
  std::vector<Atom> out;
  for (auto& [set, prob] : merged) {
    if (prob > 0.0) out.push_back({set, prob});
  }
  return out;
}

class MarginalPrior : public Prior {
 public:
  MarginalPrior(PriorPtr parent, SubsetMask s)
      : Prior(parent->n()), parent_(std::move(parent)), s_(std::move(s)) {
    inactive_always_ = SubsetMask::Full(n_) - s_;
  }
  std::string kind() const override { return "marginal"; }
  SubsetMask Sample(Rng& rng) const override {
    return parent_->Sample(rng) & s_;
  }

 private:
  PriorPtr parent_;
  SubsetMask s_;
};

}  // namespace

std::optional<std::vector<double>> Prior::ExactMarginals() const {
  std::optional<std::vector<Atom>> support = ExactSupport();
  if (!support) return std::nullopt;
  std::vector<double> x(n_, 0.0);
  for (const Atom& a : *support) {
    a.set.ForEach([&](int i) { x[i] += a.prob; });
  }
  return x;
}

ExplicitPrior::ExplicitPrior(int n, std::vector<Atom> atoms)
    : Prior(n), atoms_(Canonicalize(std::move(atoms))) {
  double c = 0.0;
  for (const Atom& a : atoms_) {
    c += a.prob;
    cumulative_.push_back(c);
  }
}

absl::StatusOr<std::shared_ptr<const ExplicitPrior>> ExplicitPrior::Create(
    int n, const std::vector<Atom>& atoms) {
  if (n < 0) return absl::InvalidArgumentError("negative ground size");
  double total = 0.0;
  for (const Atom& a : atoms) {
    if (a.set.n() != n) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "atom %s has ground size %d, expected %d", a.set.ToString(),
          a.set.n(), n));
    }
    if (!(a.prob >= 0.0) || !std::isfinite(a.prob)) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "atom %s has probability %g", a.set.ToString(), a.prob));
    }
    total += a.prob;
  }
  if (std::abs(total - 1.0) > kPmfTolerance) {
    return absl::InvalidArgumentError(
        absl::StrFormat("probabilities sum to %.17g, not 1", total));
  }
  return std::shared_ptr<const ExplicitPrior>(new ExplicitPrior(n, atoms));
}

SubsetMask ExplicitPrior::Sample(Rng& rng) const {
  const double u = UniformDouble(rng) * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) --it;
  return atoms_[it - cumulative_.begin()].set;
}

ProductPrior::ProductPrior(std::vector<double> x)
    : Prior(static_cast<int>(x.size())), x_(std::move(x)) {}

absl::StatusOr<std::shared_ptr<const ProductPrior>> ProductPrior::Create(
    std::vector<double> x) {
  for (size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= 0.0 && x[i] <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("x[%d] = %g is not a probability", i, x[i]));
    }
  }
  return std::shared_ptr<const ProductPrior>(new ProductPrior(std::move(x)));
}

SubsetMask ProductPrior::Sample(Rng& rng) const {
  SubsetMask s(n_);
  for (int i = 0; i < n_; ++i) {
    if (Bernoulli(rng, x_[i])) s.Insert(i);
  }
  return s;
}

std::optional<std::vector<Atom>> ProductPrior::ExactSupport() const {
  if (n_ > kMaxEnumerable) return std::nullopt;
  std::vector<Atom> atoms;
  ForEachSubset(SubsetMask::Full(n_), [&](const SubsetMask& s) {
    double p = 1.0;
    for (int i = 0; i < n_; ++i) p *= s.Contains(i) ? x_[i] : 1.0 - x_[i];
    if (p > 0.0) atoms.push_back({s, p});
  });
  return Canonicalize(std::move(atoms));
}

PriorPtr Marginal(const PriorPtr& p, const SubsetMask& s) {
  CHECK_EQ(s.n(), p->n()) << "dimension mismatch";
  const SubsetMask outside = SubsetMask::Full(p->n()) - s;
  std::shared_ptr<Prior> out;
  if (auto* e = dynamic_cast<const ExplicitPrior*>(p.get())) {
    std::vector<Atom> pushed;
    for (const Atom& a : e->atoms()) pushed.push_back({a.set & s, a.prob});
    out.reset(new ExplicitPrior(p->n(), std::move(pushed)));
  } else if (auto* q = dynamic_cast<const ProductPrior*>(p.get())) {
    std::vector<double> x = q->x();
    outside.ForEach([&](int i) { x[i] = 0.0; });
    out.reset(new ProductPrior(std::move(x)));
  } else if (dynamic_cast<const AllActivePrior*>(p.get())) {
    std::vector<double> x(p->n(), 1.0);
    outside.ForEach([&](int i) { x[i] = 0.0; });
    out.reset(new ProductPrior(std::move(x)));
  } else {
    out = std::make_shared<MarginalPrior>(p, s);
  }
  out->inactive_always_ = outside | p->inactive_always();
  return out;
}

absl::StatusOr<std::shared_ptr<const ExplicitPrior>> BuildExample24(
    int n, double alpha, double delta, int j) {
  if (n < 1) return absl::InvalidArgumentError("n must be >= 1");
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("alpha = %g outside (0,1]", alpha));
  }
  if (j < 0 || j >= n) {
    return absl::InvalidArgumentError(
        absl::StrFormat("j = %d outside [0,%d)", j, n));
  }
  const double c = n + 1.0 / alpha - 2.0;
  if (!(c > 0.0) || !(delta > 0.0) || delta > 1.0 / c * (1 + 1e-15)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "delta = %g outside (0, 1/(n + 1/alpha - 2)] = (0, %g]", delta,
        c > 0.0 ? 1.0 / c : 0.0));
  }
  std::vector<Atom> atoms;
  atoms.push_back({SubsetMask(n), std::max(0.0, 1.0 - delta * c)});
  atoms.push_back({SubsetMask::Full(n), delta * (1.0 / alpha - 1.0)});
  for (int i = 0; i < n; ++i) {
    if (i != j) atoms.push_back({SubsetMask::FromElements(n, {i}), delta});
  }
  return ExplicitPrior::Create(n, atoms);
}

int PMinSampleCount(int n, double eps) {
  return static_cast<int>(
      std::ceil(3.0 * std::log(2.0 * n / 0.01) / (eps * eps)));
}

absl::StatusOr<PMinResult> PMin(const Prior& p, Rng* rng, double eps) {
  const int n = p.n();
  std::vector<int> never;
  if (std::optional<std::vector<double>> x = p.ExactMarginals()) {
    PMinResult r;
    r.value = 1.0;
    for (int i = 0; i < n; ++i) {
      if (p.inactive_always().Contains(i)) continue;
      r.value = std::min(r.value, (*x)[i]);
      if ((*x)[i] <= 0.0) never.push_back(i);
    }
    if (!never.empty()) {
      return absl::FailedPreconditionError(absl::StrFormat(
          "elements {%s} are never active; every element needs Pr[i in A] > 0",
          absl::StrJoin(never, ",")));
    }
    r.empirical = r.value;
    return r;
  }
  if (rng == nullptr) {
    return absl::InvalidArgumentError(
        "p_min of a sampler prior needs an rng for estimation");
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    return absl::InvalidArgumentError("estimator eps must lie in (0,1)");
  }
  const int m = PMinSampleCount(n, eps);
  std::vector<int> counts(n, 0);
  for (int t = 0; t < m; ++t) {
    p.Sample(*rng).ForEach([&](int i) { ++counts[i]; });
  }
  int min_count = m;
  for (int i = 0; i < n; ++i) {
    if (p.inactive_always().Contains(i)) continue;
    min_count = std::min(min_count, counts[i]);
    if (counts[i] == 0) never.push_back(i);
  }
  if (!never.empty()) {
    return absl::FailedPreconditionError(absl::StrFormat(
        "elements {%s} never active in %d draws; estimated p_min is 0",
        absl::StrJoin(never, ","), m));
  }
  PMinResult r;
  r.exact = false;
  r.samples = m;
  r.eps = eps;
  r.empirical = static_cast<double>(min_count) / m;
  r.value = r.empirical - eps;
  if (r.value <= 0.0) {
    return absl::FailedPreconditionError(absl::StrFormat(
        "estimated p_min %.4g is within eps=%g of 0; supply p_min explicitly",
        r.empirical, eps));
  }
  return r;
}

}  // namespace ocrs
