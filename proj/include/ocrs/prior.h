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

// Distributions over the active set A.

#ifndef OCRS_PRIOR_H_
#define OCRS_PRIOR_H_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "ocrs/random.h"
#include "ocrs/subset_mask.h"

namespace ocrs {

struct Atom {
  SubsetMask set;
  double prob;
};

class Prior {
 public:
  explicit Prior(int n) : n_(n), inactive_always_(n) {}
  virtual ~Prior() = default;

  int n() const { return n_; }
  virtual std::string kind() const = 0;
  virtual SubsetMask Sample(Rng& rng) const = 0;

  // Full pmf, sorted by set and without zero-mass atoms, when the kind can
  // list it. Product priors list it only for small n.
  virtual std::optional<std::vector<Atom>> ExactSupport() const {
    return std::nullopt;
  }
  // Pr[i in A] for every i, when known exactly.
  virtual std::optional<std::vector<double>> ExactMarginals() const;

  // Elements outside the set a marginal was taken on. They are never active.
  const SubsetMask& inactive_always() const { return inactive_always_; }

 protected:
  friend std::shared_ptr<const Prior> Marginal(
      const std::shared_ptr<const Prior>& p, const SubsetMask& s);

  int n_;
  SubsetMask inactive_always_;
};

using PriorPtr = std::shared_ptr<const Prior>;

inline constexpr double kPmfTolerance = 1e-12;

class ExplicitPrior : public Prior {
 public:
  // Duplicate sets are merged. Probabilities must be >= 0 and sum to 1
  // within kPmfTolerance.
  static absl::StatusOr<std::shared_ptr<const ExplicitPrior>> Create(
      int n, const std::vector<Atom>& atoms);

  std::string kind() const override { return "explicit"; }
  SubsetMask Sample(Rng& rng) const override;
  std::optional<std::vector<Atom>> ExactSupport() const override {
    return atoms_;
  }
  const std::vector<Atom>& atoms() const { return atoms_; }

 private:
  friend PriorPtr Marginal(const PriorPtr& p, const SubsetMask& s);
  ExplicitPrior(int n, std::vector<Atom> atoms);

  std::vector<Atom> atoms_;
  std::vector<double> cumulative_;
};

// Each element i active independently with probability x[i].
class ProductPrior : public Prior {
 public:
  static absl::StatusOr<std::shared_ptr<const ProductPrior>> Create(
      std::vector<double> x);

  std::string kind() const override { return "product"; }
  SubsetMask Sample(Rng& rng) const override;
  std::optional<std::vector<Atom>> ExactSupport() const override;
  std::optional<std::vector<double>> ExactMarginals() const override {
    return x_;
  }
  const std::vector<double>& x() const { return x_; }

  static constexpr int kMaxEnumerable = 20;

 private:
  friend PriorPtr Marginal(const PriorPtr& p, const SubsetMask& s);
  explicit ProductPrior(std::vector<double> x);
  std::vector<double> x_;
};

// A = [n] always.
class AllActivePrior : public Prior {
 public:
  explicit AllActivePrior(int n) : Prior(n) {}
  std::string kind() const override { return "all_active"; }
  SubsetMask Sample(Rng&) const override { return SubsetMask::Full(n_); }
  std::optional<std::vector<Atom>> ExactSupport() const override {
    return std::vector<Atom>{{SubsetMask::Full(n_), 1.0}};
  }
};

// Black-box sampler; nothing about the pmf is known.
class SamplerPrior : public Prior {
 public:
  using SampleFn = std::function<SubsetMask(Rng&)>;
  SamplerPrior(int n, SampleFn fn) : Prior(n), fn_(std::move(fn)) {}
  std::string kind() const override { return "sampler"; }
  SubsetMask Sample(Rng& rng) const override {
    SubsetMask s = fn_(rng);
    CHECK_EQ(s.n(), n_) << "sampler returned a set of the wrong size";
    return s;
  }

 private:
  SampleFn fn_;
};

// Law of A ∩ S for A drawn from the parent. Explicit, product and all-active
// parents yield the exact pushforward of their own kind; other kinds are
// wrapped. Elements outside S are flagged in inactive_always().
PriorPtr Marginal(const PriorPtr& p, const SubsetMask& s);

// Pr[∅] = 1 - delta (n + 1/alpha - 2), Pr[[n]] = delta (1/alpha - 1) and
// Pr[{i}] = delta for i != j. Requires 0 < delta <= 1/(n + 1/alpha - 2).
absl::StatusOr<std::shared_ptr<const ExplicitPrior>> BuildExample24(
    int n, double alpha, double delta, int j);

struct PMinResult {
  double value = 0.0;
  bool exact = true;
  // Estimator details; zero when exact.
  int samples = 0;
  double eps = 0.0;
  double empirical = 0.0;
};

inline constexpr double kPMinEstimatorEps = 0.05;

// Number of draws used by the p_min estimator: ceil(3 ln(2n/0.01) / eps^2).
int PMinSampleCount(int n, double eps);

// min_i Pr[i in A] over elements not flagged inactive_always(). Exact whenever marginals are known; otherwise estimated
// from PMinSampleCount draws and reported as (empirical minimum - eps).
// Fails with FailedPrecondition when some element is (or appears) never
// active, or when the estimate is not positive.
absl::StatusOr<PMinResult> PMin(const Prior& p, Rng* rng = nullptr,
                                double eps = kPMinEstimatorEps);

}  // namespace ocrs

#endif  // OCRS_PRIOR_H_
