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

#include "ocrs/secretary.h"

#include <cmath>
#include <numbers>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace ocrs {
namespace {

class GreedyRun : public SecretaryRun {
 public:
  explicit GreedyRun(const Matroid& m) : builder_(m.NewBuilder()) {}
  bool Next(int element, double weight) override {
    if (weight <= 0.0) return false;
    return builder_->TryAdd(element);
  }
  const SubsetMask& accepted() const override { return builder_->current(); }

 private:
  std::unique_ptr<IndependentSetBuilder> builder_;
};

class ThresholdRun : public SecretaryRun {
 public:
  explicit ThresholdRun(const Matroid& m)
      : builder_(m.NewBuilder()),
        sample_size_(Classic1Uniform::SampleSize(m.ground_size())) {}

  bool Next(int element, double weight) override {
    ++seen_;
    const bool beats =
        best_ < 0 || weight > best_weight_ ||
        (weight == best_weight_ && element < best_);
    if (beats) {
      best_ = element;
      best_weight_ = weight;
    }
    if (done_ || seen_ <= sample_size_ || !beats || weight <= 0.0) {
      return false;
    }
    if (!builder_->TryAdd(element)) return false;
    done_ = true;
    return true;
  }
  const SubsetMask& accepted() const override { return builder_->current(); }

 private:
  std::unique_ptr<IndependentSetBuilder> builder_;
  int sample_size_;
  int seen_ = 0;
  bool done_ = false;
  int best_ = -1;
  double best_weight_ = 0.0;
};

}  // namespace

std::optional<Permutation> GreedyByWeight::PreselectedOrder(
    const WeightVector& w) const {
  return *Permutation::Create(DecreasingWeightOrder(w.values()));
}

std::unique_ptr<SecretaryRun> GreedyByWeight::Start(const Matroid& m) const {
  return std::make_unique<GreedyRun>(m);
}

int Classic1Uniform::SampleSize(int n) {
  return static_cast<int>(std::floor(n / std::numbers::e));
}

std::unique_ptr<SecretaryRun> Classic1Uniform::Start(const Matroid& m) const {
  return std::make_unique<ThresholdRun>(m);
}

std::unique_ptr<SecretaryAlg> MakeSecretary(SecretaryKind kind) {
  switch (kind) {
    case SecretaryKind::kGreedyByWeight:
      return std::make_unique<GreedyByWeight>();
    case SecretaryKind::kClassic1Uniform:
      return std::make_unique<Classic1Uniform>();
  }
  LOG(FATAL) << "unknown secretary kind";
}

std::string SecretaryKindName(SecretaryKind kind) {
  return MakeSecretary(kind)->name();
}

absl::StatusOr<SecretaryKind> ParseSecretaryKind(const std::string& name) {
  if (name == "greedy_by_weight") return SecretaryKind::kGreedyByWeight;
  if (name == "classic_1uniform") return SecretaryKind::kClassic1Uniform;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown secretary algorithm '", name, "'"));
}

Permutation DrawArrival(const SecretaryAlg& alg, const WeightVector& w,
                        Rng& rng) {
  if (std::optional<Permutation> order = alg.PreselectedOrder(w)) {
    return *std::move(order);
  }
  return Permutation::Uniform(w.size(), rng);
}

SubsetMask SecretaryWrap(const SecretaryAlg& alg, const WeightVector& w,
                         const Matroid& m, const SubsetMask& active,
                         const Permutation& arrival) {
  CHECK_EQ(w.size(), m.ground_size()) << "dimension mismatch";
  CHECK_EQ(active.n(), m.ground_size()) << "dimension mismatch";
  CHECK_EQ(arrival.n(), m.ground_size()) << "dimension mismatch";
  auto run = alg.Start(m);
  for (int e : arrival.order()) {
    run->Next(e, active.Contains(e) ? w[e] : 0.0);
  }
  return run->accepted();
}

}  // namespace ocrs
