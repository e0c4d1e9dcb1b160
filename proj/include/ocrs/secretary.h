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

// Streaming matroid secretary algorithms. The arrival order is generated
// outside the algorithm: preselected-order algorithms announce theirs from
// the weights, random-order ones get a uniform permutation.

#ifndef OCRS_SECRETARY_H_
#define OCRS_SECRETARY_H_

#include <memory>
#include <optional>
#include <string>

#include "absl/status/statusor.h"
#include "ocrs/matroid.h"
#include "ocrs/random.h"
#include "ocrs/subsampling.h"
#include "ocrs/subset_mask.h"

namespace ocrs {

// One pass over the arrivals. Accepted sets stay independent and never
// contain an element presented with weight 0.
class SecretaryRun {
 public:
  virtual ~SecretaryRun() = default;
  // Irrevocable decision for `element` arriving with `weight`.
  virtual bool Next(int element, double weight) = 0;
  virtual const SubsetMask& accepted() const = 0;
};

enum class SecretaryKind { kGreedyByWeight, kClassic1Uniform };

class SecretaryAlg {
 public:
  virtual ~SecretaryAlg() = default;
  virtual SecretaryKind kind() const = 0;
  virtual std::string name() const = 0;
  // The order this algorithm wants elements to arrive in, or nullopt for
  // random-order algorithms.
  virtual std::optional<Permutation> PreselectedOrder(
      const WeightVector& w) const = 0;
  virtual std::unique_ptr<SecretaryRun> Start(const Matroid& m) const = 0;
};

// Arrival in decreasing-weight order; accepts every positive-weight element
// that keeps the set independent.
class GreedyByWeight : public SecretaryAlg {
 public:
  SecretaryKind kind() const override { return SecretaryKind::kGreedyByWeight; }
  std::string name() const override { return "greedy_by_weight"; }
  std::optional<Permutation> PreselectedOrder(
      const WeightVector& w) const override;
  std::unique_ptr<SecretaryRun> Start(const Matroid& m) const override;
};

// Random arrival. Watches the first floor(n/e) arrivals, then accepts the
// first one beating all earlier ones and stops. Weight ties are broken
// toward the lower index. Meant for rank-one matroids.
class Classic1Uniform : public SecretaryAlg {
 public:
  SecretaryKind kind() const override {
    return SecretaryKind::kClassic1Uniform;
  }
  std::string name() const override { return "classic_1uniform"; }
  std::optional<Permutation> PreselectedOrder(
      const WeightVector&) const override {
    return std::nullopt;
  }
  std::unique_ptr<SecretaryRun> Start(const Matroid& m) const override;
  static int SampleSize(int n);
};

std::unique_ptr<SecretaryAlg> MakeSecretary(SecretaryKind kind);
std::string SecretaryKindName(SecretaryKind kind);
absl::StatusOr<SecretaryKind> ParseSecretaryKind(const std::string& name);

// The arrival order for one run: the preselected one, or uniform.
Permutation DrawArrival(const SecretaryAlg& alg, const WeightVector& w,
                        Rng& rng);

// Presents each element in `arrival` with weight w_i if active, else 0, and
// returns what the algorithm accepts.
SubsetMask SecretaryWrap(const SecretaryAlg& alg, const WeightVector& w,
                         const Matroid& m, const SubsetMask& active,
                         const Permutation& arrival);

}  // namespace ocrs

#endif  // OCRS_SECRETARY_H_
