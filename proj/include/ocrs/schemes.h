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

// Online contention resolution schemes. Building a scheme (preselection, LP)
// is separate from running it, so one build serves many draws of A.

#ifndef OCRS_SCHEMES_H_
#define OCRS_SCHEMES_H_

#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "ocrs/matroid.h"
#include "ocrs/preselect.h"
#include "ocrs/prior.h"
#include "ocrs/random.h"
#include "ocrs/secretary.h"
#include "ocrs/subsampling.h"
#include "ocrs/subset_mask.h"

namespace ocrs {

// Greedy along pi over the active set.
struct GreedyOrderedScheme {
  Permutation pi;
};
// Greedy along pi over A ∩ T, T keeping each element with probability rho.
struct Alg1Scheme {
  Permutation pi;
  double rho = 0.0;
};
// Greedy along pi over A ∩ T, T the sentinel prefix of a random
// permutation of n+1 symbols.
struct Alg3Scheme {
  Permutation pi;
};
// Draws pi with probability lambda, then greedy along pi.
struct PermutationMixtureScheme {
  std::vector<std::pair<Permutation, double>> components;
};
// Draws w with probability lambda, then runs the secretary algorithm on
// weights w masked by the active set.
struct WeightMixtureScheme {
  SecretaryKind secretary = SecretaryKind::kGreedyByWeight;
  std::vector<std::pair<WeightVector, double>> components;
};

using Scheme = std::variant<GreedyOrderedScheme, Alg1Scheme, Alg3Scheme,
                            PermutationMixtureScheme, WeightMixtureScheme>;

std::string SchemeKindName(const Scheme& s);

inline constexpr double kMixtureTolerance = 1e-9;

// Sizes match n and mixture weights are >= 0 summing to 1.
absl::Status ValidateScheme(const Scheme& s, int n);

// Scans pi and adds pi(i) when it is in `allowed` and keeps independence.
SubsetMask GreedyOrdered(const Matroid& m, const Permutation& pi,
                         const SubsetMask& allowed);

// One run given the active set. Randomness internal to the scheme comes
// from rng.
SubsetMask RunScheme(const Matroid& m, const Scheme& s, const SubsetMask& a,
                     Rng& rng);

// Non-ok status carrying this message prefix marks a failed preselection.
inline constexpr char kNoQualifyingElement[] = "NoQualifyingElement";
bool IsNoQualifyingElement(const absl::Status& s);

// Preselects pi (independent flavor) and returns the scheme with
// rho = alpha/2. With alpha = 0 the identity order is used and nothing is
// ever selected. `report`, if given, receives the preselection record
// including the partial order on failure.
absl::StatusOr<Scheme> BuildAlg1(const Matroid& m, const Prior& p,
                                 const PreselectConfig& cfg, Rng& rng,
                                 PreselectResult* report = nullptr);
// Same with the prefix flavor.
absl::StatusOr<Scheme> BuildAlg3(const Matroid& m, const Prior& p,
                                 const PreselectConfig& cfg, Rng& rng,
                                 PreselectResult* report = nullptr);

struct SchemeRun {
  Permutation pi;
  SubsetMask selected;
};

// Build, then one draw of A from p and one run.
absl::StatusOr<SchemeRun> RunAlg1(const Matroid& m, const Prior& p,
                                  const PreselectConfig& cfg, Rng& rng);
absl::StatusOr<SchemeRun> RunAlg3(const Matroid& m, const Prior& p,
                                  const PreselectConfig& cfg, Rng& rng);

// Largest n for which random arrivals or sentinel permutations are
// enumerated one by one.
inline constexpr int kMaxPermutationEnumeration = 8;
// Largest n for the subset-law enumeration of sentinel prefixes.
inline constexpr int kMaxPrefixSubsetEnumeration = 20;

// Calls f(weight, selected) for every outcome of the scheme's internal
// randomness given active set a; weights sum to 1. Alg1 enumerates
// subsamples of a, Alg3 the (n+1)! sentinel permutations (or, with
// sentinel_by_subsets, each prefix set T with weight
// 1/((n+1) C(n,|T|))), weight mixtures each arrival of a random-order
// algorithm. Fails when the enumeration is too large.
template <typename Scalar>
absl::Status ForEachOutcome(
    const Matroid& m, const Scheme& s, const SubsetMask& a,
    bool sentinel_by_subsets,
    const std::function<void(const Scalar&, const SubsetMask&)>& f);

// Per-element probability of being accepted by SecretaryWrap given the
// active set, averaging over arrivals of random-order algorithms.
absl::StatusOr<std::vector<double>> SecretarySelectionProbabilities(
    const SecretaryAlg& alg, const WeightVector& w, const Matroid& m,
    const SubsetMask& a);

}  // namespace ocrs

#endif  // OCRS_SCHEMES_H_
