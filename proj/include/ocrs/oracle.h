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

// Brute-force ground truth for small instances.

#ifndef OCRS_ORACLE_H_
#define OCRS_ORACLE_H_

#include <optional>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "ocrs/matroid.h"
#include "ocrs/prior.h"
#include "ocrs/rational.h"
#include "ocrs/schemes.h"
#include "ocrs/subset_mask.h"

namespace ocrs {

// Largest ground set and LP size the alpha oracle accepts.
inline constexpr int kOracleMaxN = 12;
inline constexpr int kOracleMaxColumns = 20000;

template <typename Scalar>
struct AlphaCertificate {
  struct Row {
    SubsetMask atom;
    Scalar prob;
    // Independent subsets of `atom` with positive weight; weights sum to 1.
    std::vector<std::pair<SubsetMask, Scalar>> distribution;
  };
  Scalar alpha_star;
  std::vector<Row> witness;
  // Per element Pr[i selected | i active] under the witness; nullopt when
  // i is never active.
  std::vector<std::optional<Scalar>> witness_balancedness;
};

// Best balancedness over all (offline) CRSs: maximize alpha subject to
// Pr[i selected] >= alpha x_i with one distribution over independent
// subsets per support atom. Fails for priors without a listed support, when
// no element is ever active, or when the LP would be too large.
template <typename Scalar>
absl::StatusOr<AlphaCertificate<Scalar>> MaxUncontentiousAlpha(
    const Matroid& m, const Prior& p);

// Row sums, independence and containment of the witness, and that its
// minimum balancedness equals alpha_star within `tolerance`.
template <typename Scalar>
absl::Status CheckCertificate(const Matroid& m,
                              const AlphaCertificate<Scalar>& cert,
                              const Scalar& tolerance);

// Pr[i selected | i active] by enumerating the support and the scheme's
// internal randomness. nullopt entries mark elements that are never active.
template <typename Scalar>
absl::StatusOr<std::vector<std::optional<Scalar>>> ExactBalancedness(
    const Matroid& m, const Scheme& s, const Prior& p,
    bool sentinel_by_subsets = false);

// Minimum over elements with data; nullopt if there are none.
template <typename Scalar>
std::optional<Scalar> MinBalancedness(
    const std::vector<std::optional<Scalar>>& b);

inline constexpr int kBruteforceRankLimit = 20;

// max over independent Y within s of w(Y), by exhaustion.
absl::StatusOr<double> BruteforceWeightedRank(const Matroid& m,
                                              const WeightVector& w,
                                              const SubsetMask& s);

// Independent subsets of s, by depth-first extension.
std::vector<SubsetMask> IndependentSubsets(const Matroid& m,
                                           const SubsetMask& s);

}  // namespace ocrs

#endif  // OCRS_ORACLE_H_
