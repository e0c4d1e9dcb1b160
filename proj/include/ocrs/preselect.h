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

// Order preselection. Positions are filled from the back: at step i the
// lowest-index element of the remaining set S_i that is rarely spanned when
// active goes to position i, in one of two flavors:
//
//   independent: Pr[j not in span(T_{rho}(A ∩ S_i)) | j in A] >= alpha/2,
//                rho = alpha/2;
//   prefix:      Pr[j not in span(A ∩ prefix(sigma, j)) | j in A] >= alpha,
//                sigma uniform over S_i.
//
// Probabilities are either estimated by sampling or computed exactly from an
// explicit support.

#ifndef OCRS_PRESELECT_H_
#define OCRS_PRESELECT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "ocrs/matroid.h"
#include "ocrs/prior.h"
#include "ocrs/random.h"
#include "ocrs/subsampling.h"
#include "ocrs/subset_mask.h"

namespace ocrs {

enum class PreselectMode { kMonteCarlo, kExact };
enum class PreselectKind { kIndependent, kPrefix };

struct PreselectConfig {
  double alpha = 0.0;
  double eps = 0.25;
  PreselectMode mode = PreselectMode::kMonteCarlo;
  // Samples per step; replaces the default formula when set.
  std::optional<int64_t> sample_override;
  // Used instead of PMin(prior) when set.
  std::optional<double> p_min;
  // Slack on exact comparisons against the threshold.
  double exact_tolerance = 1e-9;
};

absl::Status ValidatePreselectConfig(const PreselectConfig& cfg);

// ceil(128 ln(4n/eps) / (alpha^2 eps^2 p_min)).
int64_t PreselectSampleCount(int n, double alpha, double eps, double p_min);

struct SpanStats {
  int64_t m = 0;
  // Times j was active.
  std::vector<int64_t> active;
  // Times j was active and not spanned.
  std::vector<int64_t> unspanned;
};

// Draws A_1..A_m, keeps B = T_rho(A) ∩ s_i and a basis X of B, and counts
// j in A ∩ s_i with j not in X and X + j independent.
SpanStats CountSpanStatsIndependent(const Matroid& m, const Prior& p,
                                    const SubsetMask& s_i, double rho,
                                    int64_t samples, Rng& rng);

// Draws (A, sigma) with sigma uniform over s_i and counts j in A ∩ s_i not
// spanned by the active elements before j in sigma.
SpanStats CountSpanStatsPrefix(const Matroid& m, const Prior& p,
                               const SubsetMask& s_i, int64_t samples,
                               Rng& rng);

// Exact Pr[j not in span(T_rho(A ∩ s_i)) | j in A] from an explicit
// support; enumerates every subsample of each atom.
double ExactUnspannedIndependent(const Matroid& m,
                                 const std::vector<Atom>& support,
                                 const SubsetMask& s_i, double rho, int j);

// Exact Pr[j not in span(A ∩ prefix(sigma, j)) | j in A], sigma uniform
// over s_i. Given A, the active prefix of j is a uniformly sized, then
// uniformly chosen, subset of (A ∩ s_i) - j; that law is enumerated.
double ExactUnspannedPrefix(const Matroid& m, const std::vector<Atom>& support,
                            const SubsetMask& s_i, int j);

// Largest active-set size the exact independent mode enumerates.
inline constexpr int kExactIndependentLimit = 12;
// Largest |S_i| the exact prefix mode enumerates.
inline constexpr int kExactPrefixLimit = 16;

struct PreselectStep {
  int position = 0;  // 0-based position being filled
  int element = -1;  // chosen element, -1 on failure
  double statistic = 0.0;
  double threshold = 0.0;
};

struct PreselectResult {
  enum class Status { kOk, kNoQualifyingElement };
  Status status = Status::kOk;
  // order[p] = element at position p; -1 for positions left unfilled.
  std::vector<int> order;
  // Position at which no element qualified, or -1.
  int failed_position = -1;
  std::vector<PreselectStep> steps;
  int64_t samples_per_step = 0;
  double p_min = 0.0;

  bool ok() const { return status == Status::kOk; }
  // Requires ok().
  Permutation permutation() const;
};

// Config errors and ExactModeTooLarge come back as a non-ok status; a step
// with no qualifying element is reported inside the result.
absl::StatusOr<PreselectResult> Preselect(const Matroid& m, const Prior& p,
                                          PreselectKind kind,
                                          const PreselectConfig& cfg,
                                          Rng& rng);

inline absl::StatusOr<PreselectResult> PreselectIndependent(
    const Matroid& m, const Prior& p, const PreselectConfig& cfg, Rng& rng) {
  return Preselect(m, p, PreselectKind::kIndependent, cfg, rng);
}
inline absl::StatusOr<PreselectResult> PreselectPrefix(
    const Matroid& m, const Prior& p, const PreselectConfig& cfg, Rng& rng) {
  return Preselect(m, p, PreselectKind::kPrefix, cfg, rng);
}

// Step statistics of a given order, for checking that it satisfies the
// selection condition. Uses the same mode and sample sizes as Preselect.
absl::StatusOr<std::vector<PreselectStep>> CheckOrder(
    const Matroid& m, const Prior& p, PreselectKind kind,
    const PreselectConfig& cfg, const Permutation& order, Rng& rng);

}  // namespace ocrs

#endif  // OCRS_PRESELECT_H_
