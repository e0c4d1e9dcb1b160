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

// Monte-Carlo balancedness with Hoeffding intervals. Trials are split into
// a fixed number of shards, each with its own stream, so the counts depend
// only on the seed and not on the thread count.

#ifndef OCRS_HARNESS_H_
#define OCRS_HARNESS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ocrs/json_io.h"
#include "ocrs/lp_engine.h"
#include "ocrs/matroid.h"
#include "ocrs/prior.h"
#include "ocrs/schemes.h"

namespace ocrs {

inline constexpr int kDefaultShards = 64;

struct EstimateConfig {
  int64_t trials = 100000;
  double ci_level = 0.99;
  uint64_t seed = 1;
  int shards = kDefaultShards;
  // 0 means hardware concurrency.
  int threads = 0;
};

// sqrt(ln(2/(1-level)) / (2 active)).
double HoeffdingHalfWidth(int64_t active, double level);

struct ElementEstimate {
  int element = 0;
  int64_t active = 0;
  int64_t selected = 0;
  // Unset when the element was never active.
  std::optional<double> estimate;
  double half_width = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
};

struct BalancednessReport {
  std::string instance;
  std::string scheme;
  uint64_t seed = 0;
  int64_t trials = 0;
  double ci_level = 0.0;
  int shards = 0;
  std::vector<ElementEstimate> elements;
  // Over elements with data.
  std::optional<double> min_estimate;
  int argmin = -1;
};

// Runs `runner` on fresh A ~ p per trial. The runner must be safe to call
// from several threads at once.
BalancednessReport EstimateBalancedness(const SchemeRunner& runner,
                                        const Prior& p,
                                        const EstimateConfig& cfg);
BalancednessReport EstimateBalancedness(const Matroid& m, const Scheme& s,
                                        const Prior& p,
                                        const EstimateConfig& cfg);

// Columns: element, active_count, selected_count, estimate, ci_lo, ci_hi.
std::string ReportCsv(const BalancednessReport& r);
Json ReportJson(const BalancednessReport& r);

}  // namespace ocrs

#endif  // OCRS_HARNESS_H_
