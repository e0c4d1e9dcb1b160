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

#include "ocrs/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "absl/strings/str_format.h"
#include "glog/logging.h"

namespace ocrs {
namespace {

struct ShardCounts {
  std::vector<int64_t> active;
  std::vector<int64_t> selected;
};

std::string Num(double v) { return absl::StrFormat("%.12g", v); }

}  // namespace

double HoeffdingHalfWidth(int64_t active, double level) {
  CHECK_GT(active, 0);
  CHECK(level > 0.0 && level < 1.0) << "level " << level;
  return std::sqrt(std::log(2.0 / (1.0 - level)) / (2.0 * active));
}

BalancednessReport EstimateBalancedness(const SchemeRunner& runner,
                                        const Prior& p,
                                        const EstimateConfig& cfg) {
  CHECK_GE(cfg.trials, 1) << "trials must be >= 1";
  CHECK_GE(cfg.shards, 1);
  const int n = p.n();
  const int shards = static_cast<int>(
      std::min<int64_t>(cfg.shards, cfg.trials));
  std::vector<ShardCounts> counts(shards);
  auto run_shard = [&](int s) {
    Rng rng = MakeRng(cfg.seed, static_cast<uint64_t>(s));
    const int64_t lo = cfg.trials * s / shards;
    const int64_t hi = cfg.trials * (s + 1) / shards;
    ShardCounts& c = counts[s];
    c.active.assign(n, 0);
    c.selected.assign(n, 0);
    for (int64_t t = lo; t < hi; ++t) {
      const SubsetMask a = p.Sample(rng);
      const SubsetMask x = runner(a, rng);
      DCHECK(x.IsSubsetOf(a)) << "scheme selected an inactive element";
      a.ForEach([&](int i) { ++c.active[i]; });
      x.ForEach([&](int i) { ++c.selected[i]; });
    }
  };
  int threads = cfg.threads > 0
                    ? cfg.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, shards);
  if (threads == 1) {
    for (int s = 0; s < shards; ++s) run_shard(s);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (int s = next++; s < shards; s = next++) run_shard(s);
      });
    }
    for (auto& th : pool) th.join();
  }

  BalancednessReport r;
  r.seed = cfg.seed;
  r.trials = cfg.trials;
  r.ci_level = cfg.ci_level;
  r.shards = shards;
  r.elements.resize(n);
  for (int i = 0; i < n; ++i) {
    ElementEstimate& e = r.elements[i];
    e.element = i;
    for (const ShardCounts& c : counts) {
      e.active += c.active[i];
      e.selected += c.selected[i];
    }
    if (e.active == 0) continue;
    const double est = static_cast<double>(e.selected) / e.active;
    e.estimate = est;
    e.half_width = HoeffdingHalfWidth(e.active, cfg.ci_level);
    e.ci_lo = std::max(0.0, est - e.half_width);
    e.ci_hi = std::min(1.0, est + e.half_width);
    if (!r.min_estimate || est < *r.min_estimate) {
      r.min_estimate = est;
      r.argmin = i;
    }
  }
  return r;
}

BalancednessReport EstimateBalancedness(const Matroid& m, const Scheme& s,
                                        const Prior& p,
                                        const EstimateConfig& cfg) {
  BalancednessReport r = EstimateBalancedness(
      [&](const SubsetMask& a, Rng& rng) { return RunScheme(m, s, a, rng); },
      p, cfg);
  r.scheme = SchemeKindName(s);
  return r;
}

std::string ReportCsv(const BalancednessReport& r) {
  std::string out = "element,active_count,selected_count,estimate,ci_lo,ci_hi\n";
  for (const ElementEstimate& e : r.elements) {
    if (e.estimate) {
      absl::StrAppendFormat(&out, "%d,%d,%d,%s,%s,%s\n", e.element, e.active,
                            e.selected, Num(*e.estimate), Num(e.ci_lo),
                            Num(e.ci_hi));
    } else {
      absl::StrAppendFormat(&out, "%d,0,0,no-data,no-data,no-data\n",
                            e.element);
    }
  }
  return out;
}

Json ReportJson(const BalancednessReport& r) {
  Json elems = Json::array();
  for (const ElementEstimate& e : r.elements) {
    Json j{{"element", e.element},
           {"active_count", e.active},
           {"selected_count", e.selected}};
    if (e.estimate) {
      j["estimate"] = *e.estimate;
      j["half_width"] = e.half_width;
      j["ci_lo"] = e.ci_lo;
      j["ci_hi"] = e.ci_hi;
    } else {
      j["estimate"] = "no-data";
    }
    elems.push_back(j);
  }
  Json j{{"instance", r.instance},
         {"scheme", r.scheme},
         {"seed", r.seed},
         {"trials", r.trials},
         {"ci_level", r.ci_level},
         {"ci_method", "hoeffding"},
         {"shards", r.shards},
         {"elements", elems}};
  if (r.min_estimate) {
    j["min_estimate"] = *r.min_estimate;
    j["argmin"] = r.argmin;
  } else {
    j["min_estimate"] = "no-data";
  }
  return j;
}

}  // namespace ocrs
