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

#include "ocrs/subsampling.h"

#include <algorithm>
#include <numeric>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace ocrs {

Permutation::Permutation(std::vector<int> order)
    : order_(std::move(order)), position_(order_.size()) {
  for (int p = 0; p < n(); ++p) position_[order_[p]] = p;
}

absl::StatusOr<Permutation> Permutation::Create(std::vector<int> order) {
  const int n = static_cast<int>(order.size());
  std::vector<char> seen(n, 0);
  for (int e : order) {
    if (e < 0 || e >= n || seen[e]) {
      return absl::InvalidArgumentError(absl::StrCat(
          "not a permutation of 0..", n - 1, ": [", absl::StrJoin(order, ","),
          "]"));
    }
    seen[e] = 1;
  }
  return Permutation(std::move(order));
}

Permutation Permutation::Identity(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return Permutation(std::move(order));
}

Permutation Permutation::Uniform(int n, Rng& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return Permutation(std::move(order));
}

std::string Permutation::ToString() const {
  return absl::StrCat("(", absl::StrJoin(order_, ","), ")");
}

SubsetMask TRho(const SubsetMask& s, double rho, Rng& rng) {
  CHECK(rho >= 0.0 && rho <= 1.0) << "rho = " << rho << " outside [0,1]";
  if (rho == 1.0) return s;
  SubsetMask out(s.n());
  if (rho == 0.0) return out;
  s.ForEach([&](int i) {
    if (UniformDouble(rng) < rho) out.Insert(i);
  });
  return out;
}

SubsetMask PrefixOf(const Permutation& sigma, int e) {
  CHECK(e >= 0 && e < sigma.n()) << "element " << e << " not in permutation";
  SubsetMask out(sigma.n());
  for (int p = 0; p < sigma.PositionOf(e); ++p) out.Insert(sigma[p]);
  return out;
}

SubsetMask SentinelPrefix(const Permutation& sigma_with_sentinel) {
  const int n = sigma_with_sentinel.n() - 1;
  CHECK_GE(n, 0);
  SubsetMask out(n);
  for (int p = 0; sigma_with_sentinel[p] != n; ++p) {
    out.Insert(sigma_with_sentinel[p]);
  }
  return out;
}

SubsetMask PrefixSubsample(int n, Rng& rng) {
  CHECK_GE(n, 1);
  return SentinelPrefix(Permutation::Uniform(n + 1, rng));
}

}  // namespace ocrs
