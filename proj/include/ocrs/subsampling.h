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

// Permutations, independent subsampling and the sentinel-prefix subsampler.

#ifndef OCRS_SUBSAMPLING_H_
#define OCRS_SUBSAMPLING_H_

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "ocrs/random.h"
#include "ocrs/subset_mask.h"

namespace ocrs {

// A bijection on {0..n-1}. order()[p] is the element at position p.
class Permutation {
 public:
  Permutation() = default;
  static absl::StatusOr<Permutation> Create(std::vector<int> order);
  static Permutation Identity(int n);
  // Uniformly random (Fisher-Yates).
  static Permutation Uniform(int n, Rng& rng);

  int n() const { return static_cast<int>(order_.size()); }
  int operator[](int position) const { return order_[position]; }
  int PositionOf(int element) const { return position_[element]; }
  const std::vector<int>& order() const { return order_; }
  std::string ToString() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.order_ == b.order_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.order_ < b.order_;
  }
  template <typename H>
  friend H AbslHashValue(H h, const Permutation& p) {
    return H::combine(std::move(h), p.order_);
  }

 private:
  explicit Permutation(std::vector<int> order);
  std::vector<int> order_;
  std::vector<int> position_;
};

// Calls f on all n! permutations in lexicographic order.
template <typename F>
void ForEachPermutation(int n, F&& f) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  do {
    f(*Permutation::Create(order));
  } while (std::next_permutation(order.begin(), order.end()));
}

// Keeps each element of s independently with probability rho in [0,1].
SubsetMask TRho(const SubsetMask& s, double rho, Rng& rng);

// Elements strictly before e in sigma.
SubsetMask PrefixOf(const Permutation& sigma, int e);

// Shuffles n+1 symbols, the last one (index n) a sentinel, and returns the
// elements that land before the sentinel.
SubsetMask PrefixSubsample(int n, Rng& rng);

// The same set read off a given permutation of n+1 symbols.
SubsetMask SentinelPrefix(const Permutation& sigma_with_sentinel);

}  // namespace ocrs

#endif  // OCRS_SUBSAMPLING_H_
