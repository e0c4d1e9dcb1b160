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

#ifndef OCRS_SUBSET_MASK_H_
#define OCRS_SUBSET_MASK_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "absl/container/inlined_vector.h"
#include "glog/logging.h"

namespace ocrs {

// A subset of the ground set {0, ..., n-1}. One inline word covers n <= 64;
// larger ground sets spill to the heap.
class SubsetMask {
 public:
  SubsetMask() : n_(0) {}
  explicit SubsetMask(int n) : n_(n), words_(NumWords(n), 0) {
    CHECK_GE(n, 0);
  }

  static SubsetMask Full(int n);
  static SubsetMask FromElements(int n, const std::vector<int>& elements);
  // Low 64 elements taken from `bits`; requires n <= 64.
  static SubsetMask FromBits(int n, uint64_t bits);

  int n() const { return n_; }
  int num_words() const { return static_cast<int>(words_.size()); }
  uint64_t word(int w) const { return words_[w]; }
  // Requires n <= 64.
  uint64_t bits() const {
    DCHECK_LE(n_, 64);
    return words_.empty() ? 0 : words_[0];
  }

  bool Contains(int i) const {
    DCHECK(i >= 0 && i < n_) << "element " << i << " outside [0," << n_ << ")";
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  void Insert(int i) {
    CHECK(i >= 0 && i < n_) << "element " << i << " outside [0," << n_ << ")";
    words_[i >> 6] |= uint64_t{1} << (i & 63);
  }
  void Erase(int i) {
    CHECK(i >= 0 && i < n_) << "element " << i << " outside [0," << n_ << ")";
    words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
  }
  SubsetMask With(int i) const {
    SubsetMask r = *this;
    r.Insert(i);
    return r;
  }
  SubsetMask Without(int i) const {
    SubsetMask r = *this;
    r.Erase(i);
    return r;
  }

  int Cardinality() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool Empty() const {
    for (uint64_t w : words_) {
      if (w) return false;
    }
    return true;
  }
  bool IsSubsetOf(const SubsetMask& other) const;

  SubsetMask& operator&=(const SubsetMask& o);
  SubsetMask& operator|=(const SubsetMask& o);
  SubsetMask& operator-=(const SubsetMask& o);
  friend SubsetMask operator&(SubsetMask a, const SubsetMask& b) { return a &= b; }
  friend SubsetMask operator|(SubsetMask a, const SubsetMask& b) { return a |= b; }
  friend SubsetMask operator-(SubsetMask a, const SubsetMask& b) { return a -= b; }

  friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  // Orders by numeric value of the indicator vector.
  friend std::strong_ordering operator<=>(const SubsetMask& a,
                                          const SubsetMask& b);

  // Ascending element indices.
  std::vector<int> Elements() const;
  template <typename F>
  void ForEach(F&& f) const {
    for (int w = 0; w < num_words(); ++w) {
      uint64_t bits = words_[w];
      while (bits) {
        f(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  // "{0,2,5}".
  std::string ToString() const;

  template <typename H>
  friend H AbslHashValue(H h, const SubsetMask& s) {
    return H::combine(std::move(h), s.n_, s.words_);
  }

 private:
  static int NumWords(int n) { return n == 0 ? 0 : (n + 63) / 64; }
  void CheckSameSize(const SubsetMask& o) const {
    CHECK_EQ(n_, o.n_) << "ground-set size mismatch";
  }

  int n_;
  absl::InlinedVector<uint64_t, 1> words_;
};

// Calls f on every subset of `s` (including the empty set and `s`).
// Requires n <= 64.
template <typename F>
void ForEachSubset(const SubsetMask& s, F&& f) {
  CHECK_LE(s.n(), 64);
  const uint64_t full = s.bits();
  uint64_t sub = 0;
  while (true) {
    f(SubsetMask::FromBits(s.n(), sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

}  // namespace ocrs

#endif  // OCRS_SUBSET_MASK_H_
