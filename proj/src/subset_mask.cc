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

#include "ocrs/subset_mask.h"

#include "absl/strings/str_join.h"

namespace ocrs {

SubsetMask SubsetMask::Full(int n) {
  SubsetMask s(n);
  for (int w = 0; w < s.num_words(); ++w) s.words_[w] = ~uint64_t{0};
  if (n % 64 != 0) s.words_.back() = (uint64_t{1} << (n % 64)) - 1;
  return s;
}

SubsetMask SubsetMask::FromElements(int n, const std::vector<int>& elements) {
  SubsetMask s(n);
  for (int e : elements) s.Insert(e);
  return s;
}

SubsetMask SubsetMask::FromBits(int n, uint64_t bits) {
  CHECK_LE(n, 64);
  SubsetMask s(n);
  if (n == 0) {
    CHECK_EQ(bits, 0u);
    return s;
  }
  CHECK(n == 64 || (bits >> n) == 0) << "bit set beyond n=" << n;
  s.words_[0] = bits;
  return s;
}

bool SubsetMask::IsSubsetOf(const SubsetMask& other) const {
  CheckSameSize(other);
  for (int w = 0; w < num_words(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

SubsetMask& SubsetMask::operator&=(const SubsetMask& o) {
  CheckSameSize(o);
  for (int w = 0; w < num_words(); ++w) words_[w] &= o.words_[w];
  return *this;
}

SubsetMask& SubsetMask::operator|=(const SubsetMask& o) {
  CheckSameSize(o);
  for (int w = 0; w < num_words(); ++w) words_[w] |= o.words_[w];
  return *this;
}

SubsetMask& SubsetMask::operator-=(const SubsetMask& o) {
  CheckSameSize(o);
  for (int w = 0; w < num_words(); ++w) words_[w] &= ~o.words_[w];
  return *this;
}

std::strong_ordering operator<=>(const SubsetMask& a, const SubsetMask& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (int w = a.num_words() - 1; w >= 0; --w) {
    if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
  }
  return std::strong_ordering::equal;
}

std::vector<int> SubsetMask::Elements() const {
  std::vector<int> out;
  out.reserve(Cardinality());
  ForEach([&](int i) { out.push_back(i); });
  return out;
}

std::string SubsetMask::ToString() const {
  return absl::StrCat("{", absl::StrJoin(Elements(), ","), "}");
}

}  // namespace ocrs
