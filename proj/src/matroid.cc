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

#include "ocrs/matroid.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace ocrs {
namespace {

class OracleBuilder : public IndependentSetBuilder {
 public:
  explicit OracleBuilder(const Matroid& m)
      : IndependentSetBuilder(m.ground_size()), m_(m) {}
  bool CanAdd(int e) const override {
    return m_.IsIndependent(current_.With(e));
  }
  void Add(int e) override { current_.Insert(e); }

 private:
  const Matroid& m_;
};

class CountingBuilder : public IndependentSetBuilder {
 public:
  CountingBuilder(int n, int k) : IndependentSetBuilder(n), k_(k) {}
  bool CanAdd(int) const override { return size_ < k_; }
  void Add(int e) override {
    current_.Insert(e);
    ++size_;
  }

 private:
  int k_;
  int size_ = 0;
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) const {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // False if a and b were already joined.
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  mutable std::vector<int> parent_;
};

class ForestBuilder : public IndependentSetBuilder {
 public:
  explicit ForestBuilder(const GraphicMatroid& g)
      : IndependentSetBuilder(g.ground_size()),
        edges_(g.edges()),
        uf_(g.num_vertices()) {}
  bool CanAdd(int e) const override {
    return uf_.Find(edges_[e].first) != uf_.Find(edges_[e].second);
  }
  void Add(int e) override {
    current_.Insert(e);
    uf_.Union(edges_[e].first, edges_[e].second);
  }

 private:
  const std::vector<std::pair<int, int>>& edges_;
  UnionFind uf_;
};

}  // namespace

std::unique_ptr<IndependentSetBuilder> Matroid::NewBuilder() const {
  return std::make_unique<OracleBuilder>(*this);
}

UniformMatroid::UniformMatroid(int n, int k) : Matroid(n), k_(k) {
  CHECK_GE(k, 0);
}

std::unique_ptr<IndependentSetBuilder> UniformMatroid::NewBuilder() const {
  return std::make_unique<CountingBuilder>(ground_size(), k_);
}

std::string UniformMatroid::DebugString() const {
  return absl::StrFormat("uniform(n=%d,k=%d)", ground_size(), k_);
}

GraphicMatroid::GraphicMatroid(int num_vertices,
                               std::vector<std::pair<int, int>> edges)
    : Matroid(static_cast<int>(edges.size())),
      num_vertices_(num_vertices),
      edges_(std::move(edges)) {
  for (const auto& [u, v] : edges_) {
    CHECK(u >= 0 && u < num_vertices_ && v >= 0 && v < num_vertices_)
        << "edge endpoint outside [0," << num_vertices_ << ")";
  }
}

bool GraphicMatroid::IsIndependentImpl(const SubsetMask& s) const {
  UnionFind uf(num_vertices_);
  bool acyclic = true;
  s.ForEach([&](int e) {
    if (acyclic && !uf.Union(edges_[e].first, edges_[e].second)) {
      acyclic = false;
    }
  });
  return acyclic;
}

std::unique_ptr<IndependentSetBuilder> GraphicMatroid::NewBuilder() const {
  return std::make_unique<ForestBuilder>(*this);
}

std::string GraphicMatroid::DebugString() const {
  return absl::StrFormat("graphic(vertices=%d,edges=%d)", num_vertices_,
                         ground_size());
}

ExplicitMatroid::ExplicitMatroid(int n,
                                 const std::vector<SubsetMask>& independent_sets)
    : Matroid(n) {
  for (const SubsetMask& s : independent_sets) {
    CHECK_EQ(s.n(), n) << "dimension mismatch";
    family_.insert(s);
  }
}

std::vector<SubsetMask> ExplicitMatroid::independent_sets() const {
  std::vector<SubsetMask> out(family_.begin(), family_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string ExplicitMatroid::DebugString() const {
  return absl::StrFormat("explicit(n=%d,sets=%d)", ground_size(),
                         family_.size());
}

RestrictedMatroid::RestrictedMatroid(MatroidPtr parent, SubsetMask ground)
    : Matroid(parent->ground_size()),
      parent_(std::move(parent)),
      ground_(std::move(ground)) {
  CHECK_EQ(ground_.n(), ground_size()) << "dimension mismatch";
}

std::string RestrictedMatroid::DebugString() const {
  return absl::StrCat(parent_->DebugString(), "|", ground_.ToString());
}

absl::StatusOr<WeightVector> WeightVector::Create(std::vector<double> w) {
  for (size_t i = 0; i < w.size(); ++i) {
    if (!(w[i] >= 0.0) || !std::isfinite(w[i])) {
      return absl::InvalidArgumentError(
          absl::StrFormat("weight %d is %g; weights must be finite and >= 0",
                          i, w[i]));
    }
  }
  return WeightVector(std::move(w));
}

double WeightVector::SumOver(const SubsetMask& s) const {
  CHECK_EQ(s.n(), size()) << "dimension mismatch";
  double total = 0.0;
  s.ForEach([&](int i) { total += w_[i]; });
  return total;
}

int Rank(const Matroid& m, const SubsetMask& s) {
  return BasisOf(m, s).Cardinality();
}

std::vector<int> DecreasingWeightOrder(const std::vector<double>& w) {
  std::vector<int> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return w[a] > w[b]; });
  return order;
}

double WeightedRank(const Matroid& m, const WeightVector& w,
                    const SubsetMask& s) {
  CHECK_EQ(s.n(), m.ground_size()) << "dimension mismatch";
  CHECK_EQ(w.size(), m.ground_size()) << "dimension mismatch";
  auto builder = m.NewBuilder();
  double total = 0.0;
  for (int e : DecreasingWeightOrder(w.values())) {
    if (w[e] <= 0.0) break;
    if (s.Contains(e) && builder->TryAdd(e)) total += w[e];
  }
  return total;
}

SubsetMask BasisOf(const Matroid& m, const SubsetMask& s) {
  CHECK_EQ(s.n(), m.ground_size()) << "dimension mismatch";
  auto builder = m.NewBuilder();
  s.ForEach([&](int e) { builder->TryAdd(e); });
  return builder->current();
}

SubsetMask Span(const Matroid& m, const SubsetMask& s) {
  const SubsetMask basis = BasisOf(m, s);
  SubsetMask out = basis;
  for (int i = 0; i < m.ground_size(); ++i) {
    if (!basis.Contains(i) && !m.IsIndependent(basis.With(i))) out.Insert(i);
  }
  return out;
}

MatroidPtr Restrict(MatroidPtr m, const SubsetMask& ground) {
  return std::make_shared<RestrictedMatroid>(std::move(m), ground);
}

absl::StatusOr<bool> VerifyAxioms(const Matroid& m, int limit) {
  const int n = m.ground_size();
  if (n > limit) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "ground set of size %d exceeds exhaustive limit %d", n, limit));
  }
  const uint64_t num_sets = uint64_t{1} << n;
  std::vector<char> indep(num_sets);
  for (uint64_t s = 0; s < num_sets; ++s) {
    indep[s] = m.IsIndependent(SubsetMask::FromBits(n, s));
  }
  if (!indep[0]) return false;
  // Downward closure: dropping one element suffices by induction.
  for (uint64_t s = 1; s < num_sets; ++s) {
    if (!indep[s]) continue;
    for (uint64_t rest = s; rest; rest &= rest - 1) {
      if (!indep[s & ~(rest & -rest)]) return false;
    }
  }
  // rank[s] = size of a largest independent subset of s.
  std::vector<uint8_t> rank(num_sets);
  for (uint64_t s = 1; s < num_sets; ++s) {
    if (indep[s]) {
      rank[s] = static_cast<uint8_t>(std::popcount(s));
      continue;
    }
    uint8_t best = 0;
    for (uint64_t rest = s; rest; rest &= rest - 1) {
      best = std::max(best, rank[s & ~(rest & -rest)]);
    }
    rank[s] = best;
  }
  // Exchange holds iff this rank is submodular; the local form suffices.
  for (uint64_t s = 0; s < num_sets; ++s) {
    for (int x = 0; x < n; ++x) {
      const uint64_t bx = uint64_t{1} << x;
      if (s & bx) continue;
      for (int y = x + 1; y < n; ++y) {
        const uint64_t by = uint64_t{1} << y;
        if (s & by) continue;
        if (rank[s | bx] + rank[s | by] < rank[s | bx | by] + rank[s]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace ocrs
