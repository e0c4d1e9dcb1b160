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

// Matroids given by a membership oracle, with rank, span and bases derived
// from it greedily.

#ifndef OCRS_MATROID_H_
#define OCRS_MATROID_H_

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_set.h"
#include "absl/status/statusor.h"
#include "ocrs/subset_mask.h"

namespace ocrs {

class Matroid;

// Grows an independent set one element at a time. Obtained from
// Matroid::NewBuilder(); starts empty.
class IndependentSetBuilder {
 public:
  virtual ~IndependentSetBuilder() = default;

  // True iff current() + e is independent. e must not be in current().
  virtual bool CanAdd(int e) const = 0;
  // Adds e, which must satisfy CanAdd(e).
  virtual void Add(int e) = 0;

  bool TryAdd(int e) {
    if (!CanAdd(e)) return false;
    Add(e);
    return true;
  }
  const SubsetMask& current() const { return current_; }

 protected:
  explicit IndependentSetBuilder(int n) : current_(n) {}
  SubsetMask current_;
};

// Immutable after construction; all queries are const and thread-safe.
class Matroid {
 public:
  explicit Matroid(int n) : n_(n) { CHECK_GE(n, 0); }
  virtual ~Matroid() = default;

  int ground_size() const { return n_; }

  bool IsIndependent(const SubsetMask& s) const {
    CHECK_EQ(s.n(), n_) << "dimension mismatch";
    return IsIndependentImpl(s);
  }

  virtual std::unique_ptr<IndependentSetBuilder> NewBuilder() const;
  virtual std::string DebugString() const = 0;

 protected:
  virtual bool IsIndependentImpl(const SubsetMask& s) const = 0;

 private:
  int n_;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

// Sets of size at most k.
class UniformMatroid : public Matroid {
 public:
  UniformMatroid(int n, int k);
  int k() const { return k_; }
  std::unique_ptr<IndependentSetBuilder> NewBuilder() const override;
  std::string DebugString() const override;

 protected:
  bool IsIndependentImpl(const SubsetMask& s) const override {
    return s.Cardinality() <= k_;
  }

 private:
  int k_;
};

// Acyclic edge sets of a multigraph. Element e is edges()[e]; repeated
// vertex pairs and self-loops are allowed.
class GraphicMatroid : public Matroid {
 public:
  GraphicMatroid(int num_vertices, std::vector<std::pair<int, int>> edges);
  int num_vertices() const { return num_vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::unique_ptr<IndependentSetBuilder> NewBuilder() const override;
  std::string DebugString() const override;

 protected:
  bool IsIndependentImpl(const SubsetMask& s) const override;

 private:
  int num_vertices_;
  std::vector<std::pair<int, int>> edges_;
};

// A set family listed in full. The family is stored as given and is not
// required to be a matroid; see VerifyAxioms.
class ExplicitMatroid : public Matroid {
 public:
  ExplicitMatroid(int n, const std::vector<SubsetMask>& independent_sets);
  // Sorted ascending.
  std::vector<SubsetMask> independent_sets() const;
  std::string DebugString() const override;

 protected:
  bool IsIndependentImpl(const SubsetMask& s) const override {
    return family_.contains(s);
  }

 private:
  absl::flat_hash_set<SubsetMask> family_;
};

// Independent sets of `parent` contained in `ground`. Same ground size.
class RestrictedMatroid : public Matroid {
 public:
  RestrictedMatroid(MatroidPtr parent, SubsetMask ground);
  const MatroidPtr& parent() const { return parent_; }
  const SubsetMask& ground() const { return ground_; }
  std::string DebugString() const override;

 protected:
  bool IsIndependentImpl(const SubsetMask& s) const override {
    return s.IsSubsetOf(ground_) && parent_->IsIndependent(s);
  }

 private:
  MatroidPtr parent_;
  SubsetMask ground_;
};

// Nonnegative weights, one per element.
class WeightVector {
 public:
  WeightVector() = default;
  static absl::StatusOr<WeightVector> Create(std::vector<double> w);
  // All-ones weights.
  static WeightVector Ones(int n) { return WeightVector(std::vector<double>(n, 1.0)); }

  int size() const { return static_cast<int>(w_.size()); }
  double operator[](int i) const { return w_[i]; }
  const std::vector<double>& values() const { return w_; }
  double SumOver(const SubsetMask& s) const;

  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.w_ == b.w_;
  }
  template <typename H>
  friend H AbslHashValue(H h, const WeightVector& w) {
    return H::combine(std::move(h), w.w_);
  }

 private:
  explicit WeightVector(std::vector<double> w) : w_(std::move(w)) {}
  std::vector<double> w_;
};

// Size of a largest independent subset of s.
int Rank(const Matroid& m, const SubsetMask& s);

// Largest total weight of an independent subset of s, by the greedy
// algorithm in DecreasingWeightOrder.
double WeightedRank(const Matroid& m, const WeightVector& w,
                    const SubsetMask& s);

// A maximal independent subset of s: elements are scanned by ascending
// index and kept while independence allows.
SubsetMask BasisOf(const Matroid& m, const SubsetMask& s);

// Elements whose addition to s does not raise the rank.
SubsetMask Span(const Matroid& m, const SubsetMask& s);

MatroidPtr Restrict(MatroidPtr m, const SubsetMask& ground);

// Elements sorted by decreasing weight, ties by ascending index.
std::vector<int> DecreasingWeightOrder(const std::vector<double>& w);

inline constexpr int kVerifyAxiomsLimit = 16;

// Exhaustive check of the matroid axioms: the empty set is independent,
// the family is closed under taking subsets, and the exchange property holds
// (checked as submodularity of the cardinality rank over all 2^n sets).
// Fails with InvalidArgument when n exceeds `limit`.
absl::StatusOr<bool> VerifyAxioms(const Matroid& m,
                                  int limit = kVerifyAxiomsLimit);

}  // namespace ocrs

#endif  // OCRS_MATROID_H_
