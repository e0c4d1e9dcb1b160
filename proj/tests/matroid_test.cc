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

#include "gtest/gtest.h"
#include "ocrs/random.h"
#include "ocrs/subset_mask.h"

namespace ocrs {
namespace {

// Direct exchange axiom over all pairs of independent sets.
bool ExchangeHolds(const Matroid& m) {
  const int n = m.ground_size();
  std::vector<SubsetMask> ind;
  ForEachSubset(SubsetMask::Full(n), [&](const SubsetMask& s) {
    if (m.IsIndependent(s)) ind.push_back(s);
  });
  for (const SubsetMask& x : ind) {
    for (const SubsetMask& y : ind) {
      if (y.Cardinality() >= x.Cardinality()) continue;
      bool found = false;
      (x - y).ForEach([&](int i) { found |= m.IsIndependent(y.With(i)); });
      if (!found) return false;
    }
  }
  return true;
}

int BruteRank(const Matroid& m, const SubsetMask& s) {
  int best = 0;
  ForEachSubset(s, [&](const SubsetMask& t) {
    if (m.IsIndependent(t)) best = std::max(best, t.Cardinality());
  });
  return best;
}

std::shared_ptr<GraphicMatroid> RandomGraphic(int n, Rng& rng) {
  const int v = UniformInt(rng, 2, 5);
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < n; ++e) {
    edges.push_back({UniformInt(rng, 0, v - 1), UniformInt(rng, 0, v - 1)});
  }
  return std::make_shared<GraphicMatroid>(v, edges);
}

TEST(MatroidTest, UniformIndependence) {
  UniformMatroid m(5, 2);
  EXPECT_TRUE(m.IsIndependent(SubsetMask::FromElements(5, {0, 4})));
  EXPECT_FALSE(m.IsIndependent(SubsetMask::FromElements(5, {0, 1, 4})));
  EXPECT_EQ(Rank(m, SubsetMask::Full(5)), 2);
}

TEST(MatroidTest, GraphicParallelEdgesAndLoops) {
  GraphicMatroid m(3, {{0, 1}, {0, 1}, {1, 2}, {2, 2}});
  EXPECT_TRUE(m.IsIndependent(SubsetMask::FromElements(4, {0, 2})));
  EXPECT_FALSE(m.IsIndependent(SubsetMask::FromElements(4, {0, 1})));
  EXPECT_FALSE(m.IsIndependent(SubsetMask::FromElements(4, {3})));
  EXPECT_EQ(Span(m, SubsetMask::FromElements(4, {0})),
            SubsetMask::FromElements(4, {0, 1, 3}));
}

TEST(MatroidTest, TriangleRankAndSpan) {
  GraphicMatroid m(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(Rank(m, SubsetMask::Full(3)), 2);
  EXPECT_EQ(Span(m, SubsetMask::FromElements(3, {0, 1})), SubsetMask::Full(3));
  EXPECT_EQ(BasisOf(m, SubsetMask::Full(3)), SubsetMask::FromElements(3, {0, 1}));
}

TEST(MatroidTest, BuilderAgreesWithOracle) {
  Rng rng = MakeRng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = UniformInt(rng, 1, 9);
    std::vector<MatroidPtr> ms = {RandomGraphic(n, rng),
                                  std::make_shared<UniformMatroid>(
                                      n, UniformInt(rng, 0, n))};
    for (const MatroidPtr& m : ms) {
      auto b = m->NewBuilder();
      for (int step = 0; step < 2 * n; ++step) {
        const int e = UniformInt(rng, 0, n - 1);
        if (b->current().Contains(e)) continue;
        EXPECT_EQ(b->CanAdd(e), m->IsIndependent(b->current().With(e)));
        b->TryAdd(e);
        EXPECT_TRUE(m->IsIndependent(b->current()));
      }
    }
  }
}

TEST(MatroidTest, RankMatchesBruteForce) {
  Rng rng = MakeRng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = UniformInt(rng, 1, 8);
    auto m = RandomGraphic(n, rng);
    SubsetMask s(n);
    for (int i = 0; i < n; ++i) {
      if (Bernoulli(rng, 0.6)) s.Insert(i);
    }
    EXPECT_EQ(Rank(*m, s), BruteRank(*m, s));
    const SubsetMask span = Span(*m, s);
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(span.Contains(i), BruteRank(*m, s.With(i)) == BruteRank(*m, s));
    }
  }
}

TEST(MatroidTest, VerifyAxiomsAgreesWithDirectExchange) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      UniformMatroid m(n, k);
      EXPECT_TRUE(*VerifyAxioms(m));
      EXPECT_TRUE(ExchangeHolds(m));
    }
  }
  Rng rng = MakeRng(9);
  for (int t = 0; t < 20; ++t) {
    auto m = RandomGraphic(UniformInt(rng, 1, 7), rng);
    EXPECT_TRUE(*VerifyAxioms(*m));
  }
  // Random downward-closed families: the two checks must agree.
  for (int t = 0; t < 200; ++t) {
    const int n = UniformInt(rng, 1, 4);
    std::vector<SubsetMask> maximal;
    for (int j = 0; j < 3; ++j) {
      maximal.push_back(
          SubsetMask::FromBits(n, rng() & ((uint64_t{1} << n) - 1)));
    }
    std::vector<SubsetMask> family;
    ForEachSubset(SubsetMask::Full(n), [&](const SubsetMask& s) {
      for (const SubsetMask& x : maximal) {
        if (s.IsSubsetOf(x)) {
          family.push_back(s);
          return;
        }
      }
    });
    ExplicitMatroid m(n, family);
    EXPECT_EQ(*VerifyAxioms(m), ExchangeHolds(m)) << m.DebugString();
  }
}

TEST(MatroidTest, CorruptedFamiliesFail) {
  const int n = 3;
  auto f = [&](std::vector<std::vector<int>> sets) {
    std::vector<SubsetMask> out;
    for (auto& s : sets) out.push_back(SubsetMask::FromElements(n, s));
    return ExplicitMatroid(n, out);
  };
  EXPECT_FALSE(*VerifyAxioms(f({{}, {0}, {1}, {0, 1}, {2}})));
  EXPECT_FALSE(*VerifyAxioms(f({{0}, {1}})));          // no empty set
  EXPECT_FALSE(*VerifyAxioms(f({{}, {0}, {0, 1}})));   // not downward closed
  EXPECT_TRUE(*VerifyAxioms(f({{}, {0}, {1}})));
}

TEST(MatroidTest, VerifyAxiomsLimit) {
  UniformMatroid m(17, 3);
  EXPECT_FALSE(VerifyAxioms(m).ok());
}

TEST(MatroidTest, WeightedRankGreedy) {
  UniformMatroid m(4, 2);
  WeightVector w = *WeightVector::Create({1.0, 3.0, 2.0, 3.0});
  EXPECT_DOUBLE_EQ(WeightedRank(m, w, SubsetMask::Full(4)), 6.0);
  EXPECT_DOUBLE_EQ(WeightedRank(m, w, SubsetMask::FromElements(4, {0, 2})), 3.0);
  EXPECT_DOUBLE_EQ(WeightedRank(m, w, SubsetMask(4)), 0.0);
  EXPECT_EQ(DecreasingWeightOrder({1.0, 3.0, 2.0, 3.0}),
            (std::vector<int>{1, 3, 2, 0}));
}

TEST(MatroidTest, WeightVectorValidation) {
  EXPECT_FALSE(WeightVector::Create({1.0, -0.5}).ok());
  EXPECT_FALSE(WeightVector::Create({std::nan("")}).ok());
  EXPECT_TRUE(WeightVector::Create({0.0, 2.0}).ok());
}

TEST(MatroidTest, Restriction) {
  auto m = std::make_shared<UniformMatroid>(4, 2);
  MatroidPtr r = Restrict(m, SubsetMask::FromElements(4, {1, 2}));
  EXPECT_TRUE(r->IsIndependent(SubsetMask::FromElements(4, {1, 2})));
  EXPECT_FALSE(r->IsIndependent(SubsetMask::FromElements(4, {0})));
  EXPECT_TRUE(*VerifyAxioms(*r));
}

TEST(MatroidDeathTest, DimensionMismatch) {
  UniformMatroid m(3, 1);
  EXPECT_DEATH(m.IsIndependent(SubsetMask(4)), "");
}

}  // namespace
}  // namespace ocrs
