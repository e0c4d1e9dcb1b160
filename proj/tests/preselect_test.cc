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

#include "ocrs/preselect.h"

#include <cmath>

#include "gtest/gtest.h"
#include "ocrs/instances.h"
#include "ocrs/random.h"

namespace ocrs {
namespace {

bool NotSpanned(const Matroid& m, const SubsetMask& t, int j) {
  return !t.Contains(j) && Rank(m, t.With(j)) > Rank(m, t);
}

// Pr[j not in span(T_rho(A ∩ s)) | j in A] over all 2^|A ∩ s| outcomes.
double BruteIndependent(const Matroid& m, const Prior& p, const SubsetMask& s,
                        double rho, int j) {
  double act = 0, un = 0;
  const std::vector<Atom> support = *p.ExactSupport();
  for (const Atom& atom : support) {
    if (!atom.set.Contains(j)) continue;
    act += atom.prob;
    const SubsetMask a = atom.set & s;
    ForEachSubset(a, [&](const SubsetMask& t) {
      const double w = std::pow(rho, t.Cardinality()) *
                       std::pow(1 - rho, a.Cardinality() - t.Cardinality());
      if (NotSpanned(m, t, j)) un += atom.prob * w;
    });
  }
  return un / act;
}

// Same with the active prefix of j under every ordering of s.
double BrutePrefix(const Matroid& m, const Prior& p, const SubsetMask& s,
                   int j) {
  const std::vector<int> elems = s.Elements();
  const int k = static_cast<int>(elems.size());
  double act = 0, un = 0;
  const std::vector<Atom> support = *p.ExactSupport();
  for (const Atom& atom : support) {
    if (!atom.set.Contains(j)) continue;
    act += atom.prob;
    int64_t hits = 0, total = 0;
    ForEachPermutation(k, [&](const Permutation& perm) {
      SubsetMask prefix(m.ground_size());
      for (int t = 0; t < k && elems[perm[t]] != j; ++t) {
        prefix.Insert(elems[perm[t]]);
      }
      ++total;
      if (NotSpanned(m, prefix & atom.set, j)) ++hits;
    });
    un += atom.prob * static_cast<double>(hits) / total;
  }
  return un / act;
}

TEST(PreselectTest, SampleCount) {
  // 128 ln(160) / 0.015625 = 41575.8...
  EXPECT_EQ(PreselectSampleCount(10, 0.5, 0.25, 1.0), 41576);
}

TEST(PreselectTest, ExactStatisticsMatchBruteForce) {
  Rng rng = MakeRng(17);
  for (int t = 0; t < 30; ++t) {
    Instance inst = RandomExplicitInstance(UniformInt(rng, 2, 6), 4, rng);
    const int n = inst.n();
    const auto support = *inst.prior->ExactSupport();
    SubsetMask s(n);
    for (int i = 0; i < n; ++i) {
      if (Bernoulli(rng, 0.7)) s.Insert(i);
    }
    const double rho = UniformDouble(rng);
    s.ForEach([&](int j) {
      PriorPtr marg = Marginal(inst.prior, s);
      EXPECT_NEAR(ExactUnspannedIndependent(*inst.matroid, support, s, rho, j),
                  BruteIndependent(*inst.matroid, *marg, s, rho, j), 1e-12);
      EXPECT_NEAR(ExactUnspannedPrefix(*inst.matroid, support, s, j),
                  BrutePrefix(*inst.matroid, *marg, s, j), 1e-12);
    });
  }
}

TEST(PreselectTest, MonteCarloCountsAgreeWithExact) {
  Rng rng = MakeRng(23);
  Instance inst = RandomExplicitInstance(5, 3, rng);
  const auto support = *inst.prior->ExactSupport();
  const SubsetMask s = SubsetMask::Full(5);
  const int64_t m = 200000;
  SpanStats ind = CountSpanStatsIndependent(*inst.matroid, *inst.prior, s,
                                            0.4, m, rng);
  SpanStats pre = CountSpanStatsPrefix(*inst.matroid, *inst.prior, s, m, rng);
  for (int j = 0; j < 5; ++j) {
    ASSERT_GT(ind.active[j], 0);
    const double tol = 5.0 / std::sqrt(static_cast<double>(ind.active[j]));
    EXPECT_NEAR(double(ind.unspanned[j]) / ind.active[j],
                ExactUnspannedIndependent(*inst.matroid, support, s, 0.4, j),
                tol);
    EXPECT_NEAR(double(pre.unspanned[j]) / pre.active[j],
                ExactUnspannedPrefix(*inst.matroid, support, s, j), tol);
  }
}

TEST(PreselectTest, ExactSucceedsOnKUniform) {
  Instance inst = *KUniformAllActive(4, 2);
  PreselectConfig cfg{.alpha = 0.5, .mode = PreselectMode::kExact};
  Rng rng = MakeRng(1);
  for (PreselectKind kind : {PreselectKind::kIndependent, PreselectKind::kPrefix}) {
    PreselectResult r = *Preselect(*inst.matroid, *inst.prior, kind, cfg, rng);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.permutation().n(), 4);
    EXPECT_EQ(r.steps.size(), 4u);
    for (const PreselectStep& s : r.steps) {
      EXPECT_GE(s.statistic, s.threshold - 1e-9);
    }
  }
}

TEST(PreselectTest, MonteCarloSucceedsOnTwoElement) {
  Instance inst = TwoElement();
  PreselectConfig cfg{.alpha = 0.5, .eps = 0.25};
  Rng rng = MakeRng(2);
  PreselectResult r = *PreselectPrefix(*inst.matroid, *inst.prior, cfg, rng);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.samples_per_step, PreselectSampleCount(2, 0.5, 0.25, 0.5));
}

TEST(PreselectTest, FailureReportsPartialOrder) {
  // alpha = 1 is out of reach here: the first step already fails.
  Instance inst = TwoElement();
  PreselectConfig cfg{.alpha = 1.0, .mode = PreselectMode::kExact};
  Rng rng = MakeRng(3);
  PreselectResult r = *PreselectPrefix(*inst.matroid, *inst.prior, cfg, rng);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.failed_position, 1);
  EXPECT_EQ(r.order, (std::vector<int>{-1, -1}));
}

TEST(PreselectTest, ConfigErrors) {
  Instance inst = TwoElement();
  Rng rng = MakeRng(4);
  PreselectConfig bad{.alpha = 1.5};
  EXPECT_EQ(PreselectPrefix(*inst.matroid, *inst.prior, bad, rng).status().code(),
            absl::StatusCode::kInvalidArgument);
  Instance big = *ParallelHats(0.5);
  PreselectConfig exact{.alpha = 0.5, .mode = PreselectMode::kExact};
  absl::Status st =
      PreselectPrefix(*big.matroid, *big.prior, exact, rng).status();
  EXPECT_EQ(st.code(), absl::StatusCode::kOutOfRange);
  EXPECT_NE(st.message().find("ExactModeTooLarge"), std::string::npos);
}

TEST(PreselectTest, CanonicalHatsOrderQualifies) {
  // Small hats: every step of the canonical order meets the alpha/2 bar.
  Instance inst = *ParallelHats(0.5, 2);
  PreselectConfig cfg{.alpha = 0.5, .mode = PreselectMode::kExact};
  Rng rng = MakeRng(5);
  auto steps = CheckOrder(*inst.matroid, *inst.prior,
                          PreselectKind::kIndependent, cfg,
                          *inst.canonical_order, rng);
  ASSERT_TRUE(steps.ok()) << steps.status();
  for (const PreselectStep& s : *steps) {
    EXPECT_GE(s.statistic, s.threshold - 1e-9) << "position " << s.position;
  }
}

}  // namespace
}  // namespace ocrs
