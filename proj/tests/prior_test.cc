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

#include "ocrs/prior.h"

#include <cmath>
#include <map>

#include "gtest/gtest.h"
#include "ocrs/random.h"

namespace ocrs {
namespace {

SubsetMask S(int n, std::vector<int> e) { return SubsetMask::FromElements(n, e); }

TEST(PriorTest, ExplicitValidation) {
  EXPECT_FALSE(ExplicitPrior::Create(2, {{S(2, {0}), 0.5}}).ok());
  EXPECT_FALSE(
      ExplicitPrior::Create(2, {{S(2, {0}), 1.5}, {S(2, {1}), -0.5}}).ok());
  EXPECT_FALSE(ExplicitPrior::Create(2, {{S(3, {0}), 1.0}}).ok());
  auto p = ExplicitPrior::Create(
      2, {{S(2, {0}), 0.25}, {S(2, {0}), 0.25}, {S(2, {1}), 0.5},
          {S(2, {0, 1}), 0.0}});
  ASSERT_TRUE(p.ok());
  EXPECT_EQ((*p)->atoms().size(), 2u);
  EXPECT_DOUBLE_EQ((*p)->atoms()[0].prob, 0.5);
}

TEST(PriorTest, ExplicitSamplingFrequencies) {
  auto p = *ExplicitPrior::Create(
      3, {{S(3, {}), 0.2}, {S(3, {0, 1}), 0.3}, {S(3, {2}), 0.5}});
  Rng rng = MakeRng(11);
  std::map<std::string, int> counts;
  const int m = 200000;
  for (int t = 0; t < m; ++t) ++counts[p->Sample(rng).ToString()];
  // 5 sigma.
  for (const Atom& a : p->atoms()) {
    const double sd = std::sqrt(a.prob * (1 - a.prob) / m);
    EXPECT_NEAR(counts[a.set.ToString()] / double(m), a.prob, 5 * sd);
  }
  const std::vector<double> x = *p->ExactMarginals();
  EXPECT_DOUBLE_EQ(x[0], 0.3);
  EXPECT_DOUBLE_EQ(x[2], 0.5);
}

TEST(PriorTest, ProductSupportMatchesMarginals) {
  auto p = *ProductPrior::Create({0.5, 0.25, 1.0});
  double total = 0.0;
  std::vector<double> x(3, 0.0);
  const std::vector<Atom> support = *p->ExactSupport();
  for (const Atom& a : support) {
    total += a.prob;
    a.set.ForEach([&](int i) { x[i] += a.prob; });
  }
  EXPECT_NEAR(total, 1.0, 1e-15);
  EXPECT_NEAR(x[0], 0.5, 1e-15);
  EXPECT_NEAR(x[1], 0.25, 1e-15);
  EXPECT_NEAR(x[2], 1.0, 1e-15);
  EXPECT_FALSE(ProductPrior::Create({1.2}).ok());
}

TEST(PriorTest, MarginalIsPushforward) {
  auto p = *ExplicitPrior::Create(
      3, {{S(3, {0, 1}), 0.5}, {S(3, {1, 2}), 0.25}, {S(3, {2}), 0.25}});
  PriorPtr q = Marginal(p, S(3, {0, 2}));
  std::map<std::string, double> pmf;
  const std::vector<Atom> support = *q->ExactSupport();
  for (const Atom& a : support) pmf[a.set.ToString()] += a.prob;
  EXPECT_DOUBLE_EQ(pmf["{0}"], 0.5);
  EXPECT_DOUBLE_EQ(pmf["{2}"], 0.5);
  EXPECT_TRUE(q->inactive_always().Contains(1));
  EXPECT_DOUBLE_EQ(PMin(*q)->value, 0.5);

  PriorPtr all = Marginal(std::make_shared<AllActivePrior>(3), S(3, {1}));
  Rng rng = MakeRng(1);
  EXPECT_EQ(all->Sample(rng), S(3, {1}));
}

TEST(PriorTest, SamplerMarginalIsWrapped) {
  auto sampler = std::make_shared<SamplerPrior>(
      3, [](Rng&) { return SubsetMask::Full(3); });
  PriorPtr q = Marginal(sampler, S(3, {0}));
  Rng rng = MakeRng(2);
  EXPECT_EQ(q->Sample(rng), S(3, {0}));
  EXPECT_FALSE(q->ExactSupport().has_value());
}

TEST(PriorTest, Example24) {
  // n=3, alpha=1/2, delta=0.2, j=0.
  auto p = BuildExample24(3, 0.5, 0.2, 0);
  ASSERT_TRUE(p.ok());
  std::map<std::string, double> pmf;
  for (const Atom& a : (*p)->atoms()) pmf[a.set.ToString()] = a.prob;
  EXPECT_NEAR(pmf["{}"], 0.4, 1e-12);
  EXPECT_NEAR(pmf["{0,1,2}"], 0.2, 1e-12);
  EXPECT_NEAR(pmf["{1}"], 0.2, 1e-12);
  EXPECT_NEAR(pmf["{2}"], 0.2, 1e-12);
  EXPECT_EQ(pmf.count("{0}"), 0u);
  // p_min = delta (1/alpha - 1).
  EXPECT_NEAR(PMin(**p)->value, 0.2, 1e-12);
  EXPECT_FALSE(BuildExample24(3, 0.5, 0.5, 0).ok());
  EXPECT_FALSE(BuildExample24(3, 0.5, 0.2, 3).ok());
  EXPECT_FALSE(BuildExample24(3, 0.0, 0.2, 0).ok());
}

TEST(PriorTest, PMinExactAndErrors) {
  auto p = *ProductPrior::Create({0.5, 0.1});
  PMinResult r = *PMin(*p);
  EXPECT_TRUE(r.exact);
  EXPECT_DOUBLE_EQ(r.value, 0.1);
  auto zero = *ProductPrior::Create({0.5, 0.0});
  EXPECT_EQ(PMin(*zero).status().code(), absl::StatusCode::kFailedPrecondition);
  SamplerPrior s(2, [](Rng&) { return SubsetMask::Full(2); });
  EXPECT_FALSE(PMin(s).ok());
}

TEST(PriorTest, PMinEstimator) {
  EXPECT_EQ(PMinSampleCount(10, 0.05),
            static_cast<int>(std::ceil(3 * std::log(2 * 10 / 0.01) / 0.0025)));
  auto inner = *ProductPrior::Create({0.5, 0.8});
  SamplerPrior s(2, [inner](Rng& r) { return inner->Sample(r); });
  Rng rng = MakeRng(4);
  PMinResult r = *PMin(s, &rng);
  EXPECT_FALSE(r.exact);
  EXPECT_NEAR(r.empirical, 0.5, 0.03);
  EXPECT_NEAR(r.value, r.empirical - 0.05, 1e-15);
  SamplerPrior dead(2, [](Rng&) { return SubsetMask::FromElements(2, {0}); });
  EXPECT_EQ(PMin(dead, &rng).status().code(),
            absl::StatusCode::kFailedPrecondition);
}

}  // namespace
}  // namespace ocrs
