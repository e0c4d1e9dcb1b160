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

#include "ocrs/lp_engine.h"

#include <cmath>

#include "gtest/gtest.h"
#include "ocrs/instances.h"
#include "ocrs/oracle.h"

namespace ocrs {
namespace {

TEST(LpEngineTest, RestrictedTwoColumns) {
  LpSolution s = *SolveRestricted({{0.5, 0.0}, {0.0, 0.5}}, {0.5, 0.5});
  EXPECT_NEAR(s.beta, 0.5, 1e-12);
  EXPECT_NEAR(s.gamma, 0.5, 1e-12);
  EXPECT_NEAR(s.lambda[0], 0.5, 1e-12);
  EXPECT_NEAR(s.mu[0] * 0.5 + s.mu[1] * 0.5, 1.0, 1e-12);
  EXPECT_FALSE(SolveRestricted({}, {0.5}).ok());
  EXPECT_FALSE(SolveRestricted({{1.0}}, {0.0}).ok());
}

TEST(LpEngineTest, RestrictedSkipsInactiveElements) {
  LpSolution s = *SolveRestricted({{0.25, 0.0, 0.0}}, {0.5, 0.0, 0.0});
  EXPECT_NEAR(s.beta, 0.5, 1e-12);
  EXPECT_EQ(s.mu[1], 0.0);
}

TEST(LpEngineTest, SeparationOrder) {
  EXPECT_EQ(SeparationPiMu({0.1, 0.7, 0.7, 0.0}).order(),
            (std::vector<int>{1, 2, 0, 3}));
}

TEST(LpEngineTest, GridAndRounding) {
  WeightGrid g = *MakeWeightGrid(2, 0.5, 1.0);
  EXPECT_EQ(g.size(), 5);
  EXPECT_DOUBLE_EQ(g.max_value(), 1.0);
  WeightVector w = *RoundToGrid({0.6, 0.3}, g);
  EXPECT_DOUBLE_EQ(w[0], 0.5);
  EXPECT_DOUBLE_EQ(w[1], 0.25);
  EXPECT_DOUBLE_EQ((*RoundToGrid({0.75, 1.0}, g))[0], 0.75);
  EXPECT_FALSE(RoundToGrid({-0.1, 0.0}, g).ok());
  EXPECT_FALSE(RoundToGrid({1.3, 0.0}, g).ok());
  EXPECT_FALSE(MakeWeightGrid(2, 1.5, 1.0).ok());
  EXPECT_FALSE(MakeWeightGrid(2, 0.5, 0.0).ok());
}

TEST(LpEngineTest, CoefficientSampleCount) {
  // 2 ln(200) / (0.01 * 0.25) = 4238.6...
  EXPECT_EQ(CoefficientSampleCountForDelta(0.1, 0.01, 0.5), 4239);
}

TEST(LpEngineTest, EstimateXq) {
  auto p = *ProductPrior::Create({0.3, 0.8});
  Rng rng = MakeRng(5);
  XqEstimate e = EstimateXq(
      [](const SubsetMask& a, Rng&) { return a & SubsetMask::FromElements(2, {0}); },
      *p, 100000, rng);
  EXPECT_NEAR(e.x[0], 0.3, 0.01);
  EXPECT_NEAR(e.x[1], 0.8, 0.01);
  EXPECT_NEAR(e.q[0], 0.3, 0.01);
  EXPECT_EQ(e.q[1], 0.0);
}

TEST(LpEngineTest, ExactBuildReachesOracle) {
  for (Instance inst : {*KUniformAllActive(4, 2), TwoElement(),
                        *Example24Instance(3, 0.5, 0.2, 0)}) {
    const double alpha = MaxUncontentiousAlpha<double>(*inst.matroid,
                                                       *inst.prior)->alpha_star;
    LpBuildConfig cfg{.eps = 0.1, .alpha = alpha};
    Rng rng = MakeRng(1);
    LpBuildReport report;
    absl::StatusOr<Scheme> s =
        BuildLpScheme(*inst.matroid, inst.prior, cfg, rng, &report);
    ASSERT_TRUE(s.ok()) << s.status();
    EXPECT_TRUE(report.converged);
    EXPECT_GE(report.beta, 0.9 * alpha) << inst.name;
    EXPECT_NEAR(report.beta, report.gamma, 1e-7);
    for (size_t i = 1; i < report.beta_trajectory.size(); ++i) {
      EXPECT_GE(report.beta_trajectory[i], report.beta_trajectory[i - 1] - 1e-9);
    }
    auto b = *ExactBalancedness<double>(*inst.matroid, *s, *inst.prior);
    for (const auto& v : b) {
      if (v) {
        EXPECT_GE(*v, report.beta - 1e-9) << inst.name;
      }
    }
  }
}

TEST(LpEngineTest, MonteCarloBuild) {
  Instance inst = TwoElement();
  LpBuildConfig cfg{.eps = 0.2, .alpha = 0.5, .mode = ColumnMode::kMonteCarlo,
                    .sample_override = 20000};
  Rng rng = MakeRng(2);
  LpBuildReport report;
  absl::StatusOr<Scheme> s =
      BuildLpScheme(*inst.matroid, inst.prior, cfg, rng, &report);
  ASSERT_TRUE(s.ok());
  EXPECT_EQ(report.samples_per_column, 20000);
  EXPECT_NEAR(report.beta, 0.5, 0.05);
}

TEST(LpEngineTest, SecretaryReductionGreedy) {
  Instance inst = *KUniformAllActive(4, 2);
  LpBuildConfig cfg{.eps = 0.1, .alpha = 0.5};
  Rng rng = MakeRng(3);
  LpBuildReport report;
  absl::StatusOr<Scheme> s = BuildSecretaryReduction(
      *inst.matroid, inst.prior, SecretaryKind::kGreedyByWeight, 1.0, cfg, rng,
      &report);
  ASSERT_TRUE(s.ok()) << s.status();
  ASSERT_TRUE(report.grid.has_value());
  EXPECT_GE(report.beta, 0.45);
  EXPECT_NEAR(report.eps_prime, 0.1 / 7, 1e-15);
  auto b = *ExactBalancedness<double>(*inst.matroid, *s, *inst.prior);
  for (const auto& v : b) EXPECT_GE(*v, report.beta - 1e-9);
}

TEST(LpEngineTest, ConfigErrors) {
  Instance inst = TwoElement();
  Rng rng = MakeRng(4);
  LpBuildConfig bad{.eps = 0.0};
  EXPECT_EQ(BuildLpScheme(*inst.matroid, inst.prior, bad, rng).status().code(),
            absl::StatusCode::kInvalidArgument);
  auto sampler = std::make_shared<SamplerPrior>(
      2, [](Rng&) { return SubsetMask::Full(2); });
  LpBuildConfig exact{.eps = 0.1};
  EXPECT_EQ(BuildLpScheme(*inst.matroid, sampler, exact, rng).status().code(),
            absl::StatusCode::kInvalidArgument);
}

}  // namespace
}  // namespace ocrs
