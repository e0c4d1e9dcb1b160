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

#include "ocrs/simplex.h"

#include <cmath>
#include <limits>

#include "gtest/gtest.h"
#include "ocrs/random.h"
#include "ocrs/rational.h"

namespace ocrs {
namespace {

TEST(SimplexTest, TextbookMaximum) {
  // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> 36 at (2, 6).
  LinearProgram<Rational> lp(2);
  lp.objective = {3, 5};
  lp.AddRow({1, 0}, RowSense::kLe, 4);
  lp.AddRow({0, 2}, RowSense::kLe, 12);
  lp.AddRow({3, 2}, RowSense::kLe, 18);
  LpResult<Rational> r = SolveLp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.objective, 36);
  EXPECT_EQ(r.x[0], 2);
  EXPECT_EQ(r.x[1], 6);
}

TEST(SimplexTest, EqualityGeAndNegativeRhs) {
  // min x + y (max -x - y), x + y >= 2, x - y = -1 -> x = 1/2, y = 3/2.
  LinearProgram<Rational> lp(2);
  lp.objective = {-1, -1};
  lp.AddRow({1, 1}, RowSense::kGe, 2);
  lp.AddRow({1, -1}, RowSense::kEq, -1);
  LpResult<Rational> r = SolveLp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.x[0], Rational(1, 2));
  EXPECT_EQ(r.x[1], Rational(3, 2));
}

TEST(SimplexTest, InfeasibleAndUnbounded) {
  LinearProgram<double> inf(1);
  inf.objective = {1};
  inf.AddRow({1}, RowSense::kLe, 1);
  inf.AddRow({1}, RowSense::kGe, 2);
  EXPECT_EQ(SolveLp(inf).status, LpStatus::kInfeasible);
  LinearProgram<double> unb(2);
  unb.objective = {1, 0};
  unb.AddRow({1, -1}, RowSense::kLe, 1);
  EXPECT_EQ(SolveLp(unb).status, LpStatus::kUnbounded);
}

TEST(SimplexTest, BealeCyclingExampleTerminates) {
  // Cycles under the textbook largest-coefficient rule without safeguards.
  LinearProgram<Rational> lp(4);
  lp.objective = {Rational(3, 4), -150, Rational(1, 50), -6};
  lp.AddRow({Rational(1, 4), -60, Rational(-1, 25), 9}, RowSense::kLe, 0);
  lp.AddRow({Rational(1, 2), -90, Rational(-1, 50), 3}, RowSense::kLe, 0);
  lp.AddRow({0, 0, 1, 0}, RowSense::kLe, 1);
  LpResult<Rational> r = SolveLp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.objective, Rational(1, 20));
}

// Two-variable LPs against vertex enumeration.
TEST(SimplexTest, RandomTwoVariableAgainstVertices) {
  Rng rng = MakeRng(12);
  for (int t = 0; t < 300; ++t) {
    const int k = UniformInt(rng, 1, 5);
    std::vector<std::array<double, 3>> cons;  // a x + b y <= c
    LinearProgram<double> lp(2);
    LinearProgram<Rational> lq(2);
    lp.objective = {UniformDouble(rng) * 2 - 0.5, UniformDouble(rng) * 2 - 0.5};
    lq.objective = {Rational(lp.objective[0]), Rational(lp.objective[1])};
    for (int i = 0; i < k; ++i) {
      std::array<double, 3> c = {UniformDouble(rng) * 2 - 0.3,
                                 UniformDouble(rng) * 2 - 0.3,
                                 UniformDouble(rng) * 3};
      cons.push_back(c);
      lp.AddRow({c[0], c[1]}, RowSense::kLe, c[2]);
      lq.AddRow({Rational(c[0]), Rational(c[1])}, RowSense::kLe, Rational(c[2]));
    }
    cons.push_back({-1, 0, 0});
    cons.push_back({0, -1, 0});
    double best = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < cons.size(); ++i) {
      for (size_t j = i + 1; j < cons.size(); ++j) {
        const double det = cons[i][0] * cons[j][1] - cons[i][1] * cons[j][0];
        if (std::abs(det) < 1e-12) continue;
        const double x = (cons[i][2] * cons[j][1] - cons[i][1] * cons[j][2]) / det;
        const double y = (cons[i][0] * cons[j][2] - cons[i][2] * cons[j][0]) / det;
        bool ok = true;
        for (const auto& c : cons) ok &= c[0] * x + c[1] * y <= c[2] + 1e-9;
        if (ok) best = std::max(best, lp.objective[0] * x + lp.objective[1] * y);
      }
    }
    LpResult<double> r = SolveLp(lp);
    LpResult<Rational> q = SolveLp(lq);
    ASSERT_EQ(r.status, q.status);
    if (r.status == LpStatus::kOptimal) {
      EXPECT_NEAR(r.objective, best, 1e-7);
      EXPECT_NEAR(ToDouble(q.objective), best, 1e-7);
    } else {
      EXPECT_EQ(r.status, LpStatus::kUnbounded);
    }
  }
}

}  // namespace
}  // namespace ocrs
