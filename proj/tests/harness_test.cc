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

#include "ocrs/harness.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "absl/strings/str_split.h"
#include "gtest/gtest.h"
#include "ocrs/instances.h"
#include "ocrs/json_io.h"

namespace ocrs {
namespace {

TEST(HarnessTest, HoeffdingHalfWidth) {
  EXPECT_NEAR(HoeffdingHalfWidth(100, 0.99), std::sqrt(std::log(200.0) / 200),
              1e-15);
  EXPECT_NEAR(HoeffdingHalfWidth(1, 0.95), std::sqrt(std::log(40.0) / 2),
              1e-15);
}

TEST(HarnessTest, DeterministicSelectAll) {
  UniformMatroid m(1, 1);
  AllActivePrior p(1);
  EstimateConfig cfg{.trials = 500, .seed = 3};
  BalancednessReport r = EstimateBalancedness(
      m, GreedyOrderedScheme{Permutation::Identity(1)}, p, cfg);
  ASSERT_EQ(r.elements.size(), 1u);
  EXPECT_EQ(r.elements[0].active, 500);
  EXPECT_EQ(*r.elements[0].estimate, 1.0);
  EXPECT_EQ(r.elements[0].ci_hi, 1.0);
  EXPECT_EQ(*r.min_estimate, 1.0);
}

TEST(HarnessTest, NeverActiveIsNoData) {
  UniformMatroid m(2, 1);
  auto p = *ExplicitPrior::Create(2, {{SubsetMask::FromElements(2, {1}), 1.0}});
  EstimateConfig cfg{.trials = 50};
  BalancednessReport r = EstimateBalancedness(
      m, GreedyOrderedScheme{Permutation::Identity(2)}, *p, cfg);
  EXPECT_FALSE(r.elements[0].estimate.has_value());
  EXPECT_EQ(r.argmin, 1);
  const std::string csv = ReportCsv(r);
  EXPECT_NE(csv.find("\n0,0,0,no-data,no-data,no-data\n"), std::string::npos);
}

TEST(HarnessTest, CountsDoNotDependOnThreads) {
  Instance inst = *KUniformAllActive(5, 2);
  Alg3Scheme s{Permutation::Identity(5)};
  EstimateConfig cfg{.trials = 20000, .seed = 11, .threads = 1};
  const std::string one =
      ReportCsv(EstimateBalancedness(*inst.matroid, s, *inst.prior, cfg));
  cfg.threads = 4;
  EXPECT_EQ(one,
            ReportCsv(EstimateBalancedness(*inst.matroid, s, *inst.prior, cfg)));
  cfg.seed = 12;
  EXPECT_NE(one,
            ReportCsv(EstimateBalancedness(*inst.matroid, s, *inst.prior, cfg)));
}

TEST(HarnessTest, EstimatesCoverExactValues) {
  Instance inst = *KUniformAllActive(4, 2);
  Alg3Scheme s{Permutation::Identity(4)};
  auto exact = *ExactBalancedness<double>(*inst.matroid, s, *inst.prior);
  int covered = 0;
  int rows = 0;
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    EstimateConfig cfg{.trials = 20000, .seed = seed};
    for (const ElementEstimate& e :
         EstimateBalancedness(*inst.matroid, s, *inst.prior, cfg).elements) {
      ++rows;
      covered += e.ci_lo <= *exact[e.element] && *exact[e.element] <= e.ci_hi;
    }
  }
  EXPECT_EQ(covered, rows);
}

TEST(HarnessTest, JsonRoundTrip) {
  for (const char* spec : {"kuniform:4,2", "twoelem", "hats:0.5,2",
                           "example24:3,0.5,0.2,1", "triangle"}) {
    Instance inst = *ParseInstance(spec);
    Json j = *InstanceToJson(inst);
    Instance back = *InstanceFromJson(j);
    EXPECT_EQ(back.n(), inst.n());
    EXPECT_EQ((*InstanceToJson(back)).dump(), j.dump()) << spec;
  }
  std::vector<Scheme> schemes = {
      GreedyOrderedScheme{*Permutation::Create({2, 0, 1})},
      Alg1Scheme{Permutation::Identity(3), 0.25},
      Alg3Scheme{*Permutation::Create({1, 2, 0})},
      PermutationMixtureScheme{{{Permutation::Identity(3), 0.75},
                                {*Permutation::Create({2, 1, 0}), 0.25}}},
      WeightMixtureScheme{SecretaryKind::kClassic1Uniform,
                          {{*WeightVector::Create({0.5, 1.0, 0.0}), 1.0}}}};
  for (const Scheme& s : schemes) {
    Json j = SchemeToJson(s);
    Scheme back = *SchemeFromJson(j);
    EXPECT_EQ(SchemeToJson(back).dump(), j.dump());
  }
  EXPECT_FALSE(SchemeFromJson(Json::parse(R"({"kind":"nope"})")).ok());
}

TEST(HarnessTest, HatsSize) {
  EXPECT_EQ(HatsCount(0.5), 17);
  // m is the unique integer with
  // (1-a/2)(1-a^2/4)^m >= a/2 > (1-a/2)(1-a^2/4)^(m+1).
  for (double a : {0.2, 0.5, 0.8}) {
    const int m = HatsCount(a);
    const double f = 1 - a * a / 4;
    EXPECT_GE((1 - a / 2) * std::pow(f, m), a / 2);
    EXPECT_LT((1 - a / 2) * std::pow(f, m + 1), a / 2);
  }
  Instance hats = *ParallelHats(0.5);
  EXPECT_EQ(hats.n(), 37);
  EXPECT_FALSE(ParseInstance("kuniform:4,4").ok());
  EXPECT_FALSE(ParseInstance("bogus").ok());
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const char* cli = std::getenv("OCRS_CLI");
    if (cli == nullptr) GTEST_SKIP() << "OCRS_CLI not set";
    cli_ = cli;
    dir_ = std::filesystem::temp_directory_path() /
           ("ocrs_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override {
    if (!dir_.empty()) std::filesystem::remove_all(dir_);
  }

  int Run(const std::string& args) {
    const std::string cmd = cli_ + " " + args + " >" + (dir_ / "stdout").string() +
                            " 2>" + (dir_ / "stderr").string();
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  }
  std::string Read(const std::string& name) {
    std::ifstream in(dir_ / name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::string cli_;
  std::filesystem::path dir_;
};

TEST_F(CliTest, EvaluateCsvShapeAndReproducibility) {
  ASSERT_EQ(Run("evaluate --scheme alg3 --instance kuniform:4,2 "
                "--trials 20000 --seed 7 --out " + (dir_ / "a").string()),
            0);
  ASSERT_EQ(Run("evaluate --scheme alg3 --instance kuniform:4,2 "
                "--trials 20000 --seed 7 --threads 1 --out " +
                (dir_ / "b").string()),
            0);
  const std::string csv = Read("a.csv");
  EXPECT_EQ(csv, Read("b.csv"));
  std::vector<std::string> lines =
      absl::StrSplit(csv, '\n', absl::SkipEmpty());
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0], "element,active_count,selected_count,estimate,ci_lo,ci_hi");
  Json j = Json::parse(Read("a.json"));
  EXPECT_EQ(j["trials"], 20000);
}

TEST_F(CliTest, RebuildPerTrial) {
  ASSERT_EQ(Run("evaluate --scheme alg3 --mode exact --instance kuniform:4,2 "
                "--trials 500 --rebuild-per-trial --out " +
                (dir_ / "r").string()),
            0);
  EXPECT_EQ(Read("stderr"), "");
  Json j = Json::parse(Read("r.json"));
  EXPECT_EQ(j["failed_builds"], 0);
  EXPECT_EQ(j["scheme"], "alg3");
}

TEST_F(CliTest, OracleAlpha) {
  ASSERT_EQ(Run("oracle-alpha --instance kuniform:4,2"), 0);
  EXPECT_NE(Read("stdout").find("alpha_star=0.5"), std::string::npos);
}

TEST_F(CliTest, LpBuildTwoElement) {
  ASSERT_EQ(Run("lp-build --instance twoelem --eps 0.1 --mode exact --out " +
                (dir_ / "lp").string()),
            0);
  Json report = Json::parse(Read("lp.report.json"));
  EXPECT_GE(report["beta"].get<double>(), 0.45);
  EXPECT_TRUE(SchemeFromJson(Json::parse(Read("lp.scheme.json"))).ok());
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Run("preselect --scheme alg3 --instance kuniform:4,1 --alpha 1 "
                "--mode exact"),
            1);
  EXPECT_EQ(Run("run --instance kuniform:4,1 --eps 0"), 2);
  EXPECT_EQ(Run("evaluate --instance nosuch:1 --scheme alg3"), 2);
  EXPECT_EQ(Run("evaluate --instance twoelem --scheme alg3 --mode sideways"), 2);
  EXPECT_EQ(Run("frobnicate"), 2);
}

}  // namespace
}  // namespace ocrs
