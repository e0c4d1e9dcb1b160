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

// Command-line front end.
//
//   ocrs_cli gen-instance --instance hats:0.5 --out hats.json
//   ocrs_cli evaluate --scheme alg3 --instance kuniform:4,2 --trials 1000000
//   ocrs_cli oracle-alpha --instance twoelem
//   ocrs_cli lp-build --instance twoelem --eps 0.1 --out mix
//
// Exit status: 0 ok, 1 no qualifying element during preselection (partial
// artifacts are still written), 2 bad configuration, 3 anything else.

#include <atomic>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "glog/logging.h"
#include "ocrs/harness.h"
#include "ocrs/instances.h"
#include "ocrs/json_io.h"
#include "ocrs/lp_engine.h"
#include "ocrs/oracle.h"
#include "ocrs/preselect.h"
#include "ocrs/schemes.h"
#include "ocrs/secretary.h"

namespace ocrs {
namespace {

struct Flags {
  uint64_t seed = 1;
  int64_t trials = 100000;
  double eps = 0.25;
  std::optional<double> alpha;
  std::string mode = "mc";
  std::string out;
  std::string instance;
  std::string scheme = "alg3";
  double ci_level = 0.99;
  int threads = 0;
  bool rational = false;
  bool rebuild_per_trial = false;
  std::string secretary = "greedy_by_weight";
  double secretary_c = 1.0;
  std::optional<double> p_min;
  std::optional<int64_t> samples;
};

int ExitCode(const absl::Status& s) {
  if (s.ok()) return 0;
  if (IsNoQualifyingElement(s)) return 1;
  switch (s.code()) {
    case absl::StatusCode::kInvalidArgument:
    case absl::StatusCode::kOutOfRange:
    case absl::StatusCode::kNotFound:
    case absl::StatusCode::kFailedPrecondition:
      return 2;
    default:
      return 3;
  }
}

int Fail(const absl::Status& s) {
  if (!s.ok()) std::cerr << "error: " << s << "\n";
  return ExitCode(s);
}

// Writes to `path`, or stdout when path is empty.
absl::Status Emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return absl::OkStatus();
  }
  return WriteTextFile(path, text);
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

absl::StatusOr<PreselectMode> ParseMode(const std::string& m) {
  if (m == "exact") return PreselectMode::kExact;
  if (m == "mc") return PreselectMode::kMonteCarlo;
  return absl::InvalidArgumentError(
      absl::StrCat("--mode must be exact or mc, got '", m, "'"));
}

// --alpha, else the declared value, else the oracle's.
absl::StatusOr<double> ResolveAlpha(const Flags& f, const Instance& inst) {
  if (f.alpha) return *f.alpha;
  if (inst.declared_alpha > 0.0) return inst.declared_alpha;
  absl::StatusOr<AlphaCertificate<double>> cert =
      MaxUncontentiousAlpha<double>(*inst.matroid, *inst.prior);
  if (!cert.ok()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "no --alpha, no declared alpha, and the oracle failed: ",
        cert.status().message()));
  }
  return cert->alpha_star;
}

absl::StatusOr<PreselectConfig> MakePreselectConfig(const Flags& f,
                                                    const Instance& inst) {
  absl::StatusOr<double> alpha = ResolveAlpha(f, inst);
  if (!alpha.ok()) return alpha.status();
  absl::StatusOr<PreselectMode> mode = ParseMode(f.mode);
  if (!mode.ok()) return mode.status();
  PreselectConfig cfg;
  cfg.alpha = *alpha;
  cfg.eps = f.eps;
  cfg.mode = *mode;
  cfg.p_min = f.p_min;
  cfg.sample_override = f.samples;
  if (absl::Status s = ValidatePreselectConfig(cfg); !s.ok()) return s;
  return cfg;
}

absl::StatusOr<LpBuildConfig> MakeLpConfig(const Flags& f,
                                           const Instance& inst) {
  absl::StatusOr<double> alpha = ResolveAlpha(f, inst);
  if (!alpha.ok()) return alpha.status();
  absl::StatusOr<PreselectMode> mode = ParseMode(f.mode);
  if (!mode.ok()) return mode.status();
  LpBuildConfig cfg;
  cfg.eps = f.eps;
  cfg.alpha = *alpha;
  cfg.mode = *mode == PreselectMode::kExact ? ColumnMode::kExact
                                            : ColumnMode::kMonteCarlo;
  cfg.p_min = f.p_min;
  cfg.sample_override = f.samples;
  return cfg;
}

// Scheme names: alg1, alg3, alg1:canonical, alg3:canonical, greedy, lp,
// secretary, or a scheme JSON file. `artifacts` collects build reports.
absl::StatusOr<Scheme> BuildScheme(const Flags& f, const Instance& inst,
                                   Rng& rng, Json* artifacts) {
  const std::string& name = f.scheme;
  if (absl::EndsWith(name, ".json")) {
    absl::StatusOr<Json> j = ReadJsonFile(name);
    if (!j.ok()) return j.status();
    absl::StatusOr<Scheme> s = SchemeFromJson(*j);
    if (!s.ok()) return s.status();
    if (absl::Status v = ValidateScheme(*s, inst.n()); !v.ok()) return v;
    return s;
  }
  const bool canonical = absl::EndsWith(name, ":canonical");
  const std::string base = canonical ? name.substr(0, name.find(':')) : name;
  if (base == "greedy") {
    return Scheme(GreedyOrderedScheme{inst.canonical_order.value_or(
        Permutation::Identity(inst.n()))});
  }
  if (base == "alg1" || base == "alg3") {
    absl::StatusOr<PreselectConfig> cfg = MakePreselectConfig(f, inst);
    if (!cfg.ok()) return cfg.status();
    if (canonical) {
      const Permutation pi =
          inst.canonical_order.value_or(Permutation::Identity(inst.n()));
      if (base == "alg1") return Scheme(Alg1Scheme{pi, cfg->alpha / 2.0});
      return Scheme(Alg3Scheme{pi});
    }
    PreselectResult report;
    absl::StatusOr<Scheme> s =
        base == "alg1" ? BuildAlg1(*inst.matroid, *inst.prior, *cfg, rng, &report)
                       : BuildAlg3(*inst.matroid, *inst.prior, *cfg, rng, &report);
    (*artifacts)["preselect"] = PreselectResultToJson(report);
    return s;
  }
  if (base == "lp" || base == "secretary") {
    absl::StatusOr<LpBuildConfig> cfg = MakeLpConfig(f, inst);
    if (!cfg.ok()) return cfg.status();
    LpBuildReport report;
    absl::StatusOr<Scheme> s;
    if (base == "lp") {
      s = BuildLpScheme(*inst.matroid, inst.prior, *cfg, rng, &report);
    } else {
      absl::StatusOr<SecretaryKind> kind = ParseSecretaryKind(f.secretary);
      if (!kind.ok()) return kind.status();
      s = BuildSecretaryReduction(*inst.matroid, inst.prior, *kind,
                                  f.secretary_c, *cfg, rng, &report);
    }
    (*artifacts)["build_report"] = LpBuildReportToJson(report);
    return s;
  }
  return absl::InvalidArgumentError(absl::StrCat("unknown scheme '", name, "'"));
}

std::string WithSuffix(const std::string& out, const std::string& suffix) {
  return out.empty() ? "" : out + suffix;
}

int GenInstance(const Flags& f) {
  absl::StatusOr<Instance> inst = ParseInstance(f.instance);
  if (!inst.ok()) return Fail(inst.status());
  absl::StatusOr<Json> j = InstanceToJson(*inst);
  if (!j.ok()) return Fail(j.status());
  return Fail(Emit(f.out, Dump(*j)));
}

int PreselectCmd(const Flags& f) {
  absl::StatusOr<Instance> inst = ParseInstance(f.instance);
  if (!inst.ok()) return Fail(inst.status());
  absl::StatusOr<PreselectConfig> cfg = MakePreselectConfig(f, *inst);
  if (!cfg.ok()) return Fail(cfg.status());
  PreselectKind kind;
  if (f.scheme == "alg1") {
    kind = PreselectKind::kIndependent;
  } else if (f.scheme == "alg3") {
    kind = PreselectKind::kPrefix;
  } else {
    return Fail(absl::InvalidArgumentError("preselect needs --scheme alg1|alg3"));
  }
  Rng rng = MakeRng(f.seed, 0);
  absl::StatusOr<PreselectResult> r =
      Preselect(*inst->matroid, *inst->prior, kind, *cfg, rng);
  if (!r.ok()) return Fail(r.status());
  Json j = PreselectResultToJson(*r);
  j["instance"] = inst->name;
  j["alpha"] = cfg->alpha;
  j["eps"] = cfg->eps;
  j["mode"] = f.mode;
  j["seed"] = f.seed;
  if (absl::Status s = Emit(f.out, Dump(j)); !s.ok()) return Fail(s);
  if (!r->ok()) {
    std::cerr << kNoQualifyingElement << " at position " << r->failed_position
              << "\n";
    return 1;
  }
  return 0;
}

int RunCmd(const Flags& f) {
  absl::StatusOr<Instance> inst = ParseInstance(f.instance);
  if (!inst.ok()) return Fail(inst.status());
  Rng rng = MakeRng(f.seed, 0);
  Json artifacts = Json::object();
  absl::StatusOr<Scheme> s = BuildScheme(f, *inst, rng, &artifacts);
  if (!s.ok()) {
    if (!artifacts.empty()) (void)Emit(f.out, Dump(artifacts));
    return Fail(s.status());
  }
  const SubsetMask a = inst->prior->Sample(rng);
  const SubsetMask x = RunScheme(*inst->matroid, *s, a, rng);
  Json j{{"instance", inst->name},
         {"seed", f.seed},
         {"scheme", SchemeToJson(*s)},
         {"active", SubsetToJson(a)},
         {"selected", SubsetToJson(x)}};
  for (auto& [k, v] : artifacts.items()) j[k] = v;
  return Fail(Emit(f.out, Dump(j)));
}

int EvaluateCmd(const Flags& f) {
  absl::StatusOr<Instance> inst = ParseInstance(f.instance);
  if (!inst.ok()) return Fail(inst.status());
  if (f.trials < 1) return Fail(absl::InvalidArgumentError("--trials must be >= 1"));
  if (!(f.ci_level > 0.0 && f.ci_level < 1.0)) {
    return Fail(absl::InvalidArgumentError("--ci-level outside (0,1)"));
  }
  // Build randomness and trial randomness use separate streams.
  Rng rng = MakeRng(f.seed, ~uint64_t{0});
  Json artifacts = Json::object();
  absl::StatusOr<Scheme> s = BuildScheme(f, *inst, rng, &artifacts);
  if (!s.ok()) {
    if (!artifacts.empty()) {
      (void)Emit(WithSuffix(f.out, ".build.json"), Dump(artifacts));
    }
    return Fail(s.status());
  }
  EstimateConfig cfg;
  cfg.trials = f.trials;
  cfg.ci_level = f.ci_level;
  cfg.seed = f.seed;
  cfg.threads = f.threads;
  BalancednessReport r;
  std::atomic<int64_t> failed_builds = 0;
  if (f.rebuild_per_trial) {
    // A build that fails on some trial selects nothing on that trial.
    const SchemeRunner runner = [&](const SubsetMask& a, Rng& trial_rng) {
      Json unused;
      absl::StatusOr<Scheme> fresh = BuildScheme(f, *inst, trial_rng, &unused);
      if (!fresh.ok()) {
        ++failed_builds;
        return SubsetMask(inst->n());
      }
      return RunScheme(*inst->matroid, *fresh, a, trial_rng);
    };
    r = EstimateBalancedness(runner, *inst->prior, cfg);
    r.scheme = SchemeKindName(*s);
  } else {
    r = EstimateBalancedness(*inst->matroid, *s, *inst->prior, cfg);
  }
  r.instance = inst->name;
  Json j = ReportJson(r);
  if (f.rebuild_per_trial) {
    j["rebuild_per_trial"] = true;
    j["failed_builds"] = failed_builds.load();
  }
  j["scheme_spec"] = SchemeToJson(*s);
  for (auto& [k, v] : artifacts.items()) j[k] = v;
  if (f.out.empty()) {
    std::cout << ReportCsv(r);
    return 0;
  }
  if (absl::Status st = WriteTextFile(f.out + ".csv", ReportCsv(r)); !st.ok()) {
    return Fail(st);
  }
  return Fail(WriteTextFile(f.out + ".json", Dump(j)));
}

int OracleAlphaCmd(const Flags& f) {
  absl::StatusOr<Instance> inst = ParseInstance(f.instance);
  if (!inst.ok()) return Fail(inst.status());
  Json j;
  if (f.rational) {
    absl::StatusOr<AlphaCertificate<Rational>> c =
        MaxUncontentiousAlpha<Rational>(*inst->matroid, *inst->prior);
    if (!c.ok()) return Fail(c.status());
    j = CertificateToJson(*c);
  } else {
    absl::StatusOr<AlphaCertificate<double>> c =
        MaxUncontentiousAlpha<double>(*inst->matroid, *inst->prior);
    if (!c.ok()) return Fail(c.status());
    j = CertificateToJson(*c);
  }
  j["instance"] = inst->name;
  j["declared_alpha"] = inst->declared_alpha;
  if (f.out.empty()) {
    std::cout << "alpha_star=" << j["alpha_star"].get<double>() << "\n";
    return 0;
  }
  return Fail(WriteTextFile(f.out, Dump(j)));
}

int LpBuildCmd(const Flags& f, const std::string& pipeline) {
  Flags g = f;
  g.scheme = pipeline;
  absl::StatusOr<Instance> inst = ParseInstance(f.instance);
  if (!inst.ok()) return Fail(inst.status());
  Rng rng = MakeRng(f.seed, 0);
  Json artifacts = Json::object();
  absl::StatusOr<Scheme> s = BuildScheme(g, *inst, rng, &artifacts);
  if (!s.ok()) return Fail(s.status());
  const Json& report = artifacts["build_report"];
  std::cerr << "beta=" << report["beta"].get<double>()
            << " gamma=" << report["gamma"].get<double>()
            << " columns=" << report["columns"].size() << "\n";
  if (f.out.empty()) {
    std::cout << Dump(Json{{"scheme", SchemeToJson(*s)}, {"report", report}});
    return 0;
  }
  if (absl::Status st = WriteTextFile(f.out + ".scheme.json",
                                      Dump(SchemeToJson(*s)));
      !st.ok()) {
    return Fail(st);
  }
  return Fail(WriteTextFile(f.out + ".report.json", Dump(report)));
}

int Main(int argc, char** argv) {
  CLI::App app{"Online contention resolution for matroids"};
  app.require_subcommand(1);
  Flags f;
  std::string pipeline = "lp";
  auto* gen = app.add_subcommand("gen-instance", "write an instance as JSON");
  auto* pre = app.add_subcommand("preselect", "preselect an order");
  auto* run = app.add_subcommand("run", "build a scheme and run one draw");
  auto* eval = app.add_subcommand("evaluate", "estimate balancedness");
  auto* orc = app.add_subcommand("oracle-alpha", "exact best balancedness");
  auto* lp = app.add_subcommand("lp-build", "build an LP mixture scheme");
  for (CLI::App* sub : {gen, pre, run, eval, orc, lp}) {
    sub->add_option("--instance", f.instance, "instance name or JSON path")
        ->required();
    sub->add_option("--out", f.out, "output path (prefix for evaluate)");
    sub->add_option("--seed", f.seed, "64-bit seed");
  }
  for (CLI::App* sub : {pre, run, eval, lp}) {
    sub->add_option("--eps", f.eps, "accuracy parameter");
    sub->add_option("--alpha", f.alpha, "target uncontentiousness");
    sub->add_option("--mode", f.mode, "exact or mc")
        ->check(CLI::IsMember({"exact", "mc"}));
    sub->add_option("--p-min", f.p_min, "lower bound on Pr[i in A]");
    sub->add_option("--samples", f.samples, "override sample counts");
    sub->add_option("--secretary", f.secretary,
                    "greedy_by_weight or classic_1uniform");
    sub->add_option("--secretary-c", f.secretary_c, "competitive ratio");
  }
  for (CLI::App* sub : {pre, run, eval}) {
    sub->add_option("--scheme", f.scheme,
                    "alg1, alg3, alg1:canonical, alg3:canonical, greedy, lp, "
                    "secretary or a scheme JSON file");
  }
  eval->add_option("--trials", f.trials, "number of trials");
  eval->add_option("--ci-level", f.ci_level, "confidence level");
  eval->add_option("--threads", f.threads, "worker threads, 0 for all");
  eval->add_flag("--rebuild-per-trial", f.rebuild_per_trial,
                 "build the scheme afresh for every trial");
  orc->add_flag("--rational", f.rational, "solve in exact arithmetic");
  lp->add_option("--pipeline", pipeline, "lp or secretary")
      ->check(CLI::IsMember({"lp", "secretary"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (*gen) return GenInstance(f);
  if (*pre) return PreselectCmd(f);
  if (*run) return RunCmd(f);
  if (*eval) return EvaluateCmd(f);
  if (*orc) return OracleAlphaCmd(f);
  return LpBuildCmd(f, pipeline);
}

}  // namespace
}  // namespace ocrs

int main(int argc, char** argv) {
  google::InitGoogleLogging(argv[0]);
  FLAGS_logtostderr = true;
  return ocrs::Main(argc, argv);
}
