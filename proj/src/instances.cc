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

#include "ocrs/instances.h"

#include <cmath>
#include <numeric>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "ocrs/json_io.h"

namespace ocrs {
namespace {

absl::StatusOr<std::vector<double>> ParseNumbers(const std::string& args,
                                                 size_t want_min,
                                                 size_t want_max,
                                                 const std::string& spec) {
  std::vector<double> out;
  if (!args.empty()) {
    for (absl::string_view part : absl::StrSplit(args, ',')) {
      double v;
      if (!absl::SimpleAtod(part, &v)) {
        return absl::InvalidArgumentError(
            absl::StrCat("bad number '", part, "' in '", spec, "'"));
      }
      out.push_back(v);
    }
  }
  if (out.size() < want_min || out.size() > want_max) {
    return absl::InvalidArgumentError(
        absl::StrCat("wrong argument count in '", spec, "'"));
  }
  return out;
}

bool IsInteger(double v) { return v == std::floor(v) && std::abs(v) < 1e9; }

}  // namespace

absl::StatusOr<Instance> KUniformAllActive(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("kuniform needs 1 <= k <= n-1, got n=%d k=%d", n, k));
  }
  Instance inst;
  inst.name = absl::StrFormat("kuniform:%d,%d", n, k);
  inst.matroid = std::make_shared<UniformMatroid>(n, k);
  inst.prior = std::make_shared<AllActivePrior>(n);
  inst.declared_alpha = static_cast<double>(k) / n;
  inst.provenance = "k-uniform, all active";
  return inst;
}

Instance TwoElement() {
  Instance inst;
  inst.name = "twoelem";
  inst.matroid = std::make_shared<UniformMatroid>(2, 1);
  inst.prior = *ExplicitPrior::Create(
      2, {{SubsetMask::Full(2), 0.5}, {SubsetMask(2), 0.5}});
  inst.declared_alpha = 0.5;
  inst.provenance = "two elements, perfectly correlated";
  return inst;
}

int HatsCount(double alpha) {
  const double lhs = 1.0 - alpha / 2.0;
  const double r = 1.0 - alpha * alpha / 4.0;
  int m = 0;
  double cur = lhs;
  while (cur * r >= alpha / 2.0) {
    cur *= r;
    ++m;
  }
  return m;
}

absl::StatusOr<Instance> ParallelHats(double alpha,
                                      std::optional<int> m_override) {
  if (!(alpha > 0.0 && alpha <= 0.5)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("hats alpha = %g outside (0,1/2]", alpha));
  }
  const double inv = 1.0 / alpha;
  const int n = static_cast<int>(std::lround(inv));
  if (std::abs(inv - n) > 1e-9) {
    return absl::InvalidArgumentError(
        absl::StrFormat("hats needs 1/alpha integral, got %g", inv));
  }
  const int m = m_override ? *m_override : HatsCount(alpha);
  if (m < 0) return absl::InvalidArgumentError("negative hat count");
  // Vertices: w=0, w'=1, u=2, u'=3, v_i=4+i.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) edges.push_back({4 + i, 2});
  for (int i = 0; i < m; ++i) edges.push_back({4 + i, 3});
  edges.push_back({2, 3});
  for (int i = 0; i < n; ++i) edges.push_back({0, 1});
  Instance inst;
  const int size = static_cast<int>(edges.size());
  inst.name = m_override ? absl::StrFormat("hats:%g,%d", alpha, m)
                         : absl::StrFormat("hats:%g", alpha);
  inst.matroid = std::make_shared<GraphicMatroid>(4 + m, std::move(edges));
  inst.prior = std::make_shared<AllActivePrior>(size);
  inst.declared_alpha = alpha;
  inst.provenance = absl::StrFormat(
      "parallel edges and hats, m=%d, all active", m);
  inst.canonical_order = Permutation::Identity(size);
  return inst;
}

absl::StatusOr<Instance> Example24Instance(int n, double alpha, double delta,
                                           int j) {
  absl::StatusOr<std::shared_ptr<const ExplicitPrior>> p =
      BuildExample24(n, alpha, delta, j);
  if (!p.ok()) return p.status();
  Instance inst;
  inst.name = absl::StrFormat("example24:%d,%g,%g,%d", n, alpha, delta, j);
  inst.matroid = std::make_shared<UniformMatroid>(n, 1);
  inst.prior = *std::move(p);
  inst.declared_alpha = alpha;
  inst.provenance = "correlated prior family on the 1-uniform matroid";
  return inst;
}

Instance Triangle() {
  Instance inst;
  inst.name = "triangle";
  inst.matroid = std::make_shared<GraphicMatroid>(
      3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}});
  inst.prior = *ProductPrior::Create({0.5, 0.5, 0.5});
  inst.declared_alpha = 0.0;
  inst.provenance = "triangle graph, product prior 1/2";
  return inst;
}

Instance RandomExplicitInstance(int n, int atoms, Rng& rng) {
  CHECK_GE(n, 1);
  CHECK_GE(atoms, 1);
  Instance inst;
  if (Bernoulli(rng, 0.5)) {
    const int v = UniformInt(rng, 2, std::max(2, n - 1));
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < n; ++e) {
      const int a = UniformInt(rng, 0, v - 1);
      int b = UniformInt(rng, 0, v - 2);
      if (b >= a) ++b;
      edges.push_back({a, b});
    }
    inst.matroid = std::make_shared<GraphicMatroid>(v, std::move(edges));
  } else {
    inst.matroid =
        std::make_shared<UniformMatroid>(n, UniformInt(rng, 1, n));
  }
  // Every element lands in at least one atom.
  std::vector<SubsetMask> sets(atoms, SubsetMask(n));
  for (int i = 0; i < n; ++i) sets[UniformInt(rng, 0, atoms - 1)].Insert(i);
  for (auto& s : sets) {
    for (int i = 0; i < n; ++i) {
      if (Bernoulli(rng, 0.3)) s.Insert(i);
    }
  }
  std::vector<double> w(atoms);
  for (double& x : w) x = 0.1 + UniformDouble(rng);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  std::vector<Atom> list;
  for (int a = 0; a < atoms; ++a) list.push_back({sets[a], w[a] / total});
  inst.prior = *ExplicitPrior::Create(n, list);
  inst.name = absl::StrFormat("random:%d,%d", n, atoms);
  inst.provenance = "random " + inst.matroid->DebugString();
  return inst;
}

absl::StatusOr<Instance> ParseInstance(const std::string& spec) {
  const size_t colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "twoelem" && args.empty()) return TwoElement();
  if (head == "triangle" && args.empty()) return Triangle();
  if (head == "kuniform") {
    absl::StatusOr<std::vector<double>> v = ParseNumbers(args, 2, 2, spec);
    if (!v.ok()) return v.status();
    if (!IsInteger((*v)[0]) || !IsInteger((*v)[1])) {
      return absl::InvalidArgumentError("kuniform needs integers");
    }
    return KUniformAllActive(static_cast<int>((*v)[0]),
                             static_cast<int>((*v)[1]));
  }
  if (head == "hats") {
    absl::StatusOr<std::vector<double>> v = ParseNumbers(args, 1, 2, spec);
    if (!v.ok()) return v.status();
    std::optional<int> m;
    if (v->size() == 2) {
      if (!IsInteger((*v)[1])) return absl::InvalidArgumentError("bad m");
      m = static_cast<int>((*v)[1]);
    }
    return ParallelHats((*v)[0], m);
  }
  if (head == "example24") {
    absl::StatusOr<std::vector<double>> v = ParseNumbers(args, 4, 4, spec);
    if (!v.ok()) return v.status();
    if (!IsInteger((*v)[0]) || !IsInteger((*v)[3])) {
      return absl::InvalidArgumentError("example24 needs integer n and j");
    }
    return Example24Instance(static_cast<int>((*v)[0]), (*v)[1], (*v)[2],
                             static_cast<int>((*v)[3]));
  }
  if (head == "random") {
    absl::StatusOr<std::vector<double>> v = ParseNumbers(args, 3, 3, spec);
    if (!v.ok()) return v.status();
    for (double d : *v) {
      if (!IsInteger(d) || d < 0) {
        return absl::InvalidArgumentError("random needs nonnegative integers");
      }
    }
    if ((*v)[0] < 1 || (*v)[0] > 64 || (*v)[1] < 1) {
      return absl::InvalidArgumentError("random needs 1 <= n <= 64, atoms >= 1");
    }
    Rng rng = MakeRng(static_cast<uint64_t>((*v)[2]), 0);
    Instance inst = RandomExplicitInstance(static_cast<int>((*v)[0]),
                                           static_cast<int>((*v)[1]), rng);
    inst.name = spec;
    return inst;
  }
  if (spec.ends_with(".json")) return LoadInstanceFile(spec);
  return absl::InvalidArgumentError(
      absl::StrCat("unknown instance '", spec, "'"));
}

}  // namespace ocrs
