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

#include "ocrs/json_io.h"

#include <fstream>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "ocrs/secretary.h"

namespace ocrs {
namespace {

constexpr int kExplicitWriteLimit = 20;

absl::Status Bad(const std::string& what) {
  return absl::InvalidArgumentError(absl::StrCat("bad JSON: ", what));
}

absl::StatusOr<Permutation> PermutationFromJson(const Json& j) {
  if (!j.is_array()) return Bad("permutation must be an array");
  return Permutation::Create(j.get<std::vector<int>>());
}

}  // namespace

Json SubsetToJson(const SubsetMask& s) { return Json(s.Elements()); }

absl::StatusOr<SubsetMask> SubsetFromJson(int n, const Json& j) {
  if (!j.is_array()) return Bad("set must be an array");
  SubsetMask s(n);
  for (const Json& e : j) {
    if (!e.is_number_integer()) return Bad("set element not an integer");
    const int i = e.get<int>();
    if (i < 0 || i >= n) return Bad(absl::StrCat("element ", i, " out of range"));
    s.Insert(i);
  }
  return s;
}

absl::StatusOr<Json> MatroidToJson(const Matroid& m) {
  if (auto* u = dynamic_cast<const UniformMatroid*>(&m)) {
    return Json{{"type", "uniform"}, {"n", m.ground_size()}, {"k", u->k()}};
  }
  if (auto* g = dynamic_cast<const GraphicMatroid*>(&m)) {
    Json edges = Json::array();
    for (auto [a, b] : g->edges()) edges.push_back({a, b});
    return Json{{"type", "graphic"},
                {"vertices", g->num_vertices()},
                {"edges", edges}};
  }
  const int n = m.ground_size();
  if (n > kExplicitWriteLimit) {
    return absl::OutOfRangeError("matroid too large to write explicitly");
  }
  Json sets = Json::array();
  ForEachSubset(SubsetMask::Full(n), [&](const SubsetMask& s) {
    if (m.IsIndependent(s)) sets.push_back(SubsetToJson(s));
  });
  return Json{{"type", "explicit"}, {"n", n}, {"independent", sets}};
}

absl::StatusOr<MatroidPtr> MatroidFromJson(const Json& j) {
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "uniform") {
      const int n = j.at("n").get<int>(), k = j.at("k").get<int>();
      if (n < 0 || k < 0) return Bad("uniform needs n, k >= 0");
      return MatroidPtr(std::make_shared<UniformMatroid>(n, k));
    }
    if (type == "graphic") {
      const int v = j.at("vertices").get<int>();
      std::vector<std::pair<int, int>> edges;
      for (const Json& e : j.at("edges")) {
        const int a = e.at(0).get<int>(), b = e.at(1).get<int>();
        if (a < 0 || b < 0 || a >= v || b >= v) return Bad("edge endpoint");
        edges.push_back({a, b});
      }
      return MatroidPtr(std::make_shared<GraphicMatroid>(v, std::move(edges)));
    }
    if (type == "explicit") {
      const int n = j.at("n").get<int>();
      if (n < 0) return Bad("negative n");
      std::vector<SubsetMask> sets;
      for (const Json& s : j.at("independent")) {
        absl::StatusOr<SubsetMask> m = SubsetFromJson(n, s);
        if (!m.ok()) return m.status();
        sets.push_back(*m);
      }
      return MatroidPtr(std::make_shared<ExplicitMatroid>(n, sets));
    }
    return Bad(absl::StrCat("unknown matroid type '", type, "'"));
  } catch (const Json::exception& e) {
    return Bad(e.what());
  }
}

absl::StatusOr<Json> PriorToJson(const Prior& p) {
  if (auto* q = dynamic_cast<const ProductPrior*>(&p)) {
    return Json{{"type", "product"}, {"x", q->x()}};
  }
  if (dynamic_cast<const AllActivePrior*>(&p)) {
    return Json{{"type", "all_active"}, {"n", p.n()}};
  }
  std::optional<std::vector<Atom>> support = p.ExactSupport();
  if (!support) {
    return absl::InvalidArgumentError(
        absl::StrCat("cannot write a prior of kind ", p.kind()));
  }
  Json atoms = Json::array();
  for (const Atom& a : *support) {
    atoms.push_back({{"set", SubsetToJson(a.set)}, {"prob", a.prob}});
  }
  return Json{{"type", "explicit"}, {"n", p.n()}, {"atoms", atoms}};
}

absl::StatusOr<PriorPtr> PriorFromJson(const Json& j) {
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "product") {
      absl::StatusOr<std::shared_ptr<const ProductPrior>> p =
          ProductPrior::Create(j.at("x").get<std::vector<double>>());
      if (!p.ok()) return p.status();
      return PriorPtr(*p);
    }
    if (type == "all_active") {
      const int n = j.at("n").get<int>();
      if (n < 0) return Bad("negative n");
      return PriorPtr(std::make_shared<AllActivePrior>(n));
    }
    if (type == "explicit") {
      const int n = j.at("n").get<int>();
      if (n < 0) return Bad("negative n");
      std::vector<Atom> atoms;
      for (const Json& a : j.at("atoms")) {
        absl::StatusOr<SubsetMask> s = SubsetFromJson(n, a.at("set"));
        if (!s.ok()) return s.status();
        atoms.push_back({*s, a.at("prob").get<double>()});
      }
      absl::StatusOr<std::shared_ptr<const ExplicitPrior>> p =
          ExplicitPrior::Create(n, atoms);
      if (!p.ok()) return p.status();
      return PriorPtr(*p);
    }
    return Bad(absl::StrCat("unknown prior type '", type, "'"));
  } catch (const Json::exception& e) {
    return Bad(e.what());
  }
}

absl::StatusOr<Json> InstanceToJson(const Instance& inst) {
  absl::StatusOr<Json> m = MatroidToJson(*inst.matroid);
  if (!m.ok()) return m.status();
  absl::StatusOr<Json> p = PriorToJson(*inst.prior);
  if (!p.ok()) return p.status();
  Json j{{"name", inst.name},
         {"matroid", *m},
         {"prior", *p},
         {"declared_alpha", inst.declared_alpha},
         {"provenance", inst.provenance}};
  if (inst.canonical_order) j["canonical_order"] = inst.canonical_order->order();
  return j;
}

absl::StatusOr<Instance> InstanceFromJson(const Json& j) {
  try {
    Instance inst;
    inst.name = j.value("name", std::string("file"));
    absl::StatusOr<MatroidPtr> m = MatroidFromJson(j.at("matroid"));
    if (!m.ok()) return m.status();
    absl::StatusOr<PriorPtr> p = PriorFromJson(j.at("prior"));
    if (!p.ok()) return p.status();
    if ((*m)->ground_size() != (*p)->n()) {
      return Bad("matroid and prior sizes differ");
    }
    inst.matroid = *m;
    inst.prior = *p;
    inst.declared_alpha = j.value("declared_alpha", 0.0);
    inst.provenance = j.value("provenance", std::string());
    if (j.contains("canonical_order")) {
      absl::StatusOr<Permutation> pi = PermutationFromJson(j["canonical_order"]);
      if (!pi.ok()) return pi.status();
      if (pi->n() != inst.n()) return Bad("canonical order size");
      inst.canonical_order = *pi;
    }
    return inst;
  } catch (const Json::exception& e) {
    return Bad(e.what());
  }
}

absl::StatusOr<Instance> LoadInstanceFile(const std::string& path) {
  absl::StatusOr<Json> j = ReadJsonFile(path);
  if (!j.ok()) return j.status();
  return InstanceFromJson(*j);
}

Json SchemeToJson(const Scheme& s) {
  Json j{{"kind", SchemeKindName(s)}};
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GreedyOrderedScheme> ||
                      std::is_same_v<T, Alg3Scheme>) {
          j["pi"] = v.pi.order();
        } else if constexpr (std::is_same_v<T, Alg1Scheme>) {
          j["pi"] = v.pi.order();
          j["rho"] = v.rho;
        } else if constexpr (std::is_same_v<T, PermutationMixtureScheme>) {
          Json comps = Json::array();
          for (const auto& [pi, lambda] : v.components) {
            comps.push_back({{"pi", pi.order()}, {"lambda", lambda}});
          }
          j["components"] = comps;
        } else {
          j["secretary"] = SecretaryKindName(v.secretary);
          Json comps = Json::array();
          for (const auto& [w, lambda] : v.components) {
            comps.push_back({{"w", w.values()}, {"lambda", lambda}});
          }
          j["components"] = comps;
        }
      },
      s);
  return j;
}

absl::StatusOr<Scheme> SchemeFromJson(const Json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    auto pi = [&]() { return PermutationFromJson(j.at("pi")); };
    Scheme s;
    if (kind == "greedy_ordered" || kind == "alg3" || kind == "alg1") {
      absl::StatusOr<Permutation> p = pi();
      if (!p.ok()) return p.status();
      if (kind == "greedy_ordered") {
        s = GreedyOrderedScheme{*p};
      } else if (kind == "alg3") {
        s = Alg3Scheme{*p};
      } else {
        s = Alg1Scheme{*p, j.at("rho").get<double>()};
      }
    } else if (kind == "permutation_mixture") {
      PermutationMixtureScheme mix;
      for (const Json& c : j.at("components")) {
        absl::StatusOr<Permutation> p = PermutationFromJson(c.at("pi"));
        if (!p.ok()) return p.status();
        mix.components.push_back({*p, c.at("lambda").get<double>()});
      }
      s = mix;
    } else if (kind == "weight_mixture") {
      WeightMixtureScheme mix;
      absl::StatusOr<SecretaryKind> sk =
          ParseSecretaryKind(j.at("secretary").get<std::string>());
      if (!sk.ok()) return sk.status();
      mix.secretary = *sk;
      for (const Json& c : j.at("components")) {
        absl::StatusOr<WeightVector> w =
            WeightVector::Create(c.at("w").get<std::vector<double>>());
        if (!w.ok()) return w.status();
        mix.components.push_back({*w, c.at("lambda").get<double>()});
      }
      s = mix;
    } else {
      return Bad(absl::StrCat("unknown scheme kind '", kind, "'"));
    }
    return s;
  } catch (const Json::exception& e) {
    return Bad(e.what());
  }
}

Json PreselectResultToJson(const PreselectResult& r) {
  Json steps = Json::array();
  for (const PreselectStep& s : r.steps) {
    steps.push_back({{"position", s.position},
                     {"element", s.element},
                     {"statistic", s.statistic},
                     {"threshold", s.threshold}});
  }
  return Json{{"status", r.ok() ? "ok" : kNoQualifyingElement},
              {"order", r.order},
              {"failed_position", r.failed_position},
              {"samples_per_step", r.samples_per_step},
              {"p_min", r.p_min},
              {"steps", steps}};
}

Json LpBuildReportToJson(const LpBuildReport& r) {
  Json j{{"pipeline", r.pipeline},
         {"eps", r.eps},
         {"eps_prime", r.eps_prime},
         {"eta", r.eta},
         {"log_inv_delta", r.log_inv_delta},
         {"gap_tolerance", r.gap_tolerance},
         {"samples_per_column", r.samples_per_column},
         {"x", r.x},
         {"beta_trajectory", r.beta_trajectory},
         {"gamma_trajectory", r.gamma_trajectory},
         {"columns", r.columns},
         {"iterations", r.iterations},
         {"iteration_cap", r.iteration_cap},
         {"hit_cap", r.hit_cap},
         {"converged", r.converged},
         {"beta", r.beta},
         {"gamma", r.gamma},
         {"mu", r.mu},
         {"certificate", r.certificate}};
  if (r.grid) {
    j["grid"] = {{"n", r.grid->n},
                 {"eps", r.grid->eps},
                 {"p_min", r.grid->p_min},
                 {"step", r.grid->step()},
                 {"size", r.grid->size()}};
    j["secretary"] = r.secretary;
    j["secretary_c"] = r.secretary_c;
  }
  return j;
}

template <typename Scalar>
Json CertificateToJson(const AlphaCertificate<Scalar>& cert) {
  Json rows = Json::array();
  for (const auto& row : cert.witness) {
    Json dist = Json::array();
    for (const auto& [set, y] : row.distribution) {
      dist.push_back({{"set", SubsetToJson(set)}, {"weight", ToDouble(y)}});
    }
    rows.push_back({{"atom", SubsetToJson(row.atom)},
                    {"prob", ToDouble(row.prob)},
                    {"distribution", dist}});
  }
  Json bal = Json::array();
  for (const auto& b : cert.witness_balancedness) {
    bal.push_back(b ? Json(ToDouble(*b)) : Json("no-data"));
  }
  Json j{{"alpha_star", ToDouble(cert.alpha_star)}};
  if constexpr (std::is_same_v<Scalar, Rational>) {
    j["alpha_star_exact"] = cert.alpha_star.str();
  }
  j["witness_balancedness"] = bal;
  j["witness"] = rows;
  return j;
}

template Json CertificateToJson(const AlphaCertificate<double>&);
template Json CertificateToJson(const AlphaCertificate<Rational>&);

absl::StatusOr<Json> ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    return Bad(absl::StrCat(path, ": ", e.what()));
  }
}

absl::Status WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return absl::PermissionDeniedError(absl::StrCat("cannot write ", path));
  out << text;
  if (!out) return absl::DataLossError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

}  // namespace ocrs
