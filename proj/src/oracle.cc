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

#include "ocrs/oracle.h"

#include <algorithm>
#include <functional>

#include "absl/strings/str_format.h"
#include "ocrs/simplex.h"

namespace ocrs {
namespace {

void ExtendIndependent(const Matroid& m, const std::vector<int>& elems,
                       size_t next, SubsetMask& cur,
                       std::vector<SubsetMask>& out) {
  out.push_back(cur);
  for (size_t t = next; t < elems.size(); ++t) {
    cur.Insert(elems[t]);
    if (m.IsIndependent(cur)) ExtendIndependent(m, elems, t + 1, cur, out);
    cur.Erase(elems[t]);
  }
}

// Maximal independent subsets of s. Any independent Y extends to one of
// these, and enlarging Y only raises selection probabilities, so the LP may
// restrict to them without changing its optimum.
std::vector<SubsetMask> MaximalIndependentSubsets(const Matroid& m,
                                                  const SubsetMask& s) {
  std::vector<SubsetMask> all = IndependentSubsets(m, s);
  const int r = Rank(m, s);
  std::vector<SubsetMask> out;
  for (SubsetMask& y : all) {
    if (y.Cardinality() == r) out.push_back(std::move(y));
  }
  return out;
}

}  // namespace

std::vector<SubsetMask> IndependentSubsets(const Matroid& m,
                                           const SubsetMask& s) {
  std::vector<SubsetMask> out;
  SubsetMask cur(m.ground_size());
  if (!m.IsIndependent(cur)) return out;
  ExtendIndependent(m, s.Elements(), 0, cur, out);
  return out;
}

template <typename Scalar>
absl::StatusOr<AlphaCertificate<Scalar>> MaxUncontentiousAlpha(
    const Matroid& m, const Prior& p) {
  const int n = m.ground_size();
  if (p.n() != n) return absl::InvalidArgumentError("prior size mismatch");
  if (n > kOracleMaxN) {
    return absl::OutOfRangeError(absl::StrFormat(
        "oracle limited to n <= %d, got %d", kOracleMaxN, n));
  }
  std::optional<std::vector<Atom>> support = p.ExactSupport();
  if (!support) {
    return absl::InvalidArgumentError(
        absl::StrCat("oracle needs a listed support; prior is ", p.kind()));
  }

  struct Block {
    SubsetMask atom;
    Scalar prob;
    std::vector<SubsetMask> sets;
    int offset;
  };
  std::vector<Block> blocks;
  int num_y = 0;
  std::vector<Scalar> x(n, Scalar(0));
  for (const Atom& a : *support) {
    Block b{a.set, FromDouble<Scalar>(a.prob), MaximalIndependentSubsets(m, a.set),
            num_y};
    num_y += static_cast<int>(b.sets.size());
    if (num_y > kOracleMaxColumns) {
      return absl::OutOfRangeError("oracle LP too large to enumerate");
    }
    a.set.ForEach([&](int i) { x[i] += b.prob; });
    blocks.push_back(std::move(b));
  }
  std::vector<int> live;
  for (int i = 0; i < n; ++i) {
    if (x[i] > Scalar(0)) live.push_back(i);
  }
  if (live.empty()) {
    return absl::InvalidArgumentError("no element is ever active");
  }

  const int alpha_var = num_y;
  LinearProgram<Scalar> lp(num_y + 1);
  lp.objective[alpha_var] = Scalar(1);
  for (const Block& b : blocks) {
    std::vector<Scalar> row(num_y + 1, Scalar(0));
    for (size_t t = 0; t < b.sets.size(); ++t) row[b.offset + t] = Scalar(1);
    lp.AddRow(std::move(row), RowSense::kEq, Scalar(1));
  }
  for (int i : live) {
    std::vector<Scalar> row(num_y + 1, Scalar(0));
    for (const Block& b : blocks) {
      for (size_t t = 0; t < b.sets.size(); ++t) {
        if (b.sets[t].Contains(i)) row[b.offset + t] = b.prob;
      }
    }
    row[alpha_var] = -x[i];
    lp.AddRow(std::move(row), RowSense::kGe, Scalar(0));
  }
  const LpResult<Scalar> res = SolveLp(lp);
  if (res.status != LpStatus::kOptimal) {
    return absl::InternalError(
        absl::StrCat("oracle LP not solved: ", LpStatusName(res.status)));
  }

  AlphaCertificate<Scalar> cert;
  cert.alpha_star = res.x[alpha_var];
  std::vector<Scalar> sel(n, Scalar(0));
  for (const Block& b : blocks) {
    typename AlphaCertificate<Scalar>::Row row{b.atom, b.prob, {}};
    Scalar total(0);
    for (size_t t = 0; t < b.sets.size(); ++t) {
      const Scalar& y = res.x[b.offset + t];
      if (y > Scalar(0)) {
        row.distribution.push_back({b.sets[t], y});
        total += y;
      }
    }
    // Float solves can leave rows a hair off 1.
    for (auto& [set, y] : row.distribution) {
      y /= total;
      set.ForEach([&](int i) { sel[i] += b.prob * y; });
    }
    cert.witness.push_back(std::move(row));
  }
  cert.witness_balancedness.resize(n);
  for (int i : live) cert.witness_balancedness[i] = sel[i] / x[i];
  return cert;
}

template <typename Scalar>
absl::Status CheckCertificate(const Matroid& m,
                              const AlphaCertificate<Scalar>& cert,
                              const Scalar& tolerance) {
  for (const auto& row : cert.witness) {
    Scalar total(0);
    for (const auto& [set, y] : row.distribution) {
      if (!set.IsSubsetOf(row.atom)) {
        return absl::InternalError(absl::StrCat(
            "witness set ", set.ToString(), " not inside ", row.atom.ToString()));
      }
      if (!m.IsIndependent(set)) {
        return absl::InternalError(
            absl::StrCat("witness set ", set.ToString(), " is dependent"));
      }
      total += y;
    }
    Scalar off = total - Scalar(1);
    if (off < Scalar(0)) off = -off;
    if (off > tolerance) {
      return absl::InternalError(
          absl::StrCat("witness row for ", row.atom.ToString(),
                       " sums to ", ScalarString(total)));
    }
  }
  std::optional<Scalar> lo = MinBalancedness(cert.witness_balancedness);
  if (!lo) return absl::InternalError("witness has no active element");
  Scalar off = *lo - cert.alpha_star;
  if (off < Scalar(0)) off = -off;
  if (off > tolerance) {
    return absl::InternalError(
        absl::StrCat("witness minimum ", ScalarString(*lo), " differs from ",
                     ScalarString(cert.alpha_star)));
  }
  return absl::OkStatus();
}

template <typename Scalar>
absl::StatusOr<std::vector<std::optional<Scalar>>> ExactBalancedness(
    const Matroid& m, const Scheme& s, const Prior& p,
    bool sentinel_by_subsets) {
  const int n = m.ground_size();
  if (p.n() != n) return absl::InvalidArgumentError("prior size mismatch");
  if (absl::Status st = ValidateScheme(s, n); !st.ok()) return st;
  std::optional<std::vector<Atom>> support = p.ExactSupport();
  if (!support) {
    return absl::InvalidArgumentError(absl::StrCat(
        "exact balancedness needs a listed support; prior is ", p.kind()));
  }
  std::vector<Scalar> x(n, Scalar(0)), sel(n, Scalar(0));
  for (const Atom& a : *support) {
    const Scalar pa = FromDouble<Scalar>(a.prob);
    a.set.ForEach([&](int i) { x[i] += pa; });
    absl::Status st = ForEachOutcome<Scalar>(
        m, s, a.set, sentinel_by_subsets,
        [&](const Scalar& w, const SubsetMask& chosen) {
          const Scalar pw = pa * w;
          chosen.ForEach([&](int i) { sel[i] += pw; });
        });
    if (!st.ok()) return st;
  }
  std::vector<std::optional<Scalar>> out(n);
  for (int i = 0; i < n; ++i) {
    if (x[i] > Scalar(0)) out[i] = sel[i] / x[i];
  }
  return out;
}

template <typename Scalar>
std::optional<Scalar> MinBalancedness(
    const std::vector<std::optional<Scalar>>& b) {
  std::optional<Scalar> lo;
  for (const auto& v : b) {
    if (v && (!lo || *v < *lo)) lo = *v;
  }
  return lo;
}

absl::StatusOr<double> BruteforceWeightedRank(const Matroid& m,
                                              const WeightVector& w,
                                              const SubsetMask& s) {
  if (w.size() != m.ground_size() || s.n() != m.ground_size()) {
    return absl::InvalidArgumentError("dimension mismatch");
  }
  if (s.Cardinality() > kBruteforceRankLimit) {
    return absl::OutOfRangeError(absl::StrFormat(
        "brute force limited to |S| <= %d", kBruteforceRankLimit));
  }
  double best = 0.0;
  for (const SubsetMask& y : IndependentSubsets(m, s)) {
    best = std::max(best, w.SumOver(y));
  }
  return best;
}

template absl::StatusOr<AlphaCertificate<double>> MaxUncontentiousAlpha(
    const Matroid&, const Prior&);
template absl::StatusOr<AlphaCertificate<Rational>> MaxUncontentiousAlpha(
    const Matroid&, const Prior&);
template absl::Status CheckCertificate(const Matroid&,
                                       const AlphaCertificate<double>&,
                                       const double&);
template absl::Status CheckCertificate(const Matroid&,
                                       const AlphaCertificate<Rational>&,
                                       const Rational&);
template absl::StatusOr<std::vector<std::optional<double>>> ExactBalancedness(
    const Matroid&, const Scheme&, const Prior&, bool);
template absl::StatusOr<std::vector<std::optional<Rational>>>
ExactBalancedness(const Matroid&, const Scheme&, const Prior&, bool);
template std::optional<double> MinBalancedness(
    const std::vector<std::optional<double>>&);
template std::optional<Rational> MinBalancedness(
    const std::vector<std::optional<Rational>>&);

}  // namespace ocrs
