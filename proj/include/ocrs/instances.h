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

// Instance generators and the named-instance syntax used by the CLI.

#ifndef OCRS_INSTANCES_H_
#define OCRS_INSTANCES_H_

#include <optional>
#include <string>

#include "absl/status/statusor.h"
#include "ocrs/matroid.h"
#include "ocrs/prior.h"
#include "ocrs/random.h"
#include "ocrs/subsampling.h"

namespace ocrs {

struct Instance {
  std::string name;
  MatroidPtr matroid;
  PriorPtr prior;
  // Claimed uncontentiousness; never above the oracle's value.
  double declared_alpha = 0.0;
  std::string provenance;
  // Order under which the instance is meant to be run, if any.
  std::optional<Permutation> canonical_order;

  int n() const { return matroid->ground_size(); }
};

// k-uniform matroid on [n], every element always active, alpha = k/n.
absl::StatusOr<Instance> KUniformAllActive(int n, int k);

// Family {∅, {0}, {1}} with A = {0,1} or ∅, each with probability 1/2.
Instance TwoElement();

// Largest m with (1 - a/2)(1 - a^2/4)^m >= a/2.
int HatsCount(double alpha);

// Graphic matroid on 1/alpha parallel edges w-w' plus m hats
// (v_i,u),(v_i,u') and the edge (u,u'), all active. Element order is the
// canonical order: (v_i,u) for i = 1..m, then (v_i,u'), then (u,u'), then
// the parallel edges. `m_override` replaces the computed m.
absl::StatusOr<Instance> ParallelHats(double alpha,
                                      std::optional<int> m_override = {});
// Index of (u,u') in a ParallelHats instance with m hats.
inline int HatsBottomEdge(int m) { return 2 * m; }

// The correlated prior family on the 1-uniform matroid.
absl::StatusOr<Instance> Example24Instance(int n, double alpha, double delta,
                                           int j);

// Triangle graph with each edge active independently with probability 1/2.
Instance Triangle();

// Random graphic or uniform matroid on n elements with an explicit prior of
// `atoms` atoms covering every element. declared_alpha is 0.
Instance RandomExplicitInstance(int n, int atoms, Rng& rng);

// "kuniform:N,K", "twoelem", "hats:ALPHA[,M]", "example24:N,ALPHA,DELTA,J",
// "triangle", "random:N,ATOMS,SEED", or a path to an instance JSON file.
absl::StatusOr<Instance> ParseInstance(const std::string& spec);

}  // namespace ocrs

#endif  // OCRS_INSTANCES_H_
