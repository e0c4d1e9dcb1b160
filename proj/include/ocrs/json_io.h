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

// JSON forms of instances, schemes and reports.
//
//   matroid: {"type":"uniform","n":4,"k":2}
//            {"type":"graphic","vertices":3,"edges":[[0,1],[1,2]]}
//            {"type":"explicit","n":2,"independent":[[],[0],[1]]}
//   prior:   {"type":"explicit","n":2,"atoms":[{"set":[0,1],"prob":0.5}]}
//            {"type":"product","x":[0.5,0.5]}
//            {"type":"all_active","n":4}

#ifndef OCRS_JSON_IO_H_
#define OCRS_JSON_IO_H_

#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"
#include "ocrs/instances.h"
#include "ocrs/lp_engine.h"
#include "ocrs/matroid.h"
#include "ocrs/oracle.h"
#include "ocrs/preselect.h"
#include "ocrs/prior.h"
#include "ocrs/schemes.h"

namespace ocrs {

using Json = nlohmann::ordered_json;

Json SubsetToJson(const SubsetMask& s);
absl::StatusOr<SubsetMask> SubsetFromJson(int n, const Json& j);

// Matroids other than uniform and graphic are written as explicit families,
// which requires n <= 20.
absl::StatusOr<Json> MatroidToJson(const Matroid& m);
absl::StatusOr<MatroidPtr> MatroidFromJson(const Json& j);

// Priors other than product and all-active are written through their
// listed support.
absl::StatusOr<Json> PriorToJson(const Prior& p);
absl::StatusOr<PriorPtr> PriorFromJson(const Json& j);

absl::StatusOr<Json> InstanceToJson(const Instance& inst);
absl::StatusOr<Instance> InstanceFromJson(const Json& j);
absl::StatusOr<Instance> LoadInstanceFile(const std::string& path);

Json SchemeToJson(const Scheme& s);
absl::StatusOr<Scheme> SchemeFromJson(const Json& j);

Json PreselectResultToJson(const PreselectResult& r);
Json LpBuildReportToJson(const LpBuildReport& r);

template <typename Scalar>
Json CertificateToJson(const AlphaCertificate<Scalar>& cert);

absl::StatusOr<Json> ReadJsonFile(const std::string& path);
absl::Status WriteTextFile(const std::string& path, const std::string& text);

}  // namespace ocrs

#endif  // OCRS_JSON_IO_H_
