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

#ifndef OCRS_RATIONAL_H_
#define OCRS_RATIONAL_H_

#include <string>

#include "boost/multiprecision/gmp.hpp"

namespace ocrs {

// Exact arithmetic. A double converts to the rational it denotes exactly.
using Rational = boost::multiprecision::mpq_rational;

template <typename T>
T FromDouble(double d) {
  return T(d);
}

inline double ToDouble(double d) { return d; }
inline double ToDouble(const Rational& r) { return r.convert_to<double>(); }

inline std::string ScalarString(double d) { return std::to_string(d); }
inline std::string ScalarString(const Rational& r) { return r.str(); }

}  // namespace ocrs

#endif  // OCRS_RATIONAL_H_
