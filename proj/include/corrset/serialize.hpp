// Copyright 2026 The corrset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <json.hpp>

#include "corrset/checks.hpp"
#include "corrset/corrvec.hpp"
#include "corrset/geometry.hpp"
#include "corrset/membership.hpp"
#include "corrset/quantum.hpp"

// JSON forms of the public types. Objects keep insertion order so output is
// stable across runs. Readers throw PreconditionError on malformed input.

namespace corrset {

using Json = nlohmann::ordered_json;

/// [x1, x2, x3, x4]
Json toJson(const CorrelationVector &x);
CorrelationVector correlationFromJson(const Json &j, double tolerance = kDefaultTolerance);

/// {in_C, in_Q, chsh_values[8], f_values[8], margin_C, margin_Q}
Json toJson(const MembershipReport &r);

/// [{weight, phi: [3]}, ...]
Json toJson(const Decomposition &d);
Decomposition decompositionFromJson(const Json &j);

/// Complex entries are [re, im]; matrices are row-major nested arrays.
Json toJson(const ComplexMatrix &m);
ComplexMatrix matrixFromJson(const Json &j);

/// {dims: [dim_a, dim_b], state, A0, A1, B0, B1}
Json toJson(const Realization &r);
Realization realizationFromJson(const Json &j);

Json toJson(const ScanResult &s);

}  // namespace corrset
