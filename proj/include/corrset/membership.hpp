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

#include <array>

#include "corrset/corrvec.hpp"

namespace corrset {

/// Membership of a correlation vector in the classical set C (eight CHSH
/// inequalities, bound 2) and the quantum set Q (eight arcsine inequalities,
/// bound pi).
///
/// Both value arrays share one layout: entry m (m = 0..3) is the signed sum
/// with the minus sign on coordinate m, entry m + 4 is its negation.
struct MembershipReport {
    bool in_C = false;
    bool in_Q = false;
    std::array<double, 8> chsh_values{};
    /// Radians.
    std::array<double, 8> f_values{};
    /// 2 - max |chsh|.
    double margin_C = 0;
    /// pi - max |f|.
    double margin_Q = 0;
};

/// The eight signed combinations of `v` with exactly one (or exactly three)
/// minus signs, in the MembershipReport layout.
std::array<double, 8> signedCombinations(const std::array<double, 4> &v);

MembershipReport membershipReport(const CorrelationVector &x, double tolerance = kDefaultTolerance);

bool inC(const CorrelationVector &x, double tolerance = kDefaultTolerance);
bool inQ(const CorrelationVector &x, double tolerance = kDefaultTolerance);

/// Largest of the eight CHSH combinations. At most 2 on C, 2*sqrt(2) on Q.
double chshMax(const CorrelationVector &x);

/// Largest of the eight arcsine combinations, in radians.
double arcsineMax(const CorrelationVector &x);

/// Componentwise (2/pi) asin. Carries Q onto C.
CorrelationVector mu(const CorrelationVector &x);

/// Componentwise sin(pi y / 2).
CorrelationVector muInverse(const CorrelationVector &y);

}  // namespace corrset
