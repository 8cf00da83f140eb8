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

#include "corrset/membership.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace corrset {

namespace {

constexpr double kFastPathAgreement = 1e-12;

std::array<double, 4> arcsines(const std::array<double, 4> &x) {
    std::array<double, 4> out{};
    for (int i = 0; i < 4; ++i) {
        out[i] = std::asin(x[i]);
    }
    return out;
}

double maxAbs(const std::array<double, 8> &values) {
    double m = 0;
    for (double v : values) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

// On an s-ordered vector the only inequalities that can bind are
// x1 <= 1 and x1 + x2 + x3 - x4 <= 2 (and the arcsine analogue), so the
// full eight-way maximum must equal the canonical combination.
void crossCheckCanonical(const CorrelationVector &x, double chsh_max, double f_max) {
    const auto &c = canonicalize(x).canonical;
    double chsh_fast = c[0] + c[1] + c[2] - c[3];
    auto g = arcsines(c.values());
    double f_fast = g[0] + g[1] + g[2] - g[3];
    if (c[0] > 1.0 || std::abs(chsh_fast - chsh_max) > kFastPathAgreement ||
        std::abs(f_fast - f_max) > kFastPathAgreement) {
        throw std::logic_error("membership: canonical fast path disagrees with the eight-inequality test at " +
                               x.str());
    }
}

}  // namespace

std::array<double, 8> signedCombinations(const std::array<double, 4> &v) {
    double total = v[0] + v[1] + v[2] + v[3];
    std::array<double, 8> out{};
    for (int m = 0; m < 4; ++m) {
        out[m] = total - 2.0 * v[m];
        out[m + 4] = -out[m];
    }
    return out;
}

MembershipReport membershipReport(const CorrelationVector &x, double tolerance) {
    MembershipReport r;
    r.chsh_values = signedCombinations(x.values());
    r.f_values = signedCombinations(arcsines(x.values()));
    double chsh_max = maxAbs(r.chsh_values);
    double f_max = maxAbs(r.f_values);
    crossCheckCanonical(x, chsh_max, f_max);
    r.margin_C = 2.0 - chsh_max;
    r.margin_Q = std::numbers::pi - f_max;
    r.in_C = r.margin_C >= -tolerance;
    r.in_Q = r.margin_Q >= -tolerance;
    return r;
}

bool inC(const CorrelationVector &x, double tolerance) { return membershipReport(x, tolerance).in_C; }

bool inQ(const CorrelationVector &x, double tolerance) { return membershipReport(x, tolerance).in_Q; }

double chshMax(const CorrelationVector &x) {
    auto values = signedCombinations(x.values());
    return *std::max_element(values.begin(), values.end());
}

double arcsineMax(const CorrelationVector &x) {
    auto values = signedCombinations(arcsines(x.values()));
    return *std::max_element(values.begin(), values.end());
}

CorrelationVector mu(const CorrelationVector &x) {
    std::array<double, 4> out{};
    for (int i = 0; i < 4; ++i) {
        // +-1 map to themselves exactly; the rounded product would not.
        out[i] = std::abs(x[i]) == 1.0 ? x[i] : std::clamp(2.0 / std::numbers::pi * std::asin(x[i]), -1.0, 1.0);
    }
    return CorrelationVector(out);
}

CorrelationVector muInverse(const CorrelationVector &y) {
    std::array<double, 4> out{};
    for (int i = 0; i < 4; ++i) {
        out[i] = std::clamp(std::sin(std::numbers::pi / 2.0 * y[i]), -1.0, 1.0);
    }
    return CorrelationVector(out);
}

}  // namespace corrset
