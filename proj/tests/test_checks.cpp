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

#include "corrset/checks.hpp"

#include <numbers>
#include <set>

#include "gtest/gtest.h"

#include "corrset/errors.hpp"
#include "corrset/geometry.hpp"
#include "corrset/membership.hpp"
#include "oracles.hpp"

using namespace corrset;
using std::numbers::pi;

TEST(checks, hessian_expression_examples) {
    ASSERT_NEAR(hessianExpression(pi / 4, pi / 4, pi / 4), 48.0, 1e-12);
    ASSERT_GT(hessianExpression(pi / 2 - 0.05, 0.05, 0.05), 0.0);
}

TEST(checks, hessian_scan_passes_on_coarse_grid) {
    auto s = hessianPositivityScan(0.05, 0.05);
    ASSERT_TRUE(s.passed);
    ASSERT_EQ(s.violations, 0u);
    ASSERT_GT(s.points, 1000u);
    ASSERT_GT(s.min_value, 0.0);
    ASSERT_GE(s.max_value, s.min_value);
    double sum = s.argmin[0] + s.argmin[1] + s.argmin[2];
    ASSERT_GE(sum, pi / 2 + 0.05 - 1e-12);
    ASSERT_LE(sum, 3 * pi / 2 - 0.05 + 1e-12);
}

TEST(checks, scans_are_thread_count_independent) {
    auto a = hessianPositivityScan(0.04, 0.05, 1);
    auto b = hessianPositivityScan(0.04, 0.05, 3);
    ASSERT_EQ(a.points, b.points);
    ASSERT_EQ(a.min_value, b.min_value);
    ASSERT_EQ(a.argmin, b.argmin);
    ASSERT_EQ(a.max_value, b.max_value);
    auto c = lemma6MaxScan(0.1, 1);
    auto d = lemma6MaxScan(0.1, 4);
    ASSERT_EQ(c.points, d.points);
    ASSERT_EQ(c.max_value, d.max_value);
    ASSERT_EQ(c.argmax, d.argmax);
}

TEST(checks, scan_domain_errors) {
    ASSERT_THROW(hessianPositivityScan(0, 0.05), DomainError);
    ASSERT_THROW(hessianPositivityScan(0.01, 0), DomainError);
    ASSERT_THROW(hessianPositivityScan(0.01, pi / 4), DomainError);
    ASSERT_THROW(lemma6MaxScan(-1), DomainError);
}

TEST(checks, lemma6_examples) {
    // G(pi/2, pi/2, pi/2) = (1, 1, 1, 1).
    GeneratorPoint top(pi / 2, pi / 2, pi / 2);
    ASSERT_NEAR(fCanonical(evalGenerator(top)), pi, 1e-15);
    ASSERT_EQ(fCanonical(evalGenerator(GeneratorPoint())), 0.0);
}

TEST(checks, lemma6_scan_coarse) {
    auto s = lemma6MaxScan(0.1);
    ASSERT_TRUE(s.passed);
    ASSERT_LE(s.max_value, pi + kLemma6Slack);
    ASSERT_GE(s.max_value, pi - 0.2);
}

TEST(checks, generators_never_exceed_arcsine_bound) {
    // Independent oracle for the scan: random angles, brute arcsine maximum.
    // asin(sin t) near t = pi/2 loses about sqrt(eps) of accuracy.
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100000; ++i) {
        auto phi = corrset::testing::randomAngles(rng);
        auto x = corrset::testing::generatorValue(phi);
        ASSERT_LE(arcsineMax(CorrelationVector(x)), pi + 1e-7);
    }
}

TEST(checks, ghz) {
    ASSERT_EQ(ghzSatisfyingAssignments(false), 0);
    ASSERT_TRUE(ghzContradiction(false));
    ASSERT_GT(ghzSatisfyingAssignments(true), 0);
    ASSERT_FALSE(ghzContradiction(true));
}

TEST(checks, ghz_brute_force_oracle) {
    // Six +-1 values; four parity constraints whose product is -1 in the
    // strict version.
    int count = 0;
    for (int bits = 0; bits < 64; ++bits) {
        int v[6];
        for (int k = 0; k < 6; ++k) {
            v[k] = (bits >> k) & 1 ? -1 : 1;
        }
        // Every value appears in exactly two constraints.
        bool ok = v[0] * v[4] * v[2] == 1 && v[3] * v[1] * v[2] == 1 && v[3] * v[4] * v[5] == 1 &&
                  v[0] * v[1] * v[5] == -1;
        count += ok;
    }
    ASSERT_EQ(count, 0);
}

TEST(checks, deterministic_vertices) {
    auto vs = deterministicVertices();
    std::set<std::array<double, 4>> distinct;
    for (const auto &v : vs) {
        distinct.insert(v.values());
        ASSERT_DOUBLE_EQ(v[0] * v[1] * v[2] * v[3], 1.0);
        ASSERT_NEAR(chshMax(v), 2.0, 1e-15);
        auto r = membershipReport(v);
        int saturated = 0;
        for (double c : r.chsh_values) {
            saturated += std::abs(c - 2.0) < 1e-15;
        }
        ASSERT_EQ(saturated, 4);
        ASSERT_TRUE(lvtOracle(v));
    }
    ASSERT_EQ(distinct.size(), 8u);
}

TEST(checks, lvt_examples) {
    ASSERT_TRUE(lvtOracle(CorrelationVector()));
    ASSERT_TRUE(lvtOracle(CorrelationVector({1, 1, 1, 1})));
    ASSERT_TRUE(lvtOracle(CorrelationVector({0.5, 0.5, 0.5, -0.5})));
    ASSERT_FALSE(lvtOracle(CorrelationVector({1, 1, 1, -1})));
    const double t = 1.0 / std::numbers::sqrt2;
    ASSERT_FALSE(lvtOracle(CorrelationVector({t, t, t, -t})));
}

TEST(checks, lvt_agrees_with_chsh_and_facets) {
    std::mt19937_64 rng(42);
    int skipped = 0;
    for (int i = 0; i < 50000; ++i) {
        CorrelationVector x(corrset::testing::randomBoxPoint(rng));
        double c = chshMax(x);
        if (std::abs(c - 2.0) < 1e-7) {
            ++skipped;
            continue;
        }
        bool lp = lvtOracle(x);
        ASSERT_EQ(lp, inC(x)) << x.str();
        ASSERT_EQ(lp, lvtOracleFacets(x)) << x.str();
    }
    ASSERT_LT(skipped, 10);
}

TEST(checks, box_samples_agree_and_are_thread_independent) {
    auto a = muEquivalenceSample(20000, 3, 1);
    auto b = muEquivalenceSample(20000, 3, 4);
    ASSERT_TRUE(a.passed);
    ASSERT_EQ(a.points, b.points);
    ASSERT_EQ(a.min_value, b.min_value);
    ASSERT_EQ(a.argmax, b.argmax);
    ASSERT_GT(a.points, 19000u);

    auto c = lvtAgreementSample(20000, 3, 1);
    auto d = lvtAgreementSample(20000, 3, 3);
    ASSERT_TRUE(c.passed);
    ASSERT_EQ(c.points, 20000u);
    ASSERT_EQ(c.min_value, d.min_value);
    ASSERT_NE(lvtAgreementSample(100, 4).min_value, c.min_value);
}
