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
#include <cstddef>
#include <cstdint>
#include <string>

#include "corrset/corrvec.hpp"

namespace corrset {

/// Outcome of a grid scan. Both extremes are tracked; each scan documents
/// which one it judges.
struct ScanResult {
    std::string name;
    double grid_step = 0;
    std::size_t points = 0;
    double min_value = 0;
    std::array<double, 3> argmin{};
    double max_value = 0;
    std::array<double, 3> argmax{};
    std::size_t violations = 0;
    bool passed = false;
};

/// sum_i sin g_i / cos^5 g_i - tan(g1 + g2 + g3) (sum_i 1 / cos^2 g_i)^2.
///
/// Up to a positive factor this is the Hessian of the canonical arcsine
/// functional restricted to the tangent direction that overlaps most with
/// its one possibly negative eigenvector.
double hessianExpression(double g1, double g2, double g3);

inline constexpr double kHessianThreshold = -1e-9;
inline constexpr double kLemma6Slack = 1e-9;

/// Evaluates hessianExpression on the grid g_i = -pi/2 + margin + k * step,
/// |g_i| <= pi/2 - margin, keeping points whose sum lies in
/// [pi/2 + margin, 3 pi/2 - margin]. Passes when the minimum is at least
/// -1e-9. Throws DomainError unless step > 0 and 0 < margin < pi/4.
ScanResult hessianPositivityScan(double step, double margin, unsigned threads = 1);

/// Maximizes f(n1) + f(n2) + f(n3) + f(n1 + n2 + n3), f = asin o sin, over
/// the grid n_i = -pi + k * step in [-pi, pi]. Passes when the maximum lies
/// in [pi - 2 step, pi + 1e-9]. Throws DomainError unless step > 0.
ScanResult lemma6MaxScan(double step, unsigned threads = 1);

/// Number of the 64 local deterministic assignments (a0, a1, b0, b1, c0, c1)
/// satisfying a0 b0 c1 = a0 b1 c0 = a1 b0 c0 = 1 and, unless `relaxed`,
/// a1 b1 c1 = -1.
int ghzSatisfyingAssignments(bool relaxed = false);

/// True iff no deterministic assignment reproduces the GHZ correlators.
bool ghzContradiction(bool relaxed = false);

/// Correlation vectors (a0 b0, a0 b1, a1 b0, a1 b1) of the 16 deterministic
/// local strategies, indexed by the bits of (a0, a1, b0, b1).
std::array<CorrelationVector, 16> deterministicVertices();

/// Classical membership decided from the vertex side: x is tested for being
/// a convex combination of the 8 distinct deterministic vertices by
/// enumerating every basic solution of {V w = x, sum w = 1}, w >= 0.
/// `tolerance` matches inC: x passes iff x / (1 + tolerance / 2) is exactly
/// feasible.
bool lvtOracle(const CorrelationVector &x, double tolerance = kDefaultTolerance);

/// Same decision through the 16 facets of the octahedron written in the
/// orthogonal frame of its vertex pairs: sum_k |v_k . x| <= 4 + 2 tolerance.
bool lvtOracleFacets(const CorrelationVector &x, double tolerance = kDefaultTolerance);

/// Points are drawn uniformly from the box in blocks of kSampleBlock, block b
/// seeded with streamSeed(seed, b), so results do not depend on threads.
inline constexpr std::size_t kSampleBlock = 4096;

/// Compares inQ(x) with inC(mu(x)) on `count` random box points, skipping
/// points with |margin_Q| < band. Values recorded are margin_Q.
ScanResult muEquivalenceSample(std::size_t count, std::uint64_t seed, unsigned threads = 1, double band = 1e-7);

/// Compares lvtOracle, lvtOracleFacets and inC on `count` random box points.
/// Values recorded are margin_C.
ScanResult lvtAgreementSample(std::size_t count, std::uint64_t seed, unsigned threads = 1,
                              double tolerance = kDefaultTolerance);

}  // namespace corrset
