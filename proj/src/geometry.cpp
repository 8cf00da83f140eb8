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

#include "corrset/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "corrset/errors.hpp"
#include "corrset/membership.hpp"

namespace corrset {

namespace {

using std::numbers::pi;

constexpr double kDegenerateFace = 1e-9;
constexpr double kAngleSumTolerance = 1e-9;
constexpr int kMaxBisections = 200;
// Below this distance from pi the canonical point is taken to be on the
// surface already and is read off directly instead of bisected.
constexpr double kOnSurface = 1e-13;

std::string describe(const CorrelationVector &x) { return x.str(); }

// Canonical functional along the ray t * c, reparametrized by the first
// generator angle u = asin(t * c1). Every term has slope at most 1 in u, so
// bisection in u stays well conditioned where t * c1 approaches 1.
double rayFunctional(const CorrelationVector &c, double u) {
    double s = std::sin(u) / c[0];
    return u + std::asin(std::clamp(s * c[1], -1.0, 1.0)) + std::asin(std::clamp(s * c[2], -1.0, 1.0)) -
           std::asin(std::clamp(s * c[3], -1.0, 1.0));
}

void appendIfPositive(Decomposition &d, double weight, const GeneratorPoint &g) {
    if (weight > 0) {
        d.terms.push_back({weight, g});
    }
}

Decomposition decomposeCanonical(const CorrelationVector &c, double tolerance) {
    Decomposition d;
    if (c[0] == 0) {
        d.terms.push_back({1.0, GeneratorPoint(0, 0, 0)});
        return d;
    }

    // Exit through the face x1 = 1.
    if (c[0] == 1.0 || rayFunctional(c, pi / 2) <= pi) {
        CorrelationVector face({1.0, c[1] / c[0], c[2] / c[0], c[3] / c[0]});
        for (const auto &term : faceDecompose(face, tolerance).terms) {
            appendIfPositive(d, c[0] * term.weight, term.generator);
        }
        appendIfPositive(d, 1.0 - c[0], GeneratorPoint(0, 0, 0));
        return d;
    }

    // Exit through the arcsine surface.
    double f0 = fCanonical(c);
    if (f0 >= pi - kOnSurface) {
        d.terms.push_back({1.0, boundaryToGenerator(c, std::max(tolerance, kOnSurface))});
        return d;
    }
    double lo = std::asin(c[0]);
    double hi = pi / 2;
    if (!(rayFunctional(c, lo) < pi && rayFunctional(c, hi) > pi)) {
        throw BisectionError("decompose: cannot bracket the surface crossing along the ray through " + describe(c));
    }
    for (int it = 0; it < kMaxBisections; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (rayFunctional(c, mid) < pi) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    double u = std::abs(rayFunctional(c, lo) - pi) <= std::abs(rayFunctional(c, hi) - pi) ? lo : hi;
    double s = std::sin(u) / c[0];
    GeneratorPoint hit(u, std::asin(std::clamp(s * c[1], -1.0, 1.0)), std::asin(std::clamp(s * c[2], -1.0, 1.0)));
    double weight = c[0] / std::sin(u);
    d.terms.push_back({weight, hit});
    appendIfPositive(d, 1.0 - weight, GeneratorPoint(0, 0, 0));
    return d;
}

}  // namespace

double reduceAngle(double radians) {
    double r = std::remainder(radians, 2 * pi);
    if (r <= -pi) {
        r += 2 * pi;
    }
    return r;
}

GeneratorPoint::GeneratorPoint(double phi1, double phi2, double phi3)
    : phi_{reduceAngle(phi1), reduceAngle(phi2), reduceAngle(phi3)} {}

AngleVector::AngleVector(const std::array<double, 4> &nu) : nu_(nu) {
    double sum = nu[0] + nu[1] + nu[2] + nu[3];
    if (std::abs(std::remainder(sum, 2 * pi)) > kAngleSumTolerance) {
        throw PreconditionError("angle vector: the four angles must sum to a multiple of 2 pi");
    }
}

AngleVector AngleVector::fromGenerator(const GeneratorPoint &g) {
    return AngleVector({g[0], g[1], g[2], -(g[0] + g[1] + g[2])});
}

GeneratorPoint AngleVector::toGenerator() const { return {nu_[0], nu_[1], nu_[2]}; }

std::array<double, 4> AngleVector::evaluate() const {
    return {std::sin(nu_[0]), std::sin(nu_[1]), std::sin(nu_[2]), std::sin(nu_[3])};
}

double Decomposition::weightSum() const {
    double total = 0;
    for (const auto &t : terms) {
        total += t.weight;
    }
    return total;
}

std::array<double, 4> Decomposition::reconstruct() const {
    std::array<double, 4> out{};
    for (const auto &t : terms) {
        auto v = evalGenerator(t.generator);
        for (int i = 0; i < 4; ++i) {
            out[i] += t.weight * v[i];
        }
    }
    return out;
}

CorrelationVector evalGenerator(const GeneratorPoint &g) {
    return CorrelationVector({std::sin(g[0]), std::sin(g[1]), std::sin(g[2]), -std::sin(g[0] + g[1] + g[2])});
}

bool isBranchOrdered(const CorrelationVector &x) {
    return x[0] >= x[1] && x[1] >= x[2] && x[2] >= 0 && x[3] <= x[2];
}

double fCanonical(const CorrelationVector &x) {
    if (!isBranchOrdered(x)) {
        throw NotSOrderedError("fCanonical: " + describe(x) + " is not branch-ordered");
    }
    return std::asin(x[0]) + std::asin(x[1]) + std::asin(x[2]) - std::asin(x[3]);
}

GeneratorPoint boundaryToGenerator(const CorrelationVector &x, double tolerance) {
    double f = fCanonical(x);
    if (std::abs(f - pi) > tolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "boundaryToGenerator: " << describe(x) << " has f = " << f << ", not pi";
        throw NotOnBoundaryError(msg.str());
    }
    return {std::asin(x[0]), std::asin(x[1]), std::asin(x[2])};
}

Decomposition faceDecompose(const CorrelationVector &x, double tolerance) {
    if (!isBranchOrdered(x)) {
        throw NotSOrderedError("faceDecompose: " + describe(x) + " is not branch-ordered");
    }
    if (std::abs(x[0] - 1.0) > tolerance) {
        throw PreconditionError("faceDecompose: " + describe(x) + " does not lie on the face x1 = 1");
    }
    if (!inQ(x, tolerance)) {
        throw NotInQError("faceDecompose: " + describe(x) + " lies outside Q");
    }
    double t2 = std::asin(x[1]);
    double t3 = std::asin(x[2]);
    double low = -std::cos(t2 + t3);
    double high = std::cos(t2 - t3);
    GeneratorPoint lower(pi / 2, t2, t3);
    GeneratorPoint upper(pi / 2, t2, pi - t3);

    Decomposition d;
    if (high - low < kDegenerateFace) {
        d.terms.push_back({1.0, lower});
        return d;
    }
    double lambda = std::clamp((x[3] - low) / (high - low), 0.0, 1.0);
    appendIfPositive(d, 1.0 - lambda, lower);
    appendIfPositive(d, lambda, upper);
    return d;
}

Decomposition decompose(const CorrelationVector &x, double tolerance) {
    auto report = membershipReport(x, tolerance);
    if (!report.in_Q) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "decompose: " << describe(x) << " lies outside Q (margin_Q = " << report.margin_Q << ")";
        throw NotInQError(msg.str());
    }
    auto form = canonicalize(x);
    Decomposition d = decomposeCanonical(form.canonical, tolerance);
    auto back = inverse(form.op);
    for (auto &term : d.terms) {
        term.generator = angleTransport(back, term.generator);
    }
    return d;
}

GeneratorPoint angleTransport(const SymmetryOp &op, const GeneratorPoint &g) {
    auto nu = AngleVector::fromGenerator(g).nu();
    std::array<double, 4> moved{};
    for (int i = 0; i < 4; ++i) {
        moved[i] = nu[op.source(i)] + (op.signs()[i] < 0 ? pi : 0.0);
    }
    return AngleVector(moved).toGenerator();
}

}  // namespace corrset
