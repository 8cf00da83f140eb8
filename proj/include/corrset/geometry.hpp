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
#include <vector>

#include "corrset/corrvec.hpp"

namespace corrset {

/// Reduces an angle to (-pi, pi].
double reduceAngle(double radians);

/// An extremal point of Q, parametrized by three angles. It evaluates to
///     (sin phi1, sin phi2, sin phi3, -sin(phi1 + phi2 + phi3)).
/// Angles are stored reduced to (-pi, pi].
class GeneratorPoint {
   public:
    GeneratorPoint() = default;
    GeneratorPoint(double phi1, double phi2, double phi3);

    const std::array<double, 3> &phi() const { return phi_; }
    double operator[](std::size_t i) const { return phi_[i]; }

   private:
    std::array<double, 3> phi_{};
};

/// Symmetric four-angle form of a generator: (sin nu1, ..., sin nu4) with
/// nu1 + nu2 + nu3 + nu4 = 0 (mod 2 pi).
class AngleVector {
   public:
    /// Throws PreconditionError if the angle sum is not a multiple of 2 pi
    /// to within 1e-9.
    explicit AngleVector(const std::array<double, 4> &nu);

    static AngleVector fromGenerator(const GeneratorPoint &g);
    GeneratorPoint toGenerator() const;
    std::array<double, 4> evaluate() const;

    const std::array<double, 4> &nu() const { return nu_; }

   private:
    std::array<double, 4> nu_{};
};

struct DecompositionTerm {
    double weight = 0;
    GeneratorPoint generator;
};

/// Convex combination of generator points.
struct Decomposition {
    std::vector<DecompositionTerm> terms;

    double weightSum() const;
    /// Sum of weight * evalGenerator(generator), unclamped.
    std::array<double, 4> reconstruct() const;
};

CorrelationVector evalGenerator(const GeneratorPoint &g);

/// x1 >= x2 >= x3 >= 0 and x4 <= x3. Weaker than s-order; the canonical
/// arcsine functional below is still the largest of the eight on this set.
bool isBranchOrdered(const CorrelationVector &x);

/// asin x1 + asin x2 + asin x3 - asin x4. Throws NotSOrderedError unless
/// isBranchOrdered(x).
double fCanonical(const CorrelationVector &x);

/// Reads the generator off a branch-ordered point that saturates the canonical
/// arcsine inequality: phi_i = asin x_i for i = 1..3. Throws
/// NotOnBoundaryError when |fCanonical(x) - pi| > tolerance.
GeneratorPoint boundaryToGenerator(const CorrelationVector &x, double tolerance = kDefaultTolerance);

/// Splits a branch-ordered point of Q with x1 = 1 into the two face generators
/// G(pi/2, t2, t3) and G(pi/2, t2, pi - t3), t_i = asin x_i, which bound x4
/// from below by -cos(t2 + t3) and from above by cos(t2 - t3). Collapses to
/// the lower generator when the bounds are within 1e-9 of each other.
/// Zero-weight terms are dropped.
Decomposition faceDecompose(const CorrelationVector &x, double tolerance = kDefaultTolerance);

/// Writes any x in Q as a convex combination of at most three generators.
///
/// Works on the s-ordered representative c. The ray t*c leaves Q either
/// through the face x1 = 1, which is split with faceDecompose, or through
/// the arcsine surface, where the hit point is itself a generator; the rest
/// of the weight goes to the origin G(0, 0, 0). Generators are carried back
/// to the original orientation with angleTransport.
///
/// Throws NotInQError, or BisectionError if the surface crossing cannot be
/// bracketed.
Decomposition decompose(const CorrelationVector &x, double tolerance = kDefaultTolerance);

/// Acts with a symmetry on the angle level: permutes the four-angle form and
/// adds pi at each flipped slot. evalGenerator(angleTransport(op, g)) equals
/// apply(op, evalGenerator(g)).
GeneratorPoint angleTransport(const SymmetryOp &op, const GeneratorPoint &g);

}  // namespace corrset
