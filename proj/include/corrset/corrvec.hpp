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
#include <span>
#include <string>

namespace corrset {

inline constexpr double kDefaultTolerance = 1e-9;

/// The four correlators <A_a B_b> of a two-party, two-setting experiment,
/// ordered (A0B0, A0B1, A1B0, A1B1).
///
/// Every instance lies in the box [-1, 1]^4. Construction checks the raw
/// input against [-1-tol, 1+tol] and clamps.
class CorrelationVector {
   public:
    /// The origin.
    CorrelationVector() = default;

    /// Throws NonFiniteError or OutOfBoxError.
    explicit CorrelationVector(const std::array<double, 4> &raw, double tolerance = kDefaultTolerance);

    double operator[](std::size_t i) const { return x_[i]; }
    const std::array<double, 4> &values() const { return x_; }

    bool operator==(const CorrelationVector &other) const = default;

    std::string str() const;

   private:
    std::array<double, 4> x_{};
};

/// Checks a raw 4-tuple of correlators and returns the clamped vector.
CorrelationVector validate(std::span<const double> raw, double tolerance = kDefaultTolerance);

/// Coordinate permutation combined with an even number of sign flips.
///
/// `perm[j]` is the destination slot of source coordinate j and `signs[i]`
/// multiplies destination slot i, so that
///     apply(op, x)[perm[j]] = signs[perm[j]] * x[j].
/// The 24 permutations times the 8 even sign masks form a group of order 192
/// that preserves both the classical and the quantum correlation sets.
class SymmetryOp {
   public:
    SymmetryOp() = default;

    /// Throws PreconditionError if `perm` is not a permutation of {0,1,2,3},
    /// a sign is not +-1, or the sign product is -1.
    SymmetryOp(const std::array<int, 4> &perm, const std::array<int, 4> &signs);

    static SymmetryOp identity() { return {}; }

    const std::array<int, 4> &perm() const { return perm_; }
    const std::array<int, 4> &signs() const { return signs_; }

    /// Source coordinate that lands in destination slot i.
    int source(int i) const;

    bool operator==(const SymmetryOp &other) const = default;

    std::string str() const;

   private:
    std::array<int, 4> perm_{0, 1, 2, 3};
    std::array<int, 4> signs_{1, 1, 1, 1};
};

std::array<double, 4> apply(const SymmetryOp &op, const std::array<double, 4> &x);
CorrelationVector apply(const SymmetryOp &op, const CorrelationVector &x);

/// compose(g, h) acts as g after h.
SymmetryOp compose(const SymmetryOp &g, const SymmetryOp &h);
SymmetryOp inverse(const SymmetryOp &g);

/// All 192 group elements; element 0 is the identity.
const std::array<SymmetryOp, 192> &allSymmetryOps();

/// x1 >= x2 >= x3 >= |x4|.
bool isSOrdered(const CorrelationVector &x);

struct CanonicalForm {
    CorrelationVector canonical;
    /// apply(op, original) == canonical.
    SymmetryOp op;
};

/// Maps x to its s-ordered representative.
///
/// Components are sorted by descending magnitude (stable on the original
/// index). The first three are made nonnegative and slot 4 takes whatever
/// sign keeps the number of flips even. When x has a zero component it
/// sorts into slot 4, so the residual flip lands on a zero and x4 >= 0.
CanonicalForm canonicalize(const CorrelationVector &x);

}  // namespace corrset
