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

#include "corrset/corrvec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include "corrset/errors.hpp"

namespace corrset {

OutOfBoxError::OutOfBoxError(int component, double value)
    : Error("correlator x" + std::to_string(component) + " = " + std::to_string(value) +
            " lies outside [-1, 1]"),
      component_(component),
      value_(value) {}

NonFiniteError::NonFiniteError(int component)
    : Error("correlator x" + std::to_string(component) + " is not finite"), component_(component) {}

InvariantViolation::InvariantViolation(std::string check, const std::string &detail)
    : Error("invariant violated: " + check + " (" + detail + ")"), check_(std::move(check)) {}

CorrelationVector::CorrelationVector(const std::array<double, 4> &raw, double tolerance) {
    for (int i = 0; i < 4; ++i) {
        double v = raw[i];
        if (!std::isfinite(v)) {
            throw NonFiniteError(i + 1);
        }
        if (std::abs(v) > 1.0 + tolerance) {
            throw OutOfBoxError(i + 1, v);
        }
        x_[i] = std::clamp(v, -1.0, 1.0);
    }
}

std::string CorrelationVector::str() const {
    std::ostringstream out;
    out.precision(17);
    out << "(" << x_[0] << ", " << x_[1] << ", " << x_[2] << ", " << x_[3] << ")";
    return out.str();
}

CorrelationVector validate(std::span<const double> raw, double tolerance) {
    if (raw.size() != 4) {
        throw PreconditionError("a correlation vector has exactly 4 components, got " + std::to_string(raw.size()));
    }
    return CorrelationVector({raw[0], raw[1], raw[2], raw[3]}, tolerance);
}

SymmetryOp::SymmetryOp(const std::array<int, 4> &perm, const std::array<int, 4> &signs)
    : perm_(perm), signs_(signs) {
    std::array<bool, 4> seen{};
    for (int p : perm) {
        if (p < 0 || p > 3 || seen[p]) {
            throw PreconditionError("symmetry op: perm is not a permutation of {0,1,2,3}");
        }
        seen[p] = true;
    }
    int product = 1;
    for (int s : signs) {
        if (s != 1 && s != -1) {
            throw PreconditionError("symmetry op: signs must be +1 or -1");
        }
        product *= s;
    }
    if (product != 1) {
        throw PreconditionError("symmetry op: an odd number of sign flips is not a symmetry");
    }
}

int SymmetryOp::source(int i) const {
    for (int j = 0; j < 4; ++j) {
        if (perm_[j] == i) {
            return j;
        }
    }
    return -1;
}

std::string SymmetryOp::str() const {
    std::ostringstream out;
    out << "perm[" << perm_[0] << perm_[1] << perm_[2] << perm_[3] << "] signs[";
    for (int s : signs_) {
        out << (s > 0 ? '+' : '-');
    }
    out << "]";
    return out.str();
}

std::array<double, 4> apply(const SymmetryOp &op, const std::array<double, 4> &x) {
    std::array<double, 4> out{};
    for (int j = 0; j < 4; ++j) {
        int dest = op.perm()[j];
        // + 0.0 folds a flipped zero back to +0.
        out[dest] = op.signs()[dest] * x[j] + 0.0;
    }
    return out;
}

CorrelationVector apply(const SymmetryOp &op, const CorrelationVector &x) {
    return CorrelationVector(apply(op, x.values()));
}

SymmetryOp compose(const SymmetryOp &g, const SymmetryOp &h) {
    std::array<int, 4> perm{};
    std::array<int, 4> signs{};
    for (int j = 0; j < 4; ++j) {
        perm[j] = g.perm()[h.perm()[j]];
    }
    for (int k = 0; k < 4; ++k) {
        signs[k] = g.signs()[k] * h.signs()[g.source(k)];
    }
    return {perm, signs};
}

SymmetryOp inverse(const SymmetryOp &g) {
    std::array<int, 4> perm{};
    std::array<int, 4> signs{};
    for (int j = 0; j < 4; ++j) {
        perm[g.perm()[j]] = j;
        signs[j] = g.signs()[g.perm()[j]];
    }
    return {perm, signs};
}

const std::array<SymmetryOp, 192> &allSymmetryOps() {
    static const std::array<SymmetryOp, 192> ops = [] {
        std::array<SymmetryOp, 192> out;
        std::array<int, 4> perm{0, 1, 2, 3};
        std::size_t n = 0;
        do {
            for (int mask = 0; mask < 16; ++mask) {
                if (std::popcount(static_cast<unsigned>(mask)) % 2 != 0) {
                    continue;
                }
                std::array<int, 4> signs{};
                for (int i = 0; i < 4; ++i) {
                    signs[i] = (mask >> i) & 1 ? -1 : 1;
                }
                out[n++] = SymmetryOp(perm, signs);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }();
    return ops;
}

bool isSOrdered(const CorrelationVector &x) {
    return x[0] >= x[1] && x[1] >= x[2] && x[2] >= std::abs(x[3]);
}

CanonicalForm canonicalize(const CorrelationVector &x) {
    std::array<int, 4> order{0, 1, 2, 3};
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return std::abs(x[a]) > std::abs(x[b]); });

    std::array<int, 4> perm{};
    std::array<int, 4> signs{};
    int product = 1;
    for (int k = 0; k < 3; ++k) {
        perm[order[k]] = k;
        signs[k] = x[order[k]] < 0 ? -1 : 1;
        product *= signs[k];
    }
    perm[order[3]] = 3;
    signs[3] = product;

    SymmetryOp op(perm, signs);
    return {apply(op, x), op};
}

}  // namespace corrset
