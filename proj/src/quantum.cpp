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

#include "corrset/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "corrset/errors.hpp"

namespace corrset {

namespace {

using std::numbers::pi;

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(3);
    out << v;
    return out.str();
}

void checkObservable(const ComplexMatrix &m, std::size_t dim, const char *name) {
    std::string n(name);
    if (m.rows() != dim || m.cols() != dim) {
        throw InvariantViolation(n + " shape", "expected " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    if (!isHermitian(m, kObservableTolerance)) {
        throw InvariantViolation(n + " Hermitian", "|" + n + " - " + n + "^dagger| exceeds tolerance");
    }
    double err = maxAbsDiff(m * m, ComplexMatrix::identity(dim));
    if (err > kObservableTolerance) {
        throw InvariantViolation(n + "^2 = I", "max deviation " + fmt(err));
    }
}

// sum_{ijkl} rho((k,l),(i,j)) A(i,k) B(j,l)
Complex traceAgainst(const ComplexMatrix &rho, const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t da = a.rows();
    const std::size_t db = b.rows();
    Complex total = 0;
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t k = 0; k < da; ++k) {
            Complex aik = a(i, k);
            if (aik == Complex(0)) {
                continue;
            }
            for (std::size_t j = 0; j < db; ++j) {
                for (std::size_t l = 0; l < db; ++l) {
                    total += rho(k * db + l, i * db + j) * aik * b(j, l);
                }
            }
        }
    }
    return total;
}

// <psi| A (x) B |psi> for a pure state stored with Alice's index major.
Complex pureExpectation(std::span<const Complex> psi, const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t da = a.rows();
    const std::size_t db = b.rows();
    Complex total = 0;
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < db; ++j) {
            Complex acc = 0;
            for (std::size_t k = 0; k < da; ++k) {
                Complex aik = a(i, k);
                for (std::size_t l = 0; l < db; ++l) {
                    acc += aik * b(j, l) * psi[k * db + l];
                }
            }
            total += std::conj(psi[i * db + j]) * acc;
        }
    }
    return total;
}

ComplexMatrix flipObservable(double angle) {
    ComplexMatrix m(2, 2);
    m(0, 1) = std::polar(1.0, angle);
    m(1, 0) = std::polar(1.0, -angle);
    return m;
}

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

ComplexMatrix gaussianMatrix(std::size_t rows, std::size_t cols, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            double re = normal(rng);
            double im = normal(rng);
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

}  // namespace

PhaseParams phaseParams(const GeneratorPoint &g) {
    return {pi / 2 - g[0], g[2] + g[0] - pi, g[1] + g[0] - pi};
}

void checkRealization(const Realization &r) {
    const std::size_t joint = r.dim_a * r.dim_b;
    if (r.dim_a == 0 || r.dim_b == 0) {
        throw InvariantViolation("dims", "party dimensions must be positive");
    }
    if (r.state.rows() != joint || r.state.cols() != joint) {
        throw InvariantViolation("state shape", "expected " + std::to_string(joint) + "x" + std::to_string(joint));
    }
    for (const auto &z : r.state.data()) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvariantViolation("state finite", "non-finite entry");
        }
    }
    if (!isHermitian(r.state, kTraceTolerance)) {
        throw InvariantViolation("state Hermitian", "|rho - rho^dagger| exceeds tolerance");
    }
    Complex tr = r.state.trace();
    if (std::abs(tr - Complex(1.0)) > kTraceTolerance) {
        throw InvariantViolation("trace(state) = 1", "trace is " + fmt(tr.real()) + " + " + fmt(tr.imag()) + "i");
    }
    if (joint <= kEigensolveLimit) {
        double smallest = hermitianEigenvalues(r.state).front();
        if (smallest < kMinEigenvalue) {
            throw InvariantViolation("state positive semidefinite", "smallest eigenvalue " + fmt(smallest));
        }
    } else if (!choleskySucceeds(r.state, -kMinEigenvalue)) {
        throw InvariantViolation("state positive semidefinite", "shifted Cholesky factorization failed");
    }
    checkObservable(r.a0, r.dim_a, "A0");
    checkObservable(r.a1, r.dim_a, "A1");
    checkObservable(r.b0, r.dim_b, "B0");
    checkObservable(r.b1, r.dim_b, "B1");
}

Realization realizeGenerator(const GeneratorPoint &g) {
    PhaseParams p = phaseParams(g);
    std::array<Complex, 4> psi{1.0 / std::sqrt(2.0), 0.0, 0.0, std::polar(1.0 / std::sqrt(2.0), p.phi)};
    Realization r;
    r.dim_a = 2;
    r.dim_b = 2;
    r.state = ComplexMatrix::projector(psi);
    r.a0 = flipObservable(0);
    r.a1 = flipObservable(p.alpha);
    r.b0 = flipObservable(0);
    r.b1 = flipObservable(p.beta);
    return r;
}

Realization realizeMixture(const Decomposition &d) {
    const std::size_t k = d.terms.size();
    if (k == 0) {
        throw PreconditionError("realizeMixture: empty decomposition");
    }
    for (const auto &t : d.terms) {
        if (!(t.weight >= 0)) {
            throw PreconditionError("realizeMixture: negative weight");
        }
    }
    if (std::abs(d.weightSum() - 1.0) > 1e-12) {
        throw PreconditionError("realizeMixture: weights do not sum to 1");
    }

    const std::size_t dim = 2 * k;
    std::vector<ComplexMatrix> a0, a1, b0, b1;
    Realization r;
    r.dim_a = dim;
    r.dim_b = dim;
    r.state = ComplexMatrix(dim * dim, dim * dim);
    for (std::size_t t = 0; t < k; ++t) {
        Realization block = realizeGenerator(d.terms[t].generator);
        a0.push_back(block.a0);
        a1.push_back(block.a1);
        b0.push_back(block.b0);
        b1.push_back(block.b1);
        // Block t lives on Alice's levels {2t, 2t+1} times Bob's {2t, 2t+1}.
        for (std::size_t row = 0; row < 4; ++row) {
            for (std::size_t col = 0; col < 4; ++col) {
                std::size_t jr = (2 * t + row / 2) * dim + (2 * t + row % 2);
                std::size_t jc = (2 * t + col / 2) * dim + (2 * t + col % 2);
                r.state(jr, jc) = d.terms[t].weight * block.state(row, col);
            }
        }
    }
    r.a0 = directSum(a0);
    r.a1 = directSum(a1);
    r.b0 = directSum(b0);
    r.b1 = directSum(b1);
    return r;
}

CorrelationVector expectation(const Realization &r) {
    checkRealization(r);
    const ComplexMatrix *alice[2] = {&r.a0, &r.a1};
    const ComplexMatrix *bob[2] = {&r.b0, &r.b1};
    std::array<double, 4> x{};
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            Complex v = traceAgainst(r.state, *alice[a], *bob[b]);
            if (std::abs(v.imag()) > kImaginaryResidue) {
                throw InvariantViolation("real expectation", "imaginary part " + fmt(v.imag()));
            }
            x[2 * a + b] = std::clamp(v.real(), -1.0, 1.0);
        }
    }
    return CorrelationVector(x);
}

std::uint64_t streamSeed(std::uint64_t base, std::uint64_t index) { return splitmix64(splitmix64(base) ^ index); }

ComplexMatrix randomUnitary(std::size_t n, std::mt19937_64 &rng) {
    // Gram-Schmidt leaves R with a positive diagonal, which is the phase
    // convention that makes Q Haar distributed.
    return qrDecompose(gaussianMatrix(n, n, rng)).q;
}

ComplexMatrix randomDichotomic(std::size_t n, std::mt19937_64 &rng) {
    ComplexMatrix u = randomUnitary(n, rng);
    std::bernoulli_distribution coin(0.5);
    ComplexMatrix d(n, n);
    int positives = 0;
    for (std::size_t i = 0; i < n; ++i) {
        bool up = coin(rng);
        positives += up;
        d(i, i) = up ? 1.0 : -1.0;
    }
    // A uniform spectrum is +-I exactly; conjugating it would only add
    // rounding that the arcsine test amplifies near +-1.
    if (positives == 0 || positives == static_cast<int>(n)) {
        return d;
    }
    ComplexMatrix m = u * d * u.adjoint();
    // Exact Hermitian symmetry; the product is Hermitian only to rounding.
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
        }
    }
    return out;
}

SampledStrategy sampleQuantum(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed) {
    for (std::size_t d : {dim_a, dim_b}) {
        if (d < kMinSampleDim || d > kMaxSampleDim) {
            throw DimensionError("sampleQuantum: party dimension " + std::to_string(d) + " outside [2, 8]");
        }
    }
    std::mt19937_64 rng(seed);
    ComplexMatrix v = gaussianMatrix(dim_a * dim_b, 1, rng);
    double norm = 0;
    for (const auto &z : v.data()) {
        norm += std::norm(z);
    }
    norm = std::sqrt(norm);
    std::vector<Complex> psi(v.data().begin(), v.data().end());
    for (auto &z : psi) {
        z /= norm;
    }

    Realization r;
    r.dim_a = dim_a;
    r.dim_b = dim_b;
    r.a0 = randomDichotomic(dim_a, rng);
    r.a1 = randomDichotomic(dim_a, rng);
    r.b0 = randomDichotomic(dim_b, rng);
    r.b1 = randomDichotomic(dim_b, rng);
    r.state = ComplexMatrix::projector(psi);

    const ComplexMatrix *alice[2] = {&r.a0, &r.a1};
    const ComplexMatrix *bob[2] = {&r.b0, &r.b1};
    std::array<double, 4> x{};
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            x[2 * a + b] = std::clamp(pureExpectation(psi, *alice[a], *bob[b]).real(), -1.0, 1.0);
        }
    }
    return {CorrelationVector(x), std::move(r)};
}

}  // namespace corrset
