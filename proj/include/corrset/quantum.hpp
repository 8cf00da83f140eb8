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

#include <cstdint>
#include <random>

#include "corrset/corrvec.hpp"
#include "corrset/geometry.hpp"
#include "corrset/linalg.hpp"

namespace corrset {

/// Angles of the family <A_a B_b> = cos(phi + a*alpha + b*beta).
struct PhaseParams {
    double phi = 0;
    double alpha = 0;
    double beta = 0;
};

/// phi = pi/2 - phi1, beta = phi2 + phi1 - pi, alpha = phi3 + phi1 - pi.
PhaseParams phaseParams(const GeneratorPoint &g);

/// A state shared by Alice and Bob plus two +-1-valued observables each.
/// Joint index of |a>|b> is a * dim_b + b.
struct Realization {
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;
    ComplexMatrix state;
    ComplexMatrix a0, a1;
    ComplexMatrix b0, b1;
};

inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kObservableTolerance = 1e-12;
inline constexpr double kMinEigenvalue = -1e-10;
inline constexpr double kImaginaryResidue = 1e-10;
/// Largest joint dimension checked by explicit eigensolve; larger states go
/// through a shifted Cholesky attempt.
inline constexpr std::size_t kEigensolveLimit = 16;

/// Throws InvariantViolation naming the first failed check: shapes, state
/// Hermitian, unit trace, positive semidefinite, each observable Hermitian
/// and squaring to the identity.
void checkRealization(const Realization &r);

/// Two-qubit realization of a generator: (|00> + e^{i phi}|11>)/sqrt 2 with
/// A_a = e^{i a alpha}|0><1| + h.c. and B_b = e^{i b beta}|0><1| + h.c.
Realization realizeGenerator(const GeneratorPoint &g);

/// Direct sum of the per-term two-qubit realizations with state
/// sum_k w_k rho_k placed on the diagonal blocks. Party dimension is
/// 2 * terms. Throws PreconditionError unless weights are nonnegative and
/// sum to 1 within 1e-12.
Realization realizeMixture(const Decomposition &d);

/// x_ab = tr(rho (A_a (x) B_b)). Runs checkRealization first.
CorrelationVector expectation(const Realization &r);

struct SampledStrategy {
    CorrelationVector correlations;
    Realization realization;
};

inline constexpr std::size_t kMinSampleDim = 2;
inline constexpr std::size_t kMaxSampleDim = 8;

/// Random pure state (normalized complex Gaussian vector) and random
/// dichotomic observables U diag(+-1) U^dagger, with U the Q factor of a
/// complex Gaussian matrix. Deterministic in `seed`. Throws DimensionError
/// unless 2 <= dim <= 8.
SampledStrategy sampleQuantum(std::size_t dim_a, std::size_t dim_b, std::uint64_t seed);

/// Seed of sample `index` in a run seeded with `base`. Each sample owns an
/// independent mt19937_64 stream keyed by SplitMix64(base, index), so
/// results do not depend on how samples are split across threads.
std::uint64_t streamSeed(std::uint64_t base, std::uint64_t index);

/// Haar-distributed unitary of size n.
ComplexMatrix randomUnitary(std::size_t n, std::mt19937_64 &rng);

/// U diag(e) U^dagger with each e_i an independent fair +-1.
ComplexMatrix randomDichotomic(std::size_t n, std::mt19937_64 &rng);

}  // namespace corrset
