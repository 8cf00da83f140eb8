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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace corrset {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Sized for operators on a handful of
/// qubits, so every routine here is the textbook O(n^3) one.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);

    static ComplexMatrix identity(std::size_t n);
    /// Outer product |v><v|.
    static ComplexMatrix projector(std::span<const Complex> v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool isSquare() const { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Complex> data() const { return data_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scalar);

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);

/// a (x) b with a's index major.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Block-diagonal matrix with the given blocks.
ComplexMatrix directSum(std::span<const ComplexMatrix> blocks);

/// Largest entrywise modulus of a - b. Shapes must match.
double maxAbsDiff(const ComplexMatrix &a, const ComplexMatrix &b);

bool isHermitian(const ComplexMatrix &m, double tolerance);

struct QrResult {
    ComplexMatrix q;
    /// Upper triangular with a real, nonnegative diagonal.
    ComplexMatrix r;
};

/// Thin QR of a full-column-rank matrix (rows >= cols) by modified
/// Gram-Schmidt with one reorthogonalization pass.
QrResult qrDecompose(const ComplexMatrix &a);

/// Eigenvalues of a Hermitian matrix in ascending order. Runs cyclic Jacobi
/// on the real symmetric embedding [[Re, -Im], [Im, Re]], whose spectrum is
/// that of the input with every eigenvalue doubled.
std::vector<double> hermitianEigenvalues(const ComplexMatrix &m);

/// True if m + shift * I admits a Cholesky factorization, i.e. m has no
/// eigenvalue below -shift (up to rounding).
bool choleskySucceeds(const ComplexMatrix &m, double shift);

}  // namespace corrset
