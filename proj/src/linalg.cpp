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

#include "corrset/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "corrset/errors.hpp"

namespace corrset {

namespace {

void requireSameShape(const ComplexMatrix &a, const ComplexMatrix &b, const char *what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    }
}

void requireSquare(const ComplexMatrix &m, const char *what) {
    if (!m.isSquare()) {
        throw DimensionError(std::string(what) + ": matrix is not square");
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::projector(std::span<const Complex> v) {
    ComplexMatrix m(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            m(i, j) = v[i] * std::conj(v[j]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    requireSquare(*this, "trace");
    Complex t = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    requireSameShape(*this, other, "operator+");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += other.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scalar) {
    for (auto &z : data_) {
        z *= scalar;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("operator*: inner dimensions differ");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Complex aik = a(i, k);
            if (aik == Complex(0)) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix negated = b;
    negated *= -1.0;
    return a + negated;
}

ComplexMatrix operator*(Complex scalar, ComplexMatrix m) {
    m *= scalar;
    return m;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Complex aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix directSum(std::span<const ComplexMatrix> blocks) {
    std::size_t rows = 0;
    std::size_t cols = 0;
    for (const auto &b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    ComplexMatrix out(rows, cols);
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (const auto &b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(r0 + i, c0 + j) = b(i, j);
            }
        }
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

double maxAbsDiff(const ComplexMatrix &a, const ComplexMatrix &b) {
    requireSameShape(a, b, "maxAbsDiff");
    double m = 0;
    auto da = a.data();
    auto db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i) {
        m = std::max(m, std::abs(da[i] - db[i]));
    }
    return m;
}

bool isHermitian(const ComplexMatrix &m, double tolerance) {
    if (!m.isSquare()) {
        return false;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i; j < m.cols(); ++j) {
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tolerance) {
                return false;
            }
        }
    }
    return true;
}

QrResult qrDecompose(const ComplexMatrix &a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (m < n) {
        throw DimensionError("qrDecompose: needs rows >= cols");
    }
    ComplexMatrix q = a;
    ComplexMatrix r(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        // Two passes of MGS against the finished columns.
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                Complex dot = 0;
                for (std::size_t i = 0; i < m; ++i) {
                    dot += std::conj(q(i, k)) * q(i, j);
                }
                r(k, j) += dot;
                for (std::size_t i = 0; i < m; ++i) {
                    q(i, j) -= dot * q(i, k);
                }
            }
        }
        double norm = 0;
        for (std::size_t i = 0; i < m; ++i) {
            norm += std::norm(q(i, j));
        }
        norm = std::sqrt(norm);
        if (norm == 0) {
            throw DomainError("qrDecompose: matrix is rank deficient");
        }
        r(j, j) = norm;
        for (std::size_t i = 0; i < m; ++i) {
            q(i, j) /= norm;
        }
    }
    return {std::move(q), std::move(r)};
}

std::vector<double> hermitianEigenvalues(const ComplexMatrix &h) {
    requireSquare(h, "hermitianEigenvalues");
    const std::size_t n = h.rows();
    const std::size_t N = 2 * n;
    std::vector<double> s(N * N);
    auto at = [&](std::size_t i, std::size_t j) -> double & { return s[i * N + j]; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // Symmetrize so tiny anti-Hermitian residue cannot stall Jacobi.
            Complex z = 0.5 * (h(i, j) + std::conj(h(j, i)));
            at(i, j) = z.real();
            at(i + n, j + n) = z.real();
            at(i, j + n) = -z.imag();
            at(i + n, j) = z.imag();
        }
    }

    double scale = 0;
    for (double v : s) {
        scale = std::max(scale, std::abs(v));
    }
    const double threshold = 1e-15 * std::max(scale, 1e-300);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (std::size_t p = 0; p < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                off = std::max(off, std::abs(at(p, q)));
            }
        }
        if (off <= threshold) {
            break;
        }
        for (std::size_t p = 0; p < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                double apq = at(p, q);
                if (std::abs(apq) <= threshold) {
                    continue;
                }
                double theta = (at(q, q) - at(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double sn = t * c;
                for (std::size_t k = 0; k < N; ++k) {
                    double akp = at(k, p);
                    double akq = at(k, q);
                    at(k, p) = c * akp - sn * akq;
                    at(k, q) = sn * akp + c * akq;
                }
                for (std::size_t k = 0; k < N; ++k) {
                    double apk = at(p, k);
                    double aqk = at(q, k);
                    at(p, k) = c * apk - sn * aqk;
                    at(q, k) = sn * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> doubled(N);
    for (std::size_t i = 0; i < N; ++i) {
        doubled[i] = at(i, i);
    }
    std::sort(doubled.begin(), doubled.end());
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    }
    return out;
}

bool choleskySucceeds(const ComplexMatrix &m, double shift) {
    requireSquare(m, "choleskySucceeds");
    const std::size_t n = m.rows();
    ComplexMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = m(j, j).real() + shift;
        for (std::size_t k = 0; k < j; ++k) {
            d -= std::norm(l(j, k));
        }
        if (!(d > 0)) {
            return false;
        }
        double ljj = std::sqrt(d);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            Complex sum = m(i, j);
            for (std::size_t k = 0; k < j; ++k) {
                sum -= l(i, k) * std::conj(l(j, k));
            }
            l(i, j) = sum / ljj;
        }
    }
    return true;
}

}  // namespace corrset
