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

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "corrset/errors.hpp"
#include "corrset/membership.hpp"
#include "corrset/quantum.hpp"

namespace corrset {

namespace {

using std::numbers::pi;

struct Partial {
    std::size_t points = 0;
    std::size_t violations = 0;
    double min_value = std::numeric_limits<double>::infinity();
    std::array<double, 3> argmin{};
    double max_value = -std::numeric_limits<double>::infinity();
    std::array<double, 3> argmax{};

    void record(double v, const std::array<double, 3> &at, bool violation) {
        ++points;
        if (violation) {
            ++violations;
        }
        if (v < min_value) {
            min_value = v;
            argmin = at;
        }
        if (v > max_value) {
            max_value = v;
            argmax = at;
        }
    }

    // Chunks are merged in grid order with strict comparisons, so the result
    // matches a single-threaded scan exactly.
    void merge(const Partial &o) {
        points += o.points;
        violations += o.violations;
        if (o.min_value < min_value) {
            min_value = o.min_value;
            argmin = o.argmin;
        }
        if (o.max_value > max_value) {
            max_value = o.max_value;
            argmax = o.argmax;
        }
    }
};

std::size_t gridSize(double lo, double hi, double step) {
    return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

// Runs body(outer_index, partial) over [0, n) split into contiguous chunks.
Partial runChunked(std::size_t n, unsigned threads, const std::function<void(std::size_t, Partial &)> &body) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    std::vector<Partial> partials(threads);
    auto work = [&](unsigned t) {
        std::size_t begin = n * t / threads;
        std::size_t end = n * (t + 1) / threads;
        for (std::size_t i = begin; i < end; ++i) {
            body(i, partials[t]);
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(work, t);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    Partial total;
    for (const auto &p : partials) {
        total.merge(p);
    }
    return total;
}

ScanResult toResult(std::string name, double step, const Partial &p) {
    ScanResult r;
    r.name = std::move(name);
    r.grid_step = step;
    r.points = p.points;
    r.min_value = p.min_value;
    r.argmin = p.argmin;
    r.max_value = p.max_value;
    r.argmax = p.argmax;
    r.violations = p.violations;
    return r;
}

// The eight distinct points among the 16 deterministic vertices: every +-1
// vector with an even number of -1 entries.
std::array<std::array<double, 4>, 8> distinctVertices() {
    std::array<std::array<double, 4>, 8> out{};
    std::size_t n = 0;
    for (int mask = 0; mask < 16; ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) % 2 != 0) {
            continue;
        }
        for (int i = 0; i < 4; ++i) {
            out[n][i] = (mask >> i) & 1 ? -1.0 : 1.0;
        }
        ++n;
    }
    return out;
}

// Solves the 5x5 system in place by Gaussian elimination with partial
// pivoting. Returns false when the basis is singular.
bool solve5(std::array<std::array<double, 6>, 5> &m, std::array<double, 5> &w) {
    for (int col = 0; col < 5; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 5; ++r) {
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) {
                pivot = r;
            }
        }
        if (std::abs(m[pivot][col]) < 1e-12) {
            return false;
        }
        std::swap(m[col], m[pivot]);
        for (int r = col + 1; r < 5; ++r) {
            double f = m[r][col] / m[col][col];
            for (int c = col; c < 6; ++c) {
                m[r][c] -= f * m[col][c];
            }
        }
    }
    for (int r = 4; r >= 0; --r) {
        double s = m[r][5];
        for (int c = r + 1; c < 5; ++c) {
            s -= m[r][c] * w[c];
        }
        w[r] = s / m[r][r];
    }
    return true;
}

}  // namespace

double hessianExpression(double g1, double g2, double g3) {
    double first = 0;
    double curvature = 0;
    for (double g : {g1, g2, g3}) {
        double c = std::cos(g);
        first += std::sin(g) / std::pow(c, 5);
        curvature += 1.0 / (c * c);
    }
    return first - std::tan(g1 + g2 + g3) * curvature * curvature;
}

ScanResult hessianPositivityScan(double step, double margin, unsigned threads) {
    if (!(step > 0)) {
        throw DomainError("hessianPositivityScan: step must be positive");
    }
    if (!(margin > 0 && margin < pi / 4)) {
        throw DomainError("hessianPositivityScan: margin must lie in (0, pi/4)");
    }
    const double lo = -pi / 2 + margin;
    const double hi = pi / 2 - margin;
    const std::size_t n = gridSize(lo, hi, step);
    const double sum_lo = pi / 2 + margin;
    const double sum_hi = 3 * pi / 2 - margin;

    Partial p = runChunked(n, threads, [&](std::size_t i, Partial &acc) {
        double g1 = lo + i * step;
        for (std::size_t j = 0; j < n; ++j) {
            double g2 = lo + j * step;
            for (std::size_t k = 0; k < n; ++k) {
                double g3 = lo + k * step;
                double s = g1 + g2 + g3;
                if (s < sum_lo || s > sum_hi) {
                    continue;
                }
                double e = hessianExpression(g1, g2, g3);
                acc.record(e, {g1, g2, g3}, !(e >= kHessianThreshold));
            }
        }
    });
    ScanResult r = toResult("hessian_positivity", step, p);
    r.passed = r.points > 0 && r.violations == 0 && r.min_value >= kHessianThreshold;
    return r;
}

ScanResult lemma6MaxScan(double step, unsigned threads) {
    if (!(step > 0)) {
        throw DomainError("lemma6MaxScan: step must be positive");
    }
    const std::size_t n = gridSize(-pi, pi, step);
    std::vector<double> nu(n);
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) {
        nu[i] = -pi + i * step;
        f[i] = std::asin(std::sin(nu[i]));
    }
    const double ceiling = pi + kLemma6Slack;

    Partial p = runChunked(n, threads, [&](std::size_t i, Partial &acc) {
        for (std::size_t j = 0; j < n; ++j) {
            double partial = f[i] + f[j];
            for (std::size_t k = 0; k < n; ++k) {
                double v = partial + f[k] + std::asin(std::sin(nu[i] + nu[j] + nu[k]));
                acc.record(v, {nu[i], nu[j], nu[k]}, v > ceiling);
            }
        }
    });
    ScanResult r = toResult("lemma6_max", step, p);
    r.passed = r.violations == 0 && r.max_value <= ceiling && r.max_value >= pi - 2 * step;
    return r;
}

int ghzSatisfyingAssignments(bool relaxed) {
    int count = 0;
    for (int bits = 0; bits < 64; ++bits) {
        auto v = [&](int k) { return (bits >> k) & 1 ? -1 : 1; };
        int a0 = v(0), a1 = v(1), b0 = v(2), b1 = v(3), c0 = v(4), c1 = v(5);
        bool ok = a0 * b0 * c1 == 1 && a0 * b1 * c0 == 1 && a1 * b0 * c0 == 1;
        if (!relaxed) {
            ok = ok && a1 * b1 * c1 == -1;
        }
        if (ok) {
            ++count;
        }
    }
    return count;
}

bool ghzContradiction(bool relaxed) { return ghzSatisfyingAssignments(relaxed) == 0; }

std::array<CorrelationVector, 16> deterministicVertices() {
    std::array<CorrelationVector, 16> out;
    for (int bits = 0; bits < 16; ++bits) {
        auto v = [&](int k) { return (bits >> k) & 1 ? -1.0 : 1.0; };
        double a0 = v(0), a1 = v(1), b0 = v(2), b1 = v(3);
        out[bits] = CorrelationVector({a0 * b0, a0 * b1, a1 * b0, a1 * b1});
    }
    return out;
}

bool lvtOracle(const CorrelationVector &x, double tolerance) {
    static const auto vertices = distinctVertices();
    const double scale = 1.0 / (1.0 + tolerance / 2.0);
    std::array<double, 4> target{};
    for (int i = 0; i < 4; ++i) {
        target[i] = x[i] * scale;
    }

    // A basic feasible solution has at most 5 nonzero weights; walk all
    // C(8, 5) = 56 bases.
    for (int mask = 0; mask < 256; ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) != 5) {
            continue;
        }
        std::array<int, 5> basis{};
        int n = 0;
        for (int v = 0; v < 8; ++v) {
            if (mask >> v & 1) {
                basis[n++] = v;
            }
        }
        std::array<std::array<double, 6>, 5> m{};
        for (int c = 0; c < 5; ++c) {
            for (int r = 0; r < 4; ++r) {
                m[r][c] = vertices[basis[c]][r];
            }
            m[4][c] = 1.0;
        }
        for (int r = 0; r < 4; ++r) {
            m[r][5] = target[r];
        }
        m[4][5] = 1.0;
        std::array<double, 5> w{};
        if (!solve5(m, w)) {
            continue;
        }
        if (std::all_of(w.begin(), w.end(), [](double wi) { return wi >= -1e-12; })) {
            return true;
        }
    }
    return false;
}

bool lvtOracleFacets(const CorrelationVector &x, double tolerance) {
    // One representative per antipodal vertex pair; they are orthogonal
    // with squared length 4.
    static constexpr std::array<std::array<double, 4>, 4> axes{{
        {1, 1, 1, 1},
        {1, 1, -1, -1},
        {1, -1, 1, -1},
        {1, -1, -1, 1},
    }};
    double total = 0;
    for (const auto &v : axes) {
        total += std::abs(v[0] * x[0] + v[1] * x[1] + v[2] * x[2] + v[3] * x[3]);
    }
    return total <= 4.0 + 2.0 * tolerance;
}

namespace {

// Runs body(x, acc) on `count` uniform box points in seeded blocks.
Partial sampleBox(std::size_t count, std::uint64_t seed, unsigned threads,
                  const std::function<void(const CorrelationVector &, Partial &)> &body) {
    const std::size_t blocks = (count + kSampleBlock - 1) / kSampleBlock;
    return runChunked(blocks, threads, [&](std::size_t b, Partial &acc) {
        std::mt19937_64 rng(streamSeed(seed, b));
        std::uniform_real_distribution<double> coord(-1.0, 1.0);
        const std::size_t end = std::min(count, (b + 1) * kSampleBlock);
        for (std::size_t i = b * kSampleBlock; i < end; ++i) {
            std::array<double, 4> raw{};
            for (auto &v : raw) {
                v = coord(rng);
            }
            body(CorrelationVector(raw), acc);
        }
    });
}

}  // namespace

ScanResult muEquivalenceSample(std::size_t count, std::uint64_t seed, unsigned threads, double band) {
    Partial p = sampleBox(count, seed, threads, [&](const CorrelationVector &x, Partial &acc) {
        auto r = membershipReport(x);
        if (std::abs(r.margin_Q) < band) {
            return;
        }
        acc.record(r.margin_Q, {x[0], x[1], x[2]}, r.in_Q != inC(mu(x)));
    });
    ScanResult r = toResult("mu_equivalence", 0, p);
    r.passed = r.points > 0 && r.violations == 0;
    return r;
}

ScanResult lvtAgreementSample(std::size_t count, std::uint64_t seed, unsigned threads, double tolerance) {
    Partial p = sampleBox(count, seed, threads, [&](const CorrelationVector &x, Partial &acc) {
        bool c = inC(x, tolerance);
        bool disagree = lvtOracle(x, tolerance) != c || lvtOracleFacets(x, tolerance) != c;
        acc.record(2.0 - chshMax(x), {x[0], x[1], x[2]}, disagree);
    });
    ScanResult r = toResult("lvt_agreement", 0, p);
    r.passed = r.points > 0 && r.violations == 0;
    return r;
}

}  // namespace corrset
