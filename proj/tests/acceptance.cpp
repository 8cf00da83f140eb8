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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <numbers>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "corrset/checks.hpp"
#include "corrset/corrvec.hpp"
#include "corrset/errors.hpp"
#include "corrset/geometry.hpp"
#include "corrset/membership.hpp"
#include "corrset/quantum.hpp"
#include "oracles.hpp"

using namespace corrset;
using std::numbers::pi;
using std::numbers::sqrt2;

namespace {

constexpr std::uint64_t kSeed = 20260401;

unsigned workerCount() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

// Calls body(i) for i in [0, n) across workers; body must be thread-safe.
void parallelFor(std::size_t n, const std::function<void(std::size_t)> &body) {
    unsigned threads = workerCount();
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = n * t / threads; i < n * (t + 1) / threads; ++i) {
                body(i);
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
}

// Lock-free running maximum.
void raiseTo(std::atomic<double> &slot, double v) {
    double cur = slot.load();
    while (v > cur && !slot.compare_exchange_weak(cur, v)) {
    }
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Verdict {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int id, const char *name, const std::function<Verdict()> &criterion) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = criterion();
    } catch (const std::exception &e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d (%s): %s [%.2fs]\n", v.pass ? "PASS" : "FAIL", id, name, v.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !v.pass;
}

Verdict tsirelson() {
    const double s = 1 / sqrt2;
    CorrelationVector x({s, s, s, -s});
    auto r = membershipReport(x);
    double chsh = chshMax(x);
    bool pass = r.in_Q && std::abs(r.margin_Q) <= 1e-9 && std::abs(chsh - 2 * sqrt2) <= 1e-12 && !r.in_C;
    return {pass, "in_Q=" + std::to_string(r.in_Q) + " margin_Q=" + num(r.margin_Q) + " chsh-2sqrt2=" +
                      num(chsh - 2 * sqrt2) + " in_C=" + std::to_string(r.in_C)};
}

Verdict prBox() {
    CorrelationVector x({1, 1, 1, -1});
    double a = arcsineMax(x);
    bool pass = !inQ(x) && std::abs(a - 2 * pi) <= 1e-12;
    return {pass, "in_Q=" + std::to_string(inQ(x)) + " arcsine_max-2pi=" + num(a - 2 * pi)};
}

Verdict muEquivalence() {
    auto s = muEquivalenceSample(1000000, kSeed, workerCount(), 1e-7);
    return {s.passed && s.violations == 0,
            std::to_string(s.points) + " points outside the 1e-7 band, " + std::to_string(s.violations) +
                " disagreements"};
}

Verdict onlyIf() {
    const double ceiling = 2 * sqrt2 + 1e-7;
    std::string detail;
    bool pass = true;
    for (auto [dim, count] : {std::pair<std::size_t, std::size_t>{2, 100000}, {4, 10000}}) {
        std::atomic<std::size_t> outside{0};
        std::atomic<double> max_chsh{0};
        parallelFor(count, [&](std::size_t i) {
            auto s = sampleQuantum(dim, dim, streamSeed(kSeed + dim, i));
            outside += !inQ(s.correlations, 1e-7);
            raiseTo(max_chsh, chshMax(s.correlations));
        });
        pass = pass && outside == 0 && max_chsh <= ceiling;
        detail += "dim " + std::to_string(dim) + ": " + std::to_string(count) + " samples, " +
                  std::to_string(outside.load()) + " outside Q, max CHSH " + num(max_chsh) + "; ";
    }
    return {pass, detail};
}

Verdict ifDirection() {
    const std::size_t count = 10000;
    std::atomic<std::size_t> bad_residual{0}, bad_terms{0}, bad_weights{0};
    std::atomic<double> worst{0};
    parallelFor(count, [&](std::size_t i) {
        std::mt19937_64 rng(streamSeed(kSeed + 5, i));
        CorrelationVector x(corrset::testing::randomGeneratorMixture(rng));
        auto d = decompose(x);
        bad_terms += d.terms.size() > 3;
        bad_weights += std::abs(d.weightSum() - 1) > 1e-12;
        auto y = expectation(realizeMixture(d));
        double r = corrset::testing::maxAbsDiff(y.values(), x.values());
        raiseTo(worst, r);
        bad_residual += r > 1e-8;
    });
    bool pass = bad_residual == 0 && bad_terms == 0 && bad_weights == 0;
    return {pass, std::to_string(count) + " mixtures, max residual " + num(worst) + ", >3 terms " +
                      std::to_string(bad_terms.load()) + ", weight sums off " + std::to_string(bad_weights.load())};
}

Verdict hessian() {
    auto s = hessianPositivityScan(0.01, 0.05, workerCount());
    bool pass = s.passed && s.violations == 0 && s.min_value >= -1e-9;
    return {pass, std::to_string(s.points) + " grid points, min " + num(s.min_value) + ", violations " +
                      std::to_string(s.violations)};
}

Verdict lemma6() {
    auto s = lemma6MaxScan(0.02, workerCount());
    bool pass = s.violations == 0 && s.max_value >= pi - 0.04 && s.max_value <= pi + 1e-9;
    return {pass, std::to_string(s.points) + " grid points, max-pi " + num(s.max_value - pi)};
}

Verdict ghz() {
    bool strict = ghzContradiction();
    bool relaxed = ghzContradiction(true);
    return {strict && !relaxed, "strict satisfying assignments " + std::to_string(ghzSatisfyingAssignments()) +
                                    ", relaxed control " + std::to_string(ghzSatisfyingAssignments(true))};
}

Verdict oracleAgreement() {
    auto s = lvtAgreementSample(1000000, kSeed + 9, workerCount());
    int vertex_failures = 0;
    for (const auto &v : deterministicVertices()) {
        auto r = membershipReport(v);
        int saturated = 0;
        for (double c : r.chsh_values) {
            saturated += c == 2.0;
        }
        vertex_failures += !(lvtOracle(v) && lvtOracleFacets(v) && r.in_C && saturated == 4);
    }
    return {s.passed && vertex_failures == 0, std::to_string(s.points) + " points, " + std::to_string(s.violations) +
                                                  " disagreements, vertex failures " +
                                                  std::to_string(vertex_failures)};
}

// Residual of decompose(x), or -1 when x is outside Q.
double decomposeResidual(const CorrelationVector &x) {
    try {
        auto d = decompose(x);
        return corrset::testing::maxAbsDiff(d.reconstruct(), x.values());
    } catch (const NotInQError &) {
        return -1;
    }
}

Verdict symmetry() {
    const auto &ops = allSymmetryOps();
    std::set<std::pair<std::array<int, 4>, std::array<int, 4>>> group;
    for (const auto &op : ops) {
        group.insert({op.perm(), op.signs()});
    }
    std::size_t law_failures = 0;
    for (const auto &g : ops) {
        for (const auto &h : ops) {
            auto gh = compose(g, h);
            law_failures += !group.contains({gh.perm(), gh.signs()});
        }
        law_failures += !(compose(g, inverse(g)) == SymmetryOp::identity());
        law_failures += !(compose(inverse(g), g) == SymmetryOp::identity());
    }

    const std::size_t count = 1000;
    std::atomic<std::size_t> verdict_failures{0}, decomposability_failures{0}, residual_failures{0}, action_failures{0};
    std::atomic<double> worst{0};
    parallelFor(count, [&](std::size_t i) {
        std::mt19937_64 rng(streamSeed(kSeed + 10, i));
        // Half box points, half points of Q.
        CorrelationVector x(i % 2 ? corrset::testing::randomBoxPoint(rng)
                                  : corrset::testing::randomGeneratorMixture(rng));
        auto base = membershipReport(x);
        double base_residual = decomposeResidual(x);
        std::uniform_int_distribution<std::size_t> pick(0, ops.size() - 1);
        for (const auto &op : ops) {
            auto y = apply(op, x);
            auto r = membershipReport(y);
            verdict_failures += r.in_C != base.in_C || r.in_Q != base.in_Q;
            double res = decomposeResidual(y);
            decomposability_failures += (res < 0) != (base_residual < 0);
            if (res >= 0) {
                raiseTo(worst, res);
                residual_failures += res > 1e-9;
            }
            const auto &h = ops[pick(rng)];
            action_failures += !(apply(op, apply(h, x)) == apply(compose(op, h), x));
            action_failures += !(apply(inverse(op), y) == x);
        }
    });
    bool pass = group.size() == 192 && law_failures == 0 && verdict_failures == 0 && decomposability_failures == 0 &&
                residual_failures == 0 && action_failures == 0;
    return {pass, std::to_string(count) + " points x 192 ops: verdict " + std::to_string(verdict_failures.load()) +
                      ", decomposability " + std::to_string(decomposability_failures.load()) + ", residual " +
                      std::to_string(residual_failures.load()) + " (max " + num(worst) + "), group laws " +
                      std::to_string(law_failures + action_failures.load())};
}

}  // namespace

int main() {
    report(1, "Tsirelson saturation", tsirelson);
    report(2, "PR-box rejection", prBox);
    report(3, "mu-equivalence on 1e6 box points", muEquivalence);
    report(4, "only-if Monte-Carlo", onlyIf);
    report(5, "if round trip", ifDirection);
    report(6, "Hessian positivity scan", hessian);
    report(7, "arcsine maximum scan", lemma6);
    report(8, "GHZ contradiction", ghz);
    report(9, "LVT oracle agreement", oracleAgreement);
    report(10, "symmetry suite", symmetry);
    std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
