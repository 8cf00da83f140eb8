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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "corrset/checks.hpp"
#include "corrset/errors.hpp"
#include "corrset/geometry.hpp"
#include "corrset/membership.hpp"
#include "corrset/quantum.hpp"
#include "corrset/serialize.hpp"

using namespace corrset;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitInputError = 2;

// Largest tolerated |mu(Q bound) - C bound| in slice output. asin loses
// about sqrt(eps) next to +-1.
constexpr double kSliceMuTolerance = 1e-7;
constexpr double kRealizeResidualLimit = 1e-8;

struct Config {
    double tolerance = kDefaultTolerance;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string output;
    unsigned parallel = 1;
};

// Everything a command produces. Nothing is written until the command has
// finished, so error paths never leave partial output behind.
struct Outcome {
    int code = kExitOk;
    std::string out;
    std::string err;
};

// Thrown for malformed input; maps to kExitInputError.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csvRow(const std::vector<std::string> &cells) {
    std::string row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        row += (i ? "," : "") + cells[i];
    }
    return row + "\n";
}

std::string boolCell(bool b) { return b ? "true" : "false"; }

double parseNumber(const std::string &text) {
    double v = 0;
    const char *end = text.data() + text.size();
    const char *begin = text.data();
    if (!text.empty() && text[0] == '+') {
        ++begin;
    }
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) {
        throw InputError("not a number: \"" + text + "\"");
    }
    return v;
}

Json readJsonFile(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw InputError(path + ": " + e.what());
    }
}

// Inline numbers win over --input; exactly one must be given.
CorrelationVector readVector(const std::vector<std::string> &inline_values, const std::string &input,
                             const Config &cfg) {
    if (!inline_values.empty() && !input.empty()) {
        throw InputError("give either four numbers or --input, not both");
    }
    if (!input.empty()) {
        Json j = readJsonFile(input);
        if (j.is_object() && j.contains("x")) {
            j = j.at("x");
        }
        return correlationFromJson(j, cfg.tolerance);
    }
    if (inline_values.size() != 4) {
        throw InputError("expected four numbers, got " + std::to_string(inline_values.size()));
    }
    std::array<double, 4> raw{};
    for (int i = 0; i < 4; ++i) {
        raw[i] = parseNumber(inline_values[i]);
    }
    return validate(raw, cfg.tolerance);
}

Outcome outsideQ(const CorrelationVector &x, const Config &cfg) {
    auto r = membershipReport(x, cfg.tolerance);
    Outcome o;
    o.code = kExitRejected;
    o.err = "outside Q: " + x.str() + " margin_Q=" + num(r.margin_Q) + " margin_C=" + num(r.margin_C) + "\n";
    return o;
}

Outcome cmdMembership(const CorrelationVector &x, const Config &cfg) {
    auto r = membershipReport(x, cfg.tolerance);
    Outcome o;
    o.code = r.in_Q ? kExitOk : kExitRejected;
    if (cfg.format == "csv") {
        o.out = csvRow({"x1", "x2", "x3", "x4", "in_C", "in_Q", "margin_C", "margin_Q", "chsh_max", "arcsine_max"});
        o.out += csvRow({num(x[0]), num(x[1]), num(x[2]), num(x[3]), boolCell(r.in_C), boolCell(r.in_Q),
                         num(r.margin_C), num(r.margin_Q), num(chshMax(x)), num(arcsineMax(x))});
    } else {
        Json j;
        j["x"] = toJson(x);
        Json report = toJson(r);
        for (const auto &[k, v] : report.items()) {
            j[k] = v;
        }
        o.out = j.dump(2) + "\n";
    }
    return o;
}

Outcome cmdDecompose(const CorrelationVector &x, const Config &cfg) {
    if (!inQ(x, cfg.tolerance)) {
        return outsideQ(x, cfg);
    }
    auto d = decompose(x, cfg.tolerance);
    auto rec = d.reconstruct();
    std::array<double, 4> residual{};
    double worst = 0;
    for (int i = 0; i < 4; ++i) {
        residual[i] = rec[i] - x[i];
        worst = std::max(worst, std::abs(residual[i]));
    }
    Outcome o;
    if (cfg.format == "csv") {
        o.out = csvRow({"weight", "phi1", "phi2", "phi3"});
        for (const auto &t : d.terms) {
            o.out += csvRow({num(t.weight), num(t.generator[0]), num(t.generator[1]), num(t.generator[2])});
        }
    } else {
        Json j;
        j["x"] = toJson(x);
        j["terms"] = toJson(d);
        j["residual"] = residual;
        j["max_residual"] = worst;
        o.out = j.dump(2) + "\n";
    }
    return o;
}

Outcome cmdRealize(const CorrelationVector &x, const Config &cfg) {
    if (!inQ(x, cfg.tolerance)) {
        return outsideQ(x, cfg);
    }
    auto d = decompose(x, cfg.tolerance);
    auto r = realizeMixture(d);
    auto y = expectation(r);
    double residual = 0;
    for (int i = 0; i < 4; ++i) {
        residual = std::max(residual, std::abs(y[i] - x[i]));
    }
    if (!(residual < kRealizeResidualLimit)) {
        throw InvariantViolation("verified_residual < 1e-8", "residual " + num(residual));
    }
    Json j;
    j["x"] = toJson(x);
    j["decomposition"] = toJson(d);
    j["realization"] = toJson(r);
    j["reproduced"] = toJson(y);
    j["verified_residual"] = residual;
    return {kExitOk, j.dump(2) + "\n", ""};
}

Outcome cmdVerify(const std::string &path, const Config &cfg) {
    Json j = readJsonFile(path);
    if (j.is_object() && j.contains("realization")) {
        j = j.at("realization");
    }
    auto r = realizationFromJson(j);
    auto y = expectation(r);
    auto report = membershipReport(y, cfg.tolerance);
    Outcome o;
    if (cfg.format == "csv") {
        o.out = csvRow({"x1", "x2", "x3", "x4", "in_C", "in_Q", "margin_C", "margin_Q"});
        o.out += csvRow({num(y[0]), num(y[1]), num(y[2]), num(y[3]), boolCell(report.in_C), boolCell(report.in_Q),
                         num(report.margin_C), num(report.margin_Q)});
    } else {
        Json out;
        out["dims"] = {r.dim_a, r.dim_b};
        out["correlations"] = toJson(y);
        out["membership"] = toJson(report);
        o.out = out.dump(2) + "\n";
    }
    return o;
}

struct SampleRow {
    CorrelationVector x;
    double chsh = 0;
    bool in_q = false;
};

Outcome cmdSample(std::size_t count, const std::vector<std::size_t> &dims, bool summary_only, const Config &cfg) {
    if (count < 1) {
        throw InputError("sample count must be at least 1");
    }
    if (dims.size() != 2) {
        throw InputError("--dims takes two integers");
    }
    for (auto d : dims) {
        if (d < kMinSampleDim || d > kMaxSampleDim) {
            throw DimensionError("sample dimension " + std::to_string(d) + " outside [" +
                                 std::to_string(kMinSampleDim) + ", " + std::to_string(kMaxSampleDim) + "]");
        }
    }
    std::vector<SampleRow> rows(count);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            auto s = sampleQuantum(dims[0], dims[1], streamSeed(cfg.seed, i));
            rows[i] = {s.correlations, chshMax(s.correlations), inQ(s.correlations, cfg.tolerance)};
        }
    };
    unsigned threads = std::max(1u, std::min<unsigned>(cfg.parallel, static_cast<unsigned>(count)));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(work, count * t / threads, count * (t + 1) / threads);
    }
    for (auto &th : pool) {
        th.join();
    }

    std::size_t failures = 0;
    double max_chsh = 0;
    for (const auto &r : rows) {
        failures += !r.in_q;
        max_chsh = std::max(max_chsh, r.chsh);
    }
    const double tsirelson = 2 * std::numbers::sqrt2;

    Outcome o;
    o.code = failures == 0 ? kExitOk : kExitRejected;
    if (cfg.format == "csv") {
        if (!summary_only) {
            o.out = csvRow({"index", "x1", "x2", "x3", "x4", "chsh", "in_Q"});
            for (std::size_t i = 0; i < count; ++i) {
                const auto &r = rows[i];
                o.out += csvRow({std::to_string(i), num(r.x[0]), num(r.x[1]), num(r.x[2]), num(r.x[3]), num(r.chsh),
                                 boolCell(r.in_q)});
            }
        }
        o.out += "# count=" + std::to_string(count) + " failures=" + std::to_string(failures) +
                 " max_chsh=" + num(max_chsh) + "\n";
    } else {
        Json j;
        j["seed"] = cfg.seed;
        j["dims"] = dims;
        if (!summary_only) {
            Json samples = Json::array();
            for (std::size_t i = 0; i < count; ++i) {
                Json s;
                s["index"] = i;
                s["x"] = toJson(rows[i].x);
                s["chsh"] = rows[i].chsh;
                s["in_Q"] = rows[i].in_q;
                samples.push_back(std::move(s));
            }
            j["samples"] = std::move(samples);
        }
        Json summary;
        summary["count"] = count;
        summary["failures"] = failures;
        summary["max_chsh"] = max_chsh;
        summary["tsirelson_excess"] = max_chsh - tsirelson;
        j["summary"] = std::move(summary);
        o.out = j.dump(2) + "\n";
    }
    if (failures) {
        o.err = std::to_string(failures) + " sampled vectors failed the arcsine test\n";
    }
    return o;
}

struct LemmaOptions {
    double step = 0;
    double hessian_step = 0.01;
    double hessian_margin = 0.05;
    double lemma6_step = 0.02;
    std::size_t samples = 100000;
    bool force_violation = false;
};

ScanResult ghzResult(bool relaxed) {
    ScanResult r;
    r.name = relaxed ? "ghz_relaxed_control" : "ghz_contradiction";
    r.points = 64;
    int satisfying = ghzSatisfyingAssignments(relaxed);
    r.min_value = r.max_value = satisfying;
    // The strict system has no solution; the relaxed control must have one.
    r.passed = relaxed ? satisfying > 0 : satisfying == 0;
    r.violations = r.passed ? 0 : 1;
    return r;
}

Outcome cmdCheckLemmas(LemmaOptions opt, const Config &cfg) {
    if (opt.step > 0) {
        opt.hessian_step = opt.step;
        opt.lemma6_step = opt.step;
    }
    std::vector<ScanResult> results;
    results.push_back(hessianPositivityScan(opt.hessian_step, opt.hessian_margin, cfg.parallel));
    results.push_back(lemma6MaxScan(opt.lemma6_step, cfg.parallel));
    results.push_back(ghzResult(false));
    results.push_back(ghzResult(true));
    results.push_back(muEquivalenceSample(opt.samples, streamSeed(cfg.seed, 1), cfg.parallel));
    results.push_back(lvtAgreementSample(opt.samples, streamSeed(cfg.seed, 2), cfg.parallel, cfg.tolerance));
    if (opt.force_violation) {
        ScanResult forced;
        forced.name = "forced_violation";
        forced.points = 1;
        forced.violations = 1;
        results.push_back(forced);
    }

    std::vector<std::string> failed;
    for (const auto &r : results) {
        if (!r.passed) {
            failed.push_back(r.name);
        }
    }
    Outcome o;
    o.code = failed.empty() ? kExitOk : kExitRejected;
    if (cfg.format == "csv") {
        o.out = csvRow({"name", "grid_step", "points", "violations", "min_value", "max_value", "passed"});
        for (const auto &r : results) {
            o.out += csvRow({r.name, num(r.grid_step), std::to_string(r.points), std::to_string(r.violations),
                             num(r.min_value), num(r.max_value), boolCell(r.passed)});
        }
    } else {
        Json j;
        Json checks = Json::array();
        for (const auto &r : results) {
            checks.push_back(toJson(r));
        }
        j["checks"] = std::move(checks);
        j["failed"] = failed;
        j["passed"] = failed.empty();
        o.out = j.dump(2) + "\n";
    }
    for (const auto &name : failed) {
        o.err += "failed: " + name + "\n";
    }
    return o;
}

struct SliceBounds {
    double low;
    double high;
};

SliceBounds qBounds(double x2, double x3) {
    double t2 = std::asin(x2);
    double t3 = std::asin(x3);
    double low = -std::cos(t2 + t3);
    double high = std::cos(t2 - t3);
    // On degenerate rows the two bounds agree up to rounding.
    return {std::min(low, high), high};
}

SliceBounds cBounds(double x2, double x3) {
    return {std::max(x2 + x3 - 1, -1 - x2 - x3), std::min(1 - x2 + x3, 1 + x2 - x3)};
}

double muScalar(double v) { return mu(CorrelationVector({v, 0, 0, 0}))[0]; }
double muInverseScalar(double v) { return muInverse(CorrelationVector({v, 0, 0, 0}))[0]; }

// CSV unless --format json was given explicitly.
Outcome cmdSlice(int n, const std::string &which, bool json) {
    if (n < 2) {
        throw InputError("slice grid needs n >= 2");
    }
    struct Row {
        double x2, x3, low, high;
    };
    std::vector<Row> rows;
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            double x2 = -1 + 2.0 * i / (n - 1);
            double x3 = -1 + 2.0 * k / (n - 1);
            // The C slice is the mu-image of the Q slice; check it per row.
            double q2 = which == "Q" ? x2 : muInverseScalar(x2);
            double q3 = which == "Q" ? x3 : muInverseScalar(x3);
            SliceBounds q = qBounds(q2, q3);
            SliceBounds c = cBounds(muScalar(q2), muScalar(q3));
            double gap = std::max(std::abs(muScalar(q.low) - c.low), std::abs(muScalar(q.high) - c.high));
            if (!(gap <= kSliceMuTolerance)) {
                throw InvariantViolation("mu(Q slice) = C slice",
                                         "at x2=" + num(x2) + " x3=" + num(x3) + " gap " + num(gap));
            }
            SliceBounds b = which == "Q" ? q : cBounds(x2, x3);
            rows.push_back({x2, x3, b.low, b.high});
        }
    }
    Outcome o;
    if (json) {
        Json j = Json::array();
        for (const auto &r : rows) {
            Json row;
            row["x2"] = r.x2;
            row["x3"] = r.x3;
            row["x4_low"] = r.low;
            row["x4_high"] = r.high;
            j.push_back(std::move(row));
        }
        o.out = j.dump(2) + "\n";
    } else {
        o.out = csvRow({"x2", "x3", "x4_low", "x4_high"});
        for (const auto &r : rows) {
            o.out += csvRow({num(r.x2), num(r.x3), num(r.low), num(r.high)});
        }
    }
    return o;
}

Outcome cmdMu(const CorrelationVector &x, bool inverse, const Config &cfg) {
    auto y = inverse ? muInverse(x) : mu(x);
    if (cfg.format == "csv") {
        return {kExitOk, csvRow({"y1", "y2", "y3", "y4"}) + csvRow({num(y[0]), num(y[1]), num(y[2]), num(y[3])}), ""};
    }
    return {kExitOk, toJson(y).dump() + "\n", ""};
}

// Reads CORRSET_TOLERANCE when set. Validation happens with the flag value.
double defaultTolerance() {
    const char *env = std::getenv("CORRSET_TOLERANCE");
    if (env == nullptr || *env == '\0') {
        return kDefaultTolerance;
    }
    return parseNumber(env);
}

int emit(const Outcome &o, const Config &cfg) {
    if (!o.out.empty()) {
        if (cfg.output.empty()) {
            std::cout << o.out << std::flush;
        } else {
            std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
            file << o.out;
            if (!file.flush()) {
                std::cerr << "error: cannot write " << cfg.output << "\n";
                return kExitInputError;
            }
        }
    }
    std::cerr << o.err;
    return o.code;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Membership, decomposition and quantum realization of two-party correlation vectors"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    double tolerance_default = kDefaultTolerance;
    try {
        tolerance_default = defaultTolerance();
    } catch (const InputError &e) {
        std::cerr << "error: CORRSET_TOLERANCE: " << e.what() << "\n";
        return kExitInputError;
    }
    cfg.tolerance = tolerance_default;
    app.add_option("--tolerance", cfg.tolerance, "Numerical tolerance (env CORRSET_TOLERANCE)")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Base seed for random streams")->capture_default_str();
    auto *format_opt = app.add_option("--format", cfg.format, "Output format (slice defaults to csv)")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_option("--output", cfg.output, "Write output to this file instead of stdout");
    app.add_option("--parallel", cfg.parallel, "Worker threads for sample and check-lemmas")
        ->check(CLI::Range(1u, 1024u))
        ->capture_default_str();

    std::vector<std::string> values;
    std::string input;
    auto addVectorInput = [&](CLI::App *sub) {
        sub->add_option("values", values, "Four correlations A0B0 A0B1 A1B0 A1B1");
        sub->add_option("--input", input, "JSON file holding [x1, x2, x3, x4] or {\"x\": [...]}");
    };

    auto *membership = app.add_subcommand("membership", "Report membership in C and Q");
    addVectorInput(membership);
    auto *decomp = app.add_subcommand("decompose", "Decompose a point of Q into generators");
    addVectorInput(decomp);
    auto *realize = app.add_subcommand("realize", "Build a quantum realization of a point of Q");
    addVectorInput(realize);

    std::string verify_path;
    auto *verify = app.add_subcommand("verify", "Recompute correlations from a realization file");
    verify->add_option("file", verify_path, "Realization JSON");
    verify->add_option("--input", verify_path, "Realization JSON");

    std::size_t sample_count = 1;
    std::vector<std::size_t> dims{2, 2};
    bool summary_only = false;
    auto *sample = app.add_subcommand("sample", "Sample random quantum strategies");
    sample->add_option("-n,--count", sample_count, "Number of strategies")->capture_default_str();
    sample->add_option("--dims", dims, "Local dimensions of the two parties")->expected(2);
    sample->add_flag("--summary-only", summary_only, "Omit per-sample rows");

    LemmaOptions lemma;
    auto *check = app.add_subcommand("check-lemmas", "Run the numerical checks");
    check->add_option("--step", lemma.step, "Grid step for both scans");
    check->add_option("--hessian-step", lemma.hessian_step)->capture_default_str();
    check->add_option("--hessian-margin", lemma.hessian_margin)->capture_default_str();
    check->add_option("--lemma6-step", lemma.lemma6_step)->capture_default_str();
    check->add_option("--samples", lemma.samples, "Random points for the sampled checks")->capture_default_str();
    check->add_flag("--force-violation", lemma.force_violation, "Add a failing check (harness self-test)");

    int slice_n = 21;
    std::string which = "Q";
    auto *slice = app.add_subcommand("slice", "Emit the x1 = 1 cross-section of C or Q");
    slice->add_option("-n,--grid", slice_n, "Grid points per axis")->capture_default_str();
    slice->add_option("--which", which)->check(CLI::IsMember({"C", "Q"}))->capture_default_str();

    bool inverse = false;
    auto *mu_cmd = app.add_subcommand("mu", "Apply (2/pi) asin componentwise");
    addVectorInput(mu_cmd);
    mu_cmd->add_flag("--inverse", inverse, "Apply sin(pi y / 2) instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }
    if (!(cfg.tolerance > 0) || !std::isfinite(cfg.tolerance)) {
        std::cerr << "error: tolerance must be positive\n";
        return kExitInputError;
    }

    Outcome outcome;
    try {
        if (membership->parsed()) {
            outcome = cmdMembership(readVector(values, input, cfg), cfg);
        } else if (decomp->parsed()) {
            outcome = cmdDecompose(readVector(values, input, cfg), cfg);
        } else if (realize->parsed()) {
            outcome = cmdRealize(readVector(values, input, cfg), cfg);
        } else if (verify->parsed()) {
            if (verify_path.empty()) {
                throw InputError("verify needs a realization file");
            }
            outcome = cmdVerify(verify_path, cfg);
        } else if (sample->parsed()) {
            outcome = cmdSample(sample_count, dims, summary_only, cfg);
        } else if (check->parsed()) {
            outcome = cmdCheckLemmas(lemma, cfg);
        } else if (slice->parsed()) {
            outcome = cmdSlice(slice_n, which, format_opt->count() > 0 && cfg.format == "json");
        } else if (mu_cmd->parsed()) {
            outcome = cmdMu(readVector(values, input, cfg), inverse, cfg);
        }
    } catch (const NotInQError &e) {
        std::cerr << "outside Q: " << e.what() << "\n";
        return kExitRejected;
    } catch (const InvariantViolation &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Json::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return emit(outcome, cfg);
}
