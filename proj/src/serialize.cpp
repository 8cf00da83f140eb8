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

#include "corrset/serialize.hpp"

#include <vector>

#include "corrset/errors.hpp"

namespace corrset {

namespace {

double number(const Json &j, const std::string &what) {
    if (!j.is_number()) {
        throw PreconditionError(what + ": expected a number");
    }
    return j.get<double>();
}

const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw PreconditionError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

}  // namespace

Json toJson(const CorrelationVector &x) { return Json::array({x[0], x[1], x[2], x[3]}); }

CorrelationVector correlationFromJson(const Json &j, double tolerance) {
    if (!j.is_array() || j.size() != 4) {
        throw PreconditionError("correlation vector: expected an array of 4 numbers");
    }
    std::array<double, 4> raw{};
    for (int i = 0; i < 4; ++i) {
        raw[i] = number(j[i], "correlation vector component " + std::to_string(i + 1));
    }
    return CorrelationVector(raw, tolerance);
}

Json toJson(const MembershipReport &r) {
    Json j;
    j["in_C"] = r.in_C;
    j["in_Q"] = r.in_Q;
    j["chsh_values"] = r.chsh_values;
    j["f_values"] = r.f_values;
    j["margin_C"] = r.margin_C;
    j["margin_Q"] = r.margin_Q;
    return j;
}

Json toJson(const Decomposition &d) {
    Json terms = Json::array();
    for (const auto &t : d.terms) {
        Json term;
        term["weight"] = t.weight;
        term["phi"] = t.generator.phi();
        terms.push_back(std::move(term));
    }
    return terms;
}

Decomposition decompositionFromJson(const Json &j) {
    if (!j.is_array()) {
        throw PreconditionError("decomposition: expected an array of terms");
    }
    Decomposition d;
    for (const auto &term : j) {
        const Json &phi = field(term, "phi");
        if (!phi.is_array() || phi.size() != 3) {
            throw PreconditionError("decomposition term: phi must hold 3 angles");
        }
        d.terms.push_back({number(field(term, "weight"), "weight"),
                           GeneratorPoint(number(phi[0], "phi"), number(phi[1], "phi"), number(phi[2], "phi"))});
    }
    return d;
}

Json toJson(const ComplexMatrix &m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrixFromJson(const Json &j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) {
        throw PreconditionError("matrix: expected a nested array of rows");
    }
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].size();
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) {
            throw PreconditionError("matrix: ragged rows");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const Json &z = j[r][c];
            if (!z.is_array() || z.size() != 2) {
                throw PreconditionError("matrix: entries must be [re, im] pairs");
            }
            m(r, c) = Complex(number(z[0], "matrix entry"), number(z[1], "matrix entry"));
        }
    }
    return m;
}

Json toJson(const Realization &r) {
    Json j;
    j["dims"] = Json::array({r.dim_a, r.dim_b});
    j["state"] = toJson(r.state);
    j["A0"] = toJson(r.a0);
    j["A1"] = toJson(r.a1);
    j["B0"] = toJson(r.b0);
    j["B1"] = toJson(r.b1);
    return j;
}

Realization realizationFromJson(const Json &j) {
    const Json &dims = field(j, "dims");
    if (!dims.is_array() || dims.size() != 2 || !dims[0].is_number_unsigned() || !dims[1].is_number_unsigned()) {
        throw PreconditionError("realization: dims must be [dim_a, dim_b]");
    }
    Realization r;
    r.dim_a = dims[0].get<std::size_t>();
    r.dim_b = dims[1].get<std::size_t>();
    r.state = matrixFromJson(field(j, "state"));
    r.a0 = matrixFromJson(field(j, "A0"));
    r.a1 = matrixFromJson(field(j, "A1"));
    r.b0 = matrixFromJson(field(j, "B0"));
    r.b1 = matrixFromJson(field(j, "B1"));
    return r;
}

Json toJson(const ScanResult &s) {
    Json j;
    j["name"] = s.name;
    j["grid_step"] = s.grid_step;
    j["points"] = s.points;
    j["min_value"] = s.min_value;
    j["argmin"] = s.argmin;
    j["max_value"] = s.max_value;
    j["argmax"] = s.argmax;
    j["violations"] = s.violations;
    j["passed"] = s.passed;
    return j;
}

}  // namespace corrset
