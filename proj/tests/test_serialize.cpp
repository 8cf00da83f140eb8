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

#include "gtest/gtest.h"

#include "corrset/errors.hpp"
#include "oracles.hpp"

using namespace corrset;

TEST(serialize, correlation_round_trip) {
    CorrelationVector x({0.1, -0.25, 1.0 / 3.0, -1});
    auto text = toJson(x).dump();
    ASSERT_EQ(correlationFromJson(Json::parse(text)), x);
    ASSERT_THROW(correlationFromJson(Json::parse("[1, 2]")), PreconditionError);
    ASSERT_THROW(correlationFromJson(Json::parse("[0, 0, \"a\", 0]")), PreconditionError);
    ASSERT_THROW(correlationFromJson(Json::parse("[0, 0, 1.5, 0]")), OutOfBoxError);
}

TEST(serialize, decomposition_round_trip_is_exact) {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 500; ++i) {
        CorrelationVector x(corrset::testing::randomGeneratorMixture(rng));
        auto d = decompose(x);
        auto back = decompositionFromJson(Json::parse(toJson(d).dump()));
        ASSERT_EQ(back.terms.size(), d.terms.size());
        for (std::size_t t = 0; t < d.terms.size(); ++t) {
            ASSERT_EQ(back.terms[t].weight, d.terms[t].weight);
            ASSERT_EQ(back.terms[t].generator.phi(), d.terms[t].generator.phi());
        }
    }
    ASSERT_THROW(decompositionFromJson(Json::parse("{}")), PreconditionError);
    ASSERT_THROW(decompositionFromJson(Json::parse("[{\"weight\": 1}]")), PreconditionError);
}

TEST(serialize, realization_round_trip) {
    auto r = realizeMixture(decompose(CorrelationVector({0.5, 0.1, -0.2, 0.3})));
    auto back = realizationFromJson(Json::parse(toJson(r).dump()));
    ASSERT_EQ(back.dim_a, r.dim_a);
    ASSERT_EQ(maxAbsDiff(back.state, r.state), 0.0);
    ASSERT_EQ(maxAbsDiff(back.b1, r.b1), 0.0);
    ASSERT_EQ(expectation(back), expectation(r));
    ASSERT_THROW(matrixFromJson(Json::parse("[[[1, 0]], [[1, 0], [0, 0]]]")), PreconditionError);
}

TEST(serialize, report_fields) {
    auto j = toJson(membershipReport(CorrelationVector()));
    ASSERT_TRUE(j["in_C"].get<bool>());
    ASSERT_EQ(j["chsh_values"].size(), 8u);
    ASSERT_EQ(j["margin_C"].get<double>(), 2.0);
}
