/**************************************************************************
 * test_registry.cpp
 *
 * Copyright 2026 The grshull Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include <doctest.h>

#include <set>

#include "grshull/registry.hpp"

using namespace grshull;

namespace {

std::vector<Elem> parse_row(const Field& f, const std::vector<std::string>& texts) {
    std::vector<Elem> out;
    for (const auto& t : texts)
        out.push_back(f.parse(t));
    return out;
}

// Direct membership: w is in C when it lies in the row space of G, and in
// the dual when G w^T = 0.
bool in_code(const GrsCode& c, const std::vector<Elem>& w) { return in_row_space(c.generator_matrix(), w); }

bool in_dual(const GrsCode& c, const std::vector<Elem>& w) {
    for (Elem e : mat_vec(c.generator_matrix(), w))
        if (!e.is_zero())
            return false;
    return true;
}

}  // namespace

TEST_SUITE("registry") {

TEST_CASE("eleven entries with unique ids") {
    const auto& reg = example_registry();
    CHECK(reg.size() == 11);
    std::set<std::string> ids;
    for (const auto& e : reg)
        ids.insert(e.id);
    CHECK(ids.size() == reg.size());
    CHECK(find_example("ex4.7") != nullptr);
    CHECK(find_example("ex9.9") == nullptr);
}

TEST_CASE("expected hulls against the intersection oracle") {
    for (const auto& e : example_registry()) {
        for (const auto& ec : e.cases) {
            CAPTURE(e.id);
            CAPTURE(ec.k);
            GrsCode c = build_example_code(e, ec.k);
            Matrix hull = hull_oracle_intersection(c);
            CHECK(static_cast<int>(hull.rows()) == ec.dimension);
            CHECK(classify_hull(c, hull) == ec.classification);
            if (e.id == "ex3.8")
                continue;
            for (const auto& row : ec.rows) {
                auto w = parse_row(*c.field(), row);
                bool direct = in_code(c, w) && in_dual(c, w);
                bool twisted = false;
                for (unsigned j = 1; j < c.field()->degree() && !direct && !twisted; ++j) {
                    std::vector<Elem> tw;
                    for (Elem x : w) {
                        Elem y = x;
                        for (unsigned r = 0; r < j; ++r)
                            y = c.field()->frobenius(y);
                        tw.push_back(y);
                    }
                    twisted = in_code(c, tw) && in_dual(c, tw);
                }
                CHECK((direct || twisted));
            }
        }
    }
}

TEST_CASE("verify_example passes everywhere except the misprinted row") {
    for (const auto& e : example_registry()) {
        for (const auto& out : verify_example(e)) {
            CAPTURE(out.id);
            CAPTURE(out.k);
            if (e.id == "ex3.8") {
                CHECK_FALSE(out.pass);
                CHECK(out.dimension == 1);
                CHECK(out.classification == Classification::Generic);
                REQUIRE(out.failures.size() == 1);
                CHECK(out.failures[0].find("row") != std::string::npos);
                bool located = false;
                for (const auto& n : out.notes)
                    located |= n.find("coordinate 11: expected g^13, hull has g^3") != std::string::npos;
                CHECK(located);
            } else {
                CHECK(out.pass);
                CHECK(out.failures.empty());
            }
        }
    }
}

TEST_CASE("the printed ex3.8 row is not a codeword, the corrected one is in the hull") {
    const ExampleEntry* e = find_example("ex3.8");
    REQUIRE(e);
    GrsCode c = build_example_code(*e, 4);
    auto w = parse_row(*c.field(), e->cases[0].rows[0]);
    CHECK_FALSE(in_code(c, w));
    CHECK_FALSE(in_dual(c, w));
    w.back() = c.field()->parse("g^3");
    CHECK(in_code(c, w));
    CHECK(in_dual(c, w));
}

TEST_CASE("a corrupted entry fails with expected and observed values") {
    ExampleEntry bad = *find_example("ex3.5");
    bad.id = "corrupt";
    bad.cases[0].dimension = 2;
    bad.cases[0].classification = Classification::SelfOrthogonal;
    bad.cases[0].min_distance = 4;
    auto outs = verify_example(bad);
    REQUIRE(outs.size() == 1);
    CHECK_FALSE(outs[0].pass);
    CHECK(outs[0].dimension == 0);
    CHECK(outs[0].failures.size() >= 3);
    bool dim_msg = false;
    for (const auto& f : outs[0].failures)
        dim_msg |= f.find('2') != std::string::npos && f.find('0') != std::string::npos;
    CHECK(dim_msg);
}

TEST_CASE("h and s entries use the roots of h and 1/s") {
    const ExampleEntry* e = find_example("ex4.1a");
    REQUIRE(e);
    GrsCode c = build_example_code(*e, 1);
    const Field& f = *c.field();
    CHECK(c.alpha().size() == 7);
    for (std::size_t i = 0; i < c.alpha().size(); ++i) {
        CHECK(c.h().eval(c.alpha()[i]).is_zero());
        CHECK(f.mul(c.v()[i], f.mul(c.alpha()[i], c.alpha()[i])) == f.one());
    }
}

}  // TEST_SUITE
