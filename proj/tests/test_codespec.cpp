/**************************************************************************
 * test_codespec.cpp
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

#include <random>

#include "grshull/codespec.hpp"

using namespace grshull;

namespace {

std::string error_of(std::string_view text) {
    try {
        build_code(parse_code_spec(text));
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_SUITE("codespec") {

TEST_CASE("parses keys, comments and blank lines") {
    CodeSpec s = parse_code_spec("# header\n\nq = 9\nalpha = [1, g^2, g^3, 0]   # trailing\nv = [g^2, g^3, 1, g]\nk = 2\n");
    CHECK(s.field->order() == 9);
    REQUIRE(s.alpha.size() == 4);
    CHECK(s.alpha[1] == s.field->gen_pow(2));
    REQUIRE(s.v.has_value());
    CHECK((*s.v)[2] == s.field->one());
    CHECK(s.k == 2);
    CHECK_FALSE(s.s.has_value());
    GrsCode c = build_code(s);
    CHECK(c.n() == 4);
}

TEST_CASE("weights from s when v is omitted") {
    CodeSpec s = parse_code_spec("q = 49\nalpha = [0, g^8, g^24, g^40]\nk = 2\ns = (z + g^8)*(z + g^24)*(z + g^40)\n");
    GrsCode c = build_code(s);
    const Field& f = *c.field();
    for (std::size_t i = 0; i < c.alpha().size(); ++i)
        CHECK(f.mul(c.v()[i], s.s->eval(c.alpha()[i])) == f.one());
}

TEST_CASE("s together with v is checked against the weights") {
    CHECK(error_of("q = 5\nalpha = [1, 2, 3, 4]\nv = [1, 1, 1, 1]\nk = 2\ns = 1\n").empty());
    CHECK(error_of("q = 5\nalpha = [1, 2, 3, 4]\nv = [1, 1, 1, 1]\nk = 2\ns = z\n").find("ColumnPolyMismatch") !=
          std::string::npos);
}

TEST_CASE("errors carry line and column") {
    CHECK(error_of("q = 9\nalpha = [1, h]\nv = [1, 1]\nk = 1\n").find("line 2, column 13") != std::string::npos);
    CHECK(error_of("q = 6\nalpha = [1]\nv = [1]\nk = 1\n").find("line 1, column 5") != std::string::npos);
    CHECK(error_of("q = 9\n  colour = 3\n").find("line 2, column 3: unknown key 'colour'") != std::string::npos);
    CHECK(error_of("q = 9\nq = 9\n").find("line 2, column 1: duplicate key 'q'") != std::string::npos);
    CHECK(error_of("q = 9\nalpha = [1]\nv = [1]\nk = two\n").find("line 4, column 5") != std::string::npos);
    CHECK(error_of("q = 9\nalpha = [1]\nv = [1]\n").find("missing key 'k'") != std::string::npos);
    CHECK(error_of("q = 9\nalpha = [1]\nk = 1\n").find("one of 'v' or 's'") != std::string::npos);
    CHECK(error_of("q = 9\nalpha = 1, 2\nv = [1]\nk = 1\n").find("line 2, column 9") != std::string::npos);
    CHECK(error_of("q = 9\nalpha = [1, , 2]\nv = [1]\nk = 1\n").find("empty element") != std::string::npos);
    CHECK(error_of("q = 9\nalpha = [1, 2]\nk = 1\ns = z^\n").find("line 4, column 5") != std::string::npos);
    CHECK(error_of("just text\n").find("line 1, column 1: expected 'key = value'") != std::string::npos);
    CHECK(error_of("q = 7\nalpha = [1, 2, 2]\nv = [1, 1, 1]\nk = 1\n").find("DuplicateAlpha") != std::string::npos);
    CHECK_THROWS_AS(load_code_spec("/nonexistent/file.code"), Error);
}

TEST_CASE("format round trip") {
    std::mt19937_64 rng(31);
    for (unsigned q : {7u, 16u, 25u, 49u}) {
        auto f = Field::of_order(q);
        auto els = f->elements();
        std::shuffle(els.begin(), els.end(), rng);
        const int n = q % 2 ? 6 : 5;
        std::vector<Elem> alpha(els.begin(), els.begin() + n), v(static_cast<std::size_t>(n));
        for (auto& x : v)
            x = f->gen_pow(static_cast<long long>(rng() % (q - 1)));
        GrsCode c = GrsCode::create(f, alpha, v, 3);
        GrsCode back = build_code(parse_code_spec(format_code_spec(c)));
        CHECK(back.alpha() == c.alpha());
        CHECK(back.v() == c.v());
        CHECK(back.k() == c.k());
    }
}

}  // TEST_SUITE
