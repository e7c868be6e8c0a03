/**************************************************************************
 * test_grs.cpp
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

#include <functional>
#include <random>

#include "grshull/grs.hpp"

using namespace grshull;

namespace {

GrsCode random_code(const FieldPtr& f, int n, int k, std::mt19937_64& rng) {
    auto els = f->elements();
    std::shuffle(els.begin(), els.end(), rng);
    std::vector<Elem> alpha(els.begin(), els.begin() + n), v(static_cast<std::size_t>(n));
    for (auto& x : v)
        x = f->gen_pow(static_cast<long long>(rng() % (f->order() - 1)));
    return GrsCode::create(f, alpha, v, k);
}

// Minimum weight by evaluating every message polynomial directly.
int slow_min_distance(const GrsCode& c) {
    const Field& f = *c.field();
    std::vector<std::uint32_t> msg(static_cast<std::size_t>(c.k()), 0);
    int best = c.n();
    while (true) {
        std::size_t i = 0;
        while (i < msg.size() && ++msg[i] == f.order())
            msg[i++] = 0;
        if (i == msg.size())
            break;
        std::vector<Elem> coeffs;
        for (auto m : msg)
            coeffs.push_back(Elem{m});
        Poly p(c.field(), coeffs);
        int w = 0;
        for (int j = 0; j < c.n(); ++j)
            w += !f.mul(c.v()[static_cast<std::size_t>(j)], p.eval(c.alpha()[static_cast<std::size_t>(j)])).is_zero();
        best = std::min(best, w);
    }
    return best;
}

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST_SUITE("grs") {

TEST_CASE("generator matrix entries are v_i alpha_i^j") {
    auto f = Field::of_order(9);
    std::mt19937_64 rng(21);
    GrsCode c = random_code(f, 5, 3, rng);
    Matrix g = c.generator_matrix();
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 5; ++i)
            CHECK(g.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) ==
                  f->mul(c.v()[static_cast<std::size_t>(i)], f->pow(c.alpha()[static_cast<std::size_t>(i)], j)));
    CHECK(rank(g) == 3);
}

TEST_CASE("column polynomial and h") {
    std::mt19937_64 rng(22);
    for (unsigned q : {7u, 16u, 25u}) {
        auto f = Field::of_order(q);
        for (int trial = 0; trial < 20; ++trial) {
            int n = 2 + static_cast<int>(rng() % (q - 2));
            if (n % static_cast<int>(f->characteristic()) == 0)
                continue;
            GrsCode c = random_code(f, n, 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1)), rng);
            CHECK(c.s().degree() < n);
            CHECK(c.h().degree() == n);
            CHECK(c.h().is_monic());
            CHECK(c.h_prime() == derivative(c.h()));
            for (int i = 0; i < n; ++i) {
                CHECK(f->mul(c.s().eval(c.alpha()[static_cast<std::size_t>(i)]), c.v()[static_cast<std::size_t>(i)]) == f->one());
                CHECK(c.h().eval(c.alpha()[static_cast<std::size_t>(i)]).is_zero());
            }
        }
    }
}

TEST_CASE("dual is orthogonal with complementary dimension") {
    std::mt19937_64 rng(23);
    for (unsigned q : {5u, 8u, 9u, 16u, 25u}) {
        auto f = Field::of_order(q);
        for (int trial = 0; trial < 20; ++trial) {
            int n = 2 + static_cast<int>(rng() % std::min<unsigned>(q - 2, 10));
            if (n % static_cast<int>(f->characteristic()) == 0)
                continue;
            int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
            GrsCode c = random_code(f, n, k, rng);
            GrsCode d = c.dual();
            CHECK(d.k() == n - k);
            CHECK(d.alpha() == c.alpha());
            CHECK((c.generator_matrix() * d.generator_matrix().transpose()).is_zero());
            CHECK(row_space_equal(d.generator_matrix(), nullspace(c.generator_matrix())));
            CHECK(row_space_equal(d.dual().generator_matrix(), c.generator_matrix()));
        }
    }
}

TEST_CASE("minimum distance n - k + 1 against direct enumeration") {
    std::mt19937_64 rng(24);
    for (unsigned q : {4u, 5u, 7u, 9u}) {
        auto f = Field::of_order(q);
        for (int trial = 0; trial < 15; ++trial) {
            int n = 2 + static_cast<int>(rng() % (q - 2));
            if (n % static_cast<int>(f->characteristic()) == 0)
                continue;
            int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(n - 1, 3)));
            GrsCode c = random_code(f, n, k, rng);
            int slow = slow_min_distance(c);
            CHECK(slow == n - k + 1);
            CHECK(min_distance_bruteforce(c) == slow);
        }
    }
    auto f = Field::of_order(16);
    CHECK(within_mds_budget(16, 5));
    CHECK_FALSE(within_mds_budget(16, 6));
    std::mt19937_64 r2(25);
    GrsCode big = random_code(f, 11, 6, r2);
    CHECK(kind_of([&] { min_distance_bruteforce(big); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("minimum distance of a non-MDS generator") {
    auto f = Field::of_order(2);
    // [7,4,3] Hamming code.
    Matrix g = Matrix::parse(f, "1, 0, 0, 0, 1, 1, 0; 0, 1, 0, 0, 1, 0, 1; 0, 0, 1, 0, 0, 1, 1; 0, 0, 0, 1, 1, 1, 1");
    CHECK(min_distance_bruteforce(g) == 3);
}

TEST_CASE("validation") {
    auto f = Field::of_order(7);
    std::vector<Elem> a = {Elem{1}, Elem{2}, Elem{3}, Elem{4}};
    std::vector<Elem> ones(4, Elem{1});
    CHECK(kind_of([&] { GrsCode::create(f, a, {Elem{1}}, 2); }) == ErrorKind::DimensionMismatch);
    CHECK(kind_of([&] { GrsCode::create(f, {Elem{1}, Elem{2}, Elem{2}, Elem{3}}, ones, 2); }) == ErrorKind::DuplicateAlpha);
    CHECK(kind_of([&] { GrsCode::create(f, a, {Elem{1}, Elem{0}, Elem{1}, Elem{1}}, 2); }) == ErrorKind::ZeroWeight);
    CHECK(kind_of([&] { GrsCode::create(f, a, ones, 0); }) == ErrorKind::BadDimension);
    CHECK(kind_of([&] { GrsCode::create(f, a, ones, 4); }) == ErrorKind::BadDimension);
    auto all = f->elements();
    CHECK(kind_of([&] { GrsCode::create(f, all, std::vector<Elem>(7, Elem{1}), 2); }) == ErrorKind::BadDimension);
    auto f9 = Field::of_order(9);
    auto e9 = f9->elements();
    std::vector<Elem> a6(e9.begin(), e9.begin() + 6);
    CHECK(kind_of([&] { GrsCode::create(f9, a6, std::vector<Elem>(6, Elem{1}), 2); }) == ErrorKind::CharDividesLength);
    CHECK(kind_of([&] { GrsCode::create(f, a, ones, 2, Poly::parse(f, "z")); }) == ErrorKind::ColumnPolyMismatch);
    CHECK(kind_of([&] { GrsCode::create(f, a, ones, 2, Poly::parse(f, "z^4 + 1")); }) == ErrorKind::ColumnPolyMismatch);
    CHECK_NOTHROW(GrsCode::create(f, a, ones, 2, Poly::parse(f, "1")));
    CHECK(kind_of([&] { GrsCode::from_column_poly(f, a, Poly::parse(f, "z - 2"), 2); }) == ErrorKind::RootOfSOnAlpha);
    CHECK(kind_of([&] { GrsCode::create(f, {Elem{1}, Elem{9}}, {Elem{1}, Elem{1}}, 1); }) == ErrorKind::FieldMismatch);
}

TEST_CASE("from_column_poly") {
    auto f = Field::of_order(8);
    auto els = f->elements();
    std::vector<Elem> alpha(els.begin() + 1, els.end());
    GrsCode c = GrsCode::from_column_poly(f, alpha, Poly::parse(f, "z^2"), 2);
    for (std::size_t i = 0; i < alpha.size(); ++i)
        CHECK(c.v()[i] == f->inv(f->mul(alpha[i], alpha[i])));
    CHECK(c.s() == Poly::parse(f, "z^2"));
}

}  // TEST_SUITE
