/**************************************************************************
 * test_gfla.cpp
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
#include <set>

#include "grshull/gfla.hpp"

using namespace grshull;

namespace {

Matrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng, int zero_bias = 0) {
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = static_cast<int>(rng() % 4) < zero_bias ? Elem{0} : Elem{static_cast<std::uint32_t>(rng() % f->order())};
    return m;
}

// Every vector of the row space, by enumerating all coefficient tuples.
std::set<std::vector<std::uint32_t>> span(const Matrix& m) {
    const Field& f = *m.field();
    std::set<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> coef(m.rows(), 0);
    while (true) {
        std::vector<Elem> v(m.cols(), Elem{0});
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                v[c] = f.add(v[c], f.mul(Elem{coef[r]}, m.at(r, c)));
        std::vector<std::uint32_t> key;
        for (Elem e : v)
            key.push_back(e.value);
        out.insert(key);
        std::size_t i = 0;
        while (i < coef.size() && ++coef[i] == f.order())
            coef[i++] = 0;
        if (i == coef.size())
            break;
    }
    return out;
}

std::size_t brute_rank(const Matrix& m) {
    std::size_t size = span(m).size();
    std::size_t r = 0;
    for (std::size_t p = 1; p < size; p *= m.field()->order())
        ++r;
    return r;
}

}  // namespace

TEST_SUITE("gfla") {

TEST_CASE("rank against the size of the enumerated row space") {
    std::mt19937_64 rng(11);
    for (unsigned q : {2u, 3u, 4u}) {
        auto f = Field::of_order(q);
        for (int trial = 0; trial < 80; ++trial) {
            std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
            Matrix m = random_matrix(f, rows, cols, rng, static_cast<int>(rng() % 3));
            CHECK(rank(m) == brute_rank(m));
            Rref rr = rref(m);
            CHECK(rr.rank == rank(m));
            CHECK(rr.reduced.rows() == rr.rank);
            CHECK(row_space_equal(rr.reduced, m));
        }
    }
}

TEST_CASE("nullspace is orthogonal and complementary") {
    std::mt19937_64 rng(12);
    for (unsigned q : {3u, 8u, 25u}) {
        auto f = Field::of_order(q);
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 7;
            Matrix m = random_matrix(f, rows, cols, rng, static_cast<int>(rng() % 3));
            Matrix n = nullspace(m);
            CHECK(n.rows() == cols - rank(m));
            CHECK(rank(n) == n.rows());
            if (n.rows())
                CHECK((m * n.transpose()).is_zero());
        }
    }
}

TEST_CASE("intersection and sum against enumerated spans") {
    std::mt19937_64 rng(13);
    for (unsigned q : {2u, 3u}) {
        auto f = Field::of_order(q);
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t cols = 2 + rng() % 4;
            Matrix a = random_matrix(f, 1 + rng() % 3, cols, rng, 1);
            Matrix b = random_matrix(f, 1 + rng() % 3, cols, rng, 1);
            auto sa = span(a), sb = span(b);
            std::set<std::vector<std::uint32_t>> both;
            for (const auto& v : sa)
                if (sb.count(v))
                    both.insert(v);
            Matrix i = row_space_intersect(a, b);
            CHECK(rank(i) == i.rows());
            CHECK(span(i.rows() ? i : Matrix(f, 1, cols)) == both);
            Matrix s = row_space_sum(a, b);
            CHECK(row_space_contains(s, a));
            CHECK(row_space_contains(s, b));
            CHECK(s.rows() + i.rows() == rank(a) + rank(b));
        }
    }
}

TEST_CASE("membership and containment") {
    auto f = Field::of_order(5);
    Matrix m = Matrix::parse(f, "1, 2, 3; 0, 1, 4");
    CHECK(in_row_space(m, {Elem{1}, Elem{3}, Elem{2}}));
    CHECK_FALSE(in_row_space(m, {Elem{0}, Elem{0}, Elem{1}}));
    CHECK(row_space_contains(m, Matrix::parse(f, "2, 4, 1")));
    CHECK(row_space_contains(m, Matrix::empty(f, 3)));
    CHECK(row_space_equal(Matrix::empty(f, 3), Matrix(f, 2, 3)));
}

TEST_CASE("frobenius twists") {
    auto f = Field::of_order(16);
    std::mt19937_64 rng(14);
    Matrix a = random_matrix(f, 2, 5, rng);
    for (unsigned j = 0; j < 4; ++j) {
        Matrix b = frobenius(a, j);
        int t = frobenius_twist_equal(a, b);
        CHECK(t >= 0);
        CHECK(row_space_equal(frobenius(a, static_cast<unsigned>(t)), b));
    }
    CHECK(frobenius(a, 4) == a);
}

TEST_CASE("text form and shape errors") {
    auto f = Field::of_order(9);
    Matrix m = Matrix::parse(f, "1, g; g^2, 0");
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
    CHECK(Matrix::parse(f, m.to_string()) == m);
    CHECK_THROWS_AS(Matrix::parse(f, "1, 2; 3"), Error);
    CHECK_THROWS_AS(m * Matrix(f, 3, 1), Error);
    CHECK(mat_vec(m, {Elem{1}, Elem{0}}) == std::vector<Elem>{Elem{1}, f->gen_pow(2)});
    CHECK(dot(*f, {Elem{1}, f->generator()}, {f->generator(), Elem{1}}) == f->add(f->generator(), f->generator()));
}

}  // TEST_SUITE
