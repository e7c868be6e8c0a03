/**************************************************************************
 * test_selfdual.cpp
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

#include "grshull/hull.hpp"
#include "grshull/selfdual.hpp"

using namespace grshull;

namespace {

// Number of column multipliers v with v_0 = 1 for which GRS_2(alpha, v) has
// G G^T = 0, found by trying every v.
int count_self_dual_bruteforce(const Field& f, const std::vector<Elem>& alpha) {
    const std::uint32_t q = f.order();
    int count = 0;
    std::vector<Elem> v(4, f.one());
    for (std::uint32_t a = 1; a < q; ++a)
        for (std::uint32_t b = 1; b < q; ++b)
            for (std::uint32_t c = 1; c < q; ++c) {
                v[1] = Elem{a};
                v[2] = Elem{b};
                v[3] = Elem{c};
                Elem s0{0}, s1{0}, s2{0};
                for (std::size_t i = 0; i < 4; ++i) {
                    Elem w = f.mul(v[i], v[i]);
                    s0 = f.add(s0, w);
                    w = f.mul(w, alpha[i]);
                    s1 = f.add(s1, w);
                    s2 = f.add(s2, f.mul(w, alpha[i]));
                }
                count += s0.is_zero() && s1.is_zero() && s2.is_zero();
            }
    return count;
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

TEST_SUITE("selfdual") {

TEST_CASE("certificates per root set match exhaustive search over v") {
    for (unsigned q : {7u, 11u, 13u}) {
        auto f = Field::of_order(q);
        auto els = f->elements();
        int with = 0, without = 0;
        for (std::size_t a = 0; a < q; ++a)
            for (std::size_t b = a + 1; b < q; ++b)
                for (std::size_t c = b + 1; c < q; ++c)
                    for (std::size_t d = c + 1; d < q; ++d) {
                        std::vector<Elem> alpha = {els[a], els[b], els[c], els[d]};
                        const int brute = count_self_dual_bruteforce(*f, alpha);
                        CHECK((brute == 0 || brute == 8));
                        auto certs = self_dual_certificates_for_roots(f, alpha);
                        REQUIRE(static_cast<int>(certs.size()) == brute);
                        (brute ? with : without) += 1;
                        for (const auto& cert : certs) {
                            CHECK(cert.s.is_monic());
                            CHECK((cert.s * cert.s).scale(cert.lambda) == cert.u * cert.h + derivative(cert.h));
                            CHECK(cert.u.degree() % 2 == 0);
                            GrsCode code = GrsCode::from_column_poly(f, alpha, cert.s, 2);
                            Matrix g = code.generator_matrix();
                            CHECK((g * g.transpose()).is_zero());
                        }
                        if (brute) {
                            auto one = self_dual_certificate_for_signs(f, alpha, 5);
                            REQUIRE(one.has_value());
                            CHECK(one->h == certs.front().h);
                        } else {
                            CHECK_FALSE(self_dual_certificate_for_signs(f, alpha, 0).has_value());
                        }
                    }
        CHECK(with > 0);
        CHECK(without > 0);
    }
}

TEST_CASE("construct_self_dual on a known identity over GF(25)") {
    auto f = Field::of_order(25);
    Poly h = Poly::parse(f, "z^4 + g^5*z^3 + g^14*z^2 + g^23*z + g^8");
    auto code = construct_self_dual(h, Poly::constant(f, f->one()));
    REQUIRE(code.has_value());
    CHECK(code->k() == 2);
    CHECK(analyze(*code).classification == Classification::SelfDual);
    auto cert = self_dual_certificate(h, Poly::constant(f, f->one()));
    REQUIRE(cert.has_value());
    CHECK(cert->s == Poly::parse(f, "(z + g^2)(z + g^15)"));
    CHECK(cert->lambda == f->one());
    CHECK(verify_identity(h, Poly::constant(f, f->one()), cert->s, Poly::constant(f, cert->lambda)));
    CHECK_FALSE(verify_identity(h, Poly::constant(f, f->gen_pow(1)), cert->s, Poly::constant(f, cert->lambda)));
    // u = 2 gives a right-hand side that is not a scalar times a square.
    bool found_none = false;
    for (Elem c : f->elements())
        if (!c.is_zero() && !construct_self_dual(h, Poly::constant(f, c)))
            found_none = true;
    CHECK(found_none);
}

TEST_CASE("construct_self_orthogonal") {
    auto f = Field::of_order(8);
    Poly h = Poly::parse(f, "z^7 + 1");
    GrsCode c = construct_self_orthogonal(h, Poly::parse(f, "z^2"), 2);
    Matrix g = c.generator_matrix();
    CHECK((g * g.transpose()).is_zero());
    CHECK(kind_of([&] { construct_self_orthogonal(h, Poly::parse(f, "z^2"), 4); }) == ErrorKind::ConditionUnmet);
    CHECK(kind_of([&] { construct_self_orthogonal(h, Poly::parse(f, "z^4"), 1); }) == ErrorKind::ConditionUnmet);
    CHECK(kind_of([&] { construct_self_orthogonal(Poly::parse(f, "z^2 + z + 1"), Poly::parse(f, "1"), 1); }) ==
          ErrorKind::ConditionUnmet);
}

TEST_CASE("input errors") {
    auto f = Field::of_order(25);
    Poly h = Poly::parse(f, "z^4 + g^5*z^3 + g^14*z^2 + g^23*z + g^8");
    Poly one = Poly::constant(f, f->one());
    CHECK(kind_of([&] { construct_self_dual(h, Poly::zero(f)); }) == ErrorKind::ConditionUnmet);
    CHECK(kind_of([&] { construct_self_dual(h, Poly::parse(f, "z")); }) == ErrorKind::ConditionUnmet);
    CHECK(kind_of([&] { construct_self_dual(h, Poly::parse(f, "z^4")); }) == ErrorKind::ConditionUnmet);
    CHECK(kind_of([&] { construct_self_dual(h * Poly::linear(f, f->zero()), one); }) == ErrorKind::ConditionUnmet);
    auto f8 = Field::of_order(8);
    CHECK(kind_of([&] { construct_self_dual(Poly::parse(f8, "z^7 + 1"), Poly::constant(f8, f8->one())); }) ==
          ErrorKind::ConditionUnmet);
    Poly irreducible = Poly::parse(f, "z^2 - g");
    CHECK(kind_of([&] { verify_identity(irreducible, one, one, one); }) == ErrorKind::NonSplitH);
    CHECK(kind_of([&] { search_self_dual(f8, 4, 10, 1); }) == ErrorKind::BadParameters);
    CHECK(kind_of([&] { search_self_dual(f, 5, 10, 1); }) == ErrorKind::BadParameters);
    CHECK(kind_of([&] { search_self_dual(f, 26, 10, 1); }) == ErrorKind::BadParameters);
    CHECK(kind_of([&] { search_self_dual(f, 10, 10, 1); }) == ErrorKind::BadParameters);
}

TEST_CASE("search over GF(13)") {
    auto f = Field::of_order(13);
    SelfDualSearchStats st = search_self_dual(f, 4, 1000, 1, [](const SelfDualCert&) {});
    CHECK(st.exhaustive);
    CHECK(st.subsets_tried == binomial(13, 4));
    CHECK(st.odd_degree_hits == 0);
    CHECK(st.certificates > 0);
    CHECK(st.certificates % 8 == 0);
}

TEST_CASE("sampled search is deterministic for a seed") {
    auto f = Field::of_order(49);
    auto a = search_self_dual(f, 6, 200, 11);
    auto b = search_self_dual(f, 6, 200, 11);
    REQUIRE(a.size() == b.size());
    CHECK(!a.empty());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].h == b[i].h);
        CHECK(a[i].u == b[i].u);
        CHECK(a[i].s == b[i].s);
    }
}

TEST_CASE("binomial") {
    CHECK(binomial(25, 4) == 12650);
    CHECK(binomial(49, 4) == 211876);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(200, 100) == UINT64_MAX);
}

}  // TEST_SUITE
