/**************************************************************************
 * grs.cpp
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

#include "grshull/grs.hpp"

#include <set>
#include <utility>

namespace grshull {

namespace {

void validate_nodes(const Field& f, const std::vector<Elem>& alpha) {
    std::set<std::uint32_t> seen;
    for (Elem a : alpha) {
        if (!f.contains(a))
            throw Error(ErrorKind::FieldMismatch, "node is not an element of " + f.name());
        if (!seen.insert(a.value).second)
            throw Error(ErrorKind::DuplicateAlpha, "alpha contains " + f.format(a) + " twice");
    }
}

void validate_shape(const Field& f, int n, int k) {
    if (k < 1 || k >= n || static_cast<std::uint32_t>(n) >= f.order())
        throw Error(ErrorKind::BadDimension, "need 1 <= k < n < q, got k = " + std::to_string(k) + ", n = " +
                                                 std::to_string(n) + ", q = " + std::to_string(f.order()));
    if (static_cast<unsigned>(n) % f.characteristic() == 0)
        throw Error(ErrorKind::CharDividesLength, "characteristic " + std::to_string(f.characteristic()) +
                                                      " divides n = " + std::to_string(n));
}

}  // namespace

GrsCode GrsCode::create(FieldPtr field, std::vector<Elem> alpha, std::vector<Elem> v, int k,
                        const std::optional<Poly>& s_override) {
    const Field& f = *field;
    if (alpha.size() != v.size())
        throw Error(ErrorKind::DimensionMismatch, "alpha has " + std::to_string(alpha.size()) + " entries but v has " +
                                                      std::to_string(v.size()));
    validate_nodes(f, alpha);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!f.contains(v[i]))
            throw Error(ErrorKind::FieldMismatch, "weight is not an element of " + f.name());
        if (v[i].is_zero())
            throw Error(ErrorKind::ZeroWeight, "v_" + std::to_string(i + 1) + " is zero");
    }
    const int n = static_cast<int>(alpha.size());
    validate_shape(f, n, k);

    GrsCode c;
    c.field_ = field;
    c.alpha_ = std::move(alpha);
    c.v_ = std::move(v);
    c.k_ = k;
    std::vector<Elem> inv_v(c.v_.size());
    for (std::size_t i = 0; i < inv_v.size(); ++i)
        inv_v[i] = f.inv(c.v_[i]);
    c.s_ = lagrange_interpolate(field, c.alpha_, inv_v);
    if (s_override) {
        if (!same_field(s_override->field(), field))
            throw Error(ErrorKind::FieldMismatch, "column polynomial over a different field");
        if (s_override->degree() >= n)
            throw Error(ErrorKind::ColumnPolyMismatch, "deg s = " + std::to_string(s_override->degree()) + " is not below n");
        for (std::size_t i = 0; i < c.alpha_.size(); ++i)
            if (s_override->eval(c.alpha_[i]) != inv_v[i])
                throw Error(ErrorKind::ColumnPolyMismatch, "s(alpha_" + std::to_string(i + 1) + ") != 1/v_" + std::to_string(i + 1));
        c.s_ = *s_override;
    }
    c.h_ = product_of_linears(field, c.alpha_);
    c.h_prime_ = derivative(c.h_);
    return c;
}

GrsCode GrsCode::from_column_poly(FieldPtr field, std::vector<Elem> alpha, const Poly& s, int k) {
    if (!same_field(s.field(), field))
        throw Error(ErrorKind::FieldMismatch, "column polynomial over a different field");
    validate_nodes(*field, alpha);
    std::vector<Elem> v(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        Elem sa = s.eval(alpha[i]);
        if (sa.is_zero())
            throw Error(ErrorKind::RootOfSOnAlpha, "s vanishes at " + field->format(alpha[i]));
        v[i] = field->inv(sa);
    }
    return create(std::move(field), std::move(alpha), std::move(v), k, s);
}

Matrix GrsCode::generator_matrix() const {
    const Field& f = *field_;
    Matrix g(field_, static_cast<std::size_t>(k_), alpha_.size());
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
        Elem x = v_[i];
        for (int j = 0; j < k_; ++j) {
            g.at(static_cast<std::size_t>(j), i) = x;
            x = f.mul(x, alpha_[i]);
        }
    }
    return g;
}

GrsCode GrsCode::dual() const {
    const Field& f = *field_;
    std::vector<Elem> w(alpha_.size());
    for (std::size_t i = 0; i < alpha_.size(); ++i)
        w[i] = f.div(s_.eval(alpha_[i]), h_prime_.eval(alpha_[i]));
    return create(field_, alpha_, std::move(w), n() - k_);
}

bool within_mds_budget(std::uint32_t q, int k, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
        total *= q;
        if (total > budget)
            return false;
    }
    return true;
}

int min_distance_bruteforce(const Matrix& generator, std::uint64_t budget) {
    const Field& f = *generator.field();
    const std::size_t k = generator.rows();
    const std::size_t n = generator.cols();
    if (!within_mds_budget(f.order(), static_cast<int>(k), budget))
        throw Error(ErrorKind::BudgetExceeded, std::to_string(f.order()) + "^" + std::to_string(k) + " codewords exceed the budget");
    if (k == 0)
        throw Error(ErrorKind::BadDimension, "minimum distance of the zero code is undefined");

    // GF(p)-generators: each row times each residue basis element z^b.
    const unsigned p = f.characteristic();
    std::vector<std::vector<Elem>> gens;
    std::uint32_t basis_value = 1;
    for (unsigned b = 0; b < f.degree(); ++b, basis_value *= p)
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<Elem> g(n);
            for (std::size_t i = 0; i < n; ++i)
                g[i] = f.mul(generator.at(j, i), Elem{basis_value});
            gens.push_back(std::move(g));
        }

    // Modular p-ary Gray walk: step i adds the generator indexed by the
    // number of trailing base-p zeros of i, visiting every codeword once.
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < gens.size(); ++i)
        total *= p;
    std::vector<Elem> word(n, Elem{0});
    int weight = 0;
    int best = static_cast<int>(n) + 1;
    for (std::uint64_t step = 1; step < total; ++step) {
        std::uint64_t x = step;
        std::size_t t = 0;
        while (x % p == 0) {
            x /= p;
            ++t;
        }
        const auto& g = gens[t];
        for (std::size_t i = 0; i < n; ++i) {
            if (g[i].is_zero())
                continue;
            bool was = !word[i].is_zero();
            word[i] = f.add(word[i], g[i]);
            weight += static_cast<int>(!word[i].is_zero()) - static_cast<int>(was);
        }
        if (weight > 0 && weight < best)
            best = weight;
    }
    return best;
}

int min_distance_bruteforce(const GrsCode& code, std::uint64_t budget) {
    return min_distance_bruteforce(code.generator_matrix(), budget);
}

}  // namespace grshull
