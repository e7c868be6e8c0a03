/**************************************************************************
 * poly.hpp
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

#pragma once

#include <climits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grshull/gf.hpp"

namespace grshull {

/// Degree of the zero polynomial. Distinct from -1 on purpose.
inline constexpr int kDegNegInf = INT_MIN;

/// Dense univariate polynomial over a Field, lowest degree first. Trailing
/// zeros are always stripped, so the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<Elem> coeffs);

    static Poly zero(FieldPtr field) { return Poly(std::move(field)); }
    static Poly constant(FieldPtr field, Elem c);
    /// c * z^e
    static Poly monomial(FieldPtr field, Elem c, int e);
    /// z - a
    static Poly linear(FieldPtr field, Elem a);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return c_.empty() ? kDegNegInf : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == Elem{1}; }
    /// Coefficient of z^i, zero outside the stored range.
    Elem coeff(int i) const noexcept;
    Elem leading() const noexcept { return c_.empty() ? Elem{0} : c_.back(); }

    Elem eval(Elem x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scale(Elem c) const;
    Poly shift(int e) const;  // times z^e, e >= 0
    Poly monic() const;

    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return same_field(a.field_, b.field_) && a.c_ == b.c_;
    }

    /// "c0 + c1*z + c2*z^2", zero terms omitted; "0" for the zero polynomial.
    std::string to_string() const;
    /// Parses the to_string() form (also '-' between terms, "g^5*z^3", "z")
    /// a bracketed ascending coefficient list "[c0, c1, ...]", or a product
    /// of parenthesized factors such as "(z + g)(z + 1)^2".
    static Poly parse(const FieldPtr& field, std::string_view text);

private:
    void normalize();
    void check_same(const Poly& o) const;

    FieldPtr field_;
    std::vector<Elem> c_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// a = q*b + r with deg r < deg b. DivisionByZero when b = 0.
DivMod divmod(const Poly& a, const Poly& b);
/// Quotient of an exact division; InternalInconsistency when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd. BothZero when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);
/// Monic lcm, a*b/gcd.
Poly lcm(const Poly& a, const Poly& b);
Poly derivative(const Poly& f);
/// a^e mod m, e >= 0.
Poly powmod(const Poly& a, std::uint64_t e, const Poly& m);
/// True when a = c*b for some nonzero scalar c.
bool associates(const Poly& a, const Poly& b);

/// Unique f with deg f < n and f(x_i) = y_i. DuplicateNode on repeated x.
Poly lagrange_interpolate(const FieldPtr& field, const std::vector<Elem>& xs, const std::vector<Elem>& ys);
/// prod (z - r) over the given roots.
Poly product_of_linears(const FieldPtr& field, const std::vector<Elem>& roots);
/// Roots in the field in canonical order: 0 first, then increasing discrete log.
std::vector<Elem> roots(const Poly& f);
/// True when f is squarefree and splits into distinct linear factors.
bool splits_squarefree(const Poly& f);

struct ScaledSquare {
    Elem lambda;
    Poly s;  // monic
};

/// (lambda, monic s) with w = lambda * s^2, or nullopt when w is not a
/// scalar multiple of a perfect square (including w = 0).
std::optional<ScaledSquare> square_root(const Poly& w);

}  // namespace grshull
