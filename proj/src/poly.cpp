/**************************************************************************
 * poly.cpp
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

#include "grshull/poly.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace grshull {

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (Elem e : c_)
        if (!field_->contains(e))
            throw Error(ErrorKind::FieldMismatch, "coefficient is not an element of " + field_->name());
    normalize();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, Elem c, int e) {
    std::vector<Elem> v(static_cast<std::size_t>(e) + 1, Elem{0});
    v.back() = c;
    return Poly(std::move(field), std::move(v));
}

Poly Poly::linear(FieldPtr field, Elem a) {
    Elem na = field->neg(a);
    return Poly(std::move(field), {na, Elem{1}});
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
    if (!same_field(field_, o.field_))
        throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
}

Elem Poly::coeff(int i) const noexcept {
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return Elem{0};
    return c_[static_cast<std::size_t>(i)];
}

Elem Poly::eval(Elem x) const {
    Elem acc{0};
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = field_->add(field_->mul(acc, x), c_[i]);
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    check_same(o);
    Poly r(field_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), Elem{0});
    for (std::size_t i = 0; i < r.c_.size(); ++i)
        r.c_[i] = field_->add(i < c_.size() ? c_[i] : Elem{0}, i < o.c_.size() ? o.c_[i] : Elem{0});
    r.normalize();
    return r;
}

Poly Poly::operator-() const {
    Poly r(field_);
    r.c_.reserve(c_.size());
    for (Elem e : c_)
        r.c_.push_back(field_->neg(e));
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_same(o);
    Poly r(field_);
    if (c_.empty() || o.c_.empty())
        return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Elem{0});
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = field_->add(r.c_[i + j], field_->mul(c_[i], o.c_[j]));
    }
    r.normalize();
    return r;
}

Poly Poly::scale(Elem c) const {
    Poly r(field_);
    r.c_.reserve(c_.size());
    for (Elem e : c_)
        r.c_.push_back(field_->mul(e, c));
    r.normalize();
    return r;
}

Poly Poly::shift(int e) const {
    Poly r(field_);
    if (c_.empty())
        return r;
    r.c_.assign(static_cast<std::size_t>(e), Elem{0});
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

Poly Poly::monic() const {
    if (c_.empty())
        return *this;
    return scale(field_->inv(c_.back()));
}

std::string Poly::to_string() const {
    if (c_.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        bool unit = c_[i] == Elem{1};
        if (i == 0 || !unit)
            out += field_->format(c_[i]);
        if (i > 0) {
            if (!unit)
                out += "*";
            out += "z";
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

Poly parse_term(const FieldPtr& field, std::string_view term) {
    term = trim(term);
    if (term.empty())
        throw Error(ErrorKind::ParseError, "empty polynomial term");
    auto zpos = term.find('z');
    if (zpos == std::string_view::npos)
        return Poly::constant(field, field->parse(term));

    std::string_view coef = trim(term.substr(0, zpos));
    if (!coef.empty() && coef.back() == '*')
        coef = trim(coef.substr(0, coef.size() - 1));
    Elem c = coef.empty() ? field->one() : field->parse(coef);

    std::string_view rest = trim(term.substr(zpos + 1));
    int e = 1;
    if (!rest.empty()) {
        if (rest.front() != '^')
            throw Error(ErrorKind::ParseError, "unexpected text after z in '" + std::string(term) + "'");
        rest = trim(rest.substr(1));
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), e);
        if (ec != std::errc() || ptr != rest.data() + rest.size() || e < 0)
            throw Error(ErrorKind::ParseError, "bad exponent of z in '" + std::string(term) + "'");
    }
    return Poly::monomial(field, c, e);
}

// "(f1)(f2)^e*(f3)": a product of parenthesized factors with optional powers.
Poly parse_product(const FieldPtr& field, std::string_view s) {
    Poly acc = Poly::constant(field, field->one());
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ' ' || s[i] == '*') {
            ++i;
            continue;
        }
        if (s[i] != '(')
            throw Error(ErrorKind::ParseError, "expected '(' in '" + std::string(s) + "'");
        int depth = 0;
        std::size_t close = i;
        for (; close < s.size(); ++close) {
            depth += s[close] == '(' ? 1 : s[close] == ')' ? -1 : 0;
            if (depth == 0)
                break;
        }
        if (close == s.size())
            throw Error(ErrorKind::ParseError, "unbalanced parentheses in '" + std::string(s) + "'");
        Poly factor = Poly::parse(field, s.substr(i + 1, close - i - 1));
        i = close + 1;
        int e = 1;
        if (i < s.size() && s[i] == '^') {
            auto [ptr, ec] = std::from_chars(s.data() + i + 1, s.data() + s.size(), e);
            if (ec != std::errc() || e < 0)
                throw Error(ErrorKind::ParseError, "bad exponent in '" + std::string(s) + "'");
            i = static_cast<std::size_t>(ptr - s.data());
        }
        for (int j = 0; j < e; ++j)
            acc = acc * factor;
    }
    return acc;
}

}  // namespace

Poly Poly::parse(const FieldPtr& field, std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty())
        throw Error(ErrorKind::ParseError, "empty polynomial");
    if (s.front() == '(')
        return parse_product(field, s);
    if (s.front() == '[') {
        if (s.back() != ']')
            throw Error(ErrorKind::ParseError, "unterminated coefficient list");
        s = s.substr(1, s.size() - 2);
        std::vector<Elem> coeffs;
        if (!trim(s).empty()) {
            std::size_t start = 0;
            while (true) {
                auto comma = s.find(',', start);
                coeffs.push_back(field->parse(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
                if (comma == std::string_view::npos)
                    break;
                start = comma + 1;
            }
        }
        return Poly(field, std::move(coeffs));
    }

    Poly acc(field);
    bool negate = false;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
        Poly t = parse_term(field, s.substr(start, end - start));
        acc = negate ? acc - t : acc + t;
    };
    // A leading sign applies to the first term.
    if (s.front() == '-' || s.front() == '+') {
        negate = s.front() == '-';
        start = 1;
    }
    for (std::size_t i = start; i < s.size(); ++i) {
        char ch = s[i];
        if (ch != '+' && ch != '-')
            continue;
        // A sign right after '^' belongs to an exponent.
        std::size_t j = i;
        while (j > start && (s[j - 1] == ' ' || s[j - 1] == '\t'))
            --j;
        if (j > start && s[j - 1] == '^')
            continue;
        flush(i);
        negate = ch == '-';
        start = i + 1;
    }
    flush(s.size());
    return acc;
}

DivMod divmod(const Poly& a, const Poly& b) {
    if (!same_field(a.field(), b.field()))
        throw Error(ErrorKind::FieldMismatch, "polynomials over different fields");
    if (b.is_zero())
        throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    const Field& f = *a.field();
    std::vector<Elem> r = a.coeffs();
    const auto& bc = b.coeffs();
    const int db = b.degree();
    if (a.degree() < db)
        return {Poly(a.field()), a};
    std::vector<Elem> q(static_cast<std::size_t>(a.degree() - db) + 1, Elem{0});
    Elem inv_lead = f.inv(bc.back());
    for (int i = a.degree(); i >= db; --i) {
        Elem c = r[static_cast<std::size_t>(i)];
        if (c.is_zero())
            continue;
        Elem factor = f.mul(c, inv_lead);
        q[static_cast<std::size_t>(i - db)] = factor;
        for (int j = 0; j <= db; ++j) {
            auto idx = static_cast<std::size_t>(i - db + j);
            r[idx] = f.sub(r[idx], f.mul(factor, bc[static_cast<std::size_t>(j)]));
        }
    }
    r.resize(static_cast<std::size_t>(db));
    return {Poly(a.field(), std::move(q)), Poly(a.field(), std::move(r))};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw Error(ErrorKind::InternalInconsistency, "division expected to be exact: " + a.to_string() + " by " + b.to_string());
    return q;
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw Error(ErrorKind::BothZero, "gcd of two zero polynomials");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly(a.field());
    return exact_div(a * b, gcd(a, b)).monic();
}

Poly derivative(const Poly& f) {
    const auto& c = f.coeffs();
    if (c.size() <= 1)
        return Poly(f.field());
    std::vector<Elem> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
        d[i - 1] = f.field()->mul(f.field()->from_int(static_cast<long long>(i)), c[i]);
    return Poly(f.field(), std::move(d));
}

Poly powmod(const Poly& a, std::uint64_t e, const Poly& m) {
    Poly base = divmod(a, m).remainder;
    Poly result = divmod(Poly::constant(a.field(), a.field()->one()), m).remainder;
    while (e > 0) {
        if (e & 1)
            result = divmod(result * base, m).remainder;
        e >>= 1;
        if (e > 0)
            base = divmod(base * base, m).remainder;
    }
    return result;
}

bool associates(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero();
    return a.monic() == b.monic();
}

Poly lagrange_interpolate(const FieldPtr& field, const std::vector<Elem>& xs, const std::vector<Elem>& ys) {
    if (xs.size() != ys.size())
        throw Error(ErrorKind::DimensionMismatch, "interpolation needs as many values as nodes");
    std::set<std::uint32_t> seen;
    for (Elem x : xs)
        if (!seen.insert(x.value).second)
            throw Error(ErrorKind::DuplicateNode, "node " + field->format(x) + " appears twice");

    const Field& f = *field;
    Poly all = product_of_linears(field, xs);
    Poly result(field);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (ys[i].is_zero())
            continue;
        Poly basis = exact_div(all, Poly::linear(field, xs[i]));
        Elem denom = basis.eval(xs[i]);
        result = result + basis.scale(f.div(ys[i], denom));
    }
    return result;
}

Poly product_of_linears(const FieldPtr& field, const std::vector<Elem>& rts) {
    Poly acc = Poly::constant(field, field->one());
    for (Elem r : rts)
        acc = acc * Poly::linear(field, r);
    return acc;
}

std::vector<Elem> roots(const Poly& f) {
    std::vector<Elem> out;
    if (f.is_zero())
        return out;
    for (Elem x : f.field()->elements())
        if (f.eval(x).is_zero())
            out.push_back(x);
    return out;
}

bool splits_squarefree(const Poly& f) {
    if (f.degree() < 1)
        return f.degree() == 0;
    const FieldPtr& field = f.field();
    Poly z = Poly::monomial(field, field->one(), 1);
    Poly zq = powmod(z, field->order(), f);
    Poly g = gcd(f, zq - z);
    return g.degree() == f.degree();
}

std::optional<ScaledSquare> square_root(const Poly& w) {
    if (w.is_zero() || w.degree() % 2 != 0)
        return std::nullopt;
    const Field& f = *w.field();
    const int m = w.degree() / 2;
    Elem lambda = w.leading();
    Poly wm = w.monic();
    std::vector<Elem> s(static_cast<std::size_t>(m) + 1, Elem{0});
    s[static_cast<std::size_t>(m)] = f.one();

    if (f.characteristic() == 2) {
        for (int i = 0; i <= 2 * m; i += 2)
            s[static_cast<std::size_t>(i / 2)] = *f.sqrt(wm.coeff(i));
    } else {
        Elem inv_two = f.inv(f.from_int(2));
        for (int i = m - 1; i >= 0; --i) {
            // coefficient of z^(m+i) in s^2 is 2 s_i + sum over a+b=m+i with a,b in (i, m)
            Elem acc = wm.coeff(m + i);
            for (int a = i + 1; a < m; ++a) {
                int b = m + i - a;
                if (b <= i || b >= m)
                    continue;
                acc = f.sub(acc, f.mul(s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)]));
            }
            s[static_cast<std::size_t>(i)] = f.mul(acc, inv_two);
        }
    }
    Poly sp(w.field(), std::move(s));
    if (!((sp * sp).scale(lambda) == w))
        return std::nullopt;
    return ScaledSquare{lambda, sp};
}

}  // namespace grshull
