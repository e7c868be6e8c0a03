/**************************************************************************
 * gf.cpp
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

#include "grshull/gf.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <utility>

namespace grshull {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::UnsupportedSize: return "UnsupportedSize";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::DuplicateNode: return "DuplicateNode";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DuplicateAlpha: return "DuplicateAlpha";
    case ErrorKind::ZeroWeight: return "ZeroWeight";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::CharDividesLength: return "CharDividesLength";
    case ErrorKind::ColumnPolyMismatch: return "ColumnPolyMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::OracleDisagreement: return "OracleDisagreement";
    case ErrorKind::NegativeGamma: return "NegativeGamma";
    case ErrorKind::WitnessVerificationFailed: return "WitnessVerificationFailed";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::NonSplitH: return "NonSplitH";
    case ErrorKind::ConditionUnmet: return "ConditionUnmet";
    case ErrorKind::RootOfSOnAlpha: return "RootOfSOnAlpha";
    case ErrorKind::BadParameters: return "BadParameters";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

namespace {

using Digits = std::vector<unsigned>;

// Conway polynomials, ascending coefficients, leading 1 included.
struct ConwayEntry {
    unsigned p;
    unsigned m;
    std::vector<unsigned> coeffs;
};

const std::vector<ConwayEntry>& conway_table() {
    static const std::vector<ConwayEntry> table = {
        {2, 2, {1, 1, 1}},
        {2, 3, {1, 1, 0, 1}},
        {2, 4, {1, 1, 0, 0, 1}},
        {2, 5, {1, 0, 1, 0, 0, 1}},
        {2, 6, {1, 1, 0, 1, 1, 0, 1}},
        {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
        {3, 2, {2, 2, 1}},
        {3, 3, {1, 2, 0, 1}},
        {3, 4, {2, 0, 0, 2, 1}},
        {5, 2, {2, 4, 1}},
        {5, 3, {3, 3, 0, 1}},
        {7, 2, {3, 6, 1}},
        {11, 2, {2, 7, 1}},
    };
    return table;
}

// Residue arithmetic on digit vectors, used only while building tables.
Digits mulmod(const Digits& a, const Digits& b, const Digits& modulus, unsigned p) {
    const std::size_t m = modulus.size() - 1;
    std::vector<unsigned> prod(2 * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < m; ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (std::size_t i = prod.size(); i-- > m;) {
        unsigned c = prod[i];
        if (c == 0)
            continue;
        // z^i = z^(i-m) * z^m and z^m = -sum modulus[j] z^j
        for (std::size_t j = 0; j < m; ++j)
            prod[i - m + j] = (prod[i - m + j] + (p - c) * modulus[j]) % p;
        prod[i] = 0;
    }
    prod.resize(m);
    return prod;
}

std::uint32_t pack(const Digits& d, unsigned p) {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;)
        v = v * p + d[i];
    return v;
}

Digits unpack(std::uint32_t v, unsigned p, unsigned m) {
    Digits d(m, 0);
    for (unsigned i = 0; i < m; ++i) {
        d[i] = v % p;
        v /= p;
    }
    return d;
}

// Remainder of a by monic b over GF(p); both ascending, b.back() == 1.
Digits poly_mod_p(Digits a, const Digits& b, unsigned p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        unsigned c = a.back();
        if (c != 0) {
            std::size_t shift = a.size() - 1 - db;
            for (std::size_t j = 0; j <= db; ++j)
                a[shift + j] = (a[shift + j] + (p - c) * b[j]) % p;
        }
        a.pop_back();
    }
    return a;
}

bool irreducible_by_trial_division(const Digits& modulus, unsigned p) {
    const unsigned m = static_cast<unsigned>(modulus.size() - 1);
    for (unsigned d = 1; 2 * d <= m; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i)
            count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Digits divisor = unpack(static_cast<std::uint32_t>(idx), p, d);
            divisor.push_back(1);
            Digits r = poly_mod_p(modulus, divisor, p);
            if (std::all_of(r.begin(), r.end(), [](unsigned c) { return c == 0; }))
                return false;
        }
    }
    return true;
}

// Multiplicative order of x in GF(p)[z]/(modulus), or 0 when x is not a unit
// reachable within q - 1 steps.
std::uint32_t residue_order(const Digits& x, const Digits& modulus, unsigned p, std::uint32_t q) {
    const unsigned m = static_cast<unsigned>(modulus.size() - 1);
    Digits one(m, 0);
    one[0] = 1 % p;
    Digits acc = x;
    for (std::uint32_t e = 1; e < q; ++e) {
        if (acc == one)
            return e;
        acc = mulmod(acc, x, modulus, p);
    }
    return 0;
}

std::map<std::pair<unsigned, unsigned>, FieldPtr>& field_cache() {
    static std::map<std::pair<unsigned, unsigned>, FieldPtr> cache;
    return cache;
}

std::mutex& field_cache_mutex() {
    static std::mutex mu;
    return mu;
}

}  // namespace

std::optional<std::vector<unsigned>> conway_polynomial(unsigned p, unsigned m) {
    for (const auto& e : conway_table())
        if (e.p == p && e.m == m)
            return e.coeffs;
    return std::nullopt;
}

FieldPtr Field::create(unsigned p, unsigned m) {
    if (!is_prime(p))
        throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (m == 0)
        throw Error(ErrorKind::BadParameters, "extension degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder)
            throw Error(ErrorKind::UnsupportedSize,
                        "field order " + std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^16");
    }
    std::lock_guard lock(field_cache_mutex());
    auto& cache = field_cache();
    if (auto it = cache.find({p, m}); it != cache.end())
        return it->second;
    FieldPtr f(new Field(p, m));
    cache.emplace(std::make_pair(p, m), f);
    return f;
}

FieldPtr Field::of_order(std::uint32_t q) {
    if (q < 2)
        throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
    unsigned p = 0;
    for (std::uint32_t d = 2; d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    unsigned m = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1)
        throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
    return create(p, m);
}

Field::Field(unsigned p, unsigned m) : p_(p), m_(m), q_(1) {
    for (unsigned i = 0; i < m; ++i)
        q_ *= p;

    Digits gen;
    if (m == 1) {
        // Least primitive root; modulus z - g.
        for (unsigned g = 1; g < p; ++g) {
            if (residue_order(Digits{g}, Digits{0, 1}, p, q_) == q_ - 1 || p == 2) {
                gen = Digits{g};
                modulus_ = {(p - g) % p, 1};
                break;
            }
        }
    } else {
        if (auto c = conway_polynomial(p, m)) {
            modulus_ = *c;
            conway_ = true;
            if (!irreducible_by_trial_division(modulus_, p))
                throw Error(ErrorKind::InternalInconsistency, "Conway table entry is reducible");
        } else {
            // Least monic irreducible, comparing coefficients from z^(m-1) down.
            for (std::uint32_t idx = 0; idx < q_; ++idx) {
                Digits cand = unpack(idx, p, m);
                cand.push_back(1);
                if (cand[0] != 0 && irreducible_by_trial_division(cand, p)) {
                    modulus_ = std::move(cand);
                    break;
                }
            }
        }
        Digits z(m, 0);
        z[1] = 1;
        if (residue_order(z, modulus_, p, q_) == q_ - 1) {
            gen = z;
        } else {
            if (conway_)
                throw Error(ErrorKind::InternalInconsistency, "Conway table entry is not primitive");
            for (std::uint32_t v = 2; v < q_; ++v) {
                Digits cand = unpack(v, p, m);
                if (residue_order(cand, modulus_, p, q_) == q_ - 1) {
                    gen = std::move(cand);
                    break;
                }
            }
        }
    }

    exp_.resize(2 * (q_ - 1));
    log_.assign(q_, 0);
    Digits acc(m, 0);
    acc[0] = 1;
    for (std::uint32_t e = 0; e < q_ - 1; ++e) {
        std::uint32_t v = pack(acc, p);
        exp_[e] = Elem{v};
        exp_[e + q_ - 1] = Elem{v};
        log_[v] = e;
        acc = (m == 1) ? Digits{(acc[0] * gen[0]) % p} : mulmod(acc, gen, modulus_, p);
    }
    if (exp_[0].value != 1 || pack(acc, p) != 1)
        throw Error(ErrorKind::InternalInconsistency, "generator does not have order q - 1");

    neg_.resize(q_);
    for (std::uint32_t v = 0; v < q_; ++v) {
        Digits d = unpack(v, p, m);
        for (auto& c : d)
            c = (p - c) % p;
        neg_[v] = Elem{pack(d, p)};
    }
    if (p != 2 && m > 1 && q_ <= 256) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (std::uint32_t a = 0; a < q_; ++a) {
            Digits da = unpack(a, p, m);
            for (std::uint32_t b = 0; b < q_; ++b) {
                Digits db = unpack(b, p, m);
                Digits s(m);
                for (unsigned i = 0; i < m; ++i)
                    s[i] = (da[i] + db[i]) % p;
                add_table_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(pack(s, p));
            }
        }
    }
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

Elem Field::from_int(long long value) const noexcept {
    long long r = value % static_cast<long long>(p_);
    if (r < 0)
        r += p_;
    return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::gen_pow(long long e) const noexcept {
    long long n = static_cast<long long>(q_) - 1;
    long long r = e % n;
    if (r < 0)
        r += n;
    return exp_[static_cast<std::size_t>(r)];
}

std::uint32_t Field::log(Elem a) const {
    if (a.is_zero())
        throw Error(ErrorKind::DivisionByZero, "log of zero");
    return log_[a.value];
}

Elem Field::add(Elem a, Elem b) const noexcept {
    if (p_ == 2)
        return Elem{a.value ^ b.value};
    if (m_ == 1) {
        std::uint32_t s = a.value + b.value;
        return Elem{s >= p_ ? s - p_ : s};
    }
    if (!add_table_.empty())
        return Elem{add_table_[static_cast<std::size_t>(a.value) * q_ + b.value]};
    std::uint32_t x = a.value, y = b.value, out = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        out += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return Elem{out};
}

Elem Field::neg(Elem a) const noexcept { return neg_[a.value]; }

Elem Field::inv(Elem a) const {
    if (a.is_zero())
        throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return exp_[(q_ - 1 - log_[a.value]) % (q_ - 1)];
}

Elem Field::div(Elem a, Elem b) const {
    if (b.is_zero())
        throw Error(ErrorKind::DivisionByZero, "division by zero");
    if (a.is_zero())
        return a;
    return exp_[log_[a.value] + (q_ - 1 - log_[b.value])];
}

Elem Field::pow(Elem a, long long e) const {
    if (a.is_zero()) {
        if (e < 0)
            throw Error(ErrorKind::DivisionByZero, "negative power of zero");
        return e == 0 ? one() : zero();
    }
    long long n = static_cast<long long>(q_) - 1;
    long long r = (static_cast<long long>(log_[a.value]) * (e % n)) % n;
    if (r < 0)
        r += n;
    return exp_[static_cast<std::size_t>(r)];
}

Elem Field::arith(ArithOp op, Elem a, Elem b) const {
    if (!contains(a) || !contains(b))
        throw Error(ErrorKind::FieldMismatch, "operand is not an element of " + name());
    switch (op) {
    case ArithOp::Add: return add(a, b);
    case ArithOp::Sub: return sub(a, b);
    case ArithOp::Mul: return mul(a, b);
    case ArithOp::Div: return div(a, b);
    }
    return zero();
}

Elem Field::frobenius(Elem a) const noexcept {
    if (a.is_zero())
        return a;
    return exp_[(static_cast<std::uint64_t>(log_[a.value]) * p_) % (q_ - 1)];
}

bool Field::is_square(Elem a) const noexcept {
    if (a.is_zero() || p_ == 2)
        return true;
    return log_[a.value] % 2 == 0;
}

std::optional<Elem> Field::sqrt(Elem a) const {
    if (a.is_zero())
        return a;
    std::uint32_t l = log_[a.value];
    if (p_ == 2)  // squaring is bijective; its inverse is x -> x^(q/2)
        return exp_[(static_cast<std::uint64_t>(l) * (q_ / 2)) % (q_ - 1)];
    if (l % 2 != 0)
        return std::nullopt;
    return exp_[l / 2];
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out;
    out.reserve(q_);
    out.push_back(zero());
    for (std::uint32_t e = 0; e < q_ - 1; ++e)
        out.push_back(exp_[e]);
    return out;
}

std::string Field::format(Elem a) const {
    if (a.is_zero())
        return "0";
    if (m_ == 1)
        return std::to_string(a.value);
    if (a.value == 1)
        return "1";
    return "g^" + std::to_string(log_[a.value]);
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::optional<long long> parse_int(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        return std::nullopt;
    return v;
}

}  // namespace

Elem Field::parse(std::string_view text) const {
    std::string_view s = trim(text);
    if (s.empty())
        throw Error(ErrorKind::ParseError, "empty field element");
    std::string_view rest;
    if (s.front() == 'g')
        rest = s.substr(1);
    else if (s.starts_with("γ"))
        rest = s.substr(std::string_view("γ").size());
    else if (auto v = parse_int(s))
        return from_int(*v);
    else
        throw Error(ErrorKind::ParseError, "cannot parse field element '" + std::string(s) + "'");

    rest = trim(rest);
    if (rest.empty())
        return generator();
    if (rest.front() != '^')
        throw Error(ErrorKind::ParseError, "expected '^' in field element '" + std::string(s) + "'");
    rest.remove_prefix(1);
    rest = trim(rest);
    if (!rest.empty() && rest.front() == '(' && rest.back() == ')')
        rest = rest.substr(1, rest.size() - 2);
    auto e = parse_int(rest);
    if (!e)
        throw Error(ErrorKind::ParseError, "bad exponent in field element '" + std::string(s) + "'");
    return gen_pow(*e);
}

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
    return a == b || (a && b && *a == *b);
}

}  // namespace grshull
