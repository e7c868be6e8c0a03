/**************************************************************************
 * gf.hpp
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

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grshull/error.hpp"

namespace grshull {

/// An element of GF(p^m) in residue form: the coefficient vector of the
/// residue polynomial packed in base p, constant term in the lowest digit.
/// Zero is value 0 and one is value 1 in every field.
struct Elem {
    std::uint32_t value = 0;

    constexpr bool is_zero() const noexcept { return value == 0; }

    friend constexpr bool operator==(Elem, Elem) noexcept = default;
    friend constexpr auto operator<=>(Elem, Elem) noexcept = default;
};

enum class ArithOp { Add, Sub, Mul, Div };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Finite field GF(p^m), p prime, p^m <= 2^16.
///
/// The modulus is the Conway polynomial when the built-in table has one for
/// (p, m); the generator is then the residue class of z. Otherwise the least
/// monic irreducible polynomial is used and the generator is the least
/// element of full multiplicative order. For m = 1 the generator is the least
/// primitive root mod p.
///
/// Multiplication and division go through exp/log tables. Instances are
/// immutable and cached, so create() for the same (p, m) returns the same
/// object.
class Field {
public:
    static constexpr std::uint32_t kMaxOrder = 1u << 16;

    static FieldPtr create(unsigned p, unsigned m);
    /// Splits q into p^m first. Throws NotPrime when q is not a prime power.
    static FieldPtr of_order(std::uint32_t q);

    unsigned characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return m_; }
    std::uint32_t order() const noexcept { return q_; }
    /// Monic modulus, ascending coefficients in [0, p), length m + 1.
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
    bool uses_conway_modulus() const noexcept { return conway_; }
    Elem generator() const noexcept { return exp_[1 % (q_ - 1)]; }
    std::string name() const;

    Elem zero() const noexcept { return Elem{0}; }
    Elem one() const noexcept { return Elem{1}; }
    /// Image of an integer in the prime subfield.
    Elem from_int(long long value) const noexcept;
    bool contains(Elem a) const noexcept { return a.value < q_; }

    /// generator^e, exponent reduced mod q - 1.
    Elem gen_pow(long long e) const noexcept;
    /// Discrete log base the generator, in [0, q - 2]. Throws DivisionByZero for 0.
    std::uint32_t log(Elem a) const;

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept {
        if (a.value == 0 || b.value == 0)
            return Elem{0};
        return exp_[log_[a.value] + log_[b.value]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, long long e) const;
    /// Range-checked entry point for the four operations; FieldMismatch when an
    /// operand is not an element of this field.
    Elem arith(ArithOp op, Elem a, Elem b) const;

    /// a^p.
    Elem frobenius(Elem a) const noexcept;
    bool is_square(Elem a) const noexcept;
    std::optional<Elem> sqrt(Elem a) const;

    /// 0 first, then generator^0 ... generator^(q-2).
    std::vector<Elem> elements() const;

    /// "0", "1", "g^e" (extension fields) or a decimal residue (prime fields).
    std::string format(Elem a) const;
    /// Accepts "0", "g", "g^e" (negative e allowed), "γ^e", and decimal
    /// integers, which map into the prime subfield.
    Elem parse(std::string_view text) const;

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
    }

private:
    Field(unsigned p, unsigned m);

    unsigned p_;
    unsigned m_;
    std::uint32_t q_;
    bool conway_ = false;
    std::vector<unsigned> modulus_;
    std::vector<Elem> exp_;              // length 2(q-1) so exp_[i+j] needs no reduction
    std::vector<std::uint32_t> log_;     // log_[0] unused
    std::vector<std::uint16_t> add_table_;  // q*q entries when q is small
    std::vector<Elem> neg_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;

/// Conway polynomial for (p, m) from the built-in table, ascending
/// coefficients, or nullopt when the table has no entry.
std::optional<std::vector<unsigned>> conway_polynomial(unsigned p, unsigned m);

bool is_prime(std::uint64_t n) noexcept;

}  // namespace grshull
