/**************************************************************************
 * grs.hpp
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

#include <cstdint>
#include <optional>
#include <vector>

#include "grshull/gf.hpp"
#include "grshull/gfla.hpp"
#include "grshull/poly.hpp"

namespace grshull {

/// Enumeration budget for brute-force minimum distance: at most 2^20 codewords.
inline constexpr std::uint64_t kMdsBudget = std::uint64_t{1} << 20;

/// GRS_k(alpha, v) = {(v_1 f(alpha_1), ..., v_n f(alpha_n)) : deg f < k}.
///
/// Requires distinct alpha, nonzero v, 1 <= k < n < q and p not dividing n.
/// The column polynomial s (deg s < n, s(alpha_i) = 1/v_i) and
/// h = prod (z - alpha_i) are computed once at construction.
class GrsCode {
public:
    /// s_override, when given, must have degree < n and agree with 1/v on
    /// the nodes (ColumnPolyMismatch otherwise).
    static GrsCode create(FieldPtr field, std::vector<Elem> alpha, std::vector<Elem> v, int k,
                          const std::optional<Poly>& s_override = std::nullopt);
    /// Weights v_i = 1/s(alpha_i). RootOfSOnAlpha when s vanishes on a node.
    static GrsCode from_column_poly(FieldPtr field, std::vector<Elem> alpha, const Poly& s, int k);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Elem>& alpha() const noexcept { return alpha_; }
    const std::vector<Elem>& v() const noexcept { return v_; }
    int k() const noexcept { return k_; }
    int n() const noexcept { return static_cast<int>(alpha_.size()); }
    const Poly& s() const noexcept { return s_; }
    const Poly& h() const noexcept { return h_; }
    const Poly& h_prime() const noexcept { return h_prime_; }

    /// k x n, entry (j, i) = v_i alpha_i^j.
    Matrix generator_matrix() const;
    /// GRS_{n-k}(alpha, w) with w_i = s(alpha_i) / h'(alpha_i); its column
    /// polynomial interpolates h'(alpha_i) / s(alpha_i).
    GrsCode dual() const;

private:
    GrsCode() = default;

    FieldPtr field_;
    std::vector<Elem> alpha_;
    std::vector<Elem> v_;
    int k_ = 0;
    Poly s_;
    Poly h_;
    Poly h_prime_;
};

/// Minimum Hamming weight over the nonzero vectors of the row space of a
/// full-rank generator matrix. BudgetExceeded when q^rows > budget.
int min_distance_bruteforce(const Matrix& generator, std::uint64_t budget = kMdsBudget);
int min_distance_bruteforce(const GrsCode& code, std::uint64_t budget = kMdsBudget);

/// True when q^k fits the budget, so min_distance_bruteforce can run.
bool within_mds_budget(std::uint32_t q, int k, std::uint64_t budget = kMdsBudget);

}  // namespace grshull
