/**************************************************************************
 * selfdual.hpp
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
#include <functional>
#include <optional>
#include <vector>

#include "grshull/grs.hpp"
#include "grshull/poly.hpp"

namespace grshull {

/// u h + h' = lambda s^2 with s monic; the code on the roots of h with
/// v_i = 1/s(alpha_i) and k = n/2 is self-dual.
struct SelfDualCert {
    Poly h;
    Poly u;
    Elem lambda;
    Poly s;
    int k = 0;
};

/// lambda(z) s^2 == u h + h'. NonSplitH unless h is squarefree and splits
/// over the field.
bool verify_identity(const Poly& h, const Poly& u, const Poly& s, const Poly& lambda_poly);

/// GRS_k on the roots of h with v_i = 1/s(alpha_i), checked to be
/// self-orthogonal. ConditionUnmet names the failed requirement;
/// RootOfSOnAlpha when s vanishes on a root of h.
GrsCode construct_self_orthogonal(const Poly& h, const Poly& s, int k);

/// Self-dual [n, n/2] code from u h + h' = lambda s^2, or nullopt when the
/// right-hand side is not a scalar times a square. ConditionUnmet on bad
/// inputs (odd n, even q, u = 0, odd or too large deg u, non-split h).
std::optional<GrsCode> construct_self_dual(const Poly& h, const Poly& u);
std::optional<SelfDualCert> self_dual_certificate(const Poly& h, const Poly& u);

/// All certificates whose h has exactly the given roots. Every value of
/// s on the roots is fixed up to sign by lambda s(alpha_i)^2 = h'(alpha_i),
/// so the solutions are enumerated by sign patterns.
std::vector<SelfDualCert> self_dual_certificates_for_roots(const FieldPtr& field, const std::vector<Elem>& roots);
/// The certificate for one sign pattern: bit i - 1 of mask negates the value
/// of s at roots[i]. nullopt when the roots admit no certificate at all.
std::optional<SelfDualCert> self_dual_certificate_for_signs(const FieldPtr& field, const std::vector<Elem>& roots,
                                                            std::uint64_t mask);

struct SelfDualSearchStats {
    bool exhaustive = false;
    std::uint64_t subsets_tried = 0;
    std::uint64_t certificates = 0;
    std::uint64_t odd_degree_hits = 0;
};

/// Tries root subsets of size n: all of them, in canonical order, when
/// C(q, n) <= budget, otherwise `budget` subsets drawn with a seeded
/// generator. Every certificate is re-verified with construct_self_dual
/// before it reaches the sink. BadParameters for even q, odd n or
/// n outside [2, q - 1].
SelfDualSearchStats search_self_dual(const FieldPtr& field, int n, std::uint64_t budget, std::uint64_t seed,
                                     const std::function<void(const SelfDualCert&)>& sink);
std::vector<SelfDualCert> search_self_dual(const FieldPtr& field, int n, std::uint64_t budget, std::uint64_t seed);

/// C(n, r), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r) noexcept;

}  // namespace grshull
