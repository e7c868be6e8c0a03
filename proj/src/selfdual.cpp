/**************************************************************************
 * selfdual.cpp
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

#include "grshull/selfdual.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "grshull/hull.hpp"

namespace grshull {

bool verify_identity(const Poly& h, const Poly& u, const Poly& s, const Poly& lambda_poly) {
    if (!splits_squarefree(h))
        throw Error(ErrorKind::NonSplitH, "h = " + h.to_string() + " is not a product of distinct linear factors");
    return lambda_poly * s * s == u * h + derivative(h);
}

namespace {

void require_split(const Poly& h) {
    if (h.degree() < 2 || !splits_squarefree(h))
        throw Error(ErrorKind::ConditionUnmet, "h = " + h.to_string() + " must split into distinct linear factors");
}

}  // namespace

GrsCode construct_self_orthogonal(const Poly& h, const Poly& s, int k) {
    require_split(h);
    const FieldPtr& field = h.field();
    GrsCode code = GrsCode::from_column_poly(field, roots(h), s, k);
    HullSetup st = hull_setup(code);
    const int two_k_eps = 2 * k + st.epsilon;
    if (!(2 * st.delta + 2 > st.epsilon))
        throw Error(ErrorKind::ConditionUnmet, "2 deg d + 2 > eps fails: deg d = " + std::to_string(st.delta) +
                                                   ", eps = " + std::to_string(st.epsilon));
    if (!(two_k_eps <= 2 * st.mu))
        throw Error(ErrorKind::ConditionUnmet, "k + eps/2 <= deg s fails: 2k + eps = " + std::to_string(two_k_eps) +
                                                   " > 2 deg s = " + std::to_string(2 * st.mu));
    if (!(st.mu < k + st.delta + 1))
        throw Error(ErrorKind::ConditionUnmet, "deg s < k + deg d + 1 fails");
    if (!associates(st.d, code.s()))
        throw Error(ErrorKind::ConditionUnmet, "gcd(s, t) is not an associate of s");
    Classification c = classify_hull(code, hull_oracle(code));
    if (c != Classification::SelfOrthogonal && c != Classification::SelfDual)
        throw Error(ErrorKind::TheoremViolation, "constructed code is " + std::string(to_string(c)));
    return code;
}

std::optional<SelfDualCert> self_dual_certificate(const Poly& h, const Poly& u) {
    const FieldPtr& field = h.field();
    const int n = h.degree();
    if (field->characteristic() == 2)
        throw Error(ErrorKind::ConditionUnmet, "self-dual GRS codes need odd q here");
    if (n < 2 || n % 2 != 0)
        throw Error(ErrorKind::ConditionUnmet, "deg h = " + std::to_string(n) + " must be even");
    if (u.is_zero())
        throw Error(ErrorKind::ConditionUnmet, "u must be nonzero");
    if (u.degree() % 2 != 0 || u.degree() > n - 2)
        throw Error(ErrorKind::ConditionUnmet, "deg u = " + std::to_string(u.degree()) + " must be even and at most n - 2");
    require_split(h);

    auto sq = square_root(u * h + derivative(h));
    if (!sq)
        return std::nullopt;
    const int k = n / 2;
    if (sq->s.degree() != k + u.degree() / 2)
        return std::nullopt;
    return SelfDualCert{h, u, sq->lambda, sq->s, k};
}

std::optional<GrsCode> construct_self_dual(const Poly& h, const Poly& u) {
    auto cert = self_dual_certificate(h, u);
    if (!cert)
        return std::nullopt;
    if (!((cert->s * cert->s).scale(cert->lambda) == u * h + derivative(h)))
        throw Error(ErrorKind::InternalInconsistency, "square root does not re-multiply");
    GrsCode code = GrsCode::from_column_poly(h.field(), roots(h), cert->s, cert->k);
    Matrix g = code.generator_matrix();
    if (!row_space_equal(g, code.dual().generator_matrix()) || classify_hull(code, hull_oracle(code)) != Classification::SelfDual)
        throw Error(ErrorKind::TheoremViolation, "code from u h + h' = lambda s^2 is not self-dual");
    return code;
}

namespace {

struct SignSolver {
    FieldPtr field;
    std::vector<Elem> rts;
    Poly h;
    Poly hp;
    Elem lambda0;
    std::vector<Elem> root_vals;  // sqrt(h'(alpha_i) / lambda0)
};

std::optional<SignSolver> make_solver(const FieldPtr& field, const std::vector<Elem>& rts) {
    const Field& f = *field;
    const int n = static_cast<int>(rts.size());
    if (n < 2 || n % 2 != 0 || f.characteristic() == 2)
        return std::nullopt;
    SignSolver sv{field, rts, product_of_linears(field, rts), {}, f.one(), {}};
    sv.hp = derivative(sv.h);
    std::vector<Elem> hv(rts.size());
    for (std::size_t i = 0; i < rts.size(); ++i) {
        hv[i] = sv.hp.eval(rts[i]);
        if (hv[i].is_zero())
            return std::nullopt;
    }
    // lambda0 is 1 or the generator (a non-square), whichever makes every
    // h'(alpha_i) / lambda0 a square.
    sv.lambda0 = f.is_square(hv[0]) ? f.one() : f.generator();
    for (Elem x : hv) {
        auto r = f.sqrt(f.div(x, sv.lambda0));
        if (!r)
            return std::nullopt;
        sv.root_vals.push_back(*r);
    }
    return sv;
}

SelfDualCert solve_signs(const SignSolver& sv, std::uint64_t mask) {
    const Field& f = *sv.field;
    const std::size_t n = sv.rts.size();
    std::vector<Elem> vals(n);
    vals[0] = sv.root_vals[0];
    for (std::size_t i = 1; i < n; ++i)
        vals[i] = (mask >> (i - 1)) & 1 ? f.neg(sv.root_vals[i]) : sv.root_vals[i];
    Poly s0 = lagrange_interpolate(sv.field, sv.rts, vals);
    Elem c = s0.leading();
    Poly s = s0.monic();
    Elem lambda = f.mul(sv.lambda0, f.mul(c, c));
    Poly u = exact_div((s * s).scale(lambda) - sv.hp, sv.h);
    if (u.is_zero() || 2 * s.degree() != static_cast<int>(n) + u.degree())
        throw Error(ErrorKind::InternalInconsistency, "sign-pattern solution violates the degree relation");
    return SelfDualCert{sv.h, u, lambda, s, static_cast<int>(n) / 2};
}

}  // namespace

std::vector<SelfDualCert> self_dual_certificates_for_roots(const FieldPtr& field, const std::vector<Elem>& rts) {
    std::vector<SelfDualCert> out;
    auto sv = make_solver(field, rts);
    if (!sv)
        return out;
    const std::uint64_t patterns = std::uint64_t{1} << (rts.size() - 1);
    for (std::uint64_t mask = 0; mask < patterns; ++mask)
        out.push_back(solve_signs(*sv, mask));
    return out;
}

std::optional<SelfDualCert> self_dual_certificate_for_signs(const FieldPtr& field, const std::vector<Elem>& rts,
                                                            std::uint64_t mask) {
    auto sv = make_solver(field, rts);
    if (!sv)
        return std::nullopt;
    return solve_signs(*sv, mask);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) noexcept {
    if (r > n)
        return 0;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(acc);
}

SelfDualSearchStats search_self_dual(const FieldPtr& field, int n, std::uint64_t budget, std::uint64_t seed,
                                     const std::function<void(const SelfDualCert&)>& sink) {
    const Field& f = *field;
    if (f.characteristic() == 2)
        throw Error(ErrorKind::BadParameters, "no self-dual GRS codes with gcd(n, q) = 1 for even q = " + std::to_string(f.order()));
    if (n < 2 || n % 2 != 0 || static_cast<std::uint32_t>(n) > f.order() - 1)
        throw Error(ErrorKind::BadParameters, "n = " + std::to_string(n) + " must be even and in [2, q - 1]");
    if (static_cast<unsigned>(n) % f.characteristic() == 0)
        throw Error(ErrorKind::BadParameters, "characteristic divides n = " + std::to_string(n));

    const std::vector<Elem> elems = f.elements();
    const std::size_t q = elems.size();
    SelfDualSearchStats stats;
    auto run = [&](const std::vector<Elem>& subset) {
        ++stats.subsets_tried;
        for (const auto& cert : self_dual_certificates_for_roots(field, subset)) {
            if (cert.u.degree() % 2 != 0) {
                ++stats.odd_degree_hits;
                continue;
            }
            auto code = construct_self_dual(cert.h, cert.u);
            if (!code)
                throw Error(ErrorKind::InternalInconsistency, "certificate failed re-verification: h = " + cert.h.to_string());
            ++stats.certificates;
            sink(cert);
        }
    };

    const std::uint64_t total = binomial(q, static_cast<std::uint64_t>(n));
    std::vector<Elem> subset(static_cast<std::size_t>(n));
    if (total <= budget) {
        stats.exhaustive = true;
        std::vector<std::size_t> idx(static_cast<std::size_t>(n));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            for (std::size_t i = 0; i < idx.size(); ++i)
                subset[i] = elems[idx[i]];
            run(subset);
            std::size_t i = idx.size();
            while (i > 0 && idx[i - 1] == q - idx.size() + i - 1)
                --i;
            if (i == 0)
                break;
            ++idx[i - 1];
            for (std::size_t j = i; j < idx.size(); ++j)
                idx[j] = idx[j - 1] + 1;
        }
        return stats;
    }

    std::mt19937_64 rng(seed);
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::size_t> perm(q);
    for (std::uint64_t trial = 0; trial < budget; ++trial) {
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, q - 1);
            std::swap(perm[i], perm[pick(rng)]);
        }
        std::vector<std::size_t> chosen(perm.begin(), perm.begin() + n);
        std::sort(chosen.begin(), chosen.end());
        if (!seen.insert(chosen).second)
            continue;
        for (std::size_t i = 0; i < chosen.size(); ++i)
            subset[i] = elems[chosen[i]];
        run(subset);
    }
    return stats;
}

std::vector<SelfDualCert> search_self_dual(const FieldPtr& field, int n, std::uint64_t budget, std::uint64_t seed) {
    std::vector<SelfDualCert> out;
    search_self_dual(field, n, budget, seed, [&](const SelfDualCert& c) { out.push_back(c); });
    return out;
}

}  // namespace grshull
