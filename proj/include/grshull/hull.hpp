/**************************************************************************
 * hull.hpp
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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grshull/gfla.hpp"
#include "grshull/grs.hpp"
#include "grshull/poly.hpp"

namespace grshull {

/// Which description of the hull applies to a code.
///
/// With mu = deg s, delta = deg d and epsilon as in HullSetup:
///   ClosedFormLow   k + eps - delta - 1 < mu  and  2 mu < 2k + eps
///   ClosedFormHigh  2k + eps <= 2 mu          and  mu < k + delta + 1
///   MatrixLow       neither window, 2 mu < 2k + eps
///   MatrixHigh      neither window, 2 mu >= 2k + eps
/// The closed-form windows additionally require 2 delta + 2 > eps.
enum class HullCase { ClosedFormLow, ClosedFormHigh, MatrixLow, MatrixHigh };

enum class Classification { LCD, SelfOrthogonal, DualContaining, SelfDual, Generic };

enum class GrsStatus {
    ZeroCode,   // hull is {0}
    Certified,  // an explicit GRS description of the hull was verified
    NotGrs,     // proven not to be a GRS code
    Unknown,
};

std::string_view to_string(HullCase c) noexcept;
std::string_view to_string(Classification c) noexcept;
std::string_view to_string(GrsStatus s) noexcept;
HullCase parse_hull_case(std::string_view text);
Classification parse_classification(std::string_view text);
GrsStatus parse_grs_status(std::string_view text);

/// Polynomial data attached to a code: s t = u h + h', epsilon = -1 when
/// u = 0 and deg u otherwise, d = gcd(s, t), l = lcm(s, t).
struct HullSetup {
    GrsCode code;
    Poly t{};
    Poly u{};
    int epsilon = 0;
    Poly d{};
    Poly l{};
    int mu = 0;
    int nu = 0;
    int delta = 0;
    int gamma = 0;        // k + eps - mu - delta - 1
    int gamma_prime = 0;  // mu - k - delta - 1
    HullCase hull_case = HullCase::MatrixLow;

    /// 2 mu < 2k + eps.
    bool low_side() const noexcept { return 2 * mu < 2 * code.k() + epsilon; }
    bool closed_form() const noexcept {
        return hull_case == HullCase::ClosedFormLow || hull_case == HullCase::ClosedFormHigh;
    }
    /// gamma on the low side, gamma' on the high side.
    int gamma_used() const noexcept { return low_side() ? gamma : gamma_prime; }
};

/// InternalInconsistency when s t - h' is not divisible by h.
HullSetup hull_setup(const GrsCode& code);
/// Case tag from the integer parameters alone.
HullCase classify_case(int k, int mu, int delta, int epsilon) noexcept;

/// Basis of the hull as the dual of code + dual, where the dual is taken as
/// the nullspace of the generator matrix. Cross-checked against the
/// Zassenhaus intersection; OracleDisagreement if the two differ.
Matrix hull_oracle(const GrsCode& code);
Matrix hull_oracle_dual_of_sum(const GrsCode& code);
Matrix hull_oracle_intersection(const GrsCode& code);

struct ClosedFormHull {
    int dimension = 0;
    /// dimension x n, rows (alpha_i^j / d(alpha_i))_i.
    Matrix generator;
    /// GRS_dim(alpha, 1/d(alpha)) when dimension >= 1.
    std::optional<GrsCode> code;
};

/// Explicit hull in the closed-form cases, nullopt otherwise.
std::optional<ClosedFormHull> hull_closed_form(const HullSetup& setup);

struct StructuredSystem {
    Matrix a;  // height x n
    Matrix b;  // height x (gamma_used + 1)
    int gamma_used = 0;
};

/// Coefficient matrix on the side given by low_side(): height n + eps + k - mu
/// (low) or n + mu - k (high); left k columns t z^j, right n - k columns s z^j.
Matrix coefficient_matrix(const HullSetup& setup);
/// A together with B, whose column i holds the coefficients of d h z^i.
/// NegativeGamma when gamma_used < 0.
StructuredSystem build_system(const HullSetup& setup);

/// n + gamma_used + 1 - rank(A|B) in the matrix cases; 0 when gamma_used < 0;
/// the closed-form dimension in the closed-form cases.
int hull_dimension_formula(const HullSetup& setup);

/// Number of pairs (f, g), deg f < k, deg g < n - k, with f t = g s:
/// max(0, min(k - mu + delta, mu - k - eps + delta)). rank(A) = n minus this.
int coefficient_kernel_dimension(const HullSetup& setup) noexcept;

struct DependencyWitness {
    int index = 0;  // i with B_i dependent on A and the kept B_j
    Poly rbar;
    Poly f;
    Poly g;
    std::vector<Elem> hull_vector;  // (f(alpha_i) / s(alpha_i))_i
};

struct AlgorithmResult {
    std::vector<DependencyWitness> witnesses{};
    Matrix basis;  // one row per witness
    std::size_t rank_a = 0;
    std::size_t rank_ab = 0;
};

/// Incremental elimination over the columns of A, then B_0, B_1, ... in
/// order; every B_i that reduces to zero gives one witness with
/// f t - g s = rbar d h. Requires a matrix case (BadParameters otherwise).
/// WitnessVerificationFailed if a witness does not satisfy its identity.
AlgorithmResult hull_basis_algorithm(const HullSetup& setup);

/// Oracle-first classification of a given hull basis.
Classification classify_hull(const GrsCode& code, const Matrix& hull);

/// Hull dimension predicted by the specialized statements for
/// eps in {-1, 0, 1, 2}, when their window holds; nullopt otherwise.
std::optional<int> specialized_dimension(const HullSetup& setup) noexcept;

/// Sufficient conditions that force a classification, checked against the
/// given oracle result. Returns one message per violated condition.
std::vector<std::string> corollary_violations(const HullSetup& setup, int oracle_dimension, Classification oracle);

/// Number of sufficient conditions that applied to this setup.
int corollary_conditions_applicable(const HullSetup& setup) noexcept;

/// Oracle classification; TheoremViolation if any sufficient condition disagrees.
Classification classify(const GrsCode& code);

struct MethodResults {
    int oracle_dimension = 0;
    bool oracle_routes_agree = false;
    std::optional<int> closed_form_dimension;
    std::optional<bool> closed_form_matches;
    int formula_dimension = 0;
    std::optional<int> algorithm_dimension;
    std::optional<bool> algorithm_matches;
    std::optional<bool> witnesses_verified;
    std::size_t rank_a = 0;
    int expected_rank_a = 0;
    std::optional<int> specialized_dimension;
    std::vector<std::string> corollary_violations;
    std::vector<std::string> disagreements;

    bool all_agree() const noexcept { return disagreements.empty(); }
};

struct HullReport {
    HullSetup setup;
    int dimension = 0;
    Matrix basis{};
    Classification classification = Classification::Generic;
    GrsStatus grs_status = GrsStatus::Unknown;
    std::optional<GrsCode> grs_witness{};
    std::vector<DependencyWitness> witnesses{};
    MethodResults methods{};
};

/// Runs every method on the code and records agreement. Disagreements are
/// collected in methods.disagreements rather than thrown.
HullReport analyze(const GrsCode& code);

/// Human-readable multi-line report.
std::string format_report(const HullReport& report);

}  // namespace grshull
