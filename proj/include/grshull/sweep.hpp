/**************************************************************************
 * sweep.hpp
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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "grshull/hull.hpp"

namespace grshull {

struct SweepConfig {
    std::vector<unsigned> qs;
    int nmax = 12;
    int trials = 500;  // per q
    std::uint64_t seed = 7;
    unsigned threads = 0;  // 0: hardware concurrency
    std::uint64_t mds_budget = kMdsBudget;
};

/// How the weights of a random instance were drawn.
enum class SweepMode {
    RandomWeights,  // uniform nonzero v
    LowDegreeS,     // v = 1/s for a random s of degree at most 3
    FactorS,        // s a product of roots of u h + h', so gcd(s, t) is often nontrivial
    SquareS,        // u h + h' = lambda s^2, k random
};

std::string_view to_string(SweepMode m) noexcept;

/// Check counters; an instance contributes 0 or 1 to each.
struct SweepCounts {
    std::uint64_t oracle_route_failures = 0;
    std::uint64_t dimension_failures = 0;  // formula or closed-form dimension vs oracle
    std::uint64_t closed_form_checked = 0;
    std::uint64_t closed_form_rowspace_failures = 0;
    std::uint64_t algorithm_checked = 0;
    std::uint64_t algorithm_failures = 0;  // row space or witness identity
    std::uint64_t witnesses_checked = 0;
    std::uint64_t rank_a_matrix_checked = 0;
    std::uint64_t rank_a_matrix_failures = 0;       // rank(A) != n in a matrix case
    std::uint64_t rank_a_closed_form_deficient = 0;  // closed-form instance with rank(A) < n
    std::uint64_t rank_a_kernel_failures = 0;       // rank(A) != n - kernel dimension
    std::uint64_t mds_checked = 0;
    std::uint64_t mds_failures = 0;
    std::uint64_t corollary_instances = 0;  // at least one sufficient condition applied
    std::uint64_t theorem_violations = 0;
    std::uint64_t other_failures = 0;  // unexpected errors

    SweepCounts& operator+=(const SweepCounts& o) noexcept;
    /// Everything except rank_a_closed_form_deficient, which is informational.
    std::uint64_t discrepancies() const noexcept;
};

struct SweepInstance {
    unsigned q = 0;
    int trial = 0;
    SweepMode mode = SweepMode::RandomWeights;
    int n = 0;
    int k = 0;
    HullCase hull_case = HullCase::MatrixLow;
    int dimension = 0;
    Classification classification = Classification::Generic;
    SweepCounts counts{};
    std::vector<std::string> messages{};
    /// Code description that reproduces the instance.
    std::string spec{};
};

struct SweepSummary {
    std::uint64_t instances = 0;
    std::array<std::uint64_t, 4> per_case{};   // indexed by HullCase
    std::array<std::uint64_t, 5> per_class{};  // indexed by Classification
    std::array<std::uint64_t, 4> per_mode{};   // indexed by SweepMode
    SweepCounts counts{};
    double seconds = 0.0;
    /// Instances with any discrepancy, in (q, trial) order.
    std::vector<SweepInstance> failures{};
};

/// BadParameters when a q is not a prime power, exceeds 128, or admits no
/// valid length n in [2, min(q - 1, nmax)].
void validate_sweep(const SweepConfig& cfg);

/// One instance; deterministic in (seed, q, trial).
SweepInstance sweep_instance(unsigned q, int trial, const SweepConfig& cfg);

/// All instances, spread over threads; results are merged in (q, trial) order.
SweepSummary run_sweep(const SweepConfig& cfg);

std::string format_sweep_summary(const SweepSummary& s);

}  // namespace grshull
