/**************************************************************************
 * acceptance.cpp
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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// line fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "grshull/registry.hpp"
#include "grshull/selfdual.hpp"
#include "grshull/sweep.hpp"

using namespace grshull;

namespace {

constexpr double kExampleSeconds = 1.0;
constexpr double kExamplesTotalSeconds = 10.0;
constexpr double kSweepSeconds = 60.0;
constexpr double kSearchSeconds = 120.0;
constexpr int kSweepTrials = 500;
constexpr std::uint64_t kSweepSeed = 7;
constexpr std::uint64_t kSearchBudget = 250000;

int failures = 0;

void line(bool ok, const std::string& name, const std::string& detail) {
    std::printf("%s  %-44s %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    std::fflush(stdout);
    failures += !ok;
}

double since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

std::string u64(std::uint64_t x) { return std::to_string(x); }

void golden_examples() {
    double total = 0;
    for (const auto& e : example_registry()) {
        for (const auto& o : verify_example(e)) {
            total += o.seconds;
            std::string detail = "dim=" + std::to_string(o.dimension) + " " + std::string(to_string(o.classification)) +
                                 " " + fmt("%.3f s", o.seconds);
            for (const auto& f : o.failures)
                detail += "\n      " + f;
            if (!o.pass)
                for (const auto& n : o.notes)
                    detail += "\n      note: " + n;
            line(o.pass && o.seconds < kExampleSeconds, "example " + o.id + " k=" + std::to_string(o.k), detail);
        }
    }
    line(total < kExamplesTotalSeconds, "examples total runtime", fmt("%.3f s", total) + " < " + fmt("%.0f s", kExamplesTotalSeconds));
}

void sweep() {
    SweepConfig cfg;
    cfg.qs = {4, 5, 7, 8, 9, 11, 13, 16, 25};
    cfg.trials = kSweepTrials;
    cfg.seed = kSweepSeed;
    SweepSummary s = run_sweep(cfg);
    const SweepCounts& c = s.counts;
    const std::string of = " of " + u64(s.instances);
    for (const auto& f : s.failures)
        for (const auto& m : f.messages)
            std::printf("      q=%u trial=%d: %s\n", f.q, f.trial, m.c_str());
    line(s.instances == cfg.qs.size() * kSweepTrials && c.other_failures == 0, "sweep instances",
         u64(s.instances) + " instances, " + u64(c.other_failures) + " unexpected errors");
    line(c.oracle_route_failures == 0, "oracle routes agree", u64(c.oracle_route_failures) + " disagreements" + of);
    line(c.dimension_failures == 0, "hull dimension (formula and closed form)",
         u64(c.dimension_failures) + " mismatches" + of);
    line(c.closed_form_checked > 0 && c.closed_form_rowspace_failures == 0, "closed-form hull row space",
         u64(c.closed_form_rowspace_failures) + " mismatches of " + u64(c.closed_form_checked));
    line(c.algorithm_checked > 0 && c.algorithm_failures == 0, "algorithm row space and witnesses",
         u64(c.algorithm_failures) + " failures of " + u64(c.algorithm_checked) + ", " + u64(c.witnesses_checked) +
             " witnesses verified");
    line(c.rank_a_matrix_checked > 0 && c.rank_a_matrix_failures == 0, "rank(A) = n in the matrix cases",
         u64(c.rank_a_matrix_failures) + " failures of " + u64(c.rank_a_matrix_checked));
    line(c.rank_a_kernel_failures == 0, "rank(A) = n - kernel dimension everywhere",
         u64(c.rank_a_kernel_failures) + " failures" + of + "; " + u64(c.rank_a_closed_form_deficient) +
             " closed-form instances have rank(A) < n");
    line(c.mds_checked > 0 && c.mds_failures == 0, "minimum distance n - k + 1",
         u64(c.mds_failures) + " failures of " + u64(c.mds_checked));
    line(c.corollary_instances > 0 && c.theorem_violations == 0, "sufficient conditions for LCD/SO/DC/SD",
         u64(c.theorem_violations) + " violations over " + u64(c.corollary_instances) + " instances");
    line(s.seconds < kSweepSeconds, "sweep runtime", fmt("%.1f s", s.seconds) + " < " + fmt("%.0f s", kSweepSeconds));
}

struct Target {
    std::string h;
    std::string u;
    bool found = false;
};

void search(unsigned q, std::vector<Target> targets) {
    auto start = std::chrono::steady_clock::now();
    FieldPtr f = Field::of_order(q);
    std::vector<Poly> hs, us;
    for (const auto& t : targets) {
        hs.push_back(Poly::parse(f, t.h));
        us.push_back(Poly::parse(f, t.u));
    }
    std::uint64_t bad = 0, nonorthogonal = 0;
    SelfDualSearchStats st = search_self_dual(f, 4, kSearchBudget, 1, [&](const SelfDualCert& c) {
        // Independent re-multiplication and a direct G G^T = 0 check.
        Poly rhs = c.u * c.h + derivative(c.h);
        Poly lhs = (c.s * c.s).scale(c.lambda);
        bad += !(lhs == rhs);
        GrsCode code = GrsCode::from_column_poly(f, roots(c.h), c.s, c.k);
        Matrix g = code.generator_matrix();
        nonorthogonal += !(g * g.transpose()).is_zero();
        for (std::size_t i = 0; i < targets.size(); ++i)
            if (c.h == hs[i] && c.u == us[i])
                targets[i].found = true;
    });
    const double secs = since(start);
    const std::string tag = "self-dual search q=" + std::to_string(q) + " n=4";
    line(st.exhaustive && st.certificates > 0 && bad == 0 && nonorthogonal == 0, tag + " certificates",
         u64(st.subsets_tried) + " subsets, " + u64(st.certificates) + " certificates, " + u64(bad) +
             " identity failures, " + u64(nonorthogonal) + " not self-orthogonal");
    for (const auto& t : targets)
        line(t.found, tag + " finds h = " + t.h, "u = " + t.u);
    line(secs < kSearchSeconds, tag + " runtime", fmt("%.1f s", secs) + " < " + fmt("%.0f s", kSearchSeconds));
}

}  // namespace

int main() {
    try {
        golden_examples();
        sweep();
        search(25, {{"z^4 + g^5*z^3 + g^14*z^2 + g^23*z + g^8", "1"}, {"z^4 + g^23*z^3 + g^17*z^2 + 3*z + g^23", "1"}});
        search(49, {{"z^4 + z", "z^2"}});
    } catch (const std::exception& e) {
        line(false, "unexpected error", e.what());
    }
    std::printf("%d criteria failed\n", failures);
    return failures ? 1 : 0;
}
