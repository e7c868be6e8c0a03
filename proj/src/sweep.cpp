/**************************************************************************
 * sweep.cpp
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

#include "grshull/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include "grshull/codespec.hpp"
#include "grshull/selfdual.hpp"

namespace grshull {

std::string_view to_string(SweepMode m) noexcept {
    switch (m) {
    case SweepMode::RandomWeights:
        return "RandomWeights";
    case SweepMode::LowDegreeS:
        return "LowDegreeS";
    case SweepMode::FactorS:
        return "FactorS";
    case SweepMode::SquareS:
        return "SquareS";
    }
    return "?";
}

SweepCounts& SweepCounts::operator+=(const SweepCounts& o) noexcept {
    oracle_route_failures += o.oracle_route_failures;
    dimension_failures += o.dimension_failures;
    closed_form_checked += o.closed_form_checked;
    closed_form_rowspace_failures += o.closed_form_rowspace_failures;
    algorithm_checked += o.algorithm_checked;
    algorithm_failures += o.algorithm_failures;
    witnesses_checked += o.witnesses_checked;
    rank_a_matrix_checked += o.rank_a_matrix_checked;
    rank_a_matrix_failures += o.rank_a_matrix_failures;
    rank_a_closed_form_deficient += o.rank_a_closed_form_deficient;
    rank_a_kernel_failures += o.rank_a_kernel_failures;
    mds_checked += o.mds_checked;
    mds_failures += o.mds_failures;
    corollary_instances += o.corollary_instances;
    theorem_violations += o.theorem_violations;
    other_failures += o.other_failures;
    return *this;
}

std::uint64_t SweepCounts::discrepancies() const noexcept {
    return oracle_route_failures + dimension_failures + closed_form_rowspace_failures + algorithm_failures +
           rank_a_matrix_failures + rank_a_kernel_failures + mds_failures + theorem_violations + other_failures;
}

namespace {

std::vector<int> valid_lengths(const Field& f, int nmax) {
    std::vector<int> out;
    const int top = std::min<int>(static_cast<int>(f.order()) - 1, nmax);
    for (int n = 2; n <= top; ++n)
        if (n % static_cast<int>(f.characteristic()) != 0)
            out.push_back(n);
    return out;
}

template <class Rng>
Elem random_nonzero(const Field& f, Rng& rng) {
    std::uniform_int_distribution<long long> d(0, static_cast<long long>(f.order()) - 2);
    return f.gen_pow(d(rng));
}

template <class Rng>
Elem random_elem(const Field& f, Rng& rng) {
    std::uniform_int_distribution<std::uint32_t> d(0, f.order() - 1);
    return Elem{d(rng)};
}

bool nonzero_on(const Poly& s, const std::vector<Elem>& alpha) {
    return std::none_of(alpha.begin(), alpha.end(), [&](Elem a) { return s.eval(a).is_zero(); });
}

template <class Rng>
std::optional<Poly> low_degree_s(const FieldPtr& field, const std::vector<Elem>& alpha, Rng& rng) {
    const Field& f = *field;
    const int top = std::min<int>(3, static_cast<int>(alpha.size()) - 1);
    std::uniform_int_distribution<int> deg(0, top);
    for (int attempt = 0; attempt < 50; ++attempt) {
        int d = deg(rng);
        Poly s = Poly::monomial(field, random_nonzero(f, rng), d);
        for (int j = 0; j < d; ++j)
            s = s + Poly::monomial(field, random_elem(f, rng), j);
        if (nonzero_on(s, alpha))
            return s;
    }
    return std::nullopt;
}

// s built from roots of u h + h' (with multiplicity), none of which is a node.
template <class Rng>
Poly factor_s(const FieldPtr& field, const std::vector<Elem>& alpha, Rng& rng) {
    const Field& f = *field;
    const int n = static_cast<int>(alpha.size());
    Poly h = product_of_linears(field, alpha);
    std::uniform_int_distribution<int> udeg(-1, 2);
    int du = udeg(rng);
    Poly u = Poly::zero(field);
    if (du >= 0) {
        u = Poly::monomial(field, random_nonzero(f, rng), du);
        for (int j = 0; j < du; ++j)
            u = u + Poly::monomial(field, random_elem(f, rng), j);
    }
    Poly w = u * h + derivative(h);
    std::vector<Elem> pool;
    for (Elem r : roots(w)) {
        Poly rest = w;
        Poly lin = Poly::linear(field, r);
        while (true) {
            DivMod dm = divmod(rest, lin);
            if (!dm.remainder.is_zero())
                break;
            pool.push_back(r);
            rest = dm.quotient;
        }
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    std::uniform_int_distribution<std::size_t> take(0, std::min<std::size_t>(pool.size(), static_cast<std::size_t>(n - 1)));
    pool.resize(take(rng));
    Poly s = Poly::constant(field, random_nonzero(f, rng));
    for (Elem r : pool)
        s = s * Poly::linear(field, r);
    return s;
}

void check(SweepInstance& inst, const GrsCode& code, const SweepConfig& cfg) {
    SweepCounts& c = inst.counts;
    HullReport rep = analyze(code);
    const MethodResults& m = rep.methods;
    const HullSetup& st = rep.setup;
    inst.hull_case = st.hull_case;
    inst.dimension = rep.dimension;
    inst.classification = rep.classification;
    for (const auto& d : m.disagreements)
        inst.messages.push_back(d);

    if (!m.oracle_routes_agree)
        c.oracle_route_failures = 1;
    if (m.formula_dimension != m.oracle_dimension ||
        (m.closed_form_dimension && *m.closed_form_dimension != m.oracle_dimension))
        c.dimension_failures = 1;
    if (st.closed_form()) {
        c.closed_form_checked = 1;
        if (!m.closed_form_matches.value_or(false))
            c.closed_form_rowspace_failures = 1;
        if (static_cast<int>(m.rank_a) < code.n())
            c.rank_a_closed_form_deficient = 1;
    } else {
        c.algorithm_checked = 1;
        c.witnesses_checked = rep.witnesses.size();
        if (!m.algorithm_matches.value_or(false) || !m.witnesses_verified.value_or(false))
            c.algorithm_failures = 1;
        c.rank_a_matrix_checked = 1;
        if (m.rank_a != static_cast<std::size_t>(code.n()))
            c.rank_a_matrix_failures = 1;
    }
    if (static_cast<int>(m.rank_a) != m.expected_rank_a)
        c.rank_a_kernel_failures = 1;

    if (within_mds_budget(code.field()->order(), code.k(), cfg.mds_budget)) {
        c.mds_checked = 1;
        int d = min_distance_bruteforce(code, cfg.mds_budget);
        if (d != code.n() - code.k() + 1) {
            c.mds_failures = 1;
            inst.messages.push_back("minimum distance " + std::to_string(d) + ", expected " +
                                    std::to_string(code.n() - code.k() + 1));
        }
    }

    if (corollary_conditions_applicable(st) > 0)
        c.corollary_instances = 1;
    if (!m.corollary_violations.empty())
        c.theorem_violations = 1;
}

}  // namespace

void validate_sweep(const SweepConfig& cfg) {
    if (cfg.trials < 0)
        throw Error(ErrorKind::BadParameters, "trials must be non-negative");
    if (cfg.nmax < 2)
        throw Error(ErrorKind::BadParameters, "nmax must be at least 2");
    for (unsigned q : cfg.qs) {
        if (q < 3 || q > 128)
            throw Error(ErrorKind::BadParameters, "q = " + std::to_string(q) + " must be a prime power in [3, 128]");
        FieldPtr f;
        try {
            f = Field::of_order(q);
        } catch (const Error& e) {
            throw Error(ErrorKind::BadParameters, "q = " + std::to_string(q) + " is not a prime power (" + e.what() + ")");
        }
        if (valid_lengths(*f, cfg.nmax).empty())
            throw Error(ErrorKind::BadParameters, "no valid length n for q = " + std::to_string(q));
    }
}

SweepInstance sweep_instance(unsigned q, int trial, const SweepConfig& cfg) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32), q,
                      static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(seq);
    FieldPtr field = Field::of_order(q);
    const Field& f = *field;

    SweepInstance inst;
    inst.q = q;
    inst.trial = trial;
    auto lengths = valid_lengths(f, cfg.nmax);
    inst.n = lengths[std::uniform_int_distribution<std::size_t>(0, lengths.size() - 1)(rng)];
    inst.k = std::uniform_int_distribution<int>(1, inst.n - 1)(rng);
    inst.mode = static_cast<SweepMode>(std::uniform_int_distribution<int>(0, 3)(rng));

    std::vector<Elem> alpha = f.elements();
    std::shuffle(alpha.begin(), alpha.end(), rng);
    alpha.resize(static_cast<std::size_t>(inst.n));

    try {
        std::optional<GrsCode> code;
        if (inst.mode == SweepMode::SquareS) {
            std::uint64_t mask = std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << (inst.n - 1)) - 1)(rng);
            if (auto cert = self_dual_certificate_for_signs(field, alpha, mask))
                code = GrsCode::from_column_poly(field, alpha, cert->s, inst.k);
            else
                inst.mode = SweepMode::FactorS;
        }
        if (!code && inst.mode == SweepMode::FactorS)
            code = GrsCode::from_column_poly(field, alpha, factor_s(field, alpha, rng), inst.k);
        if (!code && inst.mode == SweepMode::LowDegreeS) {
            if (auto s = low_degree_s(field, alpha, rng))
                code = GrsCode::from_column_poly(field, alpha, *s, inst.k);
            else
                inst.mode = SweepMode::RandomWeights;
        }
        if (!code) {
            std::vector<Elem> v(alpha.size());
            for (auto& x : v)
                x = random_nonzero(f, rng);
            code = GrsCode::create(field, alpha, v, inst.k);
        }
        inst.spec = format_code_spec(*code);
        check(inst, *code, cfg);
    } catch (const Error& e) {
        inst.counts.other_failures = 1;
        inst.messages.push_back(e.what());
    }
    return inst;
}

SweepSummary run_sweep(const SweepConfig& cfg) {
    validate_sweep(cfg);
    auto start = std::chrono::steady_clock::now();
    std::vector<std::pair<unsigned, int>> tasks;
    for (unsigned q : cfg.qs)
        for (int t = 0; t < cfg.trials; ++t)
            tasks.emplace_back(q, t);
    std::vector<SweepInstance> results(tasks.size());

    unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++)
            results[i] = sweep_instance(tasks[i].first, tasks[i].second, cfg);
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    SweepSummary sum;
    for (auto& r : results) {
        ++sum.instances;
        ++sum.per_case[static_cast<std::size_t>(r.hull_case)];
        ++sum.per_class[static_cast<std::size_t>(r.classification)];
        ++sum.per_mode[static_cast<std::size_t>(r.mode)];
        sum.counts += r.counts;
        if (r.counts.discrepancies() > 0)
            sum.failures.push_back(std::move(r));
    }
    sum.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return sum;
}

std::string format_sweep_summary(const SweepSummary& s) {
    const SweepCounts& c = s.counts;
    std::ostringstream os;
    os << "instances                " << s.instances << "\n";
    for (std::size_t i = 0; i < s.per_case.size(); ++i)
        os << "  case " << to_string(static_cast<HullCase>(i)) << std::string(20 - to_string(static_cast<HullCase>(i)).size(), ' ')
           << s.per_case[i] << "\n";
    for (std::size_t i = 0; i < s.per_class.size(); ++i)
        os << "  class " << to_string(static_cast<Classification>(i))
           << std::string(19 - to_string(static_cast<Classification>(i)).size(), ' ') << s.per_class[i] << "\n";
    for (std::size_t i = 0; i < s.per_mode.size(); ++i)
        os << "  mode " << to_string(static_cast<SweepMode>(i)) << std::string(20 - to_string(static_cast<SweepMode>(i)).size(), ' ')
           << s.per_mode[i] << "\n";
    os << "oracle routes disagree   " << c.oracle_route_failures << "\n";
    os << "dimension mismatches     " << c.dimension_failures << "\n";
    os << "closed form row space    " << c.closed_form_rowspace_failures << " of " << c.closed_form_checked << "\n";
    os << "algorithm row space      " << c.algorithm_failures << " of " << c.algorithm_checked << " ("
       << c.witnesses_checked << " witnesses)\n";
    os << "rank(A) < n, matrix      " << c.rank_a_matrix_failures << " of " << c.rank_a_matrix_checked << "\n";
    os << "rank(A) < n, closed form " << c.rank_a_closed_form_deficient << " of " << c.closed_form_checked << "\n";
    os << "rank(A) vs kernel        " << c.rank_a_kernel_failures << "\n";
    os << "MDS failures             " << c.mds_failures << " of " << c.mds_checked << "\n";
    os << "corollary instances      " << c.corollary_instances << "\n";
    os << "theorem violations       " << c.theorem_violations << "\n";
    os << "other errors             " << c.other_failures << "\n";
    os << "discrepancies            " << c.discrepancies() << "\n";
    os << "seconds                  " << s.seconds << "\n";
    std::size_t shown = 0;
    for (const auto& f : s.failures) {
        if (++shown > 10)
            break;
        os << "FAIL q=" << f.q << " trial=" << f.trial << " mode=" << to_string(f.mode) << " n=" << f.n << " k=" << f.k
           << "\n";
        for (const auto& m : f.messages)
            os << "  " << m << "\n";
        std::istringstream spec(f.spec);
        for (std::string line; std::getline(spec, line);)
            os << "  | " << line << "\n";
    }
    return os.str();
}

}  // namespace grshull
