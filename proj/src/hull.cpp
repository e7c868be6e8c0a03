/**************************************************************************
 * hull.cpp
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

#include "grshull/hull.hpp"

#include <algorithm>
#include <sstream>

namespace grshull {

std::string_view to_string(HullCase c) noexcept {
    switch (c) {
    case HullCase::ClosedFormLow: return "ClosedFormLow";
    case HullCase::ClosedFormHigh: return "ClosedFormHigh";
    case HullCase::MatrixLow: return "MatrixLow";
    case HullCase::MatrixHigh: return "MatrixHigh";
    }
    return "?";
}

std::string_view to_string(Classification c) noexcept {
    switch (c) {
    case Classification::LCD: return "LCD";
    case Classification::SelfOrthogonal: return "SelfOrthogonal";
    case Classification::DualContaining: return "DualContaining";
    case Classification::SelfDual: return "SelfDual";
    case Classification::Generic: return "Generic";
    }
    return "?";
}

std::string_view to_string(GrsStatus s) noexcept {
    switch (s) {
    case GrsStatus::ZeroCode: return "ZeroCode";
    case GrsStatus::Certified: return "Certified";
    case GrsStatus::NotGrs: return "NotGrs";
    case GrsStatus::Unknown: return "Unknown";
    }
    return "?";
}

HullCase parse_hull_case(std::string_view text) {
    for (auto c : {HullCase::ClosedFormLow, HullCase::ClosedFormHigh, HullCase::MatrixLow, HullCase::MatrixHigh})
        if (to_string(c) == text)
            return c;
    throw Error(ErrorKind::ParseError, "unknown case tag '" + std::string(text) + "'");
}

Classification parse_classification(std::string_view text) {
    for (auto c : {Classification::LCD, Classification::SelfOrthogonal, Classification::DualContaining,
                   Classification::SelfDual, Classification::Generic})
        if (to_string(c) == text)
            return c;
    throw Error(ErrorKind::ParseError, "unknown classification '" + std::string(text) + "'");
}

GrsStatus parse_grs_status(std::string_view text) {
    for (auto s : {GrsStatus::ZeroCode, GrsStatus::Certified, GrsStatus::NotGrs, GrsStatus::Unknown})
        if (to_string(s) == text)
            return s;
    throw Error(ErrorKind::ParseError, "unknown GRS status '" + std::string(text) + "'");
}

HullCase classify_case(int k, int mu, int delta, int epsilon) noexcept {
    const bool low = 2 * mu < 2 * k + epsilon;
    if (2 * delta + 2 > epsilon) {
        if (low && k + epsilon - delta - 1 < mu)
            return HullCase::ClosedFormLow;
        if (!low && mu < k + delta + 1)
            return HullCase::ClosedFormHigh;
    }
    return low ? HullCase::MatrixLow : HullCase::MatrixHigh;
}

HullSetup hull_setup(const GrsCode& code) {
    const FieldPtr& field = code.field();
    const Field& f = *field;
    std::vector<Elem> t_values(code.alpha().size());
    for (std::size_t i = 0; i < t_values.size(); ++i)
        t_values[i] = f.div(code.h_prime().eval(code.alpha()[i]), code.s().eval(code.alpha()[i]));

    HullSetup st{code};
    st.t = lagrange_interpolate(field, code.alpha(), t_values);
    auto [u, rem] = divmod(code.s() * st.t - code.h_prime(), code.h());
    if (!rem.is_zero())
        throw Error(ErrorKind::InternalInconsistency, "s t - h' is not divisible by h");
    st.u = u;
    st.epsilon = u.is_zero() ? -1 : u.degree();
    st.d = gcd(code.s(), st.t);
    st.l = lcm(code.s(), st.t);
    st.mu = code.s().degree();
    st.nu = st.t.degree();
    st.delta = st.d.degree();
    st.gamma = code.k() + st.epsilon - st.mu - st.delta - 1;
    st.gamma_prime = st.mu - code.k() - st.delta - 1;
    st.hull_case = classify_case(code.k(), st.mu, st.delta, st.epsilon);
    return st;
}

Matrix hull_oracle_dual_of_sum(const GrsCode& code) {
    Matrix g = code.generator_matrix();
    Matrix dual = nullspace(g);
    return row_basis(nullspace(g.stack(dual)));
}

Matrix hull_oracle_intersection(const GrsCode& code) {
    Matrix g = code.generator_matrix();
    return row_space_intersect(g, nullspace(g));
}

Matrix hull_oracle(const GrsCode& code) {
    Matrix a = hull_oracle_dual_of_sum(code);
    Matrix b = hull_oracle_intersection(code);
    if (!row_space_equal(a, b))
        throw Error(ErrorKind::OracleDisagreement, "dual-of-sum gives dimension " + std::to_string(a.rows()) +
                                                       ", intersection gives " + std::to_string(b.rows()));
    return a;
}

std::optional<ClosedFormHull> hull_closed_form(const HullSetup& st) {
    if (!st.closed_form())
        return std::nullopt;
    const GrsCode& code = st.code;
    const Field& f = *code.field();
    const int k = code.k();
    int dim = st.hull_case == HullCase::ClosedFormLow ? st.delta + st.mu - k - st.epsilon : st.delta + k - st.mu;
    dim = std::max(dim, 0);

    ClosedFormHull out;
    out.dimension = dim;
    out.generator = Matrix(code.field(), static_cast<std::size_t>(dim), code.alpha().size());
    std::vector<Elem> w(code.alpha().size());
    for (std::size_t i = 0; i < code.alpha().size(); ++i) {
        w[i] = f.inv(st.d.eval(code.alpha()[i]));
        Elem x = w[i];
        for (int j = 0; j < dim; ++j) {
            out.generator.at(static_cast<std::size_t>(j), i) = x;
            x = f.mul(x, code.alpha()[i]);
        }
    }
    if (dim >= 1)
        out.code = GrsCode::create(code.field(), code.alpha(), w, dim);
    return out;
}

namespace {

int system_height(const HullSetup& st) {
    const int n = st.code.n();
    const int k = st.code.k();
    return st.low_side() ? n + st.epsilon + k - st.mu : n + st.mu - k;
}

void put_shifted(Matrix& m, std::size_t col, const Poly& p, int shift) {
    for (int i = 0; i <= p.degree(); ++i) {
        auto row = static_cast<std::size_t>(i + shift);
        if (row >= m.rows())
            throw Error(ErrorKind::InternalInconsistency, "polynomial column exceeds system height");
        m.at(row, col) = p.coeff(i);
    }
}

}  // namespace

Matrix coefficient_matrix(const HullSetup& st) {
    const int n = st.code.n();
    const int k = st.code.k();
    Matrix a(st.code.field(), static_cast<std::size_t>(system_height(st)), static_cast<std::size_t>(n));
    for (int j = 0; j < k; ++j)
        put_shifted(a, static_cast<std::size_t>(j), st.t, j);
    for (int j = 0; j < n - k; ++j)
        put_shifted(a, static_cast<std::size_t>(k + j), st.code.s(), j);
    return a;
}

StructuredSystem build_system(const HullSetup& st) {
    const int gu = st.gamma_used();
    if (gu < 0)
        throw Error(ErrorKind::NegativeGamma, (st.low_side() ? "gamma = " : "gamma' = ") + std::to_string(gu) +
                                                  "; the hull is {0}");
    StructuredSystem sys;
    sys.a = coefficient_matrix(st);
    sys.gamma_used = gu;
    sys.b = Matrix(st.code.field(), sys.a.rows(), static_cast<std::size_t>(gu + 1));
    Poly dh = st.d * st.code.h();
    for (int i = 0; i <= gu; ++i)
        put_shifted(sys.b, static_cast<std::size_t>(i), dh, i);
    return sys;
}

int hull_dimension_formula(const HullSetup& st) {
    if (auto cf = hull_closed_form(st))
        return cf->dimension;
    if (st.gamma_used() < 0)
        return 0;
    StructuredSystem sys = build_system(st);
    return st.code.n() + sys.gamma_used + 1 - static_cast<int>(rank(sys.a.concat(sys.b)));
}

int coefficient_kernel_dimension(const HullSetup& st) noexcept {
    const int k = st.code.k();
    int dim = std::min(k - st.mu + st.delta, st.mu - k - st.epsilon + st.delta);
    return std::max(dim, 0);
}

AlgorithmResult hull_basis_algorithm(const HullSetup& st) {
    if (st.closed_form())
        throw Error(ErrorKind::BadParameters, "the elimination algorithm applies to the matrix cases only");
    const GrsCode& code = st.code;
    const FieldPtr& field = code.field();
    const Field& f = *field;
    const int n = code.n();
    const int k = code.k();

    AlgorithmResult out;
    out.basis = Matrix::empty(field, static_cast<std::size_t>(n));
    if (st.gamma_used() < 0) {
        out.rank_a = rank(coefficient_matrix(st));
        out.rank_ab = out.rank_a;
        return out;
    }
    StructuredSystem sys = build_system(st);
    const std::size_t height = sys.a.rows();
    const std::size_t ncols = static_cast<std::size_t>(n + sys.gamma_used + 1);

    struct Pivot {
        std::vector<Elem> vec;
        std::vector<Elem> combo;
        std::size_t pos;
    };
    std::vector<Pivot> basis;

    // Reduces column `index`; returns the residual combination, or nullopt
    // after inserting an independent column.
    auto reduce = [&](const std::vector<Elem>& col, std::size_t index) -> std::optional<std::vector<Elem>> {
        std::vector<Elem> w = col;
        std::vector<Elem> combo(ncols, Elem{0});
        combo[index] = f.one();
        for (const auto& b : basis) {
            Elem c = w[b.pos];
            if (c.is_zero())
                continue;
            Elem factor = f.div(c, b.vec[b.pos]);
            for (std::size_t r = 0; r < height; ++r)
                w[r] = f.sub(w[r], f.mul(factor, b.vec[r]));
            for (std::size_t j = 0; j < ncols; ++j)
                combo[j] = f.sub(combo[j], f.mul(factor, b.combo[j]));
        }
        auto nz = std::find_if(w.begin(), w.end(), [](Elem e) { return !e.is_zero(); });
        if (nz == w.end())
            return combo;
        const auto pos = static_cast<std::size_t>(nz - w.begin());
        basis.push_back({std::move(w), std::move(combo), pos});
        return std::nullopt;
    };
    auto column = [&](const Matrix& m, std::size_t c) {
        std::vector<Elem> v(height);
        for (std::size_t r = 0; r < height; ++r)
            v[r] = m.at(r, c);
        return v;
    };

    for (int j = 0; j < n; ++j)
        if (reduce(column(sys.a, static_cast<std::size_t>(j)), static_cast<std::size_t>(j)))
            throw Error(ErrorKind::InternalInconsistency, "columns of A are dependent in a matrix case");
    out.rank_a = basis.size();

    Poly dh = st.d * code.h();
    for (int i = 0; i <= sys.gamma_used; ++i) {
        auto combo = reduce(column(sys.b, static_cast<std::size_t>(i)), static_cast<std::size_t>(n + i));
        if (!combo)
            continue;
        // 0 = sum combo_j col_j with combo_{n+i} = 1, so B_i = -sum_{j != n+i} combo_j col_j.
        std::vector<Elem> rb(static_cast<std::size_t>(i) + 1, Elem{0});
        for (int j = 0; j <= i; ++j)
            rb[static_cast<std::size_t>(j)] = combo->at(static_cast<std::size_t>(n + j));
        std::vector<Elem> fc(static_cast<std::size_t>(k)), gc(static_cast<std::size_t>(n - k));
        for (int j = 0; j < k; ++j)
            fc[static_cast<std::size_t>(j)] = f.neg(combo->at(static_cast<std::size_t>(j)));
        for (int j = 0; j < n - k; ++j)
            gc[static_cast<std::size_t>(j)] = combo->at(static_cast<std::size_t>(k + j));

        DependencyWitness w;
        w.index = i;
        w.rbar = Poly(field, rb);
        w.f = Poly(field, fc);
        w.g = Poly(field, gc);
        if (!(w.f * st.t - w.g * code.s() == w.rbar * dh))
            throw Error(ErrorKind::WitnessVerificationFailed, "f t - g s != rbar d h for B_" + std::to_string(i));
        if (w.rbar.degree() != i)
            throw Error(ErrorKind::WitnessVerificationFailed, "deg rbar != " + std::to_string(i));
        w.hull_vector.resize(static_cast<std::size_t>(n));
        for (std::size_t c = 0; c < static_cast<std::size_t>(n); ++c) {
            Elem a = code.alpha()[c];
            Elem via_f = f.div(w.f.eval(a), code.s().eval(a));
            Elem via_g = f.div(w.g.eval(a), st.t.eval(a));
            if (via_f != via_g)
                throw Error(ErrorKind::WitnessVerificationFailed, "f/s and g/t differ at a node");
            w.hull_vector[c] = via_f;
        }
        out.basis.append_row(w.hull_vector);
        out.witnesses.push_back(std::move(w));
    }
    out.rank_ab = basis.size();
    return out;
}

Classification classify_hull(const GrsCode& code, const Matrix& hull) {
    const std::size_t dim = rank(hull);
    if (dim == 0)
        return Classification::LCD;
    Matrix g = code.generator_matrix();
    if (dim == static_cast<std::size_t>(code.k()) && row_space_contains(hull, g))
        return code.n() == 2 * code.k() ? Classification::SelfDual : Classification::SelfOrthogonal;
    if (dim == static_cast<std::size_t>(code.n() - code.k()) && row_space_contains(hull, nullspace(g)))
        return Classification::DualContaining;
    return Classification::Generic;
}

std::optional<int> specialized_dimension(const HullSetup& st) noexcept {
    const int k = st.code.k();
    const int mu = st.mu;
    const int delta = st.delta;
    switch (st.epsilon) {
    case -1:
        if (k - delta - 2 < mu && mu < k + delta + 1)
            return mu < k ? delta + mu - k + 1 : k + delta - mu;
        return std::nullopt;
    case 0:
        if (k - delta - 1 < mu && mu < k + delta + 1)
            return delta - std::abs(mu - k);
        return std::nullopt;
    case 1:
        if (k - delta < mu && mu < k + delta + 1)
            return mu <= k ? delta + mu - k - 1 : k + delta - mu;
        return std::nullopt;
    case 2:
        if (delta >= 1 && k - delta + 1 < mu && mu < k + delta + 1)
            return mu < k + 1 ? delta + mu - k - 2 : k + delta - mu;
        return std::nullopt;
    default:
        return std::nullopt;
    }
}

namespace {

struct CorollaryFlags {
    bool lcd_low = false;
    bool lcd_high = false;
    bool self_orthogonal = false;
    bool dual_containing = false;
    bool self_dual = false;
};

CorollaryFlags corollary_flags(const HullSetup& st) {
    CorollaryFlags c;
    const int k = st.code.k();
    const int n = st.code.n();
    if (st.hull_case == HullCase::ClosedFormLow) {
        c.lcd_low = st.mu - (k + st.epsilon - st.delta - 1) == 1;
        c.dual_containing = associates(st.d, st.t);
    } else if (st.hull_case == HullCase::ClosedFormHigh) {
        c.lcd_high = k + st.delta + 1 - st.mu == 1;
        c.self_orthogonal = associates(st.d, st.code.s());
        c.self_dual = c.self_orthogonal && n == 2 * k;
    }
    return c;
}

}  // namespace

int corollary_conditions_applicable(const HullSetup& st) noexcept {
    CorollaryFlags c = corollary_flags(st);
    return static_cast<int>(c.lcd_low) + static_cast<int>(c.lcd_high) + static_cast<int>(c.self_orthogonal) +
           static_cast<int>(c.dual_containing) + static_cast<int>(c.self_dual) +
           static_cast<int>(specialized_dimension(st).has_value());
}

std::vector<std::string> corollary_violations(const HullSetup& st, int oracle_dimension, Classification oracle) {
    std::vector<std::string> out;
    CorollaryFlags c = corollary_flags(st);
    const bool half = st.code.n() == 2 * st.code.k();
    auto expect = [&](bool cond, bool ok, const std::string& what) {
        if (cond && !ok)
            out.push_back(what + " expected, oracle says " + std::string(to_string(oracle)) + " (dimension " +
                          std::to_string(oracle_dimension) + ")");
    };
    expect(c.lcd_low, oracle == Classification::LCD, "LCD (low window, gap 1)");
    expect(c.lcd_high, oracle == Classification::LCD, "LCD (high window, gap 1)");
    expect(c.self_orthogonal,
           oracle == (half ? Classification::SelfDual : Classification::SelfOrthogonal), "self-orthogonal (d ~ s)");
    expect(c.dual_containing,
           oracle == (half ? Classification::SelfDual : Classification::DualContaining), "dual-containing (d ~ t)");
    expect(c.self_dual, oracle == Classification::SelfDual, "self-dual (d ~ s, n = 2k)");
    if (auto sd = specialized_dimension(st); sd && std::max(*sd, 0) != oracle_dimension)
        out.push_back("specialized statement for eps = " + std::to_string(st.epsilon) + " predicts dimension " +
                      std::to_string(*sd) + ", oracle gives " + std::to_string(oracle_dimension));
    return out;
}

Classification classify(const GrsCode& code) {
    HullSetup st = hull_setup(code);
    Matrix hull = hull_oracle(code);
    Classification c = classify_hull(code, hull);
    auto bad = corollary_violations(st, static_cast<int>(hull.rows()), c);
    if (!bad.empty())
        throw Error(ErrorKind::TheoremViolation, bad.front());
    return c;
}

namespace {

GrsStatus grs_status_of(const HullReport& r, std::optional<GrsCode>& witness) {
    const GrsCode& code = r.setup.code;
    if (r.dimension == 0)
        return GrsStatus::ZeroCode;
    if (r.classification == Classification::SelfOrthogonal || r.classification == Classification::SelfDual) {
        witness = code;
        return GrsStatus::Certified;
    }
    if (r.classification == Classification::DualContaining) {
        witness = code.dual();
        return GrsStatus::Certified;
    }
    if (auto cf = hull_closed_form(r.setup); cf && cf->code && row_space_equal(cf->generator, r.basis)) {
        witness = cf->code;
        return GrsStatus::Certified;
    }
    for (std::size_t c = 0; c < r.basis.cols(); ++c) {
        bool all_zero = true;
        for (std::size_t i = 0; i < r.basis.rows() && all_zero; ++i)
            all_zero = r.basis.at(i, c).is_zero();
        if (all_zero)
            return GrsStatus::NotGrs;
    }
    if (r.dimension == 1) {
        witness = GrsCode::create(code.field(), code.alpha(), r.basis.row(0), 1);
        return GrsStatus::Certified;
    }
    if (within_mds_budget(code.field()->order(), r.dimension) &&
        min_distance_bruteforce(r.basis) != code.n() - r.dimension + 1)
        return GrsStatus::NotGrs;
    return GrsStatus::Unknown;
}

}  // namespace

HullReport analyze(const GrsCode& code) {
    HullReport r{hull_setup(code)};
    const HullSetup& st = r.setup;
    MethodResults& m = r.methods;

    Matrix via_sum = hull_oracle_dual_of_sum(code);
    Matrix via_int = hull_oracle_intersection(code);
    m.oracle_routes_agree = row_space_equal(via_sum, via_int);
    if (!m.oracle_routes_agree)
        m.disagreements.push_back("oracle routes disagree");
    r.basis = via_sum;
    r.dimension = static_cast<int>(via_sum.rows());
    m.oracle_dimension = r.dimension;
    r.classification = classify_hull(code, r.basis);

    m.rank_a = rank(coefficient_matrix(st));
    m.expected_rank_a = code.n() - coefficient_kernel_dimension(st);
    if (static_cast<int>(m.rank_a) != m.expected_rank_a)
        m.disagreements.push_back("rank(A) = " + std::to_string(m.rank_a) + ", expected " + std::to_string(m.expected_rank_a));
    if (!st.closed_form() && m.rank_a != static_cast<std::size_t>(code.n()))
        m.disagreements.push_back("rank(A) < n in a matrix case");

    m.formula_dimension = hull_dimension_formula(st);
    if (m.formula_dimension != r.dimension)
        m.disagreements.push_back("dimension formula gives " + std::to_string(m.formula_dimension));

    if (auto cf = hull_closed_form(st)) {
        m.closed_form_dimension = cf->dimension;
        m.closed_form_matches = cf->dimension == r.dimension && row_space_equal(cf->generator, r.basis);
        if (!*m.closed_form_matches)
            m.disagreements.push_back("closed form disagrees with the oracle");
    } else {
        try {
            AlgorithmResult alg = hull_basis_algorithm(st);
            m.witnesses_verified = true;
            m.algorithm_dimension = static_cast<int>(alg.witnesses.size());
            m.algorithm_matches = *m.algorithm_dimension == r.dimension && rank(alg.basis) == alg.basis.rows() &&
                                  row_space_equal(alg.basis, r.basis);
            if (!*m.algorithm_matches)
                m.disagreements.push_back("elimination algorithm disagrees with the oracle");
            r.witnesses = std::move(alg.witnesses);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::WitnessVerificationFailed && e.kind() != ErrorKind::InternalInconsistency)
                throw;
            m.witnesses_verified = false;
            m.disagreements.push_back(e.what());
        }
    }

    m.specialized_dimension = specialized_dimension(st);
    m.corollary_violations = corollary_violations(st, r.dimension, r.classification);
    for (const auto& v : m.corollary_violations)
        m.disagreements.push_back("TheoremViolation: " + v);

    r.grs_status = grs_status_of(r, r.grs_witness);
    return r;
}

std::string format_report(const HullReport& r) {
    const HullSetup& st = r.setup;
    const GrsCode& c = st.code;
    const Field& f = *c.field();
    std::ostringstream os;
    os << "field        " << f.name() << "\n";
    os << "n, k         " << c.n() << ", " << c.k() << "\n";
    os << "alpha        ";
    for (std::size_t i = 0; i < c.alpha().size(); ++i)
        os << (i ? ", " : "") << f.format(c.alpha()[i]);
    os << "\nv            ";
    for (std::size_t i = 0; i < c.v().size(); ++i)
        os << (i ? ", " : "") << f.format(c.v()[i]);
    os << "\ns            " << c.s().to_string() << "\n";
    os << "t            " << st.t.to_string() << "\n";
    os << "u            " << st.u.to_string() << "\n";
    os << "d            " << st.d.to_string() << "\n";
    os << "eps mu nu    " << st.epsilon << " " << st.mu << " " << st.nu << "\n";
    os << "delta        " << st.delta << "\n";
    os << "gamma        " << st.gamma << " (gamma' " << st.gamma_prime << ")\n";
    os << "case         " << to_string(st.hull_case) << "\n";
    os << "dimension    " << r.dimension << "\n";
    os << "basis        " << (r.basis.rows() ? r.basis.to_string() : "(empty)") << "\n";
    os << "class        " << to_string(r.classification) << "\n";
    os << "grs          " << to_string(r.grs_status) << "\n";
    const MethodResults& m = r.methods;
    os << "methods      oracle=" << m.oracle_dimension << " routes_agree=" << (m.oracle_routes_agree ? "yes" : "no")
       << " formula=" << m.formula_dimension;
    if (m.closed_form_dimension)
        os << " closed_form=" << *m.closed_form_dimension;
    if (m.algorithm_dimension)
        os << " algorithm=" << *m.algorithm_dimension;
    os << " rank(A)=" << m.rank_a << "\n";
    for (const auto& w : r.witnesses)
        os << "witness      B_" << w.index << ": rbar = " << w.rbar.to_string() << "; f = " << w.f.to_string()
           << "; g = " << w.g.to_string() << "\n";
    os << "agreement    " << (m.all_agree() ? "all methods agree" : "DISAGREEMENT") << "\n";
    for (const auto& d : m.disagreements)
        os << "  - " << d << "\n";
    return os.str();
}

}  // namespace grshull
