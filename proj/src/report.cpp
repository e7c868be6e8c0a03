/**************************************************************************
 * report.cpp
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

#include "grshull/report.hpp"

#include <sstream>

namespace grshull {

using nlohmann::json;

namespace {

json elems_to_json(const Field& f, const std::vector<Elem>& xs) {
    json out = json::array();
    for (Elem x : xs)
        out.push_back(f.format(x));
    return out;
}

std::vector<Elem> elems_from_json(const Field& f, const json& j) {
    std::vector<Elem> out;
    for (const auto& x : j)
        out.push_back(f.parse(x.get<std::string>()));
    return out;
}

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        out.push_back(elems_to_json(*m.field(), m.row(r)));
    return out;
}

Matrix matrix_from_json(const FieldPtr& field, std::size_t cols, const json& j) {
    std::vector<std::vector<Elem>> rows;
    for (const auto& r : j) {
        rows.push_back(elems_from_json(*field, r));
        if (rows.back().size() != cols)
            throw Error(ErrorKind::ParseError, "basis row of length " + std::to_string(rows.back().size()) +
                                                   ", expected " + std::to_string(cols));
    }
    return rows.empty() ? Matrix::empty(field, cols) : Matrix(field, cols, rows);
}

template <class T>
json opt(const std::optional<T>& x) {
    return x ? json(*x) : json(nullptr);
}

template <class T>
std::optional<T> opt_from(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null())
        return std::nullopt;
    return j.at(key).get<T>();
}

void expect_poly(const FieldPtr& field, const json& polys, const char* key, const Poly& actual) {
    Poly stored = Poly::parse(field, polys.at(key).get<std::string>());
    if (!(stored == actual))
        throw Error(ErrorKind::ParseError, std::string("stored ") + key + " = " + stored.to_string() +
                                               " does not match the code, which gives " + actual.to_string());
}

}  // namespace

json report_to_json(const HullReport& r) {
    const HullSetup& st = r.setup;
    const GrsCode& c = st.code;
    const Field& f = *c.field();
    const MethodResults& m = r.methods;

    json doc;
    doc["field"] = f.name();
    doc["q"] = f.order();
    doc["n"] = c.n();
    doc["k"] = c.k();
    doc["alpha"] = elems_to_json(f, c.alpha());
    doc["v"] = elems_to_json(f, c.v());
    doc["polynomials"] = {{"h", c.h().to_string()}, {"s", c.s().to_string()}, {"t", st.t.to_string()},
                          {"u", st.u.to_string()},  {"d", st.d.to_string()}, {"l", st.l.to_string()}};
    doc["epsilon"] = st.epsilon;
    doc["mu"] = st.mu;
    doc["nu"] = st.nu;
    doc["delta"] = st.delta;
    doc["gamma"] = st.gamma;
    doc["gamma_prime"] = st.gamma_prime;
    doc["case"] = std::string(to_string(st.hull_case));
    doc["dimension"] = r.dimension;
    doc["basis"] = matrix_to_json(r.basis);
    doc["classification"] = std::string(to_string(r.classification));
    doc["grs_status"] = std::string(to_string(r.grs_status));
    if (r.grs_witness)
        doc["grs_witness"] = {{"k", r.grs_witness->k()}, {"v", elems_to_json(f, r.grs_witness->v())}};
    else
        doc["grs_witness"] = nullptr;

    json ws = json::array();
    for (const auto& w : r.witnesses)
        ws.push_back({{"index", w.index},
                      {"rbar", w.rbar.to_string()},
                      {"f", w.f.to_string()},
                      {"g", w.g.to_string()},
                      {"hull_vector", elems_to_json(f, w.hull_vector)}});
    doc["witnesses"] = ws;

    doc["methods"] = {{"oracle_dimension", m.oracle_dimension},
                      {"oracle_routes_agree", m.oracle_routes_agree},
                      {"closed_form_dimension", opt(m.closed_form_dimension)},
                      {"closed_form_matches", opt(m.closed_form_matches)},
                      {"formula_dimension", m.formula_dimension},
                      {"algorithm_dimension", opt(m.algorithm_dimension)},
                      {"algorithm_matches", opt(m.algorithm_matches)},
                      {"witnesses_verified", opt(m.witnesses_verified)},
                      {"rank_a", m.rank_a},
                      {"expected_rank_a", m.expected_rank_a},
                      {"specialized_dimension", opt(m.specialized_dimension)},
                      {"corollary_violations", m.corollary_violations},
                      {"disagreements", m.disagreements}};
    doc["methods_agreed"] = {
        {"oracle_routes", m.oracle_routes_agree},
        {"formula", m.formula_dimension == m.oracle_dimension},
        {"closed_form", m.closed_form_matches ? json(*m.closed_form_matches) : json(nullptr)},
        {"algorithm", m.algorithm_matches ? json(*m.algorithm_matches && m.witnesses_verified.value_or(false))
                                          : json(nullptr)},
        {"rank_a", static_cast<int>(m.rank_a) == m.expected_rank_a},
        {"corollaries", m.corollary_violations.empty()},
    };
    doc["all_agree"] = m.all_agree();
    return doc;
}

HullReport report_from_json(const json& doc) {
    try {
        FieldPtr field = Field::of_order(doc.at("q").get<std::uint32_t>());
        auto alpha = elems_from_json(*field, doc.at("alpha"));
        auto v = elems_from_json(*field, doc.at("v"));
        GrsCode code = GrsCode::create(field, alpha, v, doc.at("k").get<int>());
        HullReport r{hull_setup(code)};
        const json& polys = doc.at("polynomials");
        expect_poly(field, polys, "s", code.s());
        expect_poly(field, polys, "t", r.setup.t);
        expect_poly(field, polys, "u", r.setup.u);
        expect_poly(field, polys, "d", r.setup.d);
        if (doc.at("case").get<std::string>() != to_string(r.setup.hull_case))
            throw Error(ErrorKind::ParseError, "stored case tag does not match the code");

        r.dimension = doc.at("dimension").get<int>();
        r.basis = matrix_from_json(field, static_cast<std::size_t>(code.n()), doc.at("basis"));
        r.classification = parse_classification(doc.at("classification").get<std::string>());
        r.grs_status = parse_grs_status(doc.at("grs_status").get<std::string>());
        if (const json& w = doc.at("grs_witness"); !w.is_null())
            r.grs_witness = GrsCode::create(field, alpha, elems_from_json(*field, w.at("v")), w.at("k").get<int>());
        for (const auto& w : doc.at("witnesses"))
            r.witnesses.push_back(DependencyWitness{w.at("index").get<int>(),
                                                    Poly::parse(field, w.at("rbar").get<std::string>()),
                                                    Poly::parse(field, w.at("f").get<std::string>()),
                                                    Poly::parse(field, w.at("g").get<std::string>()),
                                                    elems_from_json(*field, w.at("hull_vector"))});

        const json& mj = doc.at("methods");
        MethodResults& m = r.methods;
        m.oracle_dimension = mj.at("oracle_dimension").get<int>();
        m.oracle_routes_agree = mj.at("oracle_routes_agree").get<bool>();
        m.closed_form_dimension = opt_from<int>(mj, "closed_form_dimension");
        m.closed_form_matches = opt_from<bool>(mj, "closed_form_matches");
        m.formula_dimension = mj.at("formula_dimension").get<int>();
        m.algorithm_dimension = opt_from<int>(mj, "algorithm_dimension");
        m.algorithm_matches = opt_from<bool>(mj, "algorithm_matches");
        m.witnesses_verified = opt_from<bool>(mj, "witnesses_verified");
        m.rank_a = mj.at("rank_a").get<std::size_t>();
        m.expected_rank_a = mj.at("expected_rank_a").get<int>();
        m.specialized_dimension = opt_from<int>(mj, "specialized_dimension");
        m.corollary_violations = mj.at("corollary_violations").get<std::vector<std::string>>();
        m.disagreements = mj.at("disagreements").get<std::vector<std::string>>();
        return r;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed report: ") + e.what());
    }
}

json certificate_to_json(const SelfDualCert& cert) {
    const FieldPtr& field = cert.h.field();
    const Field& f = *field;
    GrsCode code = GrsCode::from_column_poly(field, roots(cert.h), cert.s, cert.k);
    return {{"field", f.name()},
            {"q", f.order()},
            {"n", cert.h.degree()},
            {"k", cert.k},
            {"h", cert.h.to_string()},
            {"u", cert.u.to_string()},
            {"lambda", f.format(cert.lambda)},
            {"s", cert.s.to_string()},
            {"alpha", elems_to_json(f, code.alpha())},
            {"v", elems_to_json(f, code.v())},
            {"generator", matrix_to_json(row_basis(code.generator_matrix()))}};
}

SelfDualCert certificate_from_json(const FieldPtr& field, const json& doc) {
    try {
        return SelfDualCert{Poly::parse(field, doc.at("h").get<std::string>()),
                            Poly::parse(field, doc.at("u").get<std::string>()),
                            field->parse(doc.at("lambda").get<std::string>()),
                            Poly::parse(field, doc.at("s").get<std::string>()), doc.at("k").get<int>()};
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed certificate: ") + e.what());
    }
}

std::string format_certificate(const SelfDualCert& cert) {
    const FieldPtr& field = cert.h.field();
    GrsCode code = GrsCode::from_column_poly(field, roots(cert.h), cert.s, cert.k);
    std::ostringstream os;
    os << "h          " << cert.h.to_string() << "\n";
    os << "u          " << cert.u.to_string() << "\n";
    os << "lambda     " << field->format(cert.lambda) << "\n";
    os << "s          " << cert.s.to_string() << "\n";
    os << "[n, k]     [" << code.n() << ", " << cert.k << "]\n";
    os << "generator  " << row_basis(code.generator_matrix()).to_string() << "\n";
    return os.str();
}

}  // namespace grshull
