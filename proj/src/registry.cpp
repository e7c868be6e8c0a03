/**************************************************************************
 * registry.cpp
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

#include "grshull/registry.hpp"

#include <chrono>

namespace grshull {

namespace {

using C = Classification;

std::vector<ExampleEntry> make_registry() {
    std::vector<ExampleEntry> r;

    r.push_back({"ex3.5", "q = 9, [7,5,3], u = 0, gcd(s, t) = 1, LCD", 9,
                 {"1", "g^2", "g^3", "g^4", "g^5", "g^6", "g^7"},
                 {"g^2", "g^3", "1", "g^7", "g^3", "g^5", "g"},
                 "", "", {}, {}, "0",
                 {{5, 0, C::LCD, {}, GrsStatus::ZeroCode, 3, true}}});

    r.push_back({"ex3.6", "q = 16, [11,8,4], u = 0, hull [11,1,10] with a zero coordinate", 16,
                 {"g^2", "g^3", "g^4", "g^5", "g^6", "g^8", "g^10", "g^11", "g^13", "g^14", "0"},
                 {"g^8", "g^8", "g^8", "g^9", "g^12", "g^5", "g^5", "1", "g^5", "g^14", "g^11"},
                 "", "", {}, {}, "0",
                 {{8, 1, C::Generic,
                   {{"1", "g^4", "0", "g^12", "1", "g^9", "g^9", "g^14", "g^11", "g^14", "g"}},
                   GrsStatus::NotGrs, 4, false}}});

    r.push_back({"ex3.7", "q = 25, [7,3,5], u = z, gcd(s, t) = 1, LCD", 25,
                 {"1", "g", "g^2", "g^4", "g^5", "g^6", "g^7"},
                 {"3", "g^10", "g^20", "g^2", "2", "2", "g^4"},
                 "", "", {}, {}, "z",
                 {{3, 0, C::LCD, {}, GrsStatus::ZeroCode, 5, true}}});

    r.push_back({"ex3.8", "q = 16, [11,4,8], u = 1, hull [11,1,10] with a zero coordinate", 16,
                 {"g^11", "g^12", "g^2", "g^13", "g^14", "g^4", "g^5", "g^6", "g^8", "g^9", "g^10"},
                 {"g^14", "g^10", "g^5", "g^11", "g^9", "g^2", "g", "1", "1", "g^3", "g"},
                 "", "", {}, {}, "1",
                 {{4, 1, C::Generic,
                   {{"0", "1", "1", "g^10", "g^9", "g^14", "g^8", "g^7", "g^6", "g^11", "g^13"}},
                   GrsStatus::NotGrs, 8, false}}});

    const std::vector<std::string> powers7 = {"1", "g", "g^2", "g^3", "g^4", "g^5", "g^6"};
    const std::vector<std::vector<std::string>> q8_two = {{"1", "0", "g^4", "g^5", "g^5", "1", "g^4"},
                                                          {"0", "1", "g", "g", "g^3", "1", "g^3"}};
    const std::vector<std::vector<std::string>> q8_one = {{"1", "g^5", "g^3", "g", "g^6", "g^4", "g^2"}};

    r.push_back({"ex4.1a", "q = 8, h = z^7 - 1, s = z^2, self-orthogonal for k = 1, 2", 8, {}, {},
                 "z^7 + 1", "z^2", powers7,
                 {"1", "g^5", "g^3", "g", "g^6", "g^4", "g^2"}, "0",
                 {{1, 1, C::SelfOrthogonal, q8_one, GrsStatus::Certified, 7, false},
                  {2, 2, C::SelfOrthogonal, q8_two, GrsStatus::Certified, 6, false}}});

    r.push_back({"ex4.1b", "q = 8, h = z^7 - 1, s = z^4, dual-containing for k = 5, 6", 8, {}, {},
                 "z^7 + 1", "z^4", powers7,
                 {"1", "g^3", "g^6", "g^2", "g^5", "g", "g^4"}, "0",
                 {{5, 2, C::DualContaining, q8_two, GrsStatus::Certified, 3, false},
                  {6, 1, C::DualContaining, q8_one, GrsStatus::Certified, 2, false}}});

    r.push_back({"ex4.3a", "q = 25, h + h' = s^2, self-dual [4,2,3]", 25, {}, {},
                 "z^4 + g^5*z^3 + g^14*z^2 + g^23*z + g^8", "(z + g^2)(z + g^15)",
                 {"g^8", "4", "g^17", "g^19"}, {"4", "g^11", "4", "g^7"}, "1",
                 {{2, 2, C::SelfDual, {{"1", "0", "g^21", "1"}, {"0", "1", "4", "g^21"}}, GrsStatus::Certified, 3,
                   false}}});

    r.push_back({"ex4.3b", "q = 25, h + h' = s^2, self-dual [4,2,3]", 25, {}, {},
                 "z^4 + g^23*z^3 + g^17*z^2 + 3*z + g^23", "(z + g^9)(z + g^19)",
                 {"g^5", "g^9", "g^15", "3"}, {"4", "g^9", "g^7", "4"}, "1",
                 {{2, 2, C::SelfDual, {{"1", "0", "g^3", "g^3"}, {"0", "1", "g^15", "g^3"}}, GrsStatus::Certified, 3,
                   false}}});

    r.push_back({"ex4.5a", "q = 25, z h + h' = (z + g^9) s^2, self-orthogonal [4,1,4]", 25, {}, {},
                 "z^4 + g^3*z^3 + g^22*z^2 + g^17*z + g^11", "z^2 + g^9*z + g^16",
                 {"g", "g^7", "g^13", "g^14"}, {"g^5", "2", "3", "g"}, "z",
                 {{1, 1, C::SelfOrthogonal, {{"1", "g", "g^13", "g^20"}}, GrsStatus::Certified, 4, false}}});

    r.push_back({"ex4.5b", "q = 25, z h + h' = (z + g^17)(z + g^14)^4, dual-containing, hull [4,1,4]", 25, {}, {},
                 "z^4 + g^4*z^3 + 3*z^2 + g*z + g^3", "(z + g^17)(z + g^14)^2",
                 {"g^3", "g^9", "g^19", "g^20"}, {"g^10", "g^2", "g^16", "g^8"}, "z",
                 {{3, 1, C::DualContaining, {{"1", "g^16", "2", "g^22"}}, GrsStatus::Certified, 2, false}}});

    r.push_back({"ex4.7", "q = 49, h = z^4 + z, z^2 h + h' = s^2, self-dual [4,2,3]", 49, {}, {},
                 "z^4 + z", "(z + g^8)(z + g^24)(z + g^40)",
                 {"0", "g^8", "g^24", "g^40"}, {"g^24", "g^8", "g^8", "g^8"}, "z^2",
                 {{2, 2, C::SelfDual, {{"1", "0", "g^8", "g^16"}, {"0", "1", "g^16", "g^32"}}, GrsStatus::Certified, 3,
                   false}}});
    return r;
}

std::vector<Elem> parse_elems(const Field& f, const std::vector<std::string>& texts) {
    std::vector<Elem> out;
    out.reserve(texts.size());
    for (const auto& t : texts)
        out.push_back(f.parse(t));
    return out;
}

std::string join(const Field& f, const std::vector<Elem>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? ", " : "") + f.format(xs[i]);
    return out + ")";
}

int min_distance_any(const GrsCode& code) {
    const std::uint32_t q = code.field()->order();
    if (within_mds_budget(q, code.k()))
        return min_distance_bruteforce(code);
    // Through the dual: the code is MDS exactly when its dual is.
    GrsCode dual = code.dual();
    int dd = min_distance_bruteforce(dual);
    if (dd == code.n() - dual.k() + 1)
        return code.n() - code.k() + 1;
    throw Error(ErrorKind::InternalInconsistency, "dual of a GRS code is not MDS");
}

// Where an expected basis row sits relative to C and its dual, and for a
// one-dimensional hull, which coordinates differ after scaling.
void explain_mismatch(const GrsCode& code, const Matrix& expected, const Matrix& got, std::vector<std::string>& notes) {
    const Field& f = *code.field();
    const Matrix g = code.generator_matrix();
    const Matrix gd = code.dual().generator_matrix();
    for (std::size_t r = 0; r < expected.rows(); ++r) {
        auto row = expected.row(r);
        notes.push_back("expected row " + std::to_string(r + 1) + (in_row_space(g, row) ? " is" : " is not") +
                        " in the code and" + (in_row_space(gd, row) ? " is" : " is not") + " in its dual");
    }
    if (expected.rows() != 1 || got.rows() != 1)
        return;
    auto a = expected.row(0);
    auto b = got.row(0);
    std::size_t j = 0;
    while (j < a.size() && (a[j].is_zero() || b[j].is_zero()))
        ++j;
    if (j == a.size())
        return;
    Elem scale = f.div(a[j], b[j]);
    std::string diff;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Elem bi = f.mul(scale, b[i]);
        if (bi != a[i])
            diff += (diff.empty() ? "" : ", ") + std::string("coordinate ") + std::to_string(i + 1) + ": expected " +
                    f.format(a[i]) + ", hull has " + f.format(bi);
    }
    notes.push_back("after scaling the hull generator to agree at coordinate " + std::to_string(j + 1) + ": " + diff);
}

}  // namespace

const std::vector<ExampleEntry>& example_registry() {
    static const std::vector<ExampleEntry> registry = make_registry();
    return registry;
}

const ExampleEntry* find_example(const std::string& id) {
    for (const auto& e : example_registry())
        if (e.id == id)
            return &e;
    return nullptr;
}

GrsCode build_example_code(const ExampleEntry& entry, int k) {
    FieldPtr field = Field::of_order(entry.q);
    if (!entry.alpha.empty())
        return GrsCode::create(field, parse_elems(*field, entry.alpha), parse_elems(*field, entry.v), k);
    Poly h = Poly::parse(field, entry.h);
    Poly s = Poly::parse(field, entry.s);
    std::vector<Elem> alpha = roots(h);
    if (static_cast<int>(alpha.size()) != h.degree())
        throw Error(ErrorKind::NonSplitH, "h of " + entry.id + " does not split into distinct linear factors");
    return GrsCode::from_column_poly(field, std::move(alpha), s, k);
}

std::vector<ExampleOutcome> verify_example(const ExampleEntry& entry) {
    std::vector<ExampleOutcome> out;
    for (const auto& ec : entry.cases) {
        auto start = std::chrono::steady_clock::now();
        ExampleOutcome o;
        o.id = entry.id;
        o.k = ec.k;
        auto fail = [&](const std::string& what, const std::string& expected, const std::string& got) {
            o.failures.push_back(what + ": expected " + expected + ", got " + got);
        };
        try {
            GrsCode code = build_example_code(entry, ec.k);
            const Field& f = *code.field();
            HullReport rep = analyze(code);
            o.dimension = rep.dimension;
            o.classification = rep.classification;

            if (rep.dimension != ec.dimension)
                fail("dimension", std::to_string(ec.dimension), std::to_string(rep.dimension));
            if (rep.classification != ec.classification)
                fail("classification", std::string(to_string(ec.classification)), std::string(to_string(rep.classification)));
            std::vector<std::vector<Elem>> rows;
            for (const auto& row : ec.rows)
                rows.push_back(parse_elems(f, row));
            Matrix expected(code.field(), static_cast<std::size_t>(code.n()), rows);
            if (!row_space_equal(expected, rep.basis)) {
                int twist = frobenius_twist_equal(expected, rep.basis);
                if (twist > 0)
                    o.notes.push_back("hull row space matches only after applying Frobenius " + std::to_string(twist) + " time(s)");
                else {
                    fail("hull row space", expected.rows() ? expected.to_string() : "{0}",
                         rep.basis.rows() ? rep.basis.to_string() : "{0}");
                    explain_mismatch(code, expected, rep.basis, o.notes);
                }
            }
            if (ec.grs_status && rep.grs_status != *ec.grs_status)
                fail("GRS status", std::string(to_string(*ec.grs_status)), std::string(to_string(rep.grs_status)));
            if (ec.min_distance) {
                int d = min_distance_any(code);
                if (d != *ec.min_distance)
                    fail("minimum distance", std::to_string(*ec.min_distance), std::to_string(d));
            }
            if (ec.full_column_rank) {
                StructuredSystem sys = build_system(rep.setup);
                Matrix ab = sys.a.concat(sys.b);
                std::size_t rk = rank(ab);
                if (rk != ab.cols())
                    fail("rank(A|B)", std::to_string(ab.cols()), std::to_string(rk));
            }
            if (entry.u) {
                Poly u = Poly::parse(code.field(), *entry.u);
                if (!(u == rep.setup.u))
                    fail("u", u.to_string(), rep.setup.u.to_string());
            }
            if (!rep.methods.all_agree())
                for (const auto& d : rep.methods.disagreements)
                    o.failures.push_back("method disagreement: " + d);
            if (!entry.listed_alpha.empty()) {
                auto la = parse_elems(f, entry.listed_alpha);
                if (la != code.alpha())
                    fail("root order", join(f, la), join(f, code.alpha()));
            }
            if (!entry.listed_v.empty()) {
                auto lv = parse_elems(f, entry.listed_v);
                if (lv != code.v())
                    o.notes.push_back("listed weights " + join(f, lv) + " differ from 1/s(alpha_i) = " + join(f, code.v()));
            }
        } catch (const Error& e) {
            o.failures.push_back(e.what());
        }
        o.pass = o.failures.empty();
        o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace grshull
