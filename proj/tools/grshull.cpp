/**************************************************************************
 * grshull.cpp
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

// Command-line front end. Exit codes: 0 ok, 1 input error, 2 disagreement.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "grshull/codespec.hpp"
#include "grshull/registry.hpp"
#include "grshull/report.hpp"
#include "grshull/selfdual.hpp"
#include "grshull/sweep.hpp"

using namespace grshull;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kDisagreement = 2;

int cmd_hull(const std::string& path, bool json) {
    GrsCode code = build_code(load_code_spec(path));
    HullReport rep = analyze(code);
    if (json)
        std::cout << report_to_json(rep).dump(2) << "\n";
    else
        std::cout << format_report(rep);
    return rep.methods.all_agree() ? kOk : kDisagreement;
}

std::string describe(const ExampleOutcome& o) {
    std::ostringstream os;
    os << "k=" << o.k << " dim=" << o.dimension << " " << to_string(o.classification);
    return os.str();
}

int cmd_verify(const std::string& only, bool json) {
    std::vector<const ExampleEntry*> entries;
    if (!only.empty()) {
        const ExampleEntry* e = find_example(only);
        if (!e)
            throw Error(ErrorKind::BadParameters, "unknown example id '" + only + "'");
        entries.push_back(e);
    } else {
        for (const auto& e : example_registry())
            entries.push_back(&e);
    }

    nlohmann::json doc = nlohmann::json::array();
    int passed = 0;
    double total = 0.0;
    for (const ExampleEntry* e : entries) {
        auto outcomes = verify_example(*e);
        bool pass = true;
        double secs = 0.0;
        std::string cases;
        for (const auto& o : outcomes) {
            pass = pass && o.pass;
            secs += o.seconds;
            cases += (cases.empty() ? "" : "; ") + describe(o);
        }
        total += secs;
        passed += pass;
        if (json) {
            nlohmann::json cj = nlohmann::json::array();
            for (const auto& o : outcomes)
                cj.push_back({{"k", o.k},
                              {"pass", o.pass},
                              {"dimension", o.dimension},
                              {"classification", std::string(to_string(o.classification))},
                              {"failures", o.failures},
                              {"notes", o.notes},
                              {"seconds", o.seconds}});
            doc.push_back({{"id", e->id}, {"pass", pass}, {"cases", cj}});
            continue;
        }
        std::cout << (pass ? "PASS " : "FAIL ") << std::left << std::setw(7) << e->id << " " << cases << "  ("
                  << std::fixed << std::setprecision(3) << secs << " s)\n";
        for (const auto& o : outcomes) {
            for (const auto& f : o.failures)
                std::cout << "    k=" << o.k << " " << f << "\n";
            for (const auto& n : o.notes)
                std::cout << "    note k=" << o.k << ": " << n << "\n";
        }
    }
    const int n = static_cast<int>(entries.size());
    if (json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << passed << " of " << n << " examples pass (" << std::fixed << std::setprecision(3) << total
                  << " s)\n";
    return passed == n ? kOk : kDisagreement;
}

int cmd_sweep(const SweepConfig& cfg) {
    validate_sweep(cfg);
    SweepSummary s = run_sweep(cfg);
    std::cout << format_sweep_summary(s);
    return s.counts.discrepancies() == 0 ? kOk : kDisagreement;
}

int cmd_search(unsigned q, int n, std::uint64_t budget, std::uint64_t seed, std::size_t limit,
               const std::string& contains_h, const std::string& contains_u, bool json) {
    FieldPtr field = Field::of_order(q);
    std::optional<Poly> want_h, want_u;
    if (!contains_h.empty())
        want_h = Poly::parse(field, contains_h);
    if (!contains_u.empty())
        want_u = Poly::parse(field, contains_u);

    std::vector<SelfDualCert> shown;
    bool found = false;
    SelfDualSearchStats stats = search_self_dual(field, n, budget, seed, [&](const SelfDualCert& c) {
        bool match = (!want_h || c.h == *want_h) && (!want_u || c.u == *want_u);
        if (want_h && match && !found) {
            found = true;
            shown.insert(shown.begin(), c);
        } else if (shown.size() < limit && (!want_h || match)) {
            shown.push_back(c);
        }
    });
    if (shown.size() > limit)
        shown.resize(limit);

    if (json) {
        nlohmann::json certs = nlohmann::json::array();
        for (const auto& c : shown)
            certs.push_back(certificate_to_json(c));
        nlohmann::json doc = {{"field", field->name()},
                              {"n", n},
                              {"exhaustive", stats.exhaustive},
                              {"subsets_tried", stats.subsets_tried},
                              {"certificates", stats.certificates},
                              {"odd_degree_hits", stats.odd_degree_hits},
                              {"shown", certs}};
        if (want_h)
            doc["contains"] = found;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "field            " << field->name() << "\n";
        std::cout << "n                " << n << "\n";
        std::cout << "mode             " << (stats.exhaustive ? "exhaustive" : "sampled") << "\n";
        std::cout << "subsets tried    " << stats.subsets_tried << "\n";
        std::cout << "certificates     " << stats.certificates << "\n";
        std::cout << "odd deg u hits   " << stats.odd_degree_hits << "\n";
        if (want_h)
            std::cout << "contains         " << (found ? "yes" : "no") << "\n";
        for (const auto& c : shown)
            std::cout << "\n" << format_certificate(c);
    }
    return !want_h || found ? kOk : kDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hulls of generalized Reed-Solomon codes"};
    app.require_subcommand(1);

    std::string spec_path;
    bool json = false;
    auto* hull = app.add_subcommand("hull", "Compute the hull of a code description file");
    hull->add_option("--spec", spec_path, "Code description file")->required();
    hull->add_flag("--json", json, "JSON report");

    std::string only;
    auto* verify = app.add_subcommand("verify-examples", "Recompute every registered example");
    verify->add_option("--only", only, "Single example id, e.g. ex3.8");
    verify->add_flag("--json", json, "JSON output");

    SweepConfig cfg;
    cfg.qs = {4, 5, 7, 8, 9, 11, 13, 16, 25};
    auto* sweep = app.add_subcommand("sweep", "Randomized cross-method agreement sweep");
    sweep->add_option("--q", cfg.qs, "Field orders")->delimiter(',');
    sweep->add_option("--nmax", cfg.nmax, "Largest length");
    sweep->add_option("--trials", cfg.trials, "Instances per field");
    sweep->add_option("--seed", cfg.seed, "Seed");
    sweep->add_option("--threads", cfg.threads, "Worker threads, 0 for all cores");

    unsigned q = 25;
    int n = 4;
    std::uint64_t budget = 20000;
    std::uint64_t seed = 1;
    std::size_t limit = 5;
    std::string contains_h, contains_u;
    auto* search = app.add_subcommand("search-selfdual", "Search for self-dual GRS codes");
    search->add_option("--q", q, "Field order")->required();
    search->add_option("--n", n, "Length")->required();
    search->add_option("--budget", budget, "Root subsets to try; exhaustive when C(q, n) fits");
    search->add_option("--seed", seed, "Seed for sampled search");
    search->add_option("--limit", limit, "Certificates to print");
    search->add_option("--contains-h", contains_h, "Exit 2 unless a certificate with this h is found");
    search->add_option("--contains-u", contains_u, "Together with --contains-h, also require this u");
    search->add_flag("--json", json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*hull)
            return cmd_hull(spec_path, json);
        if (*verify)
            return cmd_verify(only, json);
        if (*sweep)
            return cmd_sweep(cfg);
        if (*search)
            return cmd_search(q, n, budget, seed, limit, contains_h, contains_u, json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::OracleDisagreement || e.kind() == ErrorKind::TheoremViolation ||
                       e.kind() == ErrorKind::WitnessVerificationFailed
                   ? kDisagreement
                   : kInputError;
    }
    return kInputError;
}
