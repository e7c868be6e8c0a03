/**************************************************************************
 * registry.hpp
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
#include <vector>

#include "grshull/grs.hpp"
#include "grshull/hull.hpp"

namespace grshull {

/// Expected outcome for one dimension k of a registry entry. Rows are a
/// basis of the expected hull in element text form; any basis of the same
/// row space matches.
struct ExpectedCase {
    int k = 0;
    int dimension = 0;
    Classification classification = Classification::Generic;
    std::vector<std::vector<std::string>> rows;
    std::optional<GrsStatus> grs_status;
    std::optional<int> min_distance;
    /// (A|B) must have full column rank.
    bool full_column_rank = false;
};

/// A worked example. Either alpha and v are listed explicitly (coordinate
/// order matters there), or h and s are given and alpha is the root list
/// of h in canonical order with v_i = 1/s(alpha_i).
struct ExampleEntry {
    std::string id;
    std::string summary;
    unsigned q = 0;
    std::vector<std::string> alpha;
    std::vector<std::string> v;
    std::string h;
    std::string s;
    /// Published coordinates for h/s entries, compared and reported.
    std::vector<std::string> listed_alpha;
    std::vector<std::string> listed_v;
    /// Expected u in s t = u h + h', when stated.
    std::optional<std::string> u;
    std::vector<ExpectedCase> cases;
};

const std::vector<ExampleEntry>& example_registry();
const ExampleEntry* find_example(const std::string& id);

/// The code of an entry at dimension k.
GrsCode build_example_code(const ExampleEntry& entry, int k);

struct ExampleOutcome {
    std::string id;
    int k = 0;
    bool pass = false;
    int dimension = 0;
    Classification classification = Classification::Generic;
    /// expected-vs-got lines, one per failed check
    std::vector<std::string> failures;
    /// reported but not failing, e.g. listed weights that differ from 1/s(alpha_i)
    std::vector<std::string> notes;
    double seconds = 0.0;
};

std::vector<ExampleOutcome> verify_example(const ExampleEntry& entry);

}  // namespace grshull
