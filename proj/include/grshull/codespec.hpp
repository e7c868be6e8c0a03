/**************************************************************************
 * codespec.hpp
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

#include "grshull/grs.hpp"

namespace grshull {

/// Parsed code description:
///
///   # comment
///   q = 9
///   alpha = [1, g^2, g^3]
///   v = [g^2, g^3, 1]
///   k = 2
///   s = z^2 + g*z + 1      (optional)
///
/// v may be omitted when s is given; the weights are then 1/s(alpha_i).
/// Syntax errors are ParseError with a "line L, column C" anchor.
struct CodeSpec {
    FieldPtr field;
    std::vector<Elem> alpha;
    std::optional<std::vector<Elem>> v;
    int k = 0;
    std::optional<Poly> s;
};

CodeSpec parse_code_spec(std::string_view text);
CodeSpec load_code_spec(const std::string& path);

/// Validates and builds the code; the GrsCode errors pass through unchanged.
GrsCode build_code(const CodeSpec& spec);

/// Text form that parse_code_spec reads back to the same code.
std::string format_code_spec(const GrsCode& code);

}  // namespace grshull
