/**************************************************************************
 * report.hpp
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

#include <json.hpp>

#include "grshull/hull.hpp"
#include "grshull/selfdual.hpp"

namespace grshull {

/// JSON document of a report. Elements and polynomials are stored in their
/// text forms, so the document is readable without the field tables.
nlohmann::json report_to_json(const HullReport& report);

/// Inverse of report_to_json. The code is rebuilt from q, alpha, v and k;
/// the method results are read back as stored, not recomputed.
/// ParseError on a malformed document.
HullReport report_from_json(const nlohmann::json& doc);

/// h, u, lambda, s, k, the roots of h and a generator matrix.
nlohmann::json certificate_to_json(const SelfDualCert& cert);
SelfDualCert certificate_from_json(const FieldPtr& field, const nlohmann::json& doc);

/// Multi-line text form of a certificate.
std::string format_certificate(const SelfDualCert& cert);

}  // namespace grshull
