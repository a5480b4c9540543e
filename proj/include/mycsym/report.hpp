// Copyright 2026 The mycsym Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MYCSYM_REPORT_HPP_
#define MYCSYM_REPORT_HPP_

#include <string>

#include "json.hpp"
#include "mycsym/mycielskian.hpp"
#include "mycsym/sym_params.hpp"
#include "mycsym/theorems.hpp"
#include "mycsym/twin_quotient.hpp"

namespace mycsym {

inline constexpr int kReportSchemaVersion = 1;

enum class ReportFormat { kJson, kTable };

ReportFormat parse_report_format(const std::string& name);

// "N instances, F failures"
std::string summary_line(const VerificationRun& run);

nlohmann::json verdict_to_json(const TheoremVerdict& verdict);
nlohmann::json run_to_json(const VerificationRun& run, const VerifyOptions& options);
// JSON is pretty-printed with a trailing newline; the table ends with the
// summary line and any warnings.
std::string render_report(const VerificationRun& run, const VerifyOptions& options,
                          ReportFormat format);

nlohmann::json params_to_json(const ParamReport& report);
nlohmann::json construction_to_json(const MycGraph& m, bool with_roles);
nlohmann::json quotient_to_json(const Graph& g, const QuotientGraph& q);

}  // namespace mycsym

#endif  // MYCSYM_REPORT_HPP_
