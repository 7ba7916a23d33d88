// Copyright 2026 The INQC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace inqc {

/// One run's summary. `param` is k, d, t or the hierarchy level, named by
/// `param_name`.
struct RunReport {
    std::string protocol;
    std::uint32_t n = 0;
    std::string param_name = "k";
    std::int64_t param = 0;
    std::uint64_t seed = 0;
    std::int64_t epr_charged = 0;
    double bound = 0;
    double fidelity = 0;
    std::vector<std::int64_t> m_trace;
    bool pass = false;
    nlohmann::json extra = nlohmann::json::object();
};

nlohmann::json report_json(const RunReport& r);
RunReport report_from_json(const nlohmann::json& j);

inline constexpr const char* kCsvHeader = "protocol,n,param,seed,epr_charged,bound,fidelity,pass";
std::string report_csv_row(const RunReport& r);

struct ReportSummary {
    std::size_t runs = 0;
    std::size_t passed = 0;
    double min_fidelity = 1;
    std::int64_t max_epr = 0;
};
ReportSummary summarize(const std::vector<RunReport>& rs);

/// Writes `<stem>.json` (runs sorted by seed plus a summary block) and
/// `<stem>.csv`. Throws std::runtime_error when a file cannot be written.
void emit_report(std::vector<RunReport> rs, const std::string& stem);

}  // namespace inqc
