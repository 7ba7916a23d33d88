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


#include "inqc/report.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace inqc {

using nlohmann::json;

json report_json(const RunReport& r) {
    json j;
    j["protocol"] = r.protocol;
    j["n"] = r.n;
    j[r.param_name] = r.param;
    j["seed"] = r.seed;
    j["epr_charged"] = r.epr_charged;
    j["bound"] = r.bound;
    j["fidelity"] = r.fidelity;
    if (!r.m_trace.empty()) j["m_trace"] = r.m_trace;
    j["pass"] = r.pass;
    for (const auto& [k, v] : r.extra.items()) j[k] = v;
    return j;
}

RunReport report_from_json(const json& j) {
    RunReport r;
    r.protocol = j.at("protocol").get<std::string>();
    r.n = j.at("n").get<std::uint32_t>();
    for (const char* name : {"k", "d", "t", "level"}) {
        if (j.contains(name)) {
            r.param_name = name;
            r.param = j.at(name).get<std::int64_t>();
            break;
        }
    }
    r.seed = j.at("seed").get<std::uint64_t>();
    r.epr_charged = j.at("epr_charged").get<std::int64_t>();
    r.bound = j.at("bound").get<double>();
    r.fidelity = j.at("fidelity").get<double>();
    if (j.contains("m_trace")) r.m_trace = j.at("m_trace").get<std::vector<std::int64_t>>();
    r.pass = j.at("pass").get<bool>();
    return r;
}

std::string report_csv_row(const RunReport& r) {
    char fid[32];
    std::snprintf(fid, sizeof fid, "%.12f", r.fidelity);
    char bound[32];
    std::snprintf(bound, sizeof bound, "%.6g", r.bound);
    std::ostringstream os;
    os << r.protocol << ',' << r.n << ',' << r.param_name << '=' << r.param << ',' << r.seed << ',' << r.epr_charged
       << ',' << bound << ',' << fid << ',' << (r.pass ? "true" : "false");
    return os.str();
}

ReportSummary summarize(const std::vector<RunReport>& rs) {
    ReportSummary s;
    for (const auto& r : rs) {
        ++s.runs;
        if (r.pass) ++s.passed;
        s.min_fidelity = std::min(s.min_fidelity, r.fidelity);
        s.max_epr = std::max(s.max_epr, r.epr_charged);
    }
    return s;
}

void emit_report(std::vector<RunReport> rs, const std::string& stem) {
    std::stable_sort(rs.begin(), rs.end(), [](const RunReport& a, const RunReport& b) {
        if (a.seed != b.seed) return a.seed < b.seed;
        return a.param < b.param;
    });
    json runs = json::array();
    for (const auto& r : rs) runs.push_back(report_json(r));
    const ReportSummary s = summarize(rs);
    json doc;
    doc["runs"] = runs;
    doc["summary"] = {{"runs", s.runs}, {"passed", s.passed}, {"min_fidelity", s.min_fidelity}, {"max_epr", s.max_epr}};

    std::ofstream js(stem + ".json");
    if (!js) throw std::runtime_error("cannot write " + stem + ".json");
    js << doc.dump(2) << "\n";
    std::ofstream csv(stem + ".csv");
    if (!csv) throw std::runtime_error("cannot write " + stem + ".csv");
    csv << kCsvHeader << "\n";
    for (const auto& r : rs) csv << report_csv_row(r) << "\n";
    if (!js || !csv) throw std::runtime_error("write failed for " + stem);
}

}  // namespace inqc
