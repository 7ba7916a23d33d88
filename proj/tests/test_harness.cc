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


#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "inqc/generators.h"
#include "inqc/ledger.h"
#include "inqc/protocols.h"
#include "inqc/referee.h"
#include "inqc/report.h"

using namespace inqc;

namespace {

std::string tmp_dir() {
    const char* d = std::getenv("INQC_TEST_TMP");
    return d ? d : ".";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("own reads complete") {
    Var a, b;
    Program p;
    p.phase1 = [&](Referee& r) {
        a = r.store().allocate_random(Party::Alice, "a");
        b = r.store().allocate_random(Party::Bob, "b");
        (void)r.view(Party::Alice)(a);
        (void)r.view(Party::Bob)(b);
        r.ledger().charge("pairs", 2);
    };
    p.phase2 = [&](Referee& r) {
        (void)r.view(Party::Alice)(b);
        (void)r.view(Party::Bob)(a);
    };
    auto res = referee_run(p, 3);
    CHECK(res.completed());
    CHECK(res.epr_charged == 2);
    CHECK(res.transcript.alice_outcomes.size() == 1);
    CHECK(res.transcript.bob_outcomes.size() == 1);
    CHECK(decode_message(res.transcript.message_bob).at(0).first == b.index);
}

TEST_CASE("cross read before the exchange aborts") {
    Program p;
    p.phase1 = [](Referee& r) {
        const Var b = r.store().allocate_random(Party::Bob, "secret");
        (void)r.view(Party::Alice)(b);
    };
    p.phase2 = [](Referee&) {};
    auto res = referee_run(p, 1);
    CHECK_FALSE(res.completed());
    CHECK(res.violation->find("secret") != std::string::npos);
}

TEST_CASE("one exchange per run") {
    Referee r(0);
    r.exchange();
    CHECK_THROWS_AS(r.exchange(), std::logic_error);
    CHECK_THROWS(referee_run(Program{}, 0));
}

TEST_CASE("messages round trip") {
    std::vector<std::pair<Var, bool>> bits = {{Var{0x01020304, Party::Alice}, true}, {Var{7, Party::Alice}, false}};
    const auto msg = encode_message(bits);
    CHECK(msg.size() == 10);
    CHECK(msg[0] == 0x04);
    const auto back = decode_message(msg);
    CHECK(back[0] == std::make_pair(0x01020304u, true));
    CHECK(back[1] == std::make_pair(7u, false));
    CHECK_THROWS(decode_message("abc"));
}

TEST_CASE("ledger") {
    Ledger l;
    l.charge("input", 1);
    l.charge("round 1", 6);
    l.charge("round 2", 12);
    CHECK(l.total() == 19);
    CHECK(l.total_for("round") == 18);
    CHECK(l.entries().size() == 3);
    CHECK_THROWS(l.charge("oops", -1));
}

TEST_CASE("generators hit their targets") {
    const Circuit c0 = generate_random_circuit(2, 0, 1);
    CHECK(c0.is_clifford());
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        CHECK(generate_random_circuit(3, 4, seed).t_count() == 4);
        CHECK(generate_tdepth_circuit(3, 2, seed).t_depth() == 2);
    }
    CHECK(generate_random_circuit(4, 3, 9).to_text() == generate_random_circuit(4, 3, 9).to_text());
    CHECK(generate_tdepth_circuit(3, 2, 9).to_text() == generate_tdepth_circuit(3, 2, 9).to_text());
    CHECK_THROWS(generate_random_circuit(0, 1, 1));
}

TEST_CASE("reports: json, csv and summary") {
    std::vector<RunReport> rs;
    for (std::uint64_t seed : {3u, 1u, 2u}) {
        RunReport r;
        r.protocol = "tcount";
        r.n = 2;
        r.param = 1;
        r.seed = seed;
        r.epr_charged = 7;
        r.bound = 12;
        r.fidelity = 1;
        r.pass = true;
        r.extra = {{"expected_charge", 7}};
        rs.push_back(r);
    }
    // A ledger over the bound must give a failing row.
    Ledger over;
    over.charge("round 1", tcount_bound(2, 1) + 1);
    RunReport bad = rs[0];
    bad.seed = 9;
    bad.epr_charged = over.total();
    bad.pass = static_cast<double>(bad.epr_charged) <= bad.bound;
    rs.push_back(bad);

    const auto j = report_json(rs[0]);
    CHECK(j["expected_charge"] == 7);
    CHECK(report_from_json(j).seed == 3);
    CHECK(report_csv_row(rs[0]) == "tcount,2,k=1,3,7,12,1.000000000000,true");

    const std::string stem = tmp_dir() + "/report_test";
    emit_report(rs, stem);
    const auto doc = nlohmann::json::parse(slurp(stem + ".json"));
    CHECK(doc["runs"].size() == 4);
    CHECK(doc["runs"][0]["seed"] == 1);
    CHECK(doc["summary"]["passed"] == 3);
    std::istringstream csv(slurp(stem + ".csv"));
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(csv, line)) lines.push_back(line);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == kCsvHeader);
    CHECK(lines[4].ends_with("false"));
    CHECK_THROWS_AS(emit_report(rs, "/nonexistent/dir/x"), std::runtime_error);
}

TEST_CASE("a batch of 100 runs gives 100 rows") {
    std::vector<RunReport> rs;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Circuit c = generate_random_circuit(2, 1, seed);
        rs.push_back(run_tcount_protocol(c, StateVector::basis("00"), seed).report);
    }
    const auto s = summarize(rs);
    CHECK(s.runs == 100);
    CHECK(s.passed == 100);
    CHECK(s.max_epr == 7);
}

TEST_CASE("identical seeds give identical reports") {
    const Circuit c = generate_tdepth_circuit(2, 2, 5);
    const auto a = run_tdepth_protocol(c, StateVector::basis("01"), 5);
    const auto b = run_tdepth_protocol(c, StateVector::basis("01"), 5);
    CHECK(report_json(a.report).dump() == report_json(b.report).dump());
    CHECK(a.transcript.message_alice == b.transcript.message_alice);
    CHECK(a.transcript.message_bob == b.transcript.message_bob);
}
