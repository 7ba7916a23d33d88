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

#include <random>
#include <set>

#include "inqc/garden_hose.h"

using namespace inqc;

namespace {

TruthTable random_table(std::uint32_t na, std::uint32_t nb, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    TruthTable t{na, nb, {}};
    for (std::size_t i = 0; i < (std::size_t{1} << (na + nb)); ++i) t.bits.push_back(rng() & 1);
    return t;
}

template <typename F>
void sweep(std::uint32_t na, std::uint32_t nb, F&& f) {
    for (std::uint64_t x = 0; x < (1u << na); ++x) {
        for (std::uint64_t y = 0; y < (1u << nb); ++y) f(x, y);
    }
}

}  // namespace

TEST_CASE("truth table builder, exhaustive up to 4 + 4 bits") {
    for (std::uint32_t na = 0; na <= 4; ++na) {
        for (std::uint32_t nb = 0; nb <= 4; ++nb) {
            VarStore st;
            auto in = allocate_inputs(st, na, nb);
            const auto t = random_table(na, nb, na * 10 + nb);
            auto p = gh_from_truth_table(t, in.alice, in.bob);
            CHECK(p->size() == (1 << na) + 1);
            sweep(na, nb, [&](auto x, auto y) { CHECK(gh_evaluate(*p, st, x, y).bit() == t.at(x, y)); });
        }
    }
}

TEST_CASE("single output keeps the function with one spilling pipe per side") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        VarStore st;
        auto in = allocate_inputs(st, 3, 4);
        const auto t = random_table(3, 4, seed + 100);
        auto f = gh_from_truth_table(t, in.alice, in.bob);
        auto so = gh_single_output(f);
        auto sa = gh_single_output(f, true);
        CHECK(so->size() == 3 * f->size() + 1);
        CHECK(sa->size() == 3 * f->size());
        sweep(3, 4, [&](auto x, auto y) {
            CHECK(gh_evaluate(*so, st, x, y).bit() == t.at(x, y));
            const Exit e = gh_evaluate(*sa, st, x, y);
            CHECK(e.side == Party::Alice);
            REQUIRE(e.label.has_value());
            CHECK(*e.label == static_cast<std::uint32_t>(t.at(x, y)));
        });
        CHECK(spilling_pipes(*so, st, Party::Alice) == 1);
        CHECK(spilling_pipes(*so, st, Party::Bob) == 1);
    }
}

TEST_CASE("xor of several functions") {
    VarStore st;
    auto in = allocate_inputs(st, 2, 3);
    std::vector<TruthTable> ts;
    std::vector<GardenHose> ps;
    std::int64_t sum = 0;
    for (int i = 0; i < 3; ++i) {
        ts.push_back(random_table(2, 3, 40 + i));
        ps.push_back(gh_from_truth_table(ts.back(), in.alice, in.bob));
        sum += ps.back()->size();
    }
    ps.push_back(gh_constant(true));
    sum += 1;
    for (bool c : {false, true}) {
        auto x = gh_xor(ps, c);
        CHECK(x->size() == 4 * sum + 1);
        sweep(2, 3, [&](auto a, auto b) {
            bool want = c != true;
            for (const auto& t : ts) want = want != t.at(a, b);
            CHECK(gh_evaluate(*x, st, a, b).bit() == want);
        });
    }
}

TEST_CASE("multi output lands on the labeled pipe") {
    VarStore st;
    auto in = allocate_inputs(st, 3, 2);
    std::vector<TruthTable> ts;
    std::vector<GardenHose> ps;
    std::int64_t want_size = 0;
    for (int i = 0; i < 3; ++i) {
        ts.push_back(random_table(3, 2, 7 + i));
        ps.push_back(gh_from_truth_table(ts.back(), in.alice, in.bob));
        want_size += (std::int64_t{1} << i) * 3 * ps.back()->size();
    }
    auto m = gh_multi_output(ps);
    CHECK(m->size() == want_size);
    CHECK(m->width() == 3);
    sweep(3, 2, [&](auto x, auto y) {
        std::uint32_t want = 0;
        for (int i = 0; i < 3; ++i) want |= static_cast<std::uint32_t>(ts[i].at(x, y)) << i;
        const Walk w = gh_walk(*m, st, x, y);
        CHECK(w.exit.side == Party::Alice);
        REQUIRE(w.exit.label.has_value());
        CHECK(*w.exit.label == want);
        CHECK(w.exit.pipe == m->exit_pipe(want, PartyView::unrestricted(st, Party::Alice)));
    });
    std::vector<GardenHose> too_many(kMultiOutputCap + 1, gh_constant(false));
    CHECK_THROWS(gh_multi_output(too_many));
}

TEST_CASE("constants and local xor") {
    VarStore st;
    CHECK(gh_constant(true)->size() == 1);
    CHECK(gh_constant(false)->size() == 2);
    CHECK(gh_evaluate(*gh_constant(true), st, 0, 0).bit());
    CHECK_FALSE(gh_evaluate(*gh_constant(false), st, 0, 0).bit());

    auto in = allocate_inputs(st, 2, 2);
    const auto pa = KeyPolynomial::variable(in.alice[0]) * KeyPolynomial::variable(in.alice[1]);
    const auto pb = KeyPolynomial::variable(in.bob[1]) ^ KeyPolynomial::one();
    auto p = gh_local_xor(pa, pb);
    CHECK(p->size() == 3);
    const ViewPair v{PartyView::unrestricted(st, Party::Alice), PartyView::unrestricted(st, Party::Bob)};
    sweep(2, 2, [&](auto x, auto y) {
        assign_bits(st, in.alice, x);
        assign_bits(st, in.bob, y);
        const bool want = ((x & 1) && (x & 2)) != !((y >> 1) & 1);
        CHECK(gh_evaluate(*p, v).bit() == want);
    });
    CHECK_THROWS(gh_local_xor(KeyPolynomial::variable(in.bob[0]), KeyPolynomial::zero()));
}

TEST_CASE("mirror always returns to Alice's final pipe") {
    VarStore st;
    auto in = allocate_inputs(st, 2, 2);
    auto f = gh_from_truth_table(random_table(2, 2, 3), in.alice, in.bob);
    auto m = gh_mirror(f);
    CHECK(m->size() == 2 * f->size());
    sweep(2, 2, [&](auto x, auto y) {
        const Walk w = gh_walk(*m, st, x, y);
        CHECK(w.exit.side == Party::Alice);
        CHECK(w.exit.pipe == m->final_pipe(PartyView::unrestricted(st, Party::Alice)));
    });
    CHECK_THROWS(gh_mirror(f, GateKind::H));
}

TEST_CASE("quantum execution and trackers agree with the Pauli frame") {
    VarStore st(17);
    auto in = allocate_inputs(st, 2, 2);
    const auto t = TruthTable::from_function(2, 2, [](auto x, auto y) { return ((x ^ y) & 1) != 0; });
    auto f = gh_from_truth_table(t, in.alice, in.bob);
    auto m = gh_mirror(f, GateKind::Pdag);
    sweep(2, 2, [&](auto x, auto y) {
        assign_bits(st, in.alice, x);
        assign_bits(st, in.bob, y);
        ViewPair v{PartyView::unrestricted(st, Party::Alice), PartyView::unrestricted(st, Party::Bob)};
        auto outcomes = std::make_shared<OutcomeTable>(st, "o" + std::to_string(x * 4 + y) + ".");
        std::mt19937_64 rng(x * 4 + y);
        StateVector s = StateVector::random(1, rng);
        const StateVector psi = s;
        if (t.at(x, y)) s.apply(make_gate(GateKind::P, 0));
        Ledger led;
        const QuantumRun run = gh_quantum_execute(*m, v, *outcomes, s, 0, &led);
        CHECK(led.total() == m->size());
        StateVector want = psi;
        want.apply_pauli(0, run.frame_x, run.frame_z);
        CHECK(fidelity(s, want) == doctest::Approx(1).epsilon(1e-10));
        auto xt = build_x_tracker(m, outcomes);
        auto zt = build_z_tracker(m, outcomes);
        CHECK(xt->size() == 4 * f->size() + 1);
        CHECK(zt->size() == 11 * f->size() + 2);
        CHECK(gh_evaluate(*xt, v).bit() == run.frame_x);
        CHECK(gh_evaluate(*zt, v).bit() == run.frame_z);
    });
}

TEST_CASE("json round trip and malformed input") {
    VarStore st;
    auto in = allocate_inputs(st, 2, 2);
    const auto t = random_table(2, 2, 77);
    auto p = gh_xor({gh_from_truth_table(t, in.alice, in.bob), gh_constant(true)}, false);
    const std::string js = gh_to_json(*p, st);
    auto back = gh_from_json(js, st);
    CHECK(back->size() == p->size());
    sweep(2, 2, [&](auto x, auto y) { CHECK(gh_evaluate(*back, st, x, y).bit() == !t.at(x, y)); });
    const std::string js2 = gh_to_json(*back, st);
    CHECK(gh_to_json(*gh_from_json(js2, st), st) == js2);
    CHECK_THROWS(gh_from_json("{", st));
    CHECK_THROWS(gh_from_json(R"({"kind":"explicit","pipes":2,"nA":0,"nB":0,
        "alice":[{"x":0,"tap":5,"hoses":[]}],"bob":[{"y":0,"hoses":[]}]})", st));
}

TEST_CASE("explicit strategies must be matchings") {
    VarStore st;
    auto ok = gh_explicit(3, {}, {}, {ExplicitStrategy{0, {kOpen, 2, 1}}}, {{1, 0, kOpen}});
    const Walk w = gh_walk(*ok, st, 0, 0);
    CHECK(w.path == std::vector<std::int64_t>{0, 1, 2});
    CHECK(w.exit.side == Party::Bob);
    CHECK_THROWS_AS(gh_explicit(2, {}, {}, {ExplicitStrategy{0, {1, kOpen}}}, {{kOpen, kOpen}}), GardenHoseError);
    CHECK_THROWS_AS(gh_explicit(2, {}, {}, {ExplicitStrategy{0, {1, 0}}}, {{1, 0}}), GardenHoseError);
    CHECK_THROWS_AS(gh_explicit(2, {}, {}, {ExplicitStrategy{4, {kOpen, kOpen}}}, {{1, 0}}), GardenHoseError);
}

TEST_CASE("truth table text format") {
    const auto t = parse_truth_table("f 1 1\n0 1\n1 0\n");
    CHECK(t.at(0, 1));
    CHECK(t.at(1, 0));
    CHECK_FALSE(t.at(1, 1));
    CHECK(parse_truth_table(truth_table_text(t)).bits == t.bits);
    CHECK_THROWS(parse_truth_table("g 1 1\n0 1 1 0"));
    CHECK_THROWS(parse_truth_table("f 1 1\n0 1 1"));
    CHECK_THROWS(parse_truth_table("f 1 1\n0 1 2 0"));
}
