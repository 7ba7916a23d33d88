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


#include <stdexcept>

#include "inqc/protocols.h"

namespace inqc {

PolyKey teleport_wires(StateVector& state, std::span<const std::uint32_t> wires, Party measurer, VarStore& store,
                       const std::string& tag) {
    PolyKey key(state.num_qubits());
    for (auto w : wires) {
        if (w >= state.num_qubits()) throw std::out_of_range("teleport wire out of range");
        const Var x = store.allocate_random(measurer, tag + ".w" + std::to_string(w) + ".x");
        const Var z = store.allocate_random(measurer, tag + ".w" + std::to_string(w) + ".z");
        state.apply_pauli(w, store.value(x), store.value(z));
        key.x[w] = KeyPolynomial::variable(x);
        key.z[w] = KeyPolynomial::variable(z);
    }
    return key;
}

std::vector<std::uint32_t> bob_wires(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t w = n / 2; w < n; ++w) out.push_back(w);
    return out;
}

std::vector<std::uint32_t> alice_wires(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t w = 0; w < n / 2; ++w) out.push_back(w);
    return out;
}

std::vector<std::uint32_t> all_wires(std::uint32_t n) {
    std::vector<std::uint32_t> out(n);
    for (std::uint32_t w = 0; w < n; ++w) out[w] = w;
    return out;
}

void measure_all_hoses(const GhNode& p, const ViewPair& views, OutcomeTable& outcomes) {
    outcomes.tap();
    for (Party side : {Party::Alice, Party::Bob}) {
        const PartyView& v = views.of(side);
        for (std::int64_t pipe = 0; pipe < p.size(); ++pipe) {
            const std::int64_t q = p.partner(side, v, pipe);
            if (q > pipe) outcomes.hose(side, pipe, q);
        }
    }
}

PhaseRemoval phase_removal(GardenHose f, GateKind phase, const ViewPair& views, VarStore& store, StateVector& state,
                           std::uint32_t wire, Ledger* ledger, const std::string& tag) {
    if (phase != GateKind::P && phase != GateKind::Pdag) {
        throw std::invalid_argument("phase removal handles P and PDAG only");
    }
    PhaseRemoval out;
    out.mirror = gh_mirror(std::move(f), phase == GateKind::P ? GateKind::Pdag : GateKind::P);
    out.outcomes = std::make_shared<OutcomeTable>(store, tag + ".");
    out.run = gh_quantum_execute(*out.mirror, views, *out.outcomes, state, wire, ledger, "phase-removal");
    measure_all_hoses(*out.mirror, views, *out.outcomes);
    out.x_tracker = build_x_tracker(out.mirror, out.outcomes);
    out.z_tracker = build_z_tracker(out.mirror, out.outcomes);
    return out;
}

PhaseRemovalCheck run_phase_removal_check(const TruthTable& f, std::uint64_t x, std::uint64_t y, std::uint64_t seed,
                                          double tol) {
    Referee ref(seed);
    VarStore& store = ref.store();
    auto in = allocate_inputs(store, f.na, f.nb, "in.");
    assign_bits(store, in.alice, x);
    assign_bits(store, in.bob, y);
    GardenHose fn = gh_from_truth_table(f, in.alice, in.bob);

    PhaseRemovalCheck out;
    out.gh_f = fn->size();
    const StateVector psi = StateVector::random(1, ref.nature());
    StateVector state = psi;
    if (f.at(x, y)) state.apply(make_gate(GateKind::P, 0));
    StateVector expected = psi;
    std::optional<PhaseRemoval> pr;
    bool g = false, h = false;

    Program prog;
    prog.phase1 = [&](Referee& r) {
        pr = phase_removal(fn, GateKind::P, r.views(), r.store(), state, 0, &r.ledger(), "pr");
    };
    prog.phase2 = [&](Referee& r) {
        g = gh_evaluate(*pr->x_tracker, r.views()).bit();
        h = gh_evaluate(*pr->z_tracker, r.views()).bit();
        expected.apply_pauli(0, g, h);
    };
    RefereeResult rr = referee_run(prog, ref);

    auto& res = out.result;
    res.transcript = rr.transcript;
    res.violation = rr.violation;
    res.output = state;
    res.expected = expected;
    if (pr) {
        out.x_tracker_size = pr->x_tracker->size();
        out.z_tracker_size = pr->z_tracker->size();
        out.trackers_match_frame = g == pr->run.frame_x && h == pr->run.frame_z;
    }

    RunReport& rep = res.report;
    rep.protocol = "phase-removal";
    rep.n = 1;
    rep.param_name = "gh";
    rep.param = out.gh_f;
    rep.seed = seed;
    rep.epr_charged = rr.epr_charged;
    rep.bound = static_cast<double>(2 * out.gh_f);
    rep.fidelity = rr.completed() ? fidelity(state, expected) : 0.0;
    rep.extra = {{"x", x},
                 {"y", y},
                 {"x_tracker", out.x_tracker_size},
                 {"z_tracker", out.z_tracker_size},
                 {"trackers_match_frame", out.trackers_match_frame}};
    rep.pass = rr.completed() && rep.fidelity >= 1.0 - tol && rep.epr_charged == 2 * out.gh_f &&
               out.x_tracker_size <= 4 * out.gh_f + 1 && out.z_tracker_size <= 11 * out.gh_f + 2 &&
               out.trackers_match_frame;
    return out;
}

}  // namespace inqc
