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

std::int64_t tcount_charge(std::uint32_t n, std::uint32_t k) {
    const std::int64_t nn = n;
    return (nn + 1) / 2 + 3 * nn * ((std::int64_t{1} << k) - 1);
}

std::int64_t tcount_bound(std::uint32_t n, std::uint32_t k) { return 3 * std::int64_t{n} * (std::int64_t{1} << k); }

namespace {

void correct_wire(StateVector& s, const PolyKey& key, std::uint32_t w, const PartyView& v) {
    s.apply_pauli(w, key.x[w].eval(v), key.z[w].eval(v));
}

}  // namespace

ProtocolResult run_tcount_protocol(const Circuit& c, const StateVector& input, std::uint64_t seed, double tol) {
    const std::uint32_t n = c.width();
    if (input.num_qubits() != n) throw std::invalid_argument("input state width does not match circuit");
    const auto segs = c.clifford_segments();
    const auto ts = c.t_sequence();
    const auto k = static_cast<std::uint32_t>(ts.size());
    if (k > 20) throw std::invalid_argument("T-count above 20");

    Referee ref(seed);
    ProtocolResult out;
    StateVector state = input;
    StateVector expected = input;
    expected.apply(c);
    PolyKey key(n);
    const auto bw = bob_wires(n);
    const auto every = all_wires(n);
    std::int64_t final_return = 0;

    Program prog;
    prog.phase1 = [&](Referee& r) {
        VarStore& st = r.store();
        const PartyView& alice = r.view(Party::Alice);
        const PartyView& bob = r.view(Party::Bob);

        key = teleport_wires(state, bw, Party::Bob, st, "b0");
        r.ledger().charge("input", static_cast<std::int64_t>(bw.size()));

        for (std::uint32_t t = 0; t < k; ++t) {
            state.apply(segs[t]);
            key = conjugate_key_through_clifford(key, std::span<const Gate>(segs[t]));
            const Gate g = ts[t];
            const std::uint32_t w = g.q0;
            const KeyPolynomial b = key.x[w];
            state.apply(g);

            const PolyKey a = teleport_wires(state, every, Party::Alice, st, "a" + std::to_string(t + 1));

            // Bob: undo the stray phase, then his key.
            const bool bb = b.eval(bob);
            if (bb) state.apply(make_gate(g.kind == GateKind::T ? GateKind::Pdag : GateKind::P, w));
            for (auto v : every) correct_wire(state, key, v, bob);
            const PolyKey b2 = teleport_wires(state, every, Party::Bob, st, "b" + std::to_string(t + 1));

            // Alice, on the set Bob sent through.
            const bool set = bb;
            for (auto v : every) {
                const bool ax = a.x[v].eval(alice);
                bool az = a.z[v].eval(alice);
                if (v == w && ax && set) az = !az;
                state.apply_pauli(v, ax, az);
            }
            key = b2;
            r.ledger().charge("round " + std::to_string(t + 1), (std::int64_t{1} << t) * 3 * std::int64_t{n});
        }
        state.apply(segs[k]);
        key = conjugate_key_through_clifford(key, std::span<const Gate>(segs[k]));

        const PolyKey back = teleport_wires(state, bw, Party::Alice, st, "ret");
        final_return = static_cast<std::int64_t>(bw.size());
        for (auto v : bw) {
            key.x[v] ^= back.x[v];
            key.z[v] ^= back.z[v];
        }
    };
    prog.phase2 = [&](Referee& r) {
        for (auto v : every) correct_wire(state, key, v, r.view(v < n / 2 ? Party::Alice : Party::Bob));
    };
    RefereeResult rr = referee_run(prog, ref);

    out.transcript = rr.transcript;
    out.violation = rr.violation;
    out.output = state;
    out.expected = expected;
    RunReport& rep = out.report;
    rep.protocol = "tcount";
    rep.n = n;
    rep.param_name = "k";
    rep.param = k;
    rep.seed = seed;
    rep.epr_charged = rr.epr_charged;
    rep.bound = static_cast<double>(tcount_bound(n, k));
    rep.fidelity = rr.completed() ? fidelity(state, expected) : 0.0;
    rep.extra = {{"expected_charge", tcount_charge(n, k)}, {"epr_final_return", final_return}};
    rep.pass = rr.completed() && rep.fidelity >= 1.0 - tol && rep.epr_charged == tcount_charge(n, k) &&
               rep.epr_charged <= tcount_bound(n, k);
    return out;
}

}  // namespace inqc
