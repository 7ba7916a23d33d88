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


#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "inqc/protocols.h"
#include "key_atoms.h"

namespace inqc {

double tdepth_m_bound(std::uint32_t n, std::uint32_t t) {
    double m = 3;
    for (std::uint32_t i = 0; i < t; ++i) m = 68.0 * n * m + 12.0 * n + 1;
    return m;
}

double tdepth_m_closed_form(std::uint32_t n, std::uint32_t t) {
    const double a = 68.0 * n;
    const double c1 = (216.0 * n - 2) / (a - 1);
    const double c2 = 3 - c1;
    return c1 * std::pow(a, t) + c2;
}

double tdepth_charge_bound(std::uint32_t n, std::uint32_t d) {
    double acc = 0;
    for (std::uint32_t t = 1; t <= d; ++t) acc += 2.0 * n * tdepth_m_closed_form(n, t - 1);
    return acc;
}

namespace {

using detail::AtomTable;

struct KeyProtocols {
    std::vector<GardenHose> x;
    std::vector<GardenHose> z;

    std::int64_t max_size() const {
        std::int64_t m = 0;
        for (const auto& p : x) m = std::max(m, p->size());
        for (const auto& p : z) m = std::max(m, p->size());
        return m;
    }
};

}  // namespace

ProtocolResult run_tdepth_protocol(const Circuit& c, const StateVector& input, std::uint64_t seed, double tol) {
    const std::uint32_t n = c.width();
    if (input.num_qubits() != n) throw std::invalid_argument("input state width does not match circuit");
    const LayerDecomposition& layers = c.layers();
    const auto d = static_cast<std::uint32_t>(layers.t_layers.size());

    Referee ref(seed);
    ProtocolResult out;
    StateVector state = input;
    StateVector expected = input;
    expected.apply(c);
    const auto bw = bob_wires(n);
    const auto every = all_wires(n);

    KeyProtocols keys;
    PolyKey back(n);
    std::vector<std::int64_t> m_trace;
    std::vector<PhaseRemoval> removals;
    std::int64_t final_return = 0;
    bool trackers_ok = true;

    Program prog;
    prog.phase1 = [&](Referee& r) {
        VarStore& st = r.store();
        PolyKey key = teleport_wires(state, bw, Party::Bob, st, "b0");
        r.ledger().charge("input", static_cast<std::int64_t>(bw.size()));
        state.apply(layers.cliffords[0]);
        key = conjugate_key_through_clifford(key, std::span<const Gate>(layers.cliffords[0]));
        for (auto w : every) {
            keys.x.push_back(gh_local_xor(KeyPolynomial::zero(), key.x[w]));
            keys.z.push_back(gh_local_xor(KeyPolynomial::zero(), key.z[w]));
        }
        m_trace.push_back(keys.max_size());

        for (std::uint32_t t = 1; t <= d; ++t) {
            AtomTable atoms;
            PolyKey sym(n);
            for (auto w : every) {
                sym.x[w] = atoms.add(keys.x[w]);
                sym.z[w] = atoms.add(keys.z[w]);
            }
            for (const Gate& g : layers.t_layers[t - 1].gates) {
                const std::uint32_t w = g.q0;
                state.apply(g);
                const GateKind stray = g.kind == GateKind::T ? GateKind::P : GateKind::Pdag;
                removals.push_back(phase_removal(keys.x[w], stray, r.views(), st, state, w, &r.ledger(),
                                                 "pr" + std::to_string(t) + ".w" + std::to_string(w)));
                sym.x[w] ^= atoms.add(removals.back().x_tracker);
                sym.z[w] ^= atoms.add(removals.back().z_tracker);
            }
            state.apply(layers.cliffords[t]);
            sym = conjugate_key_through_clifford(sym, std::span<const Gate>(layers.cliffords[t]));
            for (auto w : every) {
                keys.x[w] = atoms.materialize(sym.x[w]);
                keys.z[w] = atoms.materialize(sym.z[w]);
            }
            m_trace.push_back(keys.max_size());
        }

        back = teleport_wires(state, bw, Party::Alice, st, "ret");
        final_return = static_cast<std::int64_t>(bw.size());
    };
    prog.phase2 = [&](Referee& r) {
        for (auto w : every) {
            const PartyView& v = r.view(w < n / 2 ? Party::Alice : Party::Bob);
            const bool x = gh_evaluate(*keys.x[w], r.views()).bit() != back.x[w].eval(v);
            const bool z = gh_evaluate(*keys.z[w], r.views()).bit() != back.z[w].eval(v);
            state.apply_pauli(w, x, z);
        }
        for (const auto& pr : removals) {
            const bool g = gh_evaluate(*pr.x_tracker, r.views()).bit();
            const bool h = gh_evaluate(*pr.z_tracker, r.views()).bit();
            if (g != pr.run.frame_x || h != pr.run.frame_z) trackers_ok = false;
        }
    };
    RefereeResult rr = referee_run(prog, ref);

    out.transcript = rr.transcript;
    out.violation = rr.violation;
    out.output = state;
    out.expected = expected;

    const std::int64_t phase_charge = ref.ledger().total_for("phase-removal");
    bool recurrence_ok = !m_trace.empty() && m_trace[0] <= 3;
    double sum_2nm = 0;
    for (std::size_t t = 1; t < m_trace.size(); ++t) {
        const double lim = 68.0 * n * static_cast<double>(m_trace[t - 1]) + 12.0 * n + 1;
        if (static_cast<double>(m_trace[t]) > lim) recurrence_ok = false;
    }
    for (std::size_t t = 1; t <= d && t <= m_trace.size(); ++t) sum_2nm += 2.0 * n * static_cast<double>(m_trace[t - 1]);
    const double closed = tdepth_charge_bound(n, d);

    RunReport& rep = out.report;
    rep.protocol = "tdepth";
    rep.n = n;
    rep.param_name = "d";
    rep.param = d;
    rep.seed = seed;
    rep.epr_charged = rr.epr_charged;
    rep.bound = closed;
    rep.fidelity = rr.completed() ? fidelity(state, expected) : 0.0;
    rep.m_trace = m_trace;
    rep.extra = {{"phase_charge", phase_charge},
                 {"input_charge", ref.ledger().total_for("input")},
                 {"sum_2n_m", sum_2nm},
                 {"recurrence_ok", recurrence_ok},
                 {"trackers_match_frame", trackers_ok},
                 {"epr_final_return", final_return}};
    rep.pass = rr.completed() && rep.fidelity >= 1.0 - tol && recurrence_ok && trackers_ok &&
               static_cast<double>(phase_charge) <= sum_2nm && static_cast<double>(phase_charge) <= closed;
    return out;
}

}  // namespace inqc
