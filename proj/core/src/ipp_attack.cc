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


#include "inqc/ipp.h"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "key_atoms.h"

namespace inqc {

namespace {

using detail::AtomTable;
using nlohmann::json;

Unitary2 factor(bool on, GateKind g) { return on ? gate_matrix(g) : Unitary2::Identity(); }

Unitary2 circuit_matrix(const Circuit& c) {
    if (c.width() != 1) throw std::invalid_argument("registry circuits act on one qubit");
    Unitary2 m = Unitary2::Identity();
    for (const Gate& g : c.gates()) m = gate_matrix(g.kind) * m;
    return m;
}

Unitary2 exact_product(const IppInstance& inst, std::uint64_t x, std::uint64_t y) {
    Unitary2 m = Unitary2::Identity();
    for (const auto& w : inst.time_order(x, y)) m = w * m;
    return m;
}

GateKind gate_from_name(const std::string& s) {
    for (GateKind k : {GateKind::X, GateKind::Z, GateKind::H, GateKind::P, GateKind::Pdag, GateKind::T, GateKind::Tdag}) {
        if (s == gate_name(k)) return k;
    }
    throw std::invalid_argument("unknown single-qubit gate '" + s + "'");
}

json matrix_json(const Unitary2& u) {
    json out = json::array();
    for (int i = 0; i < 4; ++i) out.push_back({u(i / 2, i % 2).real(), u(i / 2, i % 2).imag()});
    return out;
}

std::string label_bits(std::uint32_t label, std::uint32_t width) {
    std::string s;
    for (std::uint32_t b = 0; b < width; ++b) s.push_back(((label >> b) & 1) ? '1' : '0');
    return s;
}

void check_instance(const IppInstance& inst) {
    if (inst.t == 0 || inst.t > kIppPositionCap) {
        throw std::invalid_argument("t must be in [1, " + std::to_string(kIppPositionCap) + "]");
    }
    if (inst.alice_gates.size() != inst.t || inst.bob_gates.size() != inst.t) {
        throw std::invalid_argument("one gate per position and party");
    }
    if ((inst.x >> inst.t) || (inst.y >> inst.t)) throw std::invalid_argument("inputs wider than t bits");
}

struct LabelKeys {
    GardenHose x;
    GardenHose z;
    std::int64_t size() const { return std::max(x->size(), z->size()); }
};

LabelKeys apply_clifford(std::span<const Gate> gates, const AtomTable& atoms, PolyKey key) {
    key = conjugate_key_through_clifford(std::move(key), gates);
    return {atoms.materialize(key.x[0]), atoms.materialize(key.z[0])};
}

}  // namespace

std::vector<Unitary2> IppInstance::us(std::uint64_t xx) const {
    std::vector<Unitary2> out;
    for (std::uint32_t i = 0; i < t; ++i) out.push_back(factor((xx >> i) & 1, alice_gates.at(i)));
    return out;
}

std::vector<Unitary2> IppInstance::vs(std::uint64_t yy) const {
    std::vector<Unitary2> out;
    for (std::uint32_t i = 0; i < t; ++i) out.push_back(factor((yy >> i) & 1, bob_gates.at(i)));
    return out;
}

std::vector<Unitary2> IppInstance::time_order(std::uint64_t xx, std::uint64_t yy) const {
    const auto u = us(xx);
    const auto v = vs(yy);
    std::vector<Unitary2> out;
    for (std::uint32_t i = t; i-- > 0;) {
        out.push_back(v[i]);
        out.push_back(u[i]);
    }
    return out;
}

Circuit IppInstance::product_circuit(std::uint64_t xx, std::uint64_t yy) const {
    std::vector<Gate> gates;
    for (std::uint32_t i = t; i-- > 0;) {
        if ((yy >> i) & 1) gates.push_back(make_gate(bob_gates.at(i), 0));
        if ((xx >> i) & 1) gates.push_back(make_gate(alice_gates.at(i), 0));
    }
    return Circuit(1, std::move(gates));
}

std::uint32_t IppRegistry::bits() const {
    std::uint32_t k = 1;
    while ((std::size_t{1} << k) < labels.size()) ++k;
    return k;
}

IppRegistry build_registry(const IppInstance& inst) {
    check_instance(inst);
    IppRegistry reg;
    std::map<RoundedMatrix, std::uint32_t> seen;
    const std::uint64_t side = std::uint64_t{1} << inst.t;
    for (std::uint64_t xx = 0; xx < side; ++xx) {
        for (std::uint64_t yy = 0; yy < side; ++yy) {
            const auto ws = inst.time_order(xx, yy);
            const RoundedMatrix r = rounded_product(ws, inst.ell).m;
            auto it = seen.find(r);
            if (it == seen.end()) {
                it = seen.emplace(r, static_cast<std::uint32_t>(reg.labels.size())).first;
                reg.labels.push_back({r, inst.product_circuit(xx, yy), 0.0});
            } else if (operator_norm(circuit_matrix(reg.labels[it->second].circuit) - exact_product(inst, xx, yy)) >
                       1e-9) {
                throw std::invalid_argument("two input pairs share a label but not a product");
            }
            reg.label_of.push_back(it->second);
        }
    }
    if (reg.labels.size() > (std::size_t{1} << kMultiOutputCap)) throw std::invalid_argument("too many labels");
    return reg;
}

IppRegistry attach_registry(const IppInstance& inst, std::vector<IppLabel> labels) {
    check_instance(inst);
    IppRegistry reg;
    std::map<RoundedMatrix, std::uint32_t> index;
    for (std::uint32_t i = 0; i < labels.size(); ++i) {
        const double slack = labels[i].eps2 + rounding_bound(2 * inst.t, inst.ell);
        if (operator_norm(circuit_matrix(labels[i].circuit) - labels[i].rounded.value()) > slack) {
            throw std::invalid_argument("registry entry " + std::to_string(i) + ": circuit is far from its label");
        }
        index.emplace(labels[i].rounded, i);
    }
    reg.labels = std::move(labels);
    const std::uint64_t side = std::uint64_t{1} << inst.t;
    for (std::uint64_t xx = 0; xx < side; ++xx) {
        for (std::uint64_t yy = 0; yy < side; ++yy) {
            const RoundedMatrix r = rounded_product(inst.time_order(xx, yy), inst.ell).m;
            auto it = index.find(r);
            if (it == index.end()) throw std::invalid_argument("label has no registered decomposition");
            reg.label_of.push_back(it->second);
        }
    }
    if (reg.labels.size() > (std::size_t{1} << kMultiOutputCap)) throw std::invalid_argument("too many labels");
    return reg;
}

IppInstance generate_ipp_instance(std::uint32_t t, std::uint64_t seed) {
    if (t == 0 || t > kIppPositionCap) throw std::invalid_argument("t must be in [1, " + std::to_string(kIppPositionCap) + "]");
    std::mt19937_64 rng(seed);
    static constexpr GateKind pool[] = {GateKind::H, GateKind::P, GateKind::T};
    IppInstance inst;
    inst.t = t;
    std::uint32_t t_left = t <= 2 ? 2 : 1;
    auto draw = [&] {
        GateKind g = pool[rng() % 3];
        if (g == GateKind::T) {
            if (t_left == 0) return pool[rng() % 2];
            --t_left;
        }
        return g;
    };
    for (std::uint32_t i = 0; i < t; ++i) {
        inst.alice_gates.push_back(draw());
        inst.bob_gates.push_back(draw());
    }
    inst.x = rng() & ((std::uint64_t{1} << t) - 1);
    inst.y = rng() & ((std::uint64_t{1} << t) - 1);
    inst.ell = ell_for(2 * t, 1e-3);
    return inst;
}

std::string ipp_instance_json(const IppInstance& inst, const IppRegistry& reg) {
    json j;
    j["t"] = inst.t;
    j["ell"] = inst.ell;
    j["x"] = inst.x;
    j["y"] = inst.y;
    for (auto g : inst.alice_gates) j["alice_gates"].push_back(gate_name(g));
    for (auto g : inst.bob_gates) j["bob_gates"].push_back(gate_name(g));
    j["us"] = json::array();
    j["vs"] = json::array();
    for (const auto& u : inst.us(inst.x)) j["us"].push_back(matrix_json(u));
    for (const auto& v : inst.vs(inst.y)) j["vs"].push_back(matrix_json(v));
    j["registry"] = json::array();
    for (std::uint32_t i = 0; i < reg.labels.size(); ++i) {
        const auto& l = reg.labels[i];
        j["registry"].push_back({{"label", i},
                                 {"label_bits", label_bits(i, reg.bits())},
                                 {"rounded", l.rounded.parts},
                                 {"circuit", l.circuit.to_text()},
                                 {"eps2", l.eps2}});
    }
    return j.dump(2);
}

std::pair<IppInstance, IppRegistry> parse_ipp_instance(std::string_view text, const std::string& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("instance: ") + e.what());
    }
    IppInstance inst;
    try {
        inst.t = j.at("t").get<std::uint32_t>();
        inst.x = j.value("x", std::uint64_t{0});
        inst.y = j.value("y", std::uint64_t{0});
        inst.ell = j.value("ell", 0);
        for (const auto& g : j.at("alice_gates")) inst.alice_gates.push_back(gate_from_name(g.get<std::string>()));
        for (const auto& g : j.at("bob_gates")) inst.bob_gates.push_back(gate_from_name(g.get<std::string>()));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("instance: ") + e.what());
    }
    if (inst.ell == 0) inst.ell = ell_for(2 * std::max(inst.t, 1u), 1e-3);
    check_instance(inst);
    if (!j.contains("registry")) return {inst, build_registry(inst)};

    std::vector<IppLabel> labels;
    for (const auto& e : j.at("registry")) {
        IppLabel l;
        std::string text_c;
        if (e.contains("circuit")) {
            text_c = e.at("circuit").get<std::string>();
        } else if (e.contains("circuit_file")) {
            std::ifstream in(base_dir + "/" + e.at("circuit_file").get<std::string>());
            if (!in) throw std::invalid_argument("cannot read " + e.at("circuit_file").get<std::string>());
            std::stringstream ss;
            ss << in.rdbuf();
            text_c = ss.str();
        } else {
            throw std::invalid_argument("registry entry without circuit");
        }
        l.circuit = parse_circuit(text_c);
        l.eps2 = e.value("eps2", 0.0);
        if (e.contains("rounded")) {
            l.rounded.ell = inst.ell;
            l.rounded.parts = e.at("rounded").get<std::array<std::int64_t, 8>>();
        } else {
            l.rounded = round_matrix(circuit_matrix(l.circuit), inst.ell);
        }
        labels.push_back(std::move(l));
    }
    return {inst, attach_registry(inst, std::move(labels))};
}

IppResult run_ipp_attack(const IppInstance& inst, const IppRegistry& reg, bool x_bit, std::uint64_t seed) {
    check_instance(inst);
    const std::uint64_t side = std::uint64_t{1} << inst.t;
    if (reg.label_of.size() != side * side) throw std::invalid_argument("registry does not match instance");

    IppResult res;
    res.x_bit = x_bit;
    res.label = reg.label_of[(inst.x << inst.t) | inst.y];
    res.rounding_error = rounded_product(inst.time_order(inst.x, inst.y), inst.ell).error;
    const std::uint32_t nlabels = static_cast<std::uint32_t>(reg.labels.size());
    res.m_traces.resize(nlabels);
    res.removed.resize(nlabels);

    Referee ref(seed);
    StateVector state(1);
    if (x_bit) state.apply(make_gate(GateKind::X, 0));
    state.apply(inst.product_circuit(inst.x, inst.y));
    StateVector before_measure(1);
    LabelKeys final_keys;
    Var outcome;
    std::vector<PhaseRemoval> removals;

    Program prog;
    prog.phase1 = [&](Referee& r) {
        VarStore& st = r.store();
        auto in = allocate_inputs(st, inst.t, inst.t, "in.");
        assign_bits(st, in.alice, inst.x);
        assign_bits(st, in.bob, inst.y);

        std::vector<GardenHose> bits;
        for (std::uint32_t b = 0; b < reg.bits(); ++b) {
            auto tt = TruthTable::from_function(inst.t, inst.t, [&](std::uint64_t xx, std::uint64_t yy) {
                return ((reg.label_of[(xx << inst.t) | yy] >> b) & 1) != 0;
            });
            bits.push_back(gh_from_truth_table(tt, in.alice, in.bob));
        }
        auto routing = gh_multi_output(std::move(bits));
        res.routing_size = routing->size();
        auto outcomes = std::make_shared<OutcomeTable>(st, "route.");
        gh_quantum_execute(*routing, r.views(), *outcomes, state, 0, &r.ledger(), "routing");
        measure_all_hoses(*routing, r.views(), *outcomes);

        for (std::uint32_t label = 0; label < nlabels; ++label) {
            const bool active = label == res.label;
            TrackerTerminal term{Party::Alice,
                                 [routing, label](const PartyView& v) { return routing->exit_pipe(label, v); }};
            LabelKeys keys{gh_tracker(routing, outcomes, term, TrackerMode::X),
                           gh_tracker(routing, outcomes, term, TrackerMode::Z)};
            const Circuit inv = reg.labels[label].circuit.inverse();
            const auto segs = inv.clifford_segments();
            const auto ts = inv.t_sequence();
            auto& trace = res.m_traces[label];

            auto step = [&](const LabelKeys& k, const std::vector<Gate>& seg, std::optional<PhaseRemoval> pr) {
                AtomTable atoms;
                PolyKey key(1);
                key.x[0] = atoms.add(k.x);
                key.z[0] = atoms.add(k.z);
                if (pr) {
                    key.x[0] ^= atoms.add(pr->x_tracker);
                    key.z[0] ^= atoms.add(pr->z_tracker);
                }
                if (active) state.apply(seg);
                return apply_clifford(seg, atoms, std::move(key));
            };

            keys = step(keys, segs[0], std::nullopt);
            trace.push_back(keys.size());
            for (std::size_t i = 0; i < ts.size(); ++i) {
                const Gate g = ts[i];
                const GateKind stray = g.kind == GateKind::T ? GateKind::P : GateKind::Pdag;
                const std::string tag = "l" + std::to_string(label) + ".pr" + std::to_string(i + 1);
                res.removed[label].push_back(keys.x->size());
                PhaseRemoval pr;
                if (active) {
                    state.apply(g);
                    pr = phase_removal(keys.x, stray, r.views(), st, state, 0, &r.ledger(), tag);
                    removals.push_back(pr);
                } else {
                    pr.mirror = gh_mirror(keys.x, stray == GateKind::P ? GateKind::Pdag : GateKind::P);
                    pr.outcomes = std::make_shared<OutcomeTable>(st, tag + ".");
                    pr.x_tracker = build_x_tracker(pr.mirror, pr.outcomes);
                    pr.z_tracker = build_z_tracker(pr.mirror, pr.outcomes);
                    r.ledger().charge("phase-removal", pr.mirror->size());
                }
                keys = step(keys, segs[i + 1], pr);
                trace.push_back(keys.size());
            }
            if (active) final_keys = keys;
        }

        before_measure = state;
        const bool bit = state.measure(0, r.nature());
        outcome = st.allocate_value(Party::Alice, "measure", bit);
    };
    bool trackers_ok = true;
    prog.phase2 = [&](Referee& r) {
        const bool kx = gh_evaluate(*final_keys.x, r.views()).bit();
        res.guess_alice = r.view(Party::Alice)(outcome) != kx;
        res.guess_bob = r.view(Party::Bob)(outcome) != kx;
        for (const auto& pr : removals) {
            if (gh_evaluate(*pr.x_tracker, r.views()).bit() != pr.run.frame_x ||
                gh_evaluate(*pr.z_tracker, r.views()).bit() != pr.run.frame_z) {
                trackers_ok = false;
            }
        }
        const double p1 = before_measure.probability_one(0);
        res.result.report.fidelity = (x_bit != kx) ? p1 : 1.0 - p1;
    };
    RefereeResult rr = referee_run(prog, ref);

    auto& out = res.result;
    out.transcript = rr.transcript;
    out.violation = rr.violation;
    out.output = before_measure;
    out.expected = StateVector(1);

    std::int64_t expect_ledger = res.routing_size;
    double bound = static_cast<double>(res.routing_size);
    bool recurrence_ok = true;
    for (std::uint32_t l = 0; l < nlabels; ++l) {
        const auto& m = res.m_traces[l];
        for (std::size_t i = 0; i < res.removed[l].size(); ++i) {
            expect_ledger += 2 * res.removed[l][i];
            bound += 2.0 * static_cast<double>(m[i]);
            if (res.removed[l][i] > m[i]) recurrence_ok = false;
            if (m[i + 1] > 68 * m[i] + 13) recurrence_ok = false;
        }
    }

    RunReport& rep = out.report;
    rep.protocol = "ipp";
    rep.n = 1;
    rep.param_name = "t";
    rep.param = inst.t;
    rep.seed = seed;
    rep.epr_charged = rr.epr_charged;
    rep.bound = bound;
    if (!rr.completed()) rep.fidelity = 0;
    rep.m_trace = res.m_traces[res.label];
    rep.extra = {{"t", inst.t},
                 {"ell", inst.ell},
                 {"rounding_error", res.rounding_error},
                 {"labels", nlabels},
                 {"label", res.label},
                 {"routing_size", res.routing_size},
                 {"x_bit", x_bit},
                 {"guess", res.guess_alice},
                 {"success", res.correct()},
                 {"recurrence_ok", recurrence_ok},
                 {"trackers_match_frame", trackers_ok}};
    rep.pass = rr.completed() && res.correct() && res.guess_alice == res.guess_bob && recurrence_ok && trackers_ok &&
               rep.epr_charged == expect_ledger && static_cast<double>(rep.epr_charged) <= bound &&
               res.rounding_error <= rounding_bound(2 * inst.t, inst.ell);
    return res;
}

}  // namespace inqc
