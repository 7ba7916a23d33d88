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


// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "inqc/garden_hose.h"
#include "inqc/generators.h"
#include "inqc/ipp.h"
#include "inqc/protocols.h"

using namespace inqc;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int g_violations = 0;
int g_runs = 0;

void note_run(const std::optional<std::string>& v) {
    ++g_runs;
    if (v) ++g_violations;
}

StateVector random_state(std::uint32_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dULL + n);
    return StateVector::random(n, rng);
}

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Outcome key_transforms() {
    Outcome o;
    int checked = 0, bad = 0;
    for (std::uint32_t n = 1; n <= 3; ++n) {
        std::vector<Gate> gates;
        for (std::uint32_t w = 0; w < n; ++w) {
            for (auto k : {GateKind::H, GateKind::P, GateKind::Pdag, GateKind::X, GateKind::Z}) gates.push_back(make_gate(k, w));
            for (std::uint32_t t = 0; t < n; ++t) {
                if (t != w) gates.push_back(make_cnot(w, t));
            }
        }
        const StateVector psi = random_state(n, 7);
        for (const Gate& g : gates) {
            for (std::uint32_t bits = 0; bits < (1u << (2 * n)); ++bits) {
                PauliKey k(n);
                for (std::uint32_t w = 0; w < n; ++w) {
                    k.x[w] = (bits >> w) & 1;
                    k.z[w] = (bits >> (n + w)) & 1;
                }
                PauliKey k2 = k;
                conjugate_key(k2, g);
                StateVector lhs = psi;
                lhs.apply_pauli(k);
                lhs.apply(g);
                StateVector rhs = psi;
                rhs.apply(g);
                rhs.apply_pauli(k2);
                if (std::abs(fidelity(lhs, rhs) - 1) > 1e-9) ++bad;

                // The rules, written out.
                PauliKey want = k;
                const auto a = g.q0, b = g.q1;
                if (g.kind == GateKind::H) std::swap(want.x[a], want.z[a]);
                if (g.kind == GateKind::P || g.kind == GateKind::Pdag) want.z[a] ^= want.x[a];
                if (g.kind == GateKind::CNOT) {
                    want.x[b] ^= k.x[a];
                    want.z[a] ^= k.z[b];
                }
                if (!(want == k2)) ++bad;
                ++checked;
            }
        }
    }
    o.pass = bad == 0;
    o.detail = fmt("%d gate/key pairs, %d mismatches", checked, bad);
    return o;
}

TruthTable table_for(std::uint32_t na, std::uint32_t nb, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return TruthTable::from_function(na, nb, [&](std::uint64_t, std::uint64_t) { return (rng() >> 40) & 1; });
}

Outcome garden_hose() {
    Outcome o;
    int bad = 0, evals = 0;
    for (std::uint32_t na = 1; na <= 4; ++na) {
        for (std::uint32_t nb = 1; nb <= 4; ++nb) {
            VarStore st;
            auto in = allocate_inputs(st, na, nb);
            std::vector<TruthTable> ts;
            std::vector<GardenHose> fs;
            for (int i = 0; i < 3; ++i) {
                ts.push_back(table_for(na, nb, na * 100 + nb * 10 + i));
                fs.push_back(gh_from_truth_table(ts.back(), in.alice, in.bob));
            }
            const std::int64_t s = (std::int64_t{1} << na) + 1;
            auto so = gh_single_output(fs[0]);
            auto x = gh_xor(fs, true);
            auto m = gh_multi_output(fs);
            if (fs[0]->size() != s) ++bad;
            if (so->size() != 3 * s + 1) ++bad;
            if (x->size() != 4 * 3 * s + 1) ++bad;
            if (m->size() != (1 + 2 + 4) * 3 * s) ++bad;
            for (std::uint64_t a = 0; a < (1u << na); ++a) {
                for (std::uint64_t b = 0; b < (1u << nb); ++b) {
                    const bool f0 = ts[0].at(a, b), f1 = ts[1].at(a, b), f2 = ts[2].at(a, b);
                    if (gh_evaluate(*fs[0], st, a, b).bit() != f0) ++bad;
                    if (gh_evaluate(*so, st, a, b).bit() != f0) ++bad;
                    if (gh_evaluate(*x, st, a, b).bit() != (!f0 != (f1 != f2))) ++bad;
                    const Exit e = gh_evaluate(*m, st, a, b);
                    const std::uint32_t want = f0 | (f1 << 1) | (f2 << 2);
                    if (e.side != Party::Alice || e.label != want) ++bad;
                    evals += 4;
                }
            }
            if (spilling_pipes(*so, st, Party::Alice) != 1 || spilling_pipes(*so, st, Party::Bob) != 1) ++bad;
        }
    }
    o.pass = bad == 0;
    o.detail = fmt("%d evaluations, %d failures", evals, bad);
    return o;
}

Outcome phase_removal_runs() {
    Outcome o;
    const std::vector<std::pair<const char*, std::function<bool(std::uint64_t, std::uint64_t)>>> fs = {
        {"AND", [](auto x, auto y) { return (x & y) == 3; }},
        {"OR", [](auto x, auto y) { return (x | y) != 0; }},
        {"XOR", [](auto x, auto y) { return (std::popcount(x ^ y) & 1) != 0; }},
        {"EQ", [](auto x, auto y) { return x == y; }}};
    int runs = 0, bad = 0;
    double worst = 0;
    for (const auto& [name, f] : fs) {
        const auto t = TruthTable::from_function(2, 2, f);
        const std::int64_t gh = 5;
        for (std::uint64_t x = 0; x < 4; ++x) {
            for (std::uint64_t y = 0; y < 4; ++y) {
                for (std::uint64_t seed = 0; seed < 100; ++seed) {
                    auto r = run_phase_removal_check(t, x, y, seed * 16 + x * 4 + y, 1e-10);
                    note_run(r.result.violation);
                    ++runs;
                    worst = std::max(worst, std::abs(1 - r.result.report.fidelity));
                    if (std::abs(1 - r.result.report.fidelity) > 1e-10 || r.result.report.epr_charged != 2 * gh ||
                        r.x_tracker_size > 4 * gh + 1 || r.z_tracker_size > 11 * gh + 2 || !r.trackers_match_frame ||
                        r.result.violation) {
                        ++bad;
                    }
                }
            }
        }
    }
    o.pass = bad == 0;
    o.detail = fmt("%d runs, %d failures, worst |1-F| %.1e", runs, bad, worst);
    return o;
}

Outcome tcount_runs() {
    Outcome o;
    int runs = 0, bad = 0;
    double worst = 0;
    for (std::uint32_t n : {2u, 4u}) {
        for (std::uint32_t k = 0; k <= 3; ++k) {
            const std::int64_t want = n / 2 + [&] {
                std::int64_t s = 0;
                for (std::uint32_t t = 1; t <= k; ++t) s += (std::int64_t{1} << (t - 1)) * 3 * n;
                return s;
            }();
            for (std::uint64_t seed = 0; seed < 100; ++seed) {
                const Circuit c = generate_random_circuit(n, k, seed);
                const StateVector in = random_state(n, seed);
                StateVector direct = in;
                direct.apply(c);
                auto r = run_tcount_protocol(c, in, seed);
                note_run(r.violation);
                ++runs;
                const double f = fidelity(r.output, direct);
                worst = std::max(worst, std::abs(1 - f));
                if (std::abs(1 - f) > 1e-9 || r.report.epr_charged != want ||
                    r.report.epr_charged > 3 * std::int64_t{n} * (std::int64_t{1} << k) || r.violation) {
                    ++bad;
                }
            }
        }
    }
    o.pass = bad == 0;
    o.detail = fmt("%d runs, %d failures, worst |1-F| %.1e", runs, bad, worst);
    return o;
}

Outcome tdepth_runs() {
    Outcome o;
    int runs = 0, bad = 0;
    double worst = 0;
    std::int64_t mmax = 0;
    for (std::uint32_t n : {2u, 3u}) {
        const double c1 = (216.0 * n - 2) / (68.0 * n - 1);
        const double c2 = 3 - c1;
        for (std::uint32_t d = 1; d <= 2; ++d) {
            double closed = 0;
            for (std::uint32_t t = 1; t <= d; ++t) closed += 2.0 * n * (c1 * std::pow(68.0 * n, t - 1) + c2);
            for (std::uint64_t seed = 0; seed < 50; ++seed) {
                const Circuit c = generate_tdepth_circuit(n, d, seed);
                const StateVector in = random_state(n, seed + 1000);
                StateVector direct = in;
                direct.apply(c);
                auto r = run_tdepth_protocol(c, in, seed);
                note_run(r.violation);
                ++runs;
                const auto& m = r.report.m_trace;
                const double f = fidelity(r.output, direct);
                worst = std::max(worst, std::abs(1 - f));
                bool ok = std::abs(1 - f) <= 1e-9 && m.size() == d + 1 && m[0] <= 3 && !r.violation;
                double sum = 0;
                for (std::size_t t = 1; ok && t < m.size(); ++t) {
                    ok = m[t] <= 68 * std::int64_t{n} * m[t - 1] + 12 * n + 1;
                    sum += 2.0 * n * static_cast<double>(m[t - 1]);
                }
                const double charge = r.report.extra["phase_charge"].get<double>();
                ok = ok && charge <= sum && charge <= closed;
                ok = ok && r.report.extra["trackers_match_frame"].get<bool>();
                if (!ok) ++bad;
                mmax = std::max(mmax, m.back());
            }
        }
    }
    o.pass = bad == 0;
    o.detail = fmt("%d runs, %d failures, worst |1-F| %.1e, largest key %lld", runs, bad, worst,
                   static_cast<long long>(mmax));
    return o;
}

Outcome hierarchy_runs() {
    Outcome o;
    int runs = 0, bad = 0;
    const std::vector<std::pair<const char*, std::string>> us = {{"T", "qubits 1\nT 0\n"}, {"P.T", "qubits 1\nT 0\nP 0\n"}};
    for (const auto& [name, text] : us) {
        const Circuit c = parse_circuit(text);
        const auto u = circuit_unitary(c);
        const int level = hierarchy_level(u, 1, 3);
        if (level < 1 || level > 3) {
            ++bad;
            continue;
        }
        std::int64_t want = 1;
        for (int t = 1; t < level; ++t) want += std::int64_t{1} << (2 * t);
        const auto table = build_conjugation_table(u, 1);
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const StateVector in = random_state(1, seed + 77);
            StateVector direct = in;
            direct.apply(c);
            auto r = run_clifford_hierarchy(table, level, in, seed);
            note_run(r.violation);
            ++runs;
            if (std::abs(1 - fidelity(r.output, direct)) > 1e-10 || r.report.epr_charged != want || r.violation) ++bad;
        }
    }
    o.pass = bad == 0;
    o.detail = fmt("%d runs, %d failures", runs, bad);
    return o;
}

Outcome rounding() {
    Outcome o;
    int trials = 0, bad = 0;
    std::mt19937_64 rng(2026);
    for (std::size_t t : {8u, 16u, 64u}) {
        for (int ell : {8, 12, 16}) {
            for (int i = 0; i < 100; ++i) {
                std::vector<Unitary2> ws;
                for (std::size_t j = 0; j < t; ++j) ws.push_back(random_unitary2(rng));
                using cl = std::complex<long double>;
                Eigen::Matrix<cl, 2, 2> exact = Eigen::Matrix<cl, 2, 2>::Identity();
                for (const auto& w : ws) exact = w.cast<cl>() * exact;
                const auto r = rounded_product(ws, ell);
                const double err = operator_norm((r.m.value().cast<cl>() - exact).cast<std::complex<double>>());
                ++trials;
                if (err > static_cast<double>(t) * std::ldexp(1.0, 1 - ell)) ++bad;
            }
        }
        for (double eps : {1e-2, 1e-3, 1e-4}) {
            std::vector<Unitary2> ws;
            for (std::size_t j = 0; j < t; ++j) ws.push_back(random_unitary2(rng));
            const int ell = static_cast<int>(std::ceil(std::log2(t)) + std::ceil(std::log2(1 / eps)) + 1);
            ++trials;
            if (rounded_product(ws, ell).error > eps) ++bad;
        }
    }
    o.pass = bad == 0;
    o.detail = fmt("%d trials, %d over the bound", trials, bad);
    return o;
}

Outcome ipp() {
    Outcome o;
    int runs = 0, bad = 0;
    for (std::uint32_t t : {2u, 4u}) {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const auto inst = generate_ipp_instance(t, seed);
            const auto reg = build_registry(inst);
            const bool x_bit = (seed >> 1) & 1;
            auto r = run_ipp_attack(inst, reg, x_bit, seed);
            note_run(r.result.violation);
            ++runs;
            bool ok = r.guess_alice == x_bit && r.guess_bob == x_bit && !r.result.violation;
            std::int64_t ledger = r.routing_size;
            for (std::size_t l = 0; l < r.m_traces.size(); ++l) {
                const auto& m = r.m_traces[l];
                for (std::size_t i = 1; i < m.size(); ++i) ok = ok && m[i] <= 68 * m[i - 1] + 13;
                for (std::size_t i = 0; i < r.removed[l].size(); ++i) {
                    ok = ok && r.removed[l][i] <= m[i];
                    ledger += 2 * r.removed[l][i];
                }
            }
            ok = ok && r.result.report.epr_charged == ledger;
            if (!ok) ++bad;
        }
    }
    o.pass = bad == 0;
    o.detail = fmt("%d runs, %d failures", runs, bad);
    return o;
}

Outcome referee_contract() {
    Outcome o;
    Program probe;
    probe.phase1 = [](Referee& r) {
        const Var b = r.store().allocate_random(Party::Bob, "probe");
        (void)r.view(Party::Alice)(b);
    };
    probe.phase2 = [](Referee&) {};
    const bool aborted = !referee_run(probe, 1).completed();
    o.pass = aborted && g_violations == 0 && g_runs > 0;
    o.detail = fmt("probe %s, %d violations over %d protocol runs", aborted ? "aborted" : "NOT aborted",
                   g_violations, g_runs);
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget_s;
        Outcome (*fn)();
    };
    const Criterion all[] = {
        {1, "key-transform soundness", 10, key_transforms},
        {2, "garden-hose combinators", 30, garden_hose},
        {3, "phase removal end to end", 60, phase_removal_runs},
        {4, "T-count protocol", 120, tcount_runs},
        {5, "T-depth protocol", 600, tdepth_runs},
        {6, "Clifford hierarchy protocol", 60, hierarchy_runs},
        {7, "rounding bound", 60, rounding},
        {8, "IPP attack", 300, ipp},
        {9, "referee contract", 60, referee_contract},
    };
    bool all_pass = true;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs <= c.budget_s;
        const bool pass = o.pass && in_time;
        all_pass = all_pass && pass;
        std::printf("criterion %d %s: %s (%s; %.2fs of %.0fs)\n", c.id, c.name, pass ? "PASS" : "FAIL",
                    o.detail.c_str(), secs, c.budget_s);
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
