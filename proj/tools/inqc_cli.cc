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
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "inqc/garden_hose.h"
#include "inqc/generators.h"
#include "inqc/ipp.h"
#include "inqc/protocols.h"
#include "inqc/report.h"

namespace fs = std::filesystem;
using namespace inqc;

namespace {

struct RunConfig {
    std::uint32_t n = 2;
    std::uint32_t k = 1;
    std::uint32_t d = 1;
    std::uint32_t t = 2;
    std::uint64_t seed = 0;
    std::uint32_t trials = 1;
    double tol = 1e-9;
    std::string out;
    std::uint32_t jobs = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string default_dir() {
    const char* env = std::getenv("INQC_OUT_DIR");
    return env && *env ? env : ".";
}

std::string stem_for(const RunConfig& cfg, const std::string& name) {
    if (!cfg.out.empty()) return cfg.out;
    return (fs::path(default_dir()) / name).string();
}

StateVector input_state(std::uint32_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    return StateVector::random(n, rng);
}

// Trials are independent; results come back in seed order regardless of scheduling.
std::vector<RunReport> run_trials(const RunConfig& cfg, const std::function<RunReport(std::uint64_t)>& one) {
    std::vector<RunReport> out(cfg.trials);
    std::atomic<std::uint32_t> next{0};
    std::mutex err_mu;
    std::string first_error;
    auto worker = [&] {
        for (std::uint32_t i = next++; i < cfg.trials; i = next++) {
            try {
                out[i] = one(cfg.seed + i);
            } catch (const std::exception& e) {
                std::lock_guard lock(err_mu);
                if (first_error.empty()) first_error = e.what();
            }
        }
    };
    unsigned jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, cfg.trials);
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (!first_error.empty()) throw std::runtime_error(first_error);
    return out;
}

int finish(const std::vector<RunReport>& rs, const std::string& stem) {
    emit_report(rs, stem);
    const auto s = summarize(rs);
    std::printf("%s: %zu/%zu passed, min fidelity %.12f, max epr %lld -> %s.json\n", rs.empty() ? "-" : rs[0].protocol.c_str(),
                s.passed, s.runs, s.min_fidelity, static_cast<long long>(s.max_epr), stem.c_str());
    return s.passed == s.runs ? 0 : 1;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--seed", cfg.seed, "first seed");
    sub->add_option("--trials", cfg.trials, "number of seeds")->check(CLI::PositiveNumber);
    sub->add_option("--tol", cfg.tol, "fidelity tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "output stem (writes .json and .csv)");
    sub->add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)");
}

RunReport tcount_trial(std::uint32_t n, std::uint32_t k, double tol, const std::string& circuit_file, std::uint64_t seed) {
    const Circuit c = circuit_file.empty() ? generate_random_circuit(n, k, seed) : parse_circuit(read_file(circuit_file));
    return run_tcount_protocol(c, input_state(c.width(), seed), seed, tol).report;
}

RunReport tdepth_trial(std::uint32_t n, std::uint32_t d, double tol, const std::string& circuit_file, std::uint64_t seed) {
    const Circuit c = circuit_file.empty() ? generate_tdepth_circuit(n, d, seed) : parse_circuit(read_file(circuit_file));
    return run_tdepth_protocol(c, input_state(c.width(), seed), seed, tol).report;
}

Circuit named_gate(const std::string& name) {
    if (name == "T") return parse_circuit("qubits 1\nT 0\n");
    if (name == "PT") return parse_circuit("qubits 1\nT 0\nP 0\n");
    if (name == "H") return parse_circuit("qubits 1\nH 0\n");
    if (name == "TDAG") return parse_circuit("qubits 1\nTDAG 0\n");
    throw std::invalid_argument("unknown gate name '" + name + "' (T, PT, H, TDAG)");
}

struct HierarchySetup {
    ConjugationTable table;
    int level = 0;
};

HierarchySetup hierarchy_setup(const Circuit& c, int level) {
    const auto u = circuit_unitary(c);
    HierarchySetup h{build_conjugation_table(u, c.width()), level};
    if (h.level == 0) h.level = hierarchy_level(u, c.width());
    if (h.level == 0) throw std::invalid_argument("unitary is not in a supported hierarchy level");
    return h;
}

RunReport ipp_trial(const IppInstance& inst, const IppRegistry& reg, std::uint64_t seed) {
    const bool x_bit = (seed * 0x9e3779b97f4a7c15ULL >> 63) & 1;
    return run_ipp_attack(inst, reg, x_bit, seed).result.report;
}

std::vector<TruthTable> load_tables(const std::vector<std::string>& files) {
    std::vector<TruthTable> ts;
    for (const auto& f : files) ts.push_back(parse_truth_table(read_file(f)));
    for (const auto& t : ts) {
        if (t.na != ts[0].na || t.nb != ts[0].nb) throw std::invalid_argument("truth tables differ in input widths");
    }
    return ts;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"inqc: instantaneous non-local computation protocols on a state-vector simulator"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string circuit_file;
    std::string gate_name = "T";
    int level = 0;
    std::string instance_file;
    std::string write_instance;

    auto* tc = app.add_subcommand("run-tcount", "teleportation protocol for a circuit of small T-count");
    tc->add_option("--n", cfg.n, "qubits")->check(CLI::Range(1, 10));
    tc->add_option("--k", cfg.k, "T-count")->check(CLI::Range(0, 12));
    tc->add_option("--circuit", circuit_file, "circuit file instead of a random circuit");
    add_common(tc, cfg);

    auto* td = app.add_subcommand("run-tdepth", "garden-hose protocol for a circuit of small T-depth");
    td->add_option("--n", cfg.n, "qubits")->check(CLI::Range(1, 6));
    td->add_option("--d", cfg.d, "T-depth")->check(CLI::Range(0, 4));
    td->add_option("--circuit", circuit_file, "circuit file instead of a random circuit");
    add_common(td, cfg);

    auto* hi = app.add_subcommand("run-hierarchy", "protocol for a Clifford hierarchy unitary");
    hi->add_option("--gate", gate_name, "T, PT, H or TDAG");
    hi->add_option("--circuit", circuit_file, "circuit file (one or two qubits)");
    hi->add_option("--level", level, "hierarchy level (default: computed)");
    add_common(hi, cfg);

    auto* ip = app.add_subcommand("attack-ipp", "attack on the inner-product position verification scheme");
    ip->add_option("--t", cfg.t, "positions per party")->check(CLI::Range(1, static_cast<int>(kIppPositionCap)));
    ip->add_option("--instance", instance_file, "instance file (JSON) instead of a random instance");
    ip->add_option("--write-instance", write_instance, "write the instance of the first seed and exit");
    add_common(ip, cfg);

    auto* gh = app.add_subcommand("gh", "garden-hose protocols from truth tables");
    gh->require_subcommand(1);
    std::vector<std::string> tables;
    std::uint64_t gx = 0, gy = 0;
    bool xor_c = false;
    auto* gh_eval = gh->add_subcommand("eval", "evaluate the truth-table protocol on (x, y)");
    gh_eval->add_option("--file", tables, "truth table")->required()->expected(1);
    gh_eval->add_option("--x", gx, "Alice input")->required();
    gh_eval->add_option("--y", gy, "Bob input")->required();
    auto* gh_build = gh->add_subcommand("build", "print the truth-table protocol as JSON");
    gh_build->add_option("--file", tables, "truth table")->required()->expected(1);
    auto* gh_single = gh->add_subcommand("single-output", "one spilling pipe per side");
    gh_single->add_option("--file", tables, "truth table")->required()->expected(1);
    auto* gh_x = gh->add_subcommand("xor", "xor of several functions");
    gh_x->add_option("--file", tables, "truth tables")->required();
    gh_x->add_flag("--c", xor_c, "xor in the constant 1");
    auto* gh_multi = gh->add_subcommand("multi", "multi-output protocol");
    gh_multi->add_option("--file", tables, "truth tables, bit 0 first")->required();

    auto* va = app.add_subcommand("verify-all", "small sweep of every protocol");
    va->add_option("--trials", cfg.trials, "seeds per cell")->check(CLI::PositiveNumber);
    va->add_option("--seed", cfg.seed, "first seed");
    va->add_option("--out", cfg.out, "output directory");
    va->add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*tc) {
            const auto rs = run_trials(cfg, [&](std::uint64_t s) { return tcount_trial(cfg.n, cfg.k, cfg.tol, circuit_file, s); });
            return finish(rs, stem_for(cfg, "tcount"));
        }
        if (*td) {
            const auto rs = run_trials(cfg, [&](std::uint64_t s) { return tdepth_trial(cfg.n, cfg.d, cfg.tol, circuit_file, s); });
            return finish(rs, stem_for(cfg, "tdepth"));
        }
        if (*hi) {
            const Circuit c = circuit_file.empty() ? named_gate(gate_name) : parse_circuit(read_file(circuit_file));
            const auto h = hierarchy_setup(c, level);
            const auto rs = run_trials(cfg, [&](std::uint64_t s) {
                return run_clifford_hierarchy(h.table, h.level, input_state(c.width(), s), s, cfg.tol).report;
            });
            return finish(rs, stem_for(cfg, "hierarchy"));
        }
        if (*ip) {
            if (!write_instance.empty()) {
                const auto inst = generate_ipp_instance(cfg.t, cfg.seed);
                std::ofstream(write_instance) << ipp_instance_json(inst, build_registry(inst)) << "\n";
                return 0;
            }
            std::function<RunReport(std::uint64_t)> one;
            if (!instance_file.empty()) {
                const auto base = fs::path(instance_file).parent_path().string();
                auto parsed = parse_ipp_instance(read_file(instance_file), base.empty() ? "." : base);
                one = [p = std::move(parsed)](std::uint64_t s) { return ipp_trial(p.first, p.second, s); };
            } else {
                one = [&](std::uint64_t s) {
                    const auto inst = generate_ipp_instance(cfg.t, s);
                    return ipp_trial(inst, build_registry(inst), s);
                };
            }
            return finish(run_trials(cfg, one), stem_for(cfg, "ipp"));
        }
        if (*gh) {
            const auto ts = load_tables(tables);
            VarStore store;
            const auto in = allocate_inputs(store, ts[0].na, ts[0].nb);
            std::vector<GardenHose> ps;
            for (const auto& t : ts) ps.push_back(gh_from_truth_table(t, in.alice, in.bob));
            if (*gh_eval) {
                const Exit e = gh_evaluate(*ps[0], store, gx, gy);
                std::printf("output %d (pipe %lld, %s side)\n", e.bit() ? 1 : 0, static_cast<long long>(e.pipe),
                            e.side == Party::Alice ? "Alice" : "Bob");
                return 0;
            }
            if (*gh_build) {
                std::printf("%s\n", gh_to_json(*ps[0], store).c_str());
                return 0;
            }
            GardenHose p;
            if (*gh_single) p = gh_single_output(ps[0]);
            if (*gh_x) p = gh_xor(ps, xor_c);
            if (*gh_multi) p = gh_multi_output(ps);
            std::printf("%s: %lld pipes\n", p->kind().c_str(), static_cast<long long>(p->size()));
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << ts[0].na); ++x) {
                for (std::uint64_t y = 0; y < (std::uint64_t{1} << ts[0].nb); ++y) {
                    const Exit e = gh_evaluate(*p, store, x, y);
                    std::printf("x=%llu y=%llu -> ", static_cast<unsigned long long>(x), static_cast<unsigned long long>(y));
                    if (e.label) {
                        std::printf("label %u\n", *e.label);
                    } else {
                        std::printf("output %d\n", e.bit() ? 1 : 0);
                    }
                }
            }
            return 0;
        }
        if (*va) {
            const std::string dir = cfg.out.empty() ? default_dir() : cfg.out;
            fs::create_directories(dir);
            int rc = 0;
            auto stem = [&](const std::string& s) { return (fs::path(dir) / s).string(); };
            for (std::uint32_t n : {2u, 4u}) {
                for (std::uint32_t k = 0; k <= 3; ++k) {
                    rc |= finish(run_trials(cfg, [&](std::uint64_t s) { return tcount_trial(n, k, 1e-9, "", s); }),
                                 stem("tcount_n" + std::to_string(n) + "_k" + std::to_string(k)));
                }
            }
            for (std::uint32_t n : {2u, 3u}) {
                for (std::uint32_t d = 1; d <= 2; ++d) {
                    rc |= finish(run_trials(cfg, [&](std::uint64_t s) { return tdepth_trial(n, d, 1e-9, "", s); }),
                                 stem("tdepth_n" + std::to_string(n) + "_d" + std::to_string(d)));
                }
            }
            for (const char* g : {"T", "PT"}) {
                const Circuit c = named_gate(g);
                const auto h = hierarchy_setup(c, 0);
                rc |= finish(run_trials(cfg, [&](std::uint64_t s) {
                                 return run_clifford_hierarchy(h.table, h.level, input_state(1, s), s, 1e-10).report;
                             }),
                             stem(std::string("hierarchy_") + g));
            }
            for (std::uint32_t t : {2u, 4u}) {
                rc |= finish(run_trials(cfg, [&](std::uint64_t s) {
                                 const auto inst = generate_ipp_instance(t, s);
                                 return ipp_trial(inst, build_registry(inst), s);
                             }),
                             stem("ipp_t" + std::to_string(t)));
            }
            std::printf("verify-all: %s\n", rc == 0 ? "all passed" : "FAILURES");
            return rc;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
