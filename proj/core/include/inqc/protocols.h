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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "inqc/circuit.h"
#include "inqc/garden_hose.h"
#include "inqc/pauli_key.h"
#include "inqc/referee.h"
#include "inqc/report.h"
#include "inqc/statevec.h"

namespace inqc {

/// Teleports `wires` of `state` through fresh EPR pairs. The Bell outcomes are
/// new bits owned by `measurer`; the returned key (width n) holds them on the
/// listed wires and zero elsewhere.
PolyKey teleport_wires(StateVector& state, std::span<const std::uint32_t> wires, Party measurer, VarStore& store,
                       const std::string& tag);

/// Wires Bob receives: the last ceil(n / 2).
std::vector<std::uint32_t> bob_wires(std::uint32_t n);
std::vector<std::uint32_t> alice_wires(std::uint32_t n);
std::vector<std::uint32_t> all_wires(std::uint32_t n);

/// Both parties Bell-measure every hose of `p` for their current inputs,
/// including hoses the water never reaches.
void measure_all_hoses(const GhNode& p, const ViewPair& views, OutcomeTable& outcomes);

// ---------------------------------------------------------------------------
// Conditional phase removal.

struct PhaseRemoval {
    std::shared_ptr<const MirrorNode> mirror;
    std::shared_ptr<OutcomeTable> outcomes;
    std::shared_ptr<const XTrackerNode> x_tracker;
    std::shared_ptr<const ZTrackerNode> z_tracker;
    QuantumRun run;
};

/// The qubit on `wire` carries phase^f (phase is P or PDAG) where f is
/// computed by `f`. Runs f forward, undoes the phase wherever f's water
/// leaves at Bob's side, runs the reversed copy, and returns trackers for
/// the X and Z corrections now on the qubit. Charges 2 GH(f).
PhaseRemoval phase_removal(GardenHose f, GateKind phase, const ViewPair& views, VarStore& store, StateVector& state,
                           std::uint32_t wire, Ledger* ledger, const std::string& tag);

struct ProtocolResult {
    RunReport report;
    StateVector output{0};
    StateVector expected{0};
    Transcript transcript;
    std::optional<std::string> violation;
};

/// One phase removal on a one-qubit state for a two-party function given by
/// its truth table, at inputs (x, y). The report's fidelity compares the
/// output with X^g Z^h |psi> for g, h read from the trackers.
struct PhaseRemovalCheck {
    ProtocolResult result;
    std::int64_t gh_f = 0;
    std::int64_t x_tracker_size = 0;
    std::int64_t z_tracker_size = 0;
    bool trackers_match_frame = false;
};
PhaseRemovalCheck run_phase_removal_check(const TruthTable& f, std::uint64_t x, std::uint64_t y, std::uint64_t seed,
                                          double tol = 1e-10);

// ---------------------------------------------------------------------------
// T-count protocol.

std::int64_t tcount_charge(std::uint32_t n, std::uint32_t k);
std::int64_t tcount_bound(std::uint32_t n, std::uint32_t k);

ProtocolResult run_tcount_protocol(const Circuit& c, const StateVector& input, std::uint64_t seed, double tol = 1e-9);

// ---------------------------------------------------------------------------
// T-depth protocol.

/// Recurrence bound for the key size after layer t, starting from m_0 = 3.
double tdepth_m_bound(std::uint32_t n, std::uint32_t t);
/// Closed form c1 (68n)^t + c2 of the same bound.
double tdepth_m_closed_form(std::uint32_t n, std::uint32_t t);
/// Sum over layers of 2n times the closed-form m_{t-1}.
double tdepth_charge_bound(std::uint32_t n, std::uint32_t d);

ProtocolResult run_tdepth_protocol(const Circuit& c, const StateVector& input, std::uint64_t seed, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Clifford hierarchy.

Eigen::MatrixXcd pauli_matrix(std::uint32_t n, std::uint32_t x_bits, std::uint32_t z_bits);
Eigen::MatrixXcd circuit_unitary(const Circuit& c);
/// Phase-insensitive equality of unitaries.
bool equal_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol = 1e-9);
/// Pauli X^x Z^z proportional to `m`, if any.
std::optional<std::pair<std::uint32_t, std::uint32_t>> as_pauli(const Eigen::MatrixXcd& m, std::uint32_t n,
                                                                double tol = 1e-9);

/// U and, for every Pauli X^x Z^z (index x | z << n), the image U P U^dagger.
struct ConjugationTable {
    std::uint32_t n = 0;
    Eigen::MatrixXcd u;
    std::vector<Eigen::MatrixXcd> images;
};

inline constexpr std::uint32_t kHierarchyQubitCap = 2;

ConjugationTable build_conjugation_table(const Eigen::MatrixXcd& u, std::uint32_t n);
/// Throws std::invalid_argument when an image differs from U P U^dagger.
void check_conjugation_table(const ConjugationTable& t);
/// Smallest level containing u, or 0 when it is above `max_level`.
int hierarchy_level(const Eigen::MatrixXcd& u, std::uint32_t n, int max_level = 4);

std::int64_t hierarchy_charge(std::uint32_t n, int level);

ProtocolResult run_clifford_hierarchy(const ConjugationTable& t, int level, const StateVector& input,
                                      std::uint64_t seed, double tol = 1e-10);

}  // namespace inqc
