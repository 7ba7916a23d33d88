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


#include <bit>
#include <stdexcept>

#include "inqc/protocols.h"

namespace inqc {

Eigen::MatrixXcd pauli_matrix(std::uint32_t n, std::uint32_t x_bits, std::uint32_t z_bits) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::uint32_t j = 0; j < static_cast<std::uint32_t>(dim); ++j) {
        m(j ^ x_bits, j) = (std::popcount(z_bits & j) & 1) ? -1.0 : 1.0;
    }
    return m;
}

Eigen::MatrixXcd circuit_unitary(const Circuit& c) {
    const std::uint32_t n = c.width();
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd u(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        std::vector<cdouble> amps(static_cast<std::size_t>(dim), 0.0);
        amps[static_cast<std::size_t>(j)] = 1.0;
        StateVector s = StateVector::from_amplitudes(std::move(amps));
        s.apply(c);
        for (Eigen::Index i = 0; i < dim; ++i) u(i, j) = s.amplitude(static_cast<std::uint64_t>(i));
    }
    return u;
}

bool equal_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    Eigen::Index r = 0, c = 0;
    a.cwiseAbs().maxCoeff(&r, &c);
    if (std::abs(a(r, c)) < tol) return b.norm() < tol;
    const cdouble phase = b(r, c) / a(r, c);
    if (std::abs(std::abs(phase) - 1.0) > tol) return false;
    return (b - phase * a).norm() <= tol * static_cast<double>(a.rows());
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> as_pauli(const Eigen::MatrixXcd& m, std::uint32_t n,
                                                                double tol) {
    const std::uint32_t dim = 1u << n;
    for (std::uint32_t x = 0; x < dim; ++x) {
        for (std::uint32_t z = 0; z < dim; ++z) {
            if (equal_up_to_phase(pauli_matrix(n, x, z), m, tol)) return std::make_pair(x, z);
        }
    }
    return std::nullopt;
}

ConjugationTable build_conjugation_table(const Eigen::MatrixXcd& u, std::uint32_t n) {
    if (n == 0 || n > kHierarchyQubitCap) throw std::invalid_argument("hierarchy protocol supports 1 or 2 qubits");
    const Eigen::Index dim = Eigen::Index{1} << n;
    if (u.rows() != dim || u.cols() != dim) throw std::invalid_argument("unitary dimension does not match n");
    if (!(u * u.adjoint()).isApprox(Eigen::MatrixXcd::Identity(dim, dim), 1e-9)) {
        throw std::invalid_argument("matrix is not unitary");
    }
    ConjugationTable t;
    t.n = n;
    t.u = u;
    const std::uint32_t d = 1u << n;
    t.images.resize(static_cast<std::size_t>(d) * d);
    for (std::uint32_t x = 0; x < d; ++x) {
        for (std::uint32_t z = 0; z < d; ++z) t.images[x | (z << n)] = u * pauli_matrix(n, x, z) * u.adjoint();
    }
    return t;
}

void check_conjugation_table(const ConjugationTable& t) {
    const std::uint32_t d = 1u << t.n;
    if (t.images.size() != static_cast<std::size_t>(d) * d) throw std::invalid_argument("conjugation table size");
    for (std::uint32_t x = 0; x < d; ++x) {
        for (std::uint32_t z = 0; z < d; ++z) {
            const Eigen::MatrixXcd want = t.u * pauli_matrix(t.n, x, z) * t.u.adjoint();
            if (!want.isApprox(t.images[x | (z << t.n)], 1e-9)) {
                throw std::invalid_argument("conjugation table entry " + std::to_string(x | (z << t.n)) +
                                            " differs from U P U^dagger");
            }
        }
    }
}

namespace {

int level_within(const Eigen::MatrixXcd& u, std::uint32_t n, int cap) {
    if (as_pauli(u, n)) return 1;
    if (cap <= 1) return 0;
    const std::uint32_t d = 1u << n;
    int worst = 1;
    for (std::uint32_t i = 1; i < d * d; ++i) {
        const Eigen::MatrixXcd img = u * pauli_matrix(n, i & (d - 1), i >> n) * u.adjoint();
        const int l = level_within(img, n, cap - 1);
        if (l == 0) return 0;
        worst = std::max(worst, l);
    }
    return worst + 1;
}

std::uint32_t pauli_index(const PolyKey& key, const std::vector<std::uint32_t>& wires, std::uint32_t n,
                          const PartyView& v) {
    std::uint32_t idx = 0;
    for (auto w : wires) {
        if (key.x[w].eval(v)) idx |= 1u << w;
        if (key.z[w].eval(v)) idx |= 1u << (w + n);
    }
    return idx;
}

}  // namespace

int hierarchy_level(const Eigen::MatrixXcd& u, std::uint32_t n, int max_level) {
    return level_within(u, n, max_level);
}

std::int64_t hierarchy_charge(std::uint32_t n, int level) {
    std::int64_t total = (std::int64_t{n} + 1) / 2;
    for (int r = 1; r < level; ++r) total += std::int64_t{n} << (2 * n * static_cast<std::uint32_t>(r));
    return total;
}

ProtocolResult run_clifford_hierarchy(const ConjugationTable& t, int level, const StateVector& input,
                                      std::uint64_t seed, double tol) {
    const std::uint32_t n = t.n;
    if (input.num_qubits() != n) throw std::invalid_argument("input state width does not match unitary");
    if (level < 1) throw std::invalid_argument("level must be at least 1");
    check_conjugation_table(t);

    Referee ref(seed);
    ProtocolResult out;
    StateVector state = input;
    StateVector expected = input;
    const auto every = all_wires(n);
    const auto bw = bob_wires(n);
    const auto aw = alice_wires(n);
    expected.apply_matrix(t.u, every);

    Eigen::MatrixXcd frame;
    std::int64_t final_return = 0;
    int rounds = 0;

    Program prog;
    prog.phase1 = [&](Referee& r) {
        VarStore& st = r.store();
        const PolyKey pb = teleport_wires(state, bw, Party::Bob, st, "b0");
        r.ledger().charge("input", static_cast<std::int64_t>(bw.size()));
        state.apply_matrix(t.u, every);
        frame = t.images[pauli_index(pb, bw, n, r.view(Party::Bob))];

        Party holder = Party::Alice;
        for (int round = 1; round < level; ++round) {
            const PolyKey pa = teleport_wires(state, every, holder, st, "r" + std::to_string(round));
            const std::uint32_t idx = pauli_index(pa, every, n, r.view(holder));
            const Eigen::MatrixXcd fix = frame.adjoint();
            state.apply_matrix(fix, every);
            frame = fix * pauli_matrix(n, idx & ((1u << n) - 1), idx >> n) * frame;
            r.ledger().charge("round " + std::to_string(round), std::int64_t{n} << (2 * n * round));
            holder = other(holder);
            ++rounds;
        }
        if (!as_pauli(frame, n, 1e-8)) throw std::logic_error("unitary is above the claimed hierarchy level");

        const auto& send = holder == Party::Alice ? bw : aw;
        const PolyKey ret = teleport_wires(state, send, holder, st, "ret");
        final_return = static_cast<std::int64_t>(send.size());
        const std::uint32_t idx = pauli_index(ret, send, n, r.view(holder));
        frame = pauli_matrix(n, idx & ((1u << n) - 1), idx >> n) * frame;
    };
    prog.phase2 = [&](Referee&) {
        const auto p = as_pauli(frame, n, 1e-8);
        if (!p) throw std::logic_error("final frame is not a Pauli operator");
        for (auto w : every) state.apply_pauli(w, (p->first >> w) & 1, (p->second >> w) & 1);
    };
    RefereeResult rr = referee_run(prog, ref);

    out.transcript = rr.transcript;
    out.violation = rr.violation;
    out.output = state;
    out.expected = expected;
    RunReport& rep = out.report;
    rep.protocol = "hierarchy";
    rep.n = n;
    rep.param_name = "level";
    rep.param = level;
    rep.seed = seed;
    rep.epr_charged = rr.epr_charged;
    rep.bound = static_cast<double>(hierarchy_charge(n, level));
    rep.fidelity = rr.completed() ? fidelity(state, expected) : 0.0;
    rep.extra = {{"rounds", rounds}, {"epr_final_return", final_return}};
    rep.pass = rr.completed() && rep.fidelity >= 1.0 - tol && rep.epr_charged == hierarchy_charge(n, level);
    return out;
}

}  // namespace inqc
