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

#include "inqc/statevec.h"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace inqc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

double gaussian(std::mt19937_64& rng) {
    // Box-Muller on our own uniform draws keeps streams identical across libstdc++/libc++.
    double u1 = random_unit(rng);
    double u2 = random_unit(rng);
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

Eigen::Matrix2cd gate_matrix(GateKind k) {
    const cdouble i(0, 1);
    Eigen::Matrix2cd m;
    switch (k) {
        case GateKind::X: m << 0, 1, 1, 0; break;
        case GateKind::Z: m << 1, 0, 0, -1; break;
        case GateKind::H: m << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2; break;
        case GateKind::P: m << 1, 0, 0, i; break;
        case GateKind::Pdag: m << 1, 0, 0, -i; break;
        case GateKind::T: m << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4); break;
        case GateKind::Tdag: m << 1, 0, 0, std::polar(1.0, -std::numbers::pi / 4); break;
        case GateKind::CNOT: throw std::invalid_argument("CNOT is not a single-qubit gate");
    }
    return m;
}

StateVector::StateVector(std::uint32_t n, std::uint32_t cap) : n_(n) {
    if (n > cap) throw std::invalid_argument("qubit count " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    amps_.assign(std::size_t{1} << n, cdouble(0, 0));
    amps_[0] = 1;
}

StateVector StateVector::basis(std::string_view bits) {
    StateVector s(static_cast<std::uint32_t>(bits.size()));
    std::uint64_t idx = 0;
    for (std::size_t w = 0; w < bits.size(); ++w) {
        if (bits[w] == '1') {
            idx |= std::uint64_t{1} << w;
        } else if (bits[w] != '0') {
            throw std::invalid_argument("basis label must be 0/1");
        }
    }
    s.amps_[0] = 0;
    s.amps_[idx] = 1;
    return s;
}

StateVector StateVector::random(std::uint32_t n, std::mt19937_64& rng) {
    StateVector s(n);
    double norm2 = 0;
    for (auto& a : s.amps_) {
        a = cdouble(gaussian(rng), gaussian(rng));
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : s.amps_) a *= inv;
    return s;
}

StateVector StateVector::from_amplitudes(std::vector<cdouble> amps) {
    std::uint32_t n = 0;
    while ((std::size_t{1} << n) < amps.size()) ++n;
    if ((std::size_t{1} << n) != amps.size()) throw std::invalid_argument("amplitude count is not a power of two");
    StateVector s(n);
    s.amps_ = std::move(amps);
    if (std::abs(s.norm() - 1.0) > 1e-9) throw std::invalid_argument("state is not normalized");
    return s;
}

double StateVector::norm() const {
    double acc = 0;
    for (const auto& a : amps_) acc += std::norm(a);
    return std::sqrt(acc);
}

void StateVector::check_wire(std::uint32_t w) const {
    if (w >= n_) throw std::out_of_range("wire " + std::to_string(w) + " out of range");
}

void StateVector::apply_single(const Eigen::Matrix2cd& u, std::uint32_t wire) {
    check_wire(wire);
    const std::uint64_t bit = std::uint64_t{1} << wire;
    const cdouble u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) continue;
        const cdouble a0 = amps_[i];
        const cdouble a1 = amps_[i | bit];
        amps_[i] = u00 * a0 + u01 * a1;
        amps_[i | bit] = u10 * a0 + u11 * a1;
    }
}

void StateVector::apply(const Gate& g) {
    validate_gate(g, n_);
    switch (g.kind) {
        case GateKind::X: {
            const std::uint64_t bit = std::uint64_t{1} << g.q0;
            for (std::uint64_t i = 0; i < amps_.size(); ++i) {
                if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
            }
            return;
        }
        case GateKind::Z:
        case GateKind::P:
        case GateKind::Pdag:
        case GateKind::T:
        case GateKind::Tdag: {
            const cdouble phase = gate_matrix(g.kind)(1, 1);
            const std::uint64_t bit = std::uint64_t{1} << g.q0;
            for (std::uint64_t i = 0; i < amps_.size(); ++i) {
                if (i & bit) amps_[i] *= phase;
            }
            return;
        }
        case GateKind::H: apply_single(gate_matrix(GateKind::H), g.q0); return;
        case GateKind::CNOT: {
            const std::uint64_t c = std::uint64_t{1} << g.q0;
            const std::uint64_t t = std::uint64_t{1} << g.q1;
            for (std::uint64_t i = 0; i < amps_.size(); ++i) {
                if ((i & c) && !(i & t)) std::swap(amps_[i], amps_[i | t]);
            }
            return;
        }
    }
}

void StateVector::apply(std::span<const Gate> gates) {
    for (const Gate& g : gates) apply(g);
}

void StateVector::apply_matrix(const Eigen::MatrixXcd& u, std::span<const std::uint32_t> wires) {
    const std::size_t k = wires.size();
    const std::size_t dim = std::size_t{1} << k;
    if (static_cast<std::size_t>(u.rows()) != dim || static_cast<std::size_t>(u.cols()) != dim) {
        throw std::invalid_argument("operator dimension does not match wire count");
    }
    std::uint64_t mask = 0;
    for (auto w : wires) {
        check_wire(w);
        mask |= std::uint64_t{1} << w;
    }
    std::vector<cdouble> local(dim);
    std::vector<std::uint64_t> idx(dim);
    for (std::uint64_t base = 0; base < amps_.size(); ++base) {
        if (base & mask) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            std::uint64_t full = base;
            for (std::size_t b = 0; b < k; ++b) {
                if ((j >> b) & 1) full |= std::uint64_t{1} << wires[b];
            }
            idx[j] = full;
            local[j] = amps_[full];
        }
        for (std::size_t r = 0; r < dim; ++r) {
            cdouble acc = 0;
            for (std::size_t c = 0; c < dim; ++c) acc += u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * local[c];
            amps_[idx[r]] = acc;
        }
    }
}

void StateVector::apply_pauli(std::uint32_t wire, bool x, bool z) {
    if (z) apply(make_gate(GateKind::Z, wire));
    if (x) apply(make_gate(GateKind::X, wire));
}

void StateVector::apply_pauli(const PauliKey& key) {
    if (key.width() != n_) throw std::invalid_argument("key width does not match state");
    for (std::uint32_t w = 0; w < n_; ++w) apply_pauli(w, key.x[w], key.z[w]);
}

double StateVector::probability_one(std::uint32_t wire) const {
    check_wire(wire);
    const std::uint64_t bit = std::uint64_t{1} << wire;
    double p = 0;
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & bit) p += std::norm(amps_[i]);
    }
    return p;
}

bool StateVector::measure(std::uint32_t wire, std::mt19937_64& rng) {
    const double p1 = probability_one(wire);
    const bool outcome = random_unit(rng) < p1;
    const double keep = outcome ? p1 : 1.0 - p1;
    const double scale = 1.0 / std::sqrt(keep);
    const std::uint64_t bit = std::uint64_t{1} << wire;
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (((i & bit) != 0) == outcome) {
            amps_[i] *= scale;
        } else {
            amps_[i] = 0;
        }
    }
    return outcome;
}

std::string StateVector::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& a : amps_) arr.push_back({a.real(), a.imag()});
    return arr.dump();
}

StateVector apply_gate(StateVector s, const Gate& g) {
    s.apply(g);
    return s;
}

TeleportResult teleport_channel(StateVector s, std::span<const std::uint32_t> wires, std::mt19937_64& rng) {
    PauliKey outcomes(s.num_qubits());
    for (auto w : wires) {
        if (w >= s.num_qubits()) throw std::out_of_range("teleport wire out of range");
        outcomes.x[w] = random_bit(rng);
        outcomes.z[w] = random_bit(rng);
        s.apply_pauli(w, outcomes.x[w], outcomes.z[w]);
    }
    return {std::move(s), std::move(outcomes)};
}

double fidelity(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("fidelity: dimension mismatch");
    cdouble inner = 0;
    auto aa = a.amplitudes();
    auto bb = b.amplitudes();
    for (std::size_t i = 0; i < aa.size(); ++i) inner += std::conj(aa[i]) * bb[i];
    return std::min(1.0, std::norm(inner));
}

MeasureResult measure_computational(StateVector s, std::uint32_t wire, std::mt19937_64& rng) {
    bool bit = s.measure(wire, rng);
    return {bit, std::move(s)};
}

}  // namespace inqc
