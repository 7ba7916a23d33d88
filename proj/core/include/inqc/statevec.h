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

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "inqc/circuit.h"
#include "inqc/pauli_key.h"

namespace inqc {

using cdouble = std::complex<double>;

inline constexpr std::uint32_t kDefaultQubitCap = 14;

/// Dense state vector. Wire w is bit w of the basis index, so the ket label
/// "10" (wire 0 first) is basis index 1.
class StateVector {
   public:
    explicit StateVector(std::uint32_t n, std::uint32_t cap = kDefaultQubitCap);

    static StateVector basis(std::string_view bits);
    static StateVector random(std::uint32_t n, std::mt19937_64& rng);
    static StateVector from_amplitudes(std::vector<cdouble> amps);

    std::uint32_t num_qubits() const { return n_; }
    std::span<const cdouble> amplitudes() const { return amps_; }
    cdouble amplitude(std::uint64_t index) const { return amps_[index]; }
    double norm() const;

    void apply(const Gate& g);
    void apply(std::span<const Gate> gates);
    void apply(const Circuit& c) { apply(c.gates()); }
    void apply_single(const Eigen::Matrix2cd& u, std::uint32_t wire);
    /// Dense unitary on the wires listed (wires[0] is the low bit of the operator's index).
    void apply_matrix(const Eigen::MatrixXcd& u, std::span<const std::uint32_t> wires);
    /// Applies X^x Z^z (Z first).
    void apply_pauli(const PauliKey& key);
    void apply_pauli(std::uint32_t wire, bool x, bool z);

    /// Projects `wire` onto the Born-sampled outcome and renormalizes.
    bool measure(std::uint32_t wire, std::mt19937_64& rng);
    double probability_one(std::uint32_t wire) const;

    std::string to_json() const;

   private:
    void check_wire(std::uint32_t w) const;
    std::uint32_t n_;
    std::vector<cdouble> amps_;
};

StateVector apply_gate(StateVector s, const Gate& g);

/// Teleportation through fresh EPR pairs, as the equivalent random-Pauli
/// channel: returns X^ax Z^az s with (ax, az) uniform on the listed wires.
struct TeleportResult {
    StateVector state;
    PauliKey outcomes;
};
TeleportResult teleport_channel(StateVector s, std::span<const std::uint32_t> wires, std::mt19937_64& rng);

/// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

struct MeasureResult {
    bool bit;
    StateVector state;
};
MeasureResult measure_computational(StateVector s, std::uint32_t wire, std::mt19937_64& rng);

Eigen::Matrix2cd gate_matrix(GateKind k);

}  // namespace inqc
