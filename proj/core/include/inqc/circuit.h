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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace inqc {

enum class GateKind : std::uint8_t { X, Z, H, P, Pdag, CNOT, T, Tdag };

const char* gate_name(GateKind k);

struct Gate {
    GateKind kind = GateKind::X;
    std::uint32_t q0 = 0;
    std::uint32_t q1 = 0;  // target, CNOT only

    bool is_t() const { return kind == GateKind::T || kind == GateKind::Tdag; }
    bool is_two_qubit() const { return kind == GateKind::CNOT; }
    bool touches(std::uint32_t w) const { return q0 == w || (is_two_qubit() && q1 == w); }
    Gate inverse() const;

    friend bool operator==(const Gate&, const Gate&) = default;
};

Gate make_gate(GateKind k, std::uint32_t q0);
Gate make_cnot(std::uint32_t control, std::uint32_t target);

class CircuitError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// One layer of parallel T/Tdag gates, at most one per wire.
struct TLayer {
    std::vector<Gate> gates;
};

/// C_0, T_1, C_1, ..., T_d, C_d.
struct LayerDecomposition {
    std::vector<std::vector<Gate>> cliffords;  // d + 1 entries
    std::vector<TLayer> t_layers;              // d entries

    std::vector<Gate> flatten() const;
};

class Circuit {
   public:
    Circuit() = default;
    Circuit(std::uint32_t width, std::vector<Gate> gates);

    std::uint32_t width() const { return width_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t t_count() const;
    std::size_t t_depth() const { return layers_.t_layers.size(); }
    const LayerDecomposition& layers() const { return layers_; }

    /// Gate-wise inverse, in reverse order.
    Circuit inverse() const;
    bool is_clifford() const { return t_count() == 0; }

    /// Clifford segments around each T gate in sequence: k+1 segments and k
    /// T gates for T-count k.
    std::vector<std::vector<Gate>> clifford_segments() const;
    std::vector<Gate> t_sequence() const;

    std::string to_text() const;

   private:
    std::uint32_t width_ = 0;
    std::vector<Gate> gates_;
    LayerDecomposition layers_;
};

/// Greedy left-to-right layering. A T gate joins the open T layer unless its
/// wire was touched since that layer opened.
LayerDecomposition greedy_layers(const std::vector<Gate>& gates, std::uint32_t width);

/// Parses the line format: `qubits n` first, then `NAME w [w2]` per line,
/// `#` comments. Names: X Z H P PDAG CNOT T TDAG (case-insensitive).
Circuit parse_circuit(std::string_view text);

void validate_gate(const Gate& g, std::uint32_t width);

}  // namespace inqc
