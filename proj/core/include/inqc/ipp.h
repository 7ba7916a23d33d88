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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "inqc/circuit.h"
#include "inqc/protocols.h"
#include "inqc/unitary2.h"

namespace inqc {

inline constexpr std::uint32_t kIppPositionCap = 6;

/// One interleaved-product instance. At position i Alice's factor is I or
/// alice_gates[i] (bit i of x), Bob's is I or bob_gates[i] (bit i of y), and
/// the product is u_1 v_1 ... u_t v_t.
struct IppInstance {
    std::uint32_t t = 0;
    std::vector<GateKind> alice_gates;
    std::vector<GateKind> bob_gates;
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    int ell = 0;

    std::vector<Unitary2> us(std::uint64_t xx) const;
    std::vector<Unitary2> vs(std::uint64_t yy) const;
    /// Factors in the order they act on the qubit: v_t, u_t, ..., v_1, u_1.
    std::vector<Unitary2> time_order(std::uint64_t xx, std::uint64_t yy) const;
    /// The product as a circuit (identity factors dropped).
    Circuit product_circuit(std::uint64_t xx, std::uint64_t yy) const;
};

/// A rounded product with the circuit both parties apply (inverted) when the
/// qubit lands on its pipe. eps2 is the synthesis error, 0 for exact entries.
struct IppLabel {
    RoundedMatrix rounded;
    Circuit circuit;
    double eps2 = 0;
};

struct IppRegistry {
    std::vector<IppLabel> labels;
    /// Label index per input pair, at (x << t) | y.
    std::vector<std::uint32_t> label_of;
    /// Width of the routed label, at least 1.
    std::uint32_t bits() const;
};

/// Distinct rounded products in order of first appearance, each with the
/// exact circuit of its first input pair. Throws std::invalid_argument when
/// two pairs with the same label have different products.
IppRegistry build_registry(const IppInstance& inst);

/// Maps every input pair to an entry of `labels`; throws
/// std::invalid_argument when a rounded product has no registered entry.
IppRegistry attach_registry(const IppInstance& inst, std::vector<IppLabel> labels);

/// Gates from {H, P, T}, at most 2 T gates for t <= 2 and 1 beyond.
IppInstance generate_ipp_instance(std::uint32_t t, std::uint64_t seed);

std::string ipp_instance_json(const IppInstance& inst, const IppRegistry& reg);
/// `base_dir` resolves registry entries given as "circuit_file".
std::pair<IppInstance, IppRegistry> parse_ipp_instance(std::string_view text, const std::string& base_dir = ".");

struct IppResult {
    bool x_bit = false;
    bool guess_alice = false;
    bool guess_bob = false;
    std::uint32_t label = 0;
    std::int64_t routing_size = 0;
    /// Key sizes per label: after the first Clifford segment, then after every T.
    std::vector<std::vector<std::int64_t>> m_traces;
    /// Sizes of the x keys handed to phase removal, per label.
    std::vector<std::vector<std::int64_t>> removed;
    double rounding_error = 0;
    ProtocolResult result;

    bool correct() const { return guess_alice == x_bit && guess_bob == x_bit; }
};

/// The verifier's qubit U|x_bit> enters at Alice; the parties route it to the
/// pipe of its label, undo the label's circuit with phase removals, measure,
/// and exchange. Only the occupied pipe is simulated; every pipe is charged.
IppResult run_ipp_attack(const IppInstance& inst, const IppRegistry& reg, bool x_bit, std::uint64_t seed);

}  // namespace inqc
