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
#include <span>
#include <vector>

#include "inqc/circuit.h"
#include "inqc/key_polynomial.h"

namespace inqc {

/// X^x Z^z on n wires, with per-wire entries of type E. E is a 0/1 byte for
/// concrete keys and KeyPolynomial (or any F2 element supporting ^=) for
/// symbolic ones.
template <typename E>
struct BasicKey {
    std::vector<E> x;
    std::vector<E> z;

    BasicKey() = default;
    explicit BasicKey(std::size_t n) : x(n), z(n) {}
    BasicKey(std::vector<E> xs, std::vector<E> zs) : x(std::move(xs)), z(std::move(zs)) {
        if (x.size() != z.size()) throw std::invalid_argument("key masks differ in length");
    }

    std::size_t width() const { return x.size(); }
    friend bool operator==(const BasicKey&, const BasicKey&) = default;
};

using Bit = std::uint8_t;
using PauliKey = BasicKey<Bit>;
using PolyKey = BasicKey<KeyPolynomial>;

PauliKey operator^(const PauliKey& a, const PauliKey& b);

/// Pushes the key through one Clifford gate: g X^x Z^z = X^x' Z^z' g, up to
/// global phase. X and Z gates leave the key unchanged.
template <typename E>
void conjugate_key(BasicKey<E>& key, const Gate& g) {
    if (g.is_t()) throw CircuitError("T gate encountered in Clifford key transform");
    if (g.q0 >= key.width() || (g.is_two_qubit() && g.q1 >= key.width())) {
        throw CircuitError("gate wire outside key width");
    }
    switch (g.kind) {
        case GateKind::X:
        case GateKind::Z: break;
        case GateKind::H: std::swap(key.x[g.q0], key.z[g.q0]); break;
        case GateKind::P:
        case GateKind::Pdag: key.z[g.q0] ^= key.x[g.q0]; break;
        case GateKind::CNOT: {
            E xc = key.x[g.q0];
            E zt = key.z[g.q1];
            key.x[g.q1] ^= xc;
            key.z[g.q0] ^= zt;
            break;
        }
        default: break;
    }
}

template <typename E>
BasicKey<E> conjugate_key_through_clifford(BasicKey<E> key, std::span<const Gate> gates) {
    for (const Gate& g : gates) conjugate_key(key, g);
    return key;
}

/// Exponent of the stray phase gate created when T is pushed through
/// X^x: T X^x = P^x X^x T. The exponent is x itself.
inline bool commute_T_past_key(bool x_bit) { return x_bit; }
inline KeyPolynomial commute_T_past_key(const KeyPolynomial& x_bit) { return x_bit; }

PauliKey evaluate(const PolyKey& key, const std::function<bool(Var)>& bit);

}  // namespace inqc
