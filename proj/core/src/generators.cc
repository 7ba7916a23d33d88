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


#include "inqc/generators.h"

#include <algorithm>
#include <stdexcept>

namespace inqc {

namespace {

std::uint32_t below(std::uint64_t bound, std::mt19937_64& rng) {
    return static_cast<std::uint32_t>(rng() % bound);
}

Gate random_t(std::uint32_t w, std::mt19937_64& rng) {
    return make_gate(random_bit(rng) ? GateKind::Tdag : GateKind::T, w);
}

}  // namespace

Gate random_clifford_gate(std::uint32_t n, std::mt19937_64& rng) {
    static constexpr GateKind kinds[] = {GateKind::X, GateKind::Z, GateKind::H, GateKind::P, GateKind::Pdag,
                                         GateKind::CNOT};
    const std::uint32_t choices = n > 1 ? 6 : 5;
    const GateKind k = kinds[below(choices, rng)];
    if (k != GateKind::CNOT) return make_gate(k, below(n, rng));
    const std::uint32_t c = below(n, rng);
    std::uint32_t t = below(n - 1, rng);
    if (t >= c) ++t;
    return make_cnot(c, t);
}

std::vector<Gate> random_clifford_segment(std::uint32_t n, std::size_t len, std::mt19937_64& rng) {
    std::vector<Gate> out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) out.push_back(random_clifford_gate(n, rng));
    return out;
}

Circuit generate_random_circuit(std::uint32_t n, std::uint32_t k, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("circuit needs at least one qubit");
    std::mt19937_64 rng(seed);
    std::vector<Gate> gates;
    for (std::uint32_t t = 0; t <= k; ++t) {
        auto seg = random_clifford_segment(n, 1 + below(2 * n, rng), rng);
        gates.insert(gates.end(), seg.begin(), seg.end());
        if (t < k) gates.push_back(random_t(below(n, rng), rng));
    }
    return Circuit(n, std::move(gates));
}

Circuit generate_tdepth_circuit(std::uint32_t n, std::uint32_t d, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("circuit needs at least one qubit");
    std::mt19937_64 rng(seed);
    std::vector<Gate> gates;
    std::vector<std::uint32_t> prev;
    for (std::uint32_t t = 0; t <= d; ++t) {
        auto seg = random_clifford_segment(n, 1 + below(2 * n, rng), rng);
        gates.insert(gates.end(), seg.begin(), seg.end());
        if (t == d) break;
        std::vector<std::uint32_t> wires;
        for (std::uint32_t w = 0; w < n; ++w) {
            if (random_bit(rng)) wires.push_back(w);
        }
        if (wires.empty()) wires.push_back(below(n, rng));
        // A wire from the previous layer goes first so this layer cannot merge into it.
        if (!prev.empty()) {
            const std::uint32_t anchor = prev[below(prev.size(), rng)];
            wires.erase(std::remove(wires.begin(), wires.end(), anchor), wires.end());
            wires.insert(wires.begin(), anchor);
        }
        for (auto w : wires) gates.push_back(random_t(w, rng));
        prev = wires;
    }
    Circuit c(n, std::move(gates));
    if (c.t_depth() != d) throw std::logic_error("generated circuit has the wrong T-depth");
    return c;
}

}  // namespace inqc
