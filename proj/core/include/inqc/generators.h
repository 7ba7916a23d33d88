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
#include <random>
#include <vector>

#include "inqc/circuit.h"
#include "inqc/variables.h"

namespace inqc {

/// Random gate from {X, Z, H, P, PDAG, CNOT} (CNOT only when n > 1).
Gate random_clifford_gate(std::uint32_t n, std::mt19937_64& rng);
std::vector<Gate> random_clifford_segment(std::uint32_t n, std::size_t len, std::mt19937_64& rng);

/// Clifford+T circuit with exactly k T/TDAG gates.
Circuit generate_random_circuit(std::uint32_t n, std::uint32_t k, std::uint64_t seed);

/// Clifford+T circuit whose greedy T-depth is exactly d.
Circuit generate_tdepth_circuit(std::uint32_t n, std::uint32_t d, std::uint64_t seed);

}  // namespace inqc
