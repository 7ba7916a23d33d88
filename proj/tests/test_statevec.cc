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


#include <doctest.h>

#include <cmath>
#include <complex>

#include "inqc/statevec.h"

using namespace inqc;

namespace {

StateVector random_state(std::uint32_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return StateVector::random(n, rng);
}

}  // namespace

TEST_CASE("basis labels put wire 0 first") {
    auto s = StateVector::basis("100");
    CHECK(std::abs(s.amplitude(1) - cdouble(1)) < 1e-12);
    CHECK(s.probability_one(0) == doctest::Approx(1));
    CHECK(s.probability_one(2) == doctest::Approx(0));
    CHECK_THROWS_AS(StateVector::basis("12"), std::invalid_argument);
}

TEST_CASE("qubit cap") {
    CHECK_THROWS_AS(StateVector(15), std::invalid_argument);
    CHECK_NOTHROW(StateVector(3, 3));
}

TEST_CASE("H then CNOT gives a Bell pair") {
    auto s = StateVector::basis("00");
    s.apply(make_gate(GateKind::H, 0));
    s.apply(make_cnot(0, 1));
    const double r = 1 / std::sqrt(2.0);
    CHECK(std::abs(s.amplitude(0) - r) < 1e-12);
    CHECK(std::abs(s.amplitude(3) - r) < 1e-12);
    CHECK(std::abs(s.amplitude(1)) < 1e-12);
}

TEST_CASE("phase gates compose") {
    auto a = random_state(2, 4);
    auto b = a;
    a.apply(make_gate(GateKind::T, 1));
    a.apply(make_gate(GateKind::T, 1));
    b.apply(make_gate(GateKind::P, 1));
    CHECK(fidelity(a, b) == doctest::Approx(1).epsilon(1e-12));
    a.apply(make_gate(GateKind::Pdag, 1));
    a.apply(make_gate(GateKind::Pdag, 1));
    b.apply(make_gate(GateKind::Z, 1));
    CHECK(fidelity(a, b) == doctest::Approx(1).epsilon(1e-12));
}

TEST_CASE("dense path agrees with gate kernels") {
    auto a = random_state(3, 9);
    auto b = a;
    for (auto k : {GateKind::X, GateKind::Z, GateKind::H, GateKind::P, GateKind::Pdag, GateKind::T, GateKind::Tdag}) {
        for (std::uint32_t w = 0; w < 3; ++w) {
            a.apply(make_gate(k, w));
            b.apply_single(gate_matrix(k), w);
        }
    }
    Eigen::MatrixXcd cnot = Eigen::MatrixXcd::Zero(4, 4);
    cnot(0, 0) = cnot(2, 2) = cnot(3, 1) = cnot(1, 3) = 1;  // control = low bit
    a.apply(make_cnot(2, 0));
    const std::uint32_t wires[] = {2, 0};
    b.apply_matrix(cnot, wires);
    CHECK(fidelity(a, b) == doctest::Approx(1).epsilon(1e-12));
    CHECK(a.norm() == doctest::Approx(1));
}

TEST_CASE("pauli keys apply Z first") {
    auto a = random_state(1, 2);
    auto b = a;
    a.apply_pauli(0, true, true);
    b.apply(make_gate(GateKind::Z, 0));
    b.apply(make_gate(GateKind::X, 0));
    CHECK(std::abs(a.amplitude(0) - b.amplitude(0)) < 1e-12);
    CHECK(std::abs(a.amplitude(1) - b.amplitude(1)) < 1e-12);
}

TEST_CASE("teleport channel applies the reported Paulis") {
    std::mt19937_64 rng(8);
    auto s = random_state(3, 1);
    const std::uint32_t wires[] = {0, 2};
    auto r = teleport_channel(s, wires, rng);
    CHECK(r.outcomes.x[1] == 0);
    CHECK(r.outcomes.z[1] == 0);
    r.state.apply_pauli(r.outcomes);
    CHECK(fidelity(r.state, s) == doctest::Approx(1).epsilon(1e-12));
    const std::uint32_t bad[] = {3};
    CHECK_THROWS_AS(teleport_channel(s, bad, rng), std::out_of_range);
}

TEST_CASE("measurement follows the Born rule") {
    auto s = StateVector::basis("0");
    s.apply_single(gate_matrix(GateKind::H), 0);
    s.apply(make_gate(GateKind::T, 0));
    std::mt19937_64 rng(123);
    int ones = 0;
    for (int i = 0; i < 4000; ++i) ones += measure_computational(s, 0, rng).bit;
    CHECK(ones > 1800);
    CHECK(ones < 2200);
    auto m = measure_computational(s, 0, rng);
    CHECK(m.state.probability_one(0) == doctest::Approx(m.bit ? 1.0 : 0.0));
}

TEST_CASE("amplitude import and json") {
    CHECK_THROWS_AS(StateVector::from_amplitudes({1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(StateVector::from_amplitudes({1, 1}), std::invalid_argument);
    auto s = StateVector::from_amplitudes({0, cdouble(0, 1)});
    CHECK(s.to_json() == "[[0.0,0.0],[0.0,1.0]]");
    CHECK(fidelity(s, StateVector::basis("1")) == doctest::Approx(1));
}
