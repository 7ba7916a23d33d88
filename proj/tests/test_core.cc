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

#include <complex>
#include <map>

#include <Eigen/Dense>

#include "inqc/circuit.h"
#include "inqc/key_polynomial.h"
#include "inqc/pauli_key.h"
#include "inqc/variables.h"

using namespace inqc;
using cd = std::complex<double>;

namespace {

// Dense operators built from literal matrices, wire w = bit w.
Eigen::MatrixXcd on_wire(std::uint32_t n, std::uint32_t w, const Eigen::Matrix2cd& m) {
    const int dim = 1 << n;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (int j = 0; j < dim; ++j) {
        const int b = (j >> w) & 1;
        for (int a = 0; a < 2; ++a) out((j & ~(1 << w)) | (a << w), j) += m(a, b);
    }
    return out;
}

Eigen::MatrixXcd literal(const Gate& g, std::uint32_t n) {
    const double r = 1 / std::sqrt(2.0);
    Eigen::Matrix2cd m;
    switch (g.kind) {
        case GateKind::X: m << 0, 1, 1, 0; break;
        case GateKind::Z: m << 1, 0, 0, -1; break;
        case GateKind::H: m << r, r, r, -r; break;
        case GateKind::P: m << 1, 0, 0, cd(0, 1); break;
        case GateKind::Pdag: m << 1, 0, 0, cd(0, -1); break;
        case GateKind::T: m << 1, 0, 0, cd(r, r); break;
        case GateKind::Tdag: m << 1, 0, 0, cd(r, -r); break;
        case GateKind::CNOT: {
            const int dim = 1 << n;
            Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(dim, dim);
            for (int j = 0; j < dim; ++j) c(((j >> g.q0) & 1) ? j ^ (1 << g.q1) : j, j) = 1;
            return c;
        }
    }
    return on_wire(n, g.q0, m);
}

Eigen::MatrixXcd key_op(const PauliKey& k) {
    const auto n = static_cast<std::uint32_t>(k.width());
    Eigen::Matrix2cd x, z;
    x << 0, 1, 1, 0;
    z << 1, 0, 0, -1;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1 << n, 1 << n);
    for (std::uint32_t w = 0; w < n; ++w) {
        if (k.x[w]) out = on_wire(n, w, x) * out;
        if (k.z[w]) out = out * on_wire(n, w, z);
    }
    return out;
}

bool same_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    const cd ip = (a.adjoint() * b).trace() / static_cast<double>(a.rows());
    return std::abs(std::abs(ip) - 1.0) < 1e-9;
}

std::vector<Gate> all_generators(std::uint32_t n) {
    std::vector<Gate> gs;
    for (std::uint32_t w = 0; w < n; ++w) {
        for (auto k : {GateKind::X, GateKind::Z, GateKind::H, GateKind::P, GateKind::Pdag}) gs.push_back(make_gate(k, w));
        for (std::uint32_t t = 0; t < n; ++t) {
            if (t != w) gs.push_back(make_cnot(w, t));
        }
    }
    return gs;
}

}  // namespace

TEST_CASE("parse and print round trip") {
    const char* text = "qubits 3\n# comment\nH 0\nCNOT 0 2\nt 1\nTDAG 2\nPDAG 1\n";
    Circuit c = parse_circuit(text);
    CHECK(c.width() == 3);
    CHECK(c.gates().size() == 5);
    CHECK(c.t_count() == 2);
    CHECK(parse_circuit(c.to_text()).gates() == c.gates());
}

TEST_CASE("parse errors carry the line") {
    CHECK_THROWS_WITH_AS(parse_circuit("qubits 2\nH 0\nFOO 1\n"), doctest::Contains("line 3"), CircuitError);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nCNOT 1 1\n"), CircuitError);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nH 2\n"), CircuitError);
    CHECK_THROWS_AS(parse_circuit("H 0\n"), CircuitError);
    CHECK_THROWS_AS(parse_circuit("qubits 1\nH -1\n"), CircuitError);
    CHECK_THROWS_AS(parse_circuit(""), CircuitError);
}

TEST_CASE("greedy T layering") {
    // Parallel T gates share a layer, a gate touching the wire in between splits it.
    CHECK(parse_circuit("qubits 2\nT 0\nT 1\n").t_depth() == 1);
    CHECK(parse_circuit("qubits 1\nT 0\nT 0\n").t_depth() == 2);
    CHECK(parse_circuit("qubits 2\nT 0\nCNOT 0 1\nT 1\n").t_depth() == 2);
    CHECK(parse_circuit("qubits 2\nT 0\nH 0\nT 1\n").t_depth() == 1);
    CHECK(parse_circuit("qubits 2\nH 0\nH 1\n").t_depth() == 0);

    Circuit c = parse_circuit("qubits 3\nH 0\nT 0\nT 1\nCNOT 1 2\nT 2\nTDAG 0\nH 2\n");
    const auto& L = c.layers();
    REQUIRE(L.t_layers.size() == 2);
    CHECK(L.cliffords.size() == 3);
    CHECK(L.t_layers[0].gates.size() == 2);
    CHECK(L.t_layers[1].gates.size() == 2);
    CHECK(L.flatten().size() == c.gates().size());
}

TEST_CASE("inverse reverses and daggers") {
    Circuit c = parse_circuit("qubits 2\nT 0\nP 1\nCNOT 0 1\n");
    Circuit inv = c.inverse();
    REQUIRE(inv.gates().size() == 3);
    CHECK(inv.gates()[0].kind == GateKind::CNOT);
    CHECK(inv.gates()[1].kind == GateKind::Pdag);
    CHECK(inv.gates()[2].kind == GateKind::Tdag);
    CHECK(c.clifford_segments().size() == 2);
}

TEST_CASE("key transform rules match operator identities, n <= 3") {
    for (std::uint32_t n = 1; n <= 3; ++n) {
        for (const Gate& g : all_generators(n)) {
            const auto G = literal(g, n);
            for (std::uint32_t bits = 0; bits < (1u << (2 * n)); ++bits) {
                PauliKey k(n);
                for (std::uint32_t w = 0; w < n; ++w) {
                    k.x[w] = (bits >> w) & 1;
                    k.z[w] = (bits >> (w + n)) & 1;
                }
                PauliKey k2 = k;
                conjugate_key(k2, g);
                CHECK(same_up_to_phase(G * key_op(k), key_op(k2) * G));
            }
        }
    }
}

TEST_CASE("the three rules, literally") {
    PauliKey k(2);
    k.x = {1, 0};
    k.z = {0, 1};
    auto h = k;
    conjugate_key(h, make_gate(GateKind::H, 0));
    CHECK(h.x == std::vector<Bit>{0, 0});
    CHECK(h.z == std::vector<Bit>{1, 1});
    auto p = k;
    conjugate_key(p, make_gate(GateKind::P, 0));
    CHECK(p.z == std::vector<Bit>{1, 1});
    auto c = k;
    conjugate_key(c, make_cnot(0, 1));
    CHECK(c.x == std::vector<Bit>{1, 1});
    CHECK(c.z == std::vector<Bit>{1, 1});
    CHECK_THROWS_AS(conjugate_key(c, make_gate(GateKind::T, 0)), CircuitError);
}

TEST_CASE("T past an X key leaves a P") {
    const auto T = literal(make_gate(GateKind::T, 0), 1);
    const auto Td = literal(make_gate(GateKind::Tdag, 0), 1);
    const auto P = literal(make_gate(GateKind::P, 0), 1);
    const auto Pd = literal(make_gate(GateKind::Pdag, 0), 1);
    PauliKey x(1);
    x.x = {1};
    CHECK(same_up_to_phase(T * key_op(x), P * key_op(x) * T));
    CHECK(same_up_to_phase(Td * key_op(x), Pd * key_op(x) * Td));
    CHECK(commute_T_past_key(true));
}

TEST_CASE("symbolic keys agree with concrete keys") {
    VarStore st(5);
    std::vector<Var> vs;
    for (int i = 0; i < 6; ++i) vs.push_back(st.allocate(i % 2 ? Party::Bob : Party::Alice, "v" + std::to_string(i)));
    PolyKey sym(3);
    for (int w = 0; w < 3; ++w) {
        sym.x[w] = KeyPolynomial::variable(vs[w]);
        sym.z[w] = KeyPolynomial::variable(vs[w + 3]);
    }
    std::vector<Gate> gs = {make_gate(GateKind::H, 0), make_cnot(0, 2), make_gate(GateKind::P, 2), make_cnot(1, 0)};
    const PolyKey out = conjugate_key_through_clifford(sym, std::span<const Gate>(gs));
    for (std::uint32_t a = 0; a < 64; ++a) {
        std::map<Var, bool> asg;
        PauliKey conc(3);
        for (int i = 0; i < 6; ++i) asg[vs[i]] = (a >> i) & 1;
        for (int w = 0; w < 3; ++w) {
            conc.x[w] = (a >> w) & 1;
            conc.z[w] = (a >> (w + 3)) & 1;
        }
        conc = conjugate_key_through_clifford(conc, std::span<const Gate>(gs));
        for (int w = 0; w < 3; ++w) {
            CHECK(out.x[w].eval(asg) == bool(conc.x[w]));
            CHECK(out.z[w].eval(asg) == bool(conc.z[w]));
        }
    }
}

TEST_CASE("key polynomial arithmetic") {
    VarStore st;
    const Var a = st.allocate(Party::Alice, "a");
    const Var b = st.allocate(Party::Bob, "b");
    const auto A = KeyPolynomial::variable(a);
    const auto B = KeyPolynomial::variable(b);
    CHECK((A ^ A).is_zero());
    CHECK((A * A) == A);
    CHECK((A * B).degree() == 2);
    CHECK((A ^ KeyPolynomial::one()).degree() == 1);
    CHECK(KeyPolynomial::one().as_constant() == true);
    CHECK(A.sole_owner() == Party::Alice);
    CHECK_FALSE((A ^ B).sole_owner().has_value());
    const auto p = (A * B) ^ A ^ KeyPolynomial::one();
    for (int x = 0; x < 4; ++x) {
        const bool va = x & 1, vb = x & 2;
        CHECK(p.eval(std::map<Var, bool>{{a, va}, {b, vb}}) == (((va && vb) != va) != true));
    }
    CHECK_THROWS_AS(p.eval(std::map<Var, bool>{{a, true}}), std::out_of_range);
    CHECK(key_poly_xor(p, p).is_zero());
}

TEST_CASE("party views enforce ownership") {
    VarStore st(3);
    bool exchanged = false;
    const Var a = st.allocate_value(Party::Alice, "a", true);
    const Var b = st.allocate_value(Party::Bob, "b", false);
    PartyView alice(st, Party::Alice, &exchanged);
    PartyView bob(st, Party::Bob, &exchanged);
    CHECK(alice(a));
    CHECK_FALSE(bob(b));
    CHECK_THROWS_AS(alice(b), AccessViolation);
    CHECK_THROWS_AS(bob(a), AccessViolation);
    exchanged = true;
    CHECK_FALSE(alice(b));
    CHECK(PartyView::unrestricted(st, Party::Bob)(a));
}

TEST_CASE("lazy outcomes are drawn once") {
    VarStore st(11);
    const Var r = st.allocate_random(Party::Bob, "r");
    CHECK_FALSE(st.is_assigned(r));
    const bool v = st.value(r);
    CHECK(st.is_assigned(r));
    CHECK(st.value(r) == v);
    const Var u = st.allocate(Party::Alice, "u");
    CHECK_THROWS(st.value(u));
    const Var r2 = st.allocate_random(Party::Alice, "r2");
    st.sample_pending();
    CHECK(st.is_assigned(r2));
}
