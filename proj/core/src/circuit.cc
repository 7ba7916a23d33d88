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

#include "inqc/circuit.h"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace inqc {

const char* gate_name(GateKind k) {
    switch (k) {
        case GateKind::X: return "X";
        case GateKind::Z: return "Z";
        case GateKind::H: return "H";
        case GateKind::P: return "P";
        case GateKind::Pdag: return "PDAG";
        case GateKind::CNOT: return "CNOT";
        case GateKind::T: return "T";
        case GateKind::Tdag: return "TDAG";
    }
    return "?";
}

Gate make_gate(GateKind k, std::uint32_t q0) {
    if (k == GateKind::CNOT) throw CircuitError("CNOT needs two wires");
    return Gate{k, q0, q0};
}

Gate make_cnot(std::uint32_t control, std::uint32_t target) {
    if (control == target) throw CircuitError("CNOT with equal wires");
    return Gate{GateKind::CNOT, control, target};
}

Gate Gate::inverse() const {
    Gate g = *this;
    switch (kind) {
        case GateKind::P: g.kind = GateKind::Pdag; break;
        case GateKind::Pdag: g.kind = GateKind::P; break;
        case GateKind::T: g.kind = GateKind::Tdag; break;
        case GateKind::Tdag: g.kind = GateKind::T; break;
        default: break;
    }
    return g;
}

void validate_gate(const Gate& g, std::uint32_t width) {
    if (g.q0 >= width || (g.is_two_qubit() && g.q1 >= width)) {
        throw CircuitError(std::string("wire out of range in ") + gate_name(g.kind));
    }
    if (g.is_two_qubit() && g.q0 == g.q1) throw CircuitError("CNOT with equal wires");
}

std::vector<Gate> LayerDecomposition::flatten() const {
    std::vector<Gate> out;
    for (std::size_t i = 0; i < cliffords.size(); ++i) {
        if (i > 0) {
            const auto& layer = t_layers[i - 1].gates;
            out.insert(out.end(), layer.begin(), layer.end());
        }
        out.insert(out.end(), cliffords[i].begin(), cliffords[i].end());
    }
    return out;
}

LayerDecomposition greedy_layers(const std::vector<Gate>& gates, std::uint32_t width) {
    LayerDecomposition out;
    out.cliffords.emplace_back();
    std::vector<std::int64_t> last_touch(width, -1);
    std::vector<bool> in_layer(width, false);
    std::int64_t layer_open = -1;

    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        const auto idx = static_cast<std::int64_t>(i);
        if (g.is_t()) {
            bool joins = layer_open >= 0 && last_touch[g.q0] < layer_open && !in_layer[g.q0];
            if (!joins) {
                out.t_layers.emplace_back();
                out.cliffords.emplace_back();
                std::fill(in_layer.begin(), in_layer.end(), false);
                layer_open = idx;
            }
            out.t_layers.back().gates.push_back(g);
            in_layer[g.q0] = true;
            last_touch[g.q0] = idx;
        } else {
            out.cliffords.back().push_back(g);
            last_touch[g.q0] = idx;
            if (g.is_two_qubit()) last_touch[g.q1] = idx;
        }
    }
    return out;
}

Circuit::Circuit(std::uint32_t width, std::vector<Gate> gates) : width_(width), gates_(std::move(gates)) {
    for (const Gate& g : gates_) validate_gate(g, width_);
    layers_ = greedy_layers(gates_, width_);
}

std::size_t Circuit::t_count() const {
    return static_cast<std::size_t>(std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) { return g.is_t(); }));
}

Circuit Circuit::inverse() const {
    std::vector<Gate> inv;
    inv.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) inv.push_back(it->inverse());
    return Circuit(width_, std::move(inv));
}

std::vector<std::vector<Gate>> Circuit::clifford_segments() const {
    std::vector<std::vector<Gate>> segs(1);
    for (const Gate& g : gates_) {
        if (g.is_t()) {
            segs.emplace_back();
        } else {
            segs.back().push_back(g);
        }
    }
    return segs;
}

std::vector<Gate> Circuit::t_sequence() const {
    std::vector<Gate> out;
    for (const Gate& g : gates_) {
        if (g.is_t()) out.push_back(g);
    }
    return out;
}

std::string Circuit::to_text() const {
    std::ostringstream os;
    os << "qubits " << width_ << "\n";
    for (const Gate& g : gates_) {
        os << gate_name(g.kind) << " " << g.q0;
        if (g.is_two_qubit()) os << " " << g.q1;
        os << "\n";
    }
    return os.str();
}

namespace {

GateKind parse_kind(std::string name, std::size_t line_no) {
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::toupper(c); });
    if (name == "X") return GateKind::X;
    if (name == "Z") return GateKind::Z;
    if (name == "H") return GateKind::H;
    if (name == "P") return GateKind::P;
    if (name == "PDAG") return GateKind::Pdag;
    if (name == "CNOT") return GateKind::CNOT;
    if (name == "T") return GateKind::T;
    if (name == "TDAG") return GateKind::Tdag;
    throw CircuitError("line " + std::to_string(line_no) + ": unknown gate '" + name + "'");
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::int64_t width = -1;
    std::vector<Gate> gates;

    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;

        auto parse_wire = [&](const std::string& s) -> std::uint32_t {
            std::size_t used = 0;
            long long v = -1;
            try {
                v = std::stoll(s, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != s.size() || v < 0) {
                throw CircuitError("line " + std::to_string(line_no) + ": bad integer '" + s + "'");
            }
            return static_cast<std::uint32_t>(v);
        };

        if (width < 0) {
            if (tok.size() != 2 || (tok[0] != "qubits" && tok[0] != "QUBITS")) {
                throw CircuitError("line " + std::to_string(line_no) + ": expected 'qubits n' header");
            }
            width = parse_wire(tok[1]);
            continue;
        }
        GateKind kind = parse_kind(tok[0], line_no);
        std::size_t arity = kind == GateKind::CNOT ? 2 : 1;
        if (tok.size() != arity + 1) {
            throw CircuitError("line " + std::to_string(line_no) + ": " + gate_name(kind) + " takes " +
                               std::to_string(arity) + " wire(s)");
        }
        Gate g{kind, parse_wire(tok[1]), arity == 2 ? parse_wire(tok[2]) : parse_wire(tok[1])};
        try {
            validate_gate(g, static_cast<std::uint32_t>(width));
        } catch (const CircuitError& e) {
            throw CircuitError("line " + std::to_string(line_no) + ": " + e.what());
        }
        gates.push_back(g);
    }
    if (width < 0) throw CircuitError("missing 'qubits n' header");
    return Circuit(static_cast<std::uint32_t>(width), std::move(gates));
}

}  // namespace inqc
