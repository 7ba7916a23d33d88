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

#include "inqc/key_polynomial.h"

#include <algorithm>
#include <stdexcept>

namespace inqc {

KeyPolynomial KeyPolynomial::one() {
    KeyPolynomial p;
    p.monomials_.emplace_back();
    return p;
}

KeyPolynomial KeyPolynomial::variable(Var v) { return monomial({v}); }

KeyPolynomial KeyPolynomial::monomial(Monomial m) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());  // x*x = x over F2
    KeyPolynomial p;
    p.monomials_.push_back(std::move(m));
    return p;
}

void KeyPolynomial::canonicalize() {
    std::sort(monomials_.begin(), monomials_.end());
    std::vector<Monomial> out;
    out.reserve(monomials_.size());
    for (auto& m : monomials_) {
        if (!out.empty() && out.back() == m) {
            out.pop_back();
        } else {
            out.push_back(std::move(m));
        }
    }
    monomials_ = std::move(out);
}

KeyPolynomial& KeyPolynomial::operator^=(const KeyPolynomial& other) {
    monomials_.insert(monomials_.end(), other.monomials_.begin(), other.monomials_.end());
    canonicalize();
    return *this;
}

KeyPolynomial operator*(const KeyPolynomial& a, const KeyPolynomial& b) {
    KeyPolynomial out;
    for (const auto& ma : a.monomials_) {
        for (const auto& mb : b.monomials_) {
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            std::sort(m.begin(), m.end());
            m.erase(std::unique(m.begin(), m.end()), m.end());
            out.monomials_.push_back(std::move(m));
        }
    }
    out.canonicalize();
    return out;
}

std::optional<bool> KeyPolynomial::as_constant() const {
    if (monomials_.empty()) return false;
    if (monomials_.size() == 1 && monomials_[0].empty()) return true;
    return std::nullopt;
}

std::size_t KeyPolynomial::degree() const {
    std::size_t d = 0;
    for (const auto& m : monomials_) d = std::max(d, m.size());
    return d;
}

std::vector<Var> KeyPolynomial::variables() const {
    std::vector<Var> out;
    for (const auto& m : monomials_) out.insert(out.end(), m.begin(), m.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Party> KeyPolynomial::sole_owner() const {
    std::optional<Party> owner;
    for (const auto& m : monomials_) {
        for (Var v : m) {
            if (owner && *owner != v.owner) return std::nullopt;
            owner = v.owner;
        }
    }
    return owner;
}

bool KeyPolynomial::eval(const std::function<bool(Var)>& bit) const {
    bool acc = false;
    for (const auto& m : monomials_) {
        bool term = true;
        for (Var v : m) {
            if (!bit(v)) {
                term = false;
                break;
            }
        }
        acc ^= term;
    }
    return acc;
}

bool KeyPolynomial::eval(const std::map<Var, bool>& assignment) const {
    for (Var v : variables()) {
        if (!assignment.contains(v)) {
            throw std::out_of_range("assignment is missing variable #" + std::to_string(v.index));
        }
    }
    return eval([&](Var v) { return assignment.at(v); });
}

std::string KeyPolynomial::to_string(const VarStore* names) const {
    if (monomials_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
        if (i) out += " + ";
        const auto& m = monomials_[i];
        if (m.empty()) {
            out += "1";
            continue;
        }
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j) out += "*";
            out += names ? names->name(m[j]) : "v" + std::to_string(m[j].index);
        }
    }
    return out;
}

}  // namespace inqc
