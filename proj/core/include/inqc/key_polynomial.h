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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inqc/variables.h"

namespace inqc {

/// A product of distinct variables. The empty monomial is the constant 1.
using Monomial = std::vector<Var>;

/// Multilinear polynomial over F2, kept canonical: monomials sorted, variables
/// inside a monomial sorted, no monomial present twice.
class KeyPolynomial {
   public:
    KeyPolynomial() = default;

    static KeyPolynomial zero() { return {}; }
    static KeyPolynomial one();
    static KeyPolynomial constant(bool c) { return c ? one() : zero(); }
    static KeyPolynomial variable(Var v);
    static KeyPolynomial monomial(Monomial m);

    KeyPolynomial& operator^=(const KeyPolynomial& other);
    friend KeyPolynomial operator^(KeyPolynomial a, const KeyPolynomial& b) { return a ^= b; }
    friend KeyPolynomial operator*(const KeyPolynomial& a, const KeyPolynomial& b);
    friend bool operator==(const KeyPolynomial&, const KeyPolynomial&) = default;

    bool is_zero() const { return monomials_.empty(); }
    /// The constant value when no variable occurs.
    std::optional<bool> as_constant() const;
    std::size_t degree() const;
    const std::vector<Monomial>& monomials() const { return monomials_; }
    std::vector<Var> variables() const;

    /// Single owner of every variable, if there is one.
    std::optional<Party> sole_owner() const;

    bool eval(const std::function<bool(Var)>& bit) const;
    /// Throws std::out_of_range naming the first variable missing from `assignment`.
    bool eval(const std::map<Var, bool>& assignment) const;

    std::string to_string(const VarStore* names = nullptr) const;

   private:
    void canonicalize();
    std::vector<Monomial> monomials_;
};

/// XOR of two polynomials (duplicate monomials cancel).
inline KeyPolynomial key_poly_xor(const KeyPolynomial& p, const KeyPolynomial& q) { return p ^ q; }
inline bool key_poly_eval(const KeyPolynomial& p, const std::map<Var, bool>& assignment) {
    return p.eval(assignment);
}

}  // namespace inqc
