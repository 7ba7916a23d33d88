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

#include <stdexcept>
#include <string>
#include <vector>

#include "inqc/garden_hose.h"

namespace inqc::detail {

// Keys as XORs of garden-hose protocols. Each protocol is a variable of a
// private store so Clifford gates can act on keys symbolically.
class AtomTable {
   public:
    KeyPolynomial add(GardenHose p) {
        const Var v = store_.allocate_value(Party::Alice, "atom" + std::to_string(atoms_.size()), false);
        atoms_.push_back(std::move(p));
        return KeyPolynomial::variable(v);
    }

    GardenHose materialize(const KeyPolynomial& poly) const {
        std::vector<GardenHose> parts;
        bool c = false;
        for (const Monomial& m : poly.monomials()) {
            if (m.empty()) {
                c = !c;
            } else if (m.size() == 1) {
                parts.push_back(atoms_.at(m[0].index));
            } else {
                throw std::logic_error("key is not linear in its protocols");
            }
        }
        if (parts.empty()) return gh_constant(c);
        if (parts.size() == 1 && !c) return parts[0];
        return gh_xor(std::move(parts), c);
    }

   private:
    VarStore store_;
    std::vector<GardenHose> atoms_;
};

}  // namespace inqc::detail
