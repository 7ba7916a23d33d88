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

#include "inqc/pauli_key.h"

namespace inqc {

PauliKey operator^(const PauliKey& a, const PauliKey& b) {
    if (a.width() != b.width()) throw std::invalid_argument("key width mismatch");
    PauliKey out(a.width());
    for (std::size_t i = 0; i < a.width(); ++i) {
        out.x[i] = a.x[i] ^ b.x[i];
        out.z[i] = a.z[i] ^ b.z[i];
    }
    return out;
}

PauliKey evaluate(const PolyKey& key, const std::function<bool(Var)>& bit) {
    PauliKey out(key.width());
    for (std::size_t i = 0; i < key.width(); ++i) {
        out.x[i] = key.x[i].eval(bit);
        out.z[i] = key.z[i].eval(bit);
    }
    return out;
}

}  // namespace inqc
