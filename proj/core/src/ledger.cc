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


#include "inqc/ledger.h"

#include <stdexcept>

namespace inqc {

void Ledger::charge(std::string phase, std::int64_t pairs) {
    if (pairs < 0) throw std::invalid_argument("negative EPR charge");
    total_ += pairs;
    entries_.push_back({std::move(phase), pairs});
}

std::int64_t Ledger::total_for(std::string_view prefix) const {
    std::int64_t acc = 0;
    for (const auto& e : entries_) {
        if (std::string_view(e.phase).starts_with(prefix)) acc += e.pairs;
    }
    return acc;
}

}  // namespace inqc
