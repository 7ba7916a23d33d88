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
#include <string>
#include <string_view>
#include <vector>

namespace inqc {

struct LedgerEntry {
    std::string phase;
    std::int64_t pairs = 0;
};

/// EPR-pair accounting for one run. Charges only accumulate.
class Ledger {
   public:
    void charge(std::string phase, std::int64_t pairs);

    std::int64_t total() const { return total_; }
    /// Sum of entries whose phase name starts with `prefix`.
    std::int64_t total_for(std::string_view prefix) const;
    const std::vector<LedgerEntry>& entries() const { return entries_; }

   private:
    std::vector<LedgerEntry> entries_;
    std::int64_t total_ = 0;
};

}  // namespace inqc
