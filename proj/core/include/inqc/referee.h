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
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inqc/ledger.h"
#include "inqc/variables.h"

namespace inqc {

struct Transcript {
    /// (variable name, bit) in allocation order.
    std::vector<std::pair<std::string, bool>> alice_outcomes;
    std::vector<std::pair<std::string, bool>> bob_outcomes;
    std::string message_alice;
    std::string message_bob;
};

/// Byte form of one party's bits: per bit a 4-byte little-endian variable
/// index followed by one byte 0 or 1.
std::string encode_message(const std::vector<std::pair<Var, bool>>& bits);
std::vector<std::pair<std::uint32_t, bool>> decode_message(std::string_view bytes);

/// Runtime for one protocol run. Owns the classical bits, the party views
/// and the ledger. Before the exchange a party reading the other's bits is an
/// access violation.
class Referee {
   public:
    explicit Referee(std::uint64_t seed);
    Referee(const Referee&) = delete;
    Referee& operator=(const Referee&) = delete;

    VarStore& store() { return store_; }
    const ViewPair& views() const { return views_; }
    const PartyView& view(Party p) const { return views_.of(p); }
    Ledger& ledger() { return ledger_; }
    /// Generator for the simulated quantum state (Born sampling), separate
    /// from the one that draws Bell outcomes.
    std::mt19937_64& nature() { return nature_; }
    std::uint64_t seed() const { return seed_; }

    bool exchanged() const { return exchanged_; }
    /// Samples every pending outcome, serializes both parties' bits and
    /// opens the views. Fails when called twice.
    void exchange();
    Transcript transcript() const;

   private:
    std::uint64_t seed_;
    VarStore store_;
    std::mt19937_64 nature_;
    bool exchanged_ = false;
    ViewPair views_;
    Ledger ledger_;
    std::string msg_alice_;
    std::string msg_bob_;
};

/// Local operations before the exchange, then after it.
struct Program {
    std::function<void(Referee&)> phase1;
    std::function<void(Referee&)> phase2;
};

struct RefereeResult {
    Transcript transcript;
    std::optional<std::string> violation;
    std::int64_t epr_charged = 0;
    bool completed() const { return !violation.has_value(); }
};

/// Runs phase 1, exactly one exchange, then phase 2. An access violation in
/// either phase ends the run and is reported instead of thrown.
RefereeResult referee_run(const Program& program, Referee& referee);
RefereeResult referee_run(const Program& program, std::uint64_t seed);

}  // namespace inqc
