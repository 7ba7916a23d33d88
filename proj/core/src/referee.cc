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


#include "inqc/referee.h"

#include <stdexcept>

namespace inqc {

std::string encode_message(const std::vector<std::pair<Var, bool>>& bits) {
    std::string out;
    out.reserve(bits.size() * 5);
    for (const auto& [v, b] : bits) {
        for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v.index >> (8 * i)) & 0xff));
        out.push_back(b ? 1 : 0);
    }
    return out;
}

std::vector<std::pair<std::uint32_t, bool>> decode_message(std::string_view bytes) {
    if (bytes.size() % 5 != 0) throw std::invalid_argument("message length is not a multiple of 5");
    std::vector<std::pair<std::uint32_t, bool>> out;
    for (std::size_t at = 0; at < bytes.size(); at += 5) {
        std::uint32_t idx = 0;
        for (int i = 0; i < 4; ++i) idx |= std::uint32_t(static_cast<unsigned char>(bytes[at + i])) << (8 * i);
        out.emplace_back(idx, bytes[at + 4] != 0);
    }
    return out;
}

Referee::Referee(std::uint64_t seed)
    : seed_(seed),
      store_(seed),
      nature_(seed ^ 0x9e3779b97f4a7c15ULL),
      views_{PartyView(store_, Party::Alice, &exchanged_), PartyView(store_, Party::Bob, &exchanged_)} {}

void Referee::exchange() {
    if (exchanged_) throw std::logic_error("the simultaneous exchange happens once");
    store_.sample_pending();
    msg_alice_ = encode_message(store_.assigned_bits(Party::Alice));
    msg_bob_ = encode_message(store_.assigned_bits(Party::Bob));
    exchanged_ = true;
}

Transcript Referee::transcript() const {
    Transcript t;
    for (const auto& [v, b] : store_.assigned_bits(Party::Alice)) t.alice_outcomes.emplace_back(store_.name(v), b);
    for (const auto& [v, b] : store_.assigned_bits(Party::Bob)) t.bob_outcomes.emplace_back(store_.name(v), b);
    t.message_alice = msg_alice_;
    t.message_bob = msg_bob_;
    return t;
}

RefereeResult referee_run(const Program& program, Referee& referee) {
    if (!program.phase1 || !program.phase2) throw std::invalid_argument("program needs both phases");
    RefereeResult r;
    try {
        program.phase1(referee);
        referee.exchange();
        program.phase2(referee);
    } catch (const AccessViolation& e) {
        r.violation = e.what();
    }
    r.transcript = referee.transcript();
    r.epr_charged = referee.ledger().total();
    return r;
}

RefereeResult referee_run(const Program& program, std::uint64_t seed) {
    Referee referee(seed);
    return referee_run(program, referee);
}

}  // namespace inqc
