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

#include <compare>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace inqc {

enum class Party : std::uint8_t { Alice = 0, Bob = 1 };

inline Party other(Party p) { return p == Party::Alice ? Party::Bob : Party::Alice; }
const char* party_name(Party p);

/// A classical bit held by exactly one party: an input bit or a measurement
/// outcome. The owner travels with the id so every read can be access checked.
struct Var {
    std::uint32_t index = 0;
    Party owner = Party::Alice;

    friend bool operator==(const Var& a, const Var& b) { return a.index == b.index; }
    friend auto operator<=>(const Var& a, const Var& b) { return a.index <=> b.index; }
};

/// Raised when a party reads a bit it cannot know at that point of the protocol.
class AccessViolation : public std::runtime_error {
   public:
    AccessViolation(Party reader, Var var, const std::string& name);
    Party reader;
    Var var;
};

/// Backing store for every classical bit of one protocol run.
///
/// Bits allocated with `allocate_random` are measurement outcomes. Their value
/// is drawn from the run's generator on first read; outcomes of Bell
/// measurements are uniform and independent of everything else, so sampling
/// lazily gives the same distribution as sampling eagerly.
class VarStore {
   public:
    explicit VarStore(std::uint64_t seed = 0) : rng_(seed) {}

    Var allocate(Party owner, std::string name);
    Var allocate_random(Party owner, std::string name);
    Var allocate_value(Party owner, std::string name, bool value);

    void set(Var v, bool value);
    bool value(Var v);
    bool is_assigned(Var v) const { return values_.at(v.index) >= 0; }
    const std::string& name(Var v) const { return names_.at(v.index); }
    Party owner(std::uint32_t index) const { return owners_.at(index); }
    std::size_t size() const { return values_.size(); }
    std::mt19937_64& rng() { return rng_; }
    /// Draws every measurement outcome not read yet.
    void sample_pending();

    /// Assigned bits owned by `p`, in allocation order.
    std::vector<std::pair<Var, bool>> assigned_bits(Party p) const;

   private:
    std::vector<std::int8_t> values_;
    std::vector<std::uint8_t> lazy_;
    std::vector<Party> owners_;
    std::vector<std::string> names_;
    std::mt19937_64 rng_;
};

/// One party's window onto a VarStore. Reading a bit owned by the other party
/// throws AccessViolation unless the simultaneous exchange has happened.
class PartyView {
   public:
    PartyView(VarStore& store, Party party, const bool* exchanged = nullptr)
        : store_(&store), party_(party), exchanged_(exchanged) {}

    /// A view that may read everything (test oracles and post-exchange logic).
    static PartyView unrestricted(VarStore& store, Party party);

    bool operator()(Var v) const;
    Party party() const { return party_; }
    VarStore& store() const { return *store_; }

   private:
    VarStore* store_;
    Party party_;
    const bool* exchanged_;
    bool unrestricted_ = false;
};

/// Alice's and Bob's views for the same store.
struct ViewPair {
    PartyView alice;
    PartyView bob;
    const PartyView& of(Party p) const { return p == Party::Alice ? alice : bob; }
};

/// Assigns the low bits of `value` to `vars` (bit i to vars[i]).
void assign_bits(VarStore& store, const std::vector<Var>& vars, std::uint64_t value);

/// Uniform bit from the top of a 64-bit draw. Stable across standard libraries.
inline bool random_bit(std::mt19937_64& rng) { return (rng() >> 63) != 0; }

/// Uniform double in [0, 1) with 53 bits. Stable across standard libraries.
inline double random_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace inqc
