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

#include "inqc/variables.h"

namespace inqc {

const char* party_name(Party p) { return p == Party::Alice ? "alice" : "bob"; }

AccessViolation::AccessViolation(Party reader, Var var, const std::string& name)
    : std::runtime_error(std::string(party_name(reader)) + " read " + party_name(var.owner) +
                         " bit '" + name + "' before the simultaneous exchange"),
      reader(reader),
      var(var) {}

Var VarStore::allocate(Party owner, std::string name) {
    Var v{static_cast<std::uint32_t>(values_.size()), owner};
    values_.push_back(-1);
    lazy_.push_back(0);
    owners_.push_back(owner);
    names_.push_back(std::move(name));
    return v;
}

Var VarStore::allocate_random(Party owner, std::string name) {
    Var v = allocate(owner, std::move(name));
    lazy_[v.index] = 1;
    return v;
}

Var VarStore::allocate_value(Party owner, std::string name, bool value) {
    Var v = allocate(owner, std::move(name));
    values_[v.index] = value ? 1 : 0;
    return v;
}

void VarStore::set(Var v, bool value) { values_.at(v.index) = value ? 1 : 0; }

bool VarStore::value(Var v) {
    std::int8_t& slot = values_.at(v.index);
    if (slot < 0) {
        if (!lazy_[v.index]) {
            throw std::logic_error("bit '" + names_[v.index] + "' read before assignment");
        }
        slot = random_bit(rng_) ? 1 : 0;
    }
    return slot != 0;
}

void VarStore::sample_pending() {
    for (std::uint32_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 0 && lazy_[i]) values_[i] = random_bit(rng_) ? 1 : 0;
    }
}

std::vector<std::pair<Var, bool>> VarStore::assigned_bits(Party p) const {
    std::vector<std::pair<Var, bool>> out;
    for (std::uint32_t i = 0; i < values_.size(); ++i) {
        if (owners_[i] == p && values_[i] >= 0) {
            out.emplace_back(Var{i, p}, values_[i] != 0);
        }
    }
    return out;
}

PartyView PartyView::unrestricted(VarStore& store, Party party) {
    PartyView v(store, party);
    v.unrestricted_ = true;
    return v;
}

bool PartyView::operator()(Var v) const {
    if (!unrestricted_ && v.owner != party_ && !(exchanged_ != nullptr && *exchanged_)) {
        throw AccessViolation(party_, v, store_->name(v));
    }
    return store_->value(v);
}

void assign_bits(VarStore& store, const std::vector<Var>& vars, std::uint64_t value) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
        store.set(vars[i], ((value >> i) & 1) != 0);
    }
}

}  // namespace inqc
