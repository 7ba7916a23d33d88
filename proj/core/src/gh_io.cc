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


#include <json.hpp>

#include "inqc/garden_hose.h"

namespace inqc {

using nlohmann::json;

namespace {

constexpr std::size_t kJsonInputCap = 16;

json hoses_of(const GhNode& p, Party side, const PartyView& view) {
    json out = json::array();
    for (std::int64_t i = 0; i < p.size(); ++i) {
        const std::int64_t j = p.partner(side, view, i);
        if (j > i) out.push_back({i, j});
    }
    return out;
}

std::vector<std::int64_t> matching_from(const json& hoses, std::int64_t pipes) {
    std::vector<std::int64_t> m(static_cast<std::size_t>(pipes), kOpen);
    for (const auto& h : hoses) {
        const auto a = h.at(0).get<std::int64_t>();
        const auto b = h.at(1).get<std::int64_t>();
        if (a < 0 || b < 0 || a >= pipes || b >= pipes || a == b) throw GardenHoseError("json: hose out of range");
        auto& ma = m[static_cast<std::size_t>(a)];
        auto& mb = m[static_cast<std::size_t>(b)];
        if (ma != kOpen || mb != kOpen) throw GardenHoseError("json: pipe end used twice");
        ma = b;
        mb = a;
    }
    return m;
}

}  // namespace

std::string gh_to_json(const GhNode& p, VarStore& store) {
    const auto a = p.inputs(Party::Alice);
    const auto b = p.inputs(Party::Bob);
    if (a.size() > kJsonInputCap || b.size() > kJsonInputCap) {
        throw std::invalid_argument("gh_to_json: input space too large to tabulate");
    }
    const PartyView alice = PartyView::unrestricted(store, Party::Alice);
    const PartyView bob = PartyView::unrestricted(store, Party::Bob);
    json j;
    j["kind"] = p.kind();
    j["pipes"] = p.size();
    j["nA"] = a.size();
    j["nB"] = b.size();
    j["alice"] = json::array();
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << a.size()); ++x) {
        assign_bits(store, a, x);
        j["alice"].push_back({{"x", x}, {"tap", p.tap(alice)}, {"hoses", hoses_of(p, Party::Alice, alice)}});
    }
    j["bob"] = json::array();
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << b.size()); ++y) {
        assign_bits(store, b, y);
        j["bob"].push_back({{"y", y}, {"hoses", hoses_of(p, Party::Bob, bob)}});
    }
    json labels = json::array();
    for (std::int64_t i = 0; i < p.size(); ++i) {
        if (auto l = p.label(i)) labels.push_back({i, *l});
    }
    j["labels"] = labels;
    return j.dump(2);
}

GardenHose gh_from_json(std::string_view text, VarStore& store) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw GardenHoseError(std::string("json: ") + e.what());
    }
    try {
        const auto pipes = j.at("pipes").get<std::int64_t>();
        const auto na = j.at("nA").get<std::uint32_t>();
        const auto nb = j.at("nB").get<std::uint32_t>();
        if (na > kJsonInputCap || nb > kJsonInputCap) throw GardenHoseError("json: input widths too large");
        GhInputs in = allocate_inputs(store, na, nb);
        std::vector<ExplicitStrategy> alice(std::size_t{1} << na);
        std::vector<bool> seen_a(alice.size(), false);
        for (const auto& s : j.at("alice")) {
            const auto x = s.at("x").get<std::uint64_t>();
            if (x >= alice.size() || seen_a[x]) throw GardenHoseError("json: bad or repeated Alice input");
            seen_a[x] = true;
            alice[x] = {s.at("tap").get<std::int64_t>(), matching_from(s.at("hoses"), pipes)};
        }
        std::vector<std::vector<std::int64_t>> bob(std::size_t{1} << nb);
        std::vector<bool> seen_b(bob.size(), false);
        for (const auto& s : j.at("bob")) {
            const auto y = s.at("y").get<std::uint64_t>();
            if (y >= bob.size() || seen_b[y]) throw GardenHoseError("json: bad or repeated Bob input");
            seen_b[y] = true;
            bob[y] = matching_from(s.at("hoses"), pipes);
        }
        for (bool s : seen_a) {
            if (!s) throw GardenHoseError("json: missing Alice strategy");
        }
        for (bool s : seen_b) {
            if (!s) throw GardenHoseError("json: missing Bob strategy");
        }
        std::map<std::int64_t, std::uint32_t> labels;
        if (j.contains("labels")) {
            for (const auto& l : j["labels"]) labels[l.at(0).get<std::int64_t>()] = l.at(1).get<std::uint32_t>();
        }
        return gh_explicit(pipes, in.alice, in.bob, std::move(alice), std::move(bob), std::move(labels));
    } catch (const json::exception& e) {
        throw GardenHoseError(std::string("json: ") + e.what());
    }
}

}  // namespace inqc
