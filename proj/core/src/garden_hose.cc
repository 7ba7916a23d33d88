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


#include "inqc/garden_hose.h"

#include <algorithm>
#include <set>
#include <sstream>

namespace inqc {

std::uint64_t read_bits(const PartyView& view, const std::vector<Var>& vars) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (view(vars[i])) v |= std::uint64_t{1} << i;
    }
    return v;
}

namespace {

void check_pipe(const GhNode& p, std::int64_t pipe) {
    if (pipe < 0 || pipe >= p.size()) {
        throw GardenHoseError(p.kind() + ": hose leads to pipe " + std::to_string(pipe) + " of " +
                              std::to_string(p.size()));
    }
}

ViewPair open_views(VarStore& store) {
    return {PartyView::unrestricted(store, Party::Alice), PartyView::unrestricted(store, Party::Bob)};
}

}  // namespace

Walk gh_walk(const GhNode& p, const ViewPair& views) {
    Walk w;
    std::int64_t pipe = p.tap(views.alice);
    check_pipe(p, pipe);
    const std::int64_t limit = p.size();
    while (true) {
        w.path.push_back(pipe);
        if (static_cast<std::int64_t>(w.path.size()) > limit) throw GardenHoseError("cycle in garden-hose walk");
        const std::int64_t q = p.partner(Party::Bob, views.bob, pipe);
        if (q == kOpen) {
            w.exit = {Party::Bob, pipe, p.label(pipe)};
            return w;
        }
        check_pipe(p, q);
        w.path.push_back(q);
        if (static_cast<std::int64_t>(w.path.size()) > limit) throw GardenHoseError("cycle in garden-hose walk");
        const std::int64_t r = p.partner(Party::Alice, views.alice, q);
        if (r == kOpen) {
            w.exit = {Party::Alice, q, p.label(q)};
            return w;
        }
        if (r == kTap) throw GardenHoseError("cycle in garden-hose walk: water returned to the tap");
        check_pipe(p, r);
        pipe = r;
    }
}

Exit gh_evaluate(const GhNode& p, const ViewPair& views) { return gh_walk(p, views).exit; }

Walk gh_walk(const GhNode& p, VarStore& store, std::uint64_t x, std::uint64_t y) {
    auto a = p.inputs(Party::Alice);
    auto b = p.inputs(Party::Bob);
    if (a.size() < 64 && (x >> a.size()) != 0) throw std::out_of_range("x wider than Alice's input");
    if (b.size() < 64 && (y >> b.size()) != 0) throw std::out_of_range("y wider than Bob's input");
    assign_bits(store, a, x);
    assign_bits(store, b, y);
    return gh_walk(p, open_views(store));
}

Exit gh_evaluate(const GhNode& p, VarStore& store, std::uint64_t x, std::uint64_t y) {
    return gh_walk(p, store, x, y).exit;
}

std::int64_t spilling_pipes(const GhNode& p, VarStore& store, Party side) {
    const auto na = p.inputs(Party::Alice).size();
    const auto nb = p.inputs(Party::Bob).size();
    if (na + nb > 24) throw std::invalid_argument("spilling_pipes: input space too large to enumerate");
    const std::uint64_t own = std::uint64_t{1} << (side == Party::Alice ? na : nb);
    const std::uint64_t theirs = std::uint64_t{1} << (side == Party::Alice ? nb : na);
    std::int64_t best = 0;
    for (std::uint64_t u = 0; u < own; ++u) {
        std::set<std::int64_t> exits;
        for (std::uint64_t v = 0; v < theirs; ++v) {
            Exit e = side == Party::Alice ? gh_evaluate(p, store, u, v) : gh_evaluate(p, store, v, u);
            if (e.side == side) exits.insert(e.pipe);
        }
        best = std::max(best, static_cast<std::int64_t>(exits.size()));
    }
    return best;
}

GhInputs allocate_inputs(VarStore& store, std::uint32_t na, std::uint32_t nb, std::string_view prefix) {
    GhInputs in;
    for (std::uint32_t i = 0; i < na; ++i) in.alice.push_back(store.allocate(Party::Alice, std::string(prefix) + "x" + std::to_string(i)));
    for (std::uint32_t i = 0; i < nb; ++i) in.bob.push_back(store.allocate(Party::Bob, std::string(prefix) + "y" + std::to_string(i)));
    return in;
}

// ---------------------------------------------------------------------------

TruthTable TruthTable::from_function(std::uint32_t na, std::uint32_t nb,
                                     const std::function<bool(std::uint64_t, std::uint64_t)>& f) {
    if (na + nb > 30) throw std::invalid_argument("truth table too large");
    TruthTable t{na, nb, {}};
    t.bits.resize(std::size_t{1} << (na + nb));
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << na); ++x) {
        for (std::uint64_t y = 0; y < (std::uint64_t{1} << nb); ++y) t.bits[(x << nb) | y] = f(x, y) ? 1 : 0;
    }
    return t;
}

TruthTable parse_truth_table(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tag;
    long long na = -1, nb = -1;
    if (!(in >> tag >> na >> nb) || tag != "f" || na < 0 || nb < 0) {
        throw std::invalid_argument("truth table: expected header 'f nA nB'");
    }
    if (na + nb > 30) throw std::invalid_argument("truth table too large");
    TruthTable t{static_cast<std::uint32_t>(na), static_cast<std::uint32_t>(nb), {}};
    const std::size_t want = std::size_t{1} << (na + nb);
    std::string tok;
    while (in >> tok) {
        if (tok != "0" && tok != "1") throw std::invalid_argument("truth table: bad entry '" + tok + "'");
        t.bits.push_back(tok == "1" ? 1 : 0);
    }
    if (t.bits.size() != want) {
        throw std::invalid_argument("truth table: expected " + std::to_string(want) + " entries, got " +
                                    std::to_string(t.bits.size()));
    }
    return t;
}

std::string truth_table_text(const TruthTable& t) {
    std::ostringstream os;
    os << "f " << t.na << " " << t.nb << "\n";
    const std::size_t row = std::size_t{1} << t.nb;
    for (std::size_t i = 0; i < t.bits.size(); ++i) {
        os << int(t.bits[i]) << ((i + 1) % row == 0 ? "\n" : " ");
    }
    return os.str();
}

TruthTableNode::TruthTableNode(TruthTable f, std::vector<Var> alice_in, std::vector<Var> bob_in)
    : f_(std::move(f)), alice_in_(std::move(alice_in)), bob_in_(std::move(bob_in)) {
    if (f_.na > kTruthTableAliceCap) {
        throw std::invalid_argument("truth table: Alice width " + std::to_string(f_.na) + " exceeds cap " +
                                    std::to_string(kTruthTableAliceCap));
    }
    if (alice_in_.size() != f_.na || bob_in_.size() != f_.nb) {
        throw std::invalid_argument("truth table: input variables do not match widths");
    }
    for (Var v : alice_in_) {
        if (v.owner != Party::Alice) throw std::invalid_argument("truth table: Alice input owned by Bob");
    }
    for (Var v : bob_in_) {
        if (v.owner != Party::Bob) throw std::invalid_argument("truth table: Bob input owned by Alice");
    }
}

std::int64_t TruthTableNode::tap(const PartyView& alice) const {
    return static_cast<std::int64_t>(read_bits(alice, alice_in_));
}

std::int64_t TruthTableNode::partner(Party side, const PartyView& view, std::int64_t pipe) const {
    if (side == Party::Alice) return pipe == tap(view) ? kTap : kOpen;
    const std::uint64_t y = read_bits(view, bob_in_);
    const std::int64_t spare = std::int64_t{1} << f_.na;
    // Rank of `pipe` among the zero pipes, and the zero count.
    std::int64_t rank = -1;
    std::int64_t zeros = 0;
    std::int64_t prev = -1;
    std::int64_t next = -1;
    for (std::int64_t x = 0; x < spare; ++x) {
        if (f_.at(static_cast<std::uint64_t>(x), y)) continue;
        if (x == pipe) rank = zeros;
        if (rank < 0) prev = x;
        if (rank >= 0 && x != pipe && next < 0) next = x;
        ++zeros;
    }
    if (pipe == spare) {
        if (zeros % 2 == 0) return kOpen;
        // last zero pipe
        for (std::int64_t x = spare - 1; x >= 0; --x) {
            if (!f_.at(static_cast<std::uint64_t>(x), y)) return x;
        }
        return kOpen;
    }
    if (rank < 0) return kOpen;
    if (rank % 2 == 1) return prev;
    return next >= 0 ? next : spare;
}

std::int64_t ConstantNode::partner(Party side, const PartyView&, std::int64_t pipe) const {
    if (side == Party::Alice) return pipe == 0 ? kTap : kOpen;
    if (c_) return kOpen;
    return pipe == 0 ? 1 : 0;
}

LocalXorNode::LocalXorNode(KeyPolynomial alice_part, KeyPolynomial bob_part)
    : alice_(std::move(alice_part)), bob_(std::move(bob_part)) {
    for (Var v : alice_.variables()) {
        if (v.owner != Party::Alice) throw std::invalid_argument("local xor: Alice part reads a Bob bit");
    }
    for (Var v : bob_.variables()) {
        if (v.owner != Party::Bob) throw std::invalid_argument("local xor: Bob part reads an Alice bit");
    }
}

std::int64_t LocalXorNode::tap(const PartyView& alice) const {
    return alice_.eval([&](Var v) { return alice(v); }) ? 1 : 0;
}

std::int64_t LocalXorNode::partner(Party side, const PartyView& view, std::int64_t pipe) const {
    if (side == Party::Alice) return pipe == tap(view) ? kTap : kOpen;
    const std::int64_t joined = bob_.eval([&](Var v) { return view(v); }) ? 1 : 0;
    if (pipe == joined) return 2;
    if (pipe == 2) return joined;
    return kOpen;
}

std::vector<Var> LocalXorNode::inputs(Party p) const {
    return p == Party::Alice ? alice_.variables() : bob_.variables();
}

ExplicitNode::ExplicitNode(std::int64_t pipes, std::vector<Var> alice_in, std::vector<Var> bob_in,
                           std::vector<ExplicitStrategy> alice, std::vector<std::vector<std::int64_t>> bob,
                           std::map<std::int64_t, std::uint32_t> labels)
    : pipes_(pipes),
      alice_in_(std::move(alice_in)),
      bob_in_(std::move(bob_in)),
      alice_(std::move(alice)),
      bob_(std::move(bob)),
      labels_(std::move(labels)) {
    if (pipes_ < 1) throw GardenHoseError("explicit protocol needs at least one pipe");
    if (alice_.size() != (std::size_t{1} << alice_in_.size()) || bob_.size() != (std::size_t{1} << bob_in_.size())) {
        throw GardenHoseError("explicit protocol: one strategy per input expected");
    }
    auto check_matching = [&](const std::vector<std::int64_t>& m, std::int64_t tap) {
        if (static_cast<std::int64_t>(m.size()) != pipes_) throw GardenHoseError("explicit protocol: matching length");
        for (std::int64_t i = 0; i < pipes_; ++i) {
            const std::int64_t j = m[static_cast<std::size_t>(i)];
            if (j == kOpen) continue;
            if (j < 0 || j >= pipes_ || j == i || m[static_cast<std::size_t>(j)] != i) {
                throw GardenHoseError("explicit protocol: matching is not a set of disjoint pairs");
            }
            if (i == tap) throw GardenHoseError("explicit protocol: tap pipe is also hosed");
        }
    };
    for (const auto& a : alice_) {
        if (a.tap < 0 || a.tap >= pipes_) throw GardenHoseError("explicit protocol: tap out of range");
        check_matching(a.match, a.tap);
    }
    for (const auto& b : bob_) check_matching(b, -3);
}

std::int64_t ExplicitNode::tap(const PartyView& alice) const { return alice_[read_bits(alice, alice_in_)].tap; }

std::int64_t ExplicitNode::partner(Party side, const PartyView& view, std::int64_t pipe) const {
    if (side == Party::Alice) {
        const auto& a = alice_[read_bits(view, alice_in_)];
        if (pipe == a.tap) return kTap;
        return a.match[static_cast<std::size_t>(pipe)];
    }
    return bob_[read_bits(view, bob_in_)][static_cast<std::size_t>(pipe)];
}

std::optional<std::uint32_t> ExplicitNode::label(std::int64_t pipe) const {
    auto it = labels_.find(pipe);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

GardenHose gh_from_truth_table(const TruthTable& f, std::vector<Var> alice_in, std::vector<Var> bob_in) {
    return std::make_shared<TruthTableNode>(f, std::move(alice_in), std::move(bob_in));
}

GardenHose gh_constant(bool c) { return std::make_shared<ConstantNode>(c); }

GardenHose gh_local_xor(const KeyPolynomial& alice_part, const KeyPolynomial& bob_part) {
    return std::make_shared<LocalXorNode>(alice_part, bob_part);
}

GardenHose gh_explicit(std::int64_t pipes, std::vector<Var> alice_in, std::vector<Var> bob_in,
                       std::vector<ExplicitStrategy> alice, std::vector<std::vector<std::int64_t>> bob,
                       std::map<std::int64_t, std::uint32_t> labels) {
    return std::make_shared<ExplicitNode>(pipes, std::move(alice_in), std::move(bob_in), std::move(alice),
                                          std::move(bob), std::move(labels));
}

// ---------------------------------------------------------------------------

OutcomeTable::Outcome OutcomeTable::tap() { return hose(Party::Alice, kTap, kTap); }

OutcomeTable::Outcome OutcomeTable::hose(Party side, std::int64_t p, std::int64_t q) {
    const std::pair<int, std::int64_t> key{static_cast<int>(side), std::min(p, q)};
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;
    std::string tag = prefix_ + (side == Party::Alice ? "a" : "b") +
                      (key.second == kTap ? std::string("tap") : std::to_string(key.second));
    Outcome o{store_->allocate_random(side, tag + ".x"), store_->allocate_random(side, tag + ".z")};
    table_.emplace(key, o);
    return o;
}

QuantumRun gh_quantum_execute(const GhNode& p, const ViewPair& views, OutcomeTable& outcomes, StateVector& state,
                              std::uint32_t wire, Ledger* ledger, const std::string& phase) {
    if (ledger) ledger->charge(phase, p.size());
    QuantumRun run;
    auto hop = [&](const OutcomeTable::Outcome& o, const PartyView& v) {
        const bool x = v(o.x);
        const bool z = v(o.z);
        state.apply_pauli(wire, x, z);
        run.frame_x ^= x;
        run.frame_z ^= z;
    };

    std::int64_t pipe = p.tap(views.alice);
    check_pipe(p, pipe);
    hop(outcomes.tap(), views.alice);
    const std::int64_t limit = p.size();
    while (true) {
        run.walk.path.push_back(pipe);
        if (static_cast<std::int64_t>(run.walk.path.size()) > limit) throw GardenHoseError("cycle in garden-hose walk");
        if (auto g = p.bob_gate(views.bob, pipe)) {
            state.apply(make_gate(*g, wire));
            run.frame_z ^= run.frame_x;
        }
        const std::int64_t q = p.partner(Party::Bob, views.bob, pipe);
        if (q == kOpen) {
            run.walk.exit = {Party::Bob, pipe, p.label(pipe)};
            break;
        }
        check_pipe(p, q);
        hop(outcomes.hose(Party::Bob, pipe, q), views.bob);
        run.walk.path.push_back(q);
        if (static_cast<std::int64_t>(run.walk.path.size()) > limit) throw GardenHoseError("cycle in garden-hose walk");
        const std::int64_t r = p.partner(Party::Alice, views.alice, q);
        if (r == kOpen) {
            run.walk.exit = {Party::Alice, q, p.label(q)};
            break;
        }
        if (r == kTap) throw GardenHoseError("cycle in garden-hose walk: water returned to the tap");
        check_pipe(p, r);
        hop(outcomes.hose(Party::Alice, q, r), views.alice);
        pipe = r;
    }
    run.exit = run.walk.exit;
    return run;
}

}  // namespace inqc
