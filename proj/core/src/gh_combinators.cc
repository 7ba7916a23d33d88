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


#include <algorithm>

#include "inqc/garden_hose.h"

namespace inqc {

namespace {

std::vector<Var> merged_inputs(const std::vector<GardenHose>& ps, Party p) {
    std::vector<Var> out;
    for (const auto& q : ps) {
        auto in = q->inputs(p);
        out.insert(out.end(), in.begin(), in.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

SingleOutputNode::SingleOutputNode(GardenHose p, bool both_alice)
    : p_(std::move(p)), s_(p_->size()), both_alice_(both_alice) {}

std::int64_t SingleOutputNode::port(bool b, const PartyView& alice) const {
    if (!b) return s_ + p_->tap(alice);
    return both_alice_ ? 2 * s_ + p_->tap(alice) : 3 * s_;
}

std::int64_t SingleOutputNode::partner(Party side, const PartyView& view, std::int64_t pipe) const {
    if (pipe == 3 * s_) return side == Party::Alice ? 2 * s_ + p_->tap(view) : kOpen;
    const std::int64_t region = pipe / s_;
    const std::int64_t e = pipe % s_;
    const std::int64_t q = p_->partner(side, view, e);
    if (q >= 0) return region * s_ + q;
    if (side == Party::Alice) {
        switch (region) {
            case 0: return q == kTap ? kTap : s_ + e;
            case 1: return q == kTap ? kOpen : e;
            default:
                if (q == kTap) return both_alice_ ? kOpen : 3 * s_;
                return kOpen;
        }
    }
    switch (region) {
        case 0: return 2 * s_ + e;
        case 2: return e;
        default: return kOpen;
    }
}

std::optional<std::uint32_t> SingleOutputNode::label(std::int64_t pipe) const {
    if (!both_alice_) return std::nullopt;
    const std::int64_t region = pipe / s_;
    if (region == 1) return 0u;
    if (region == 2) return 1u;
    return std::nullopt;
}

std::shared_ptr<const SingleOutputNode> gh_single_output(GardenHose p, bool both_alice) {
    if (!p) throw std::invalid_argument("single output: null protocol");
    return std::make_shared<SingleOutputNode>(std::move(p), both_alice);
}

// ---------------------------------------------------------------------------

XorNode::XorNode(std::vector<GardenHose> ps, bool c) : ps_(std::move(ps)), c_(c) {
    if (ps_.empty()) throw std::invalid_argument("xor: empty protocol list");
    std::int64_t at = 0;
    for (const auto& p : ps_) {
        if (!p) throw std::invalid_argument("xor: null protocol");
        offsets_.push_back(at);
        at += 4 * p->size();
    }
    extra_ = at;
    size_ = at + 1;
}

std::int64_t XorNode::tap(const PartyView& alice) const { return tap_pipe(0, c_ ? In1 : In0, alice); }

std::int64_t XorNode::partner(Party side, const PartyView& view, std::int64_t pipe) const {
    const std::size_t k = ps_.size();
    if (pipe == extra_) return side == Party::Alice ? tap_pipe(k - 1, Out1, view) : kOpen;
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), pipe);
    const std::size_t i = static_cast<std::size_t>(it - offsets_.begin()) - 1;
    const std::int64_t s = ps_[i]->size();
    const int copy = static_cast<int>((pipe - offsets_[i]) / s);
    const std::int64_t e = (pipe - offsets_[i]) % s;
    const std::int64_t q = ps_[i]->partner(side, view, e);
    if (q >= 0) return base(i, copy) + q;
    if (side == Party::Bob) return base(i, copy ^ 3) + e;
    if (q == kOpen) return base(i, copy ^ 2) + e;
    const int b = copy & 1;
    if (copy == In0 || copy == In1) {
        if (i == 0) return b == int(c_) ? kTap : kOpen;
        return tap_pipe(i - 1, Out0 + b, view);
    }
    if (i + 1 == k) return b == 0 ? kOpen : extra_;
    return tap_pipe(i + 1, In0 + b, view);
}

std::vector<Var> XorNode::inputs(Party p) const { return merged_inputs(ps_, p); }

GardenHose gh_xor(std::vector<GardenHose> ps, bool c) { return std::make_shared<XorNode>(std::move(ps), c); }

// ---------------------------------------------------------------------------

MultiOutputNode::MultiOutputNode(std::vector<GardenHose> bits) {
    if (bits.empty()) throw std::invalid_argument("multi output: no output bits");
    if (bits.size() > kMultiOutputCap) {
        throw std::invalid_argument("multi output: " + std::to_string(bits.size()) + " bits exceeds cap " +
                                    std::to_string(kMultiOutputCap));
    }
    std::int64_t at = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        levels_.push_back(gh_single_output(bits[i], true));
        bases_.push_back(at);
        at += (std::int64_t{1} << i) * levels_.back()->size();
    }
    bases_.push_back(at);
    size_ = at;
}

MultiOutputNode::Where MultiOutputNode::locate(std::int64_t pipe) const {
    const auto it = std::upper_bound(bases_.begin(), bases_.end(), pipe);
    const std::size_t level = static_cast<std::size_t>(it - bases_.begin()) - 1;
    const std::int64_t p = levels_[level]->size();
    return {level, static_cast<std::uint32_t>((pipe - bases_[level]) / p), (pipe - bases_[level]) % p};
}

std::int64_t MultiOutputNode::partner(Party side, const PartyView& view, std::int64_t pipe) const {
    const Where w = locate(pipe);
    const auto& so = *levels_[w.level];
    const std::int64_t q = so.partner(side, view, w.local);
    if (q >= 0) return base(w.level, w.copy) + q;
    if (side == Party::Bob) return kOpen;
    if (q == kTap) {
        if (w.level == 0) return kTap;
        const std::size_t up = w.level - 1;
        const std::uint32_t bit = 1u << up;
        return base(up, w.copy & ~bit) + levels_[up]->port((w.copy & bit) != 0, view);
    }
    if (w.level + 1 == levels_.size()) return kOpen;
    for (int b = 0; b < 2; ++b) {
        if (w.local == so.port(b != 0, view)) {
            const std::uint32_t next = w.copy | (static_cast<std::uint32_t>(b) << w.level);
            return base(w.level + 1, next) + levels_[w.level + 1]->tap(view);
        }
    }
    return kOpen;
}

std::optional<std::uint32_t> MultiOutputNode::label(std::int64_t pipe) const {
    const Where w = locate(pipe);
    if (w.level + 1 != levels_.size()) return std::nullopt;
    auto b = levels_[w.level]->label(w.local);
    if (!b) return std::nullopt;
    return w.copy | (*b << w.level);
}

std::vector<Var> MultiOutputNode::inputs(Party p) const {
    std::vector<GardenHose> parts(levels_.begin(), levels_.end());
    return merged_inputs(parts, p);
}

std::int64_t MultiOutputNode::exit_pipe(std::uint32_t label, const PartyView& alice) const {
    const std::size_t last = levels_.size() - 1;
    if (label >> levels_.size()) throw std::out_of_range("multi output: label too wide");
    const std::uint32_t copy = label & ((1u << last) - 1);
    return base(last, copy) + levels_[last]->port(((label >> last) & 1) != 0, alice);
}

std::int64_t MultiOutputNode::max_part() const {
    std::int64_t m = 0;
    for (const auto& l : levels_) m = std::max(m, l->size());
    return m;
}

std::shared_ptr<const MultiOutputNode> gh_multi_output(std::vector<GardenHose> bits) {
    return std::make_shared<MultiOutputNode>(std::move(bits));
}

// ---------------------------------------------------------------------------

MirrorNode::MirrorNode(GardenHose f, GateKind fix) : f_(std::move(f)), s_(f_->size()), fix_(fix) {
    if (fix_ != GateKind::P && fix_ != GateKind::Pdag) throw std::invalid_argument("mirror: fix gate must be P or PDAG");
}

std::int64_t MirrorNode::partner(Party side, const PartyView& view, std::int64_t pipe) const {
    const bool reversed = pipe >= s_;
    const std::int64_t e = reversed ? pipe - s_ : pipe;
    const std::int64_t q = f_->partner(side, view, e);
    if (q >= 0) return (reversed ? s_ : 0) + q;
    if (q == kTap) return reversed ? kOpen : kTap;
    return reversed ? e : s_ + e;
}

std::optional<GateKind> MirrorNode::bob_gate(const PartyView& bob, std::int64_t pipe) const {
    if (pipe < s_ && f_->partner(Party::Bob, bob, pipe) == kOpen) return fix_;
    return std::nullopt;
}

std::shared_ptr<const MirrorNode> gh_mirror(GardenHose f, GateKind fix) {
    if (!f) throw std::invalid_argument("mirror: null protocol");
    return std::make_shared<MirrorNode>(std::move(f), fix);
}

}  // namespace inqc
