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

namespace inqc {

XTrackerNode::XTrackerNode(GardenHose p, std::shared_ptr<OutcomeTable> outcomes, TrackerTerminal terminal,
                           TrackerMode mode, std::int64_t mixed_boundary)
    : p_(std::move(p)),
      outcomes_(std::move(outcomes)),
      terminal_(std::move(terminal)),
      mode_(mode),
      boundary_(mixed_boundary),
      extra_(2 * p_->size()) {
    if (!outcomes_ || !terminal_.pipe) throw std::invalid_argument("tracker: missing outcome table or terminal");
}

bool XTrackerNode::tap_bit(const PartyView& alice) const {
    const auto o = outcomes_->tap();
    switch (mode_) {
        case TrackerMode::X: return alice(o.x);
        case TrackerMode::Z: return alice(o.z);
        case TrackerMode::Mixed: return alice(o.x) != alice(o.z);
    }
    return false;
}

bool XTrackerNode::hose_bit(Party side, const PartyView& view, std::int64_t p, std::int64_t q) const {
    const auto o = outcomes_->hose(side, p, q);
    switch (mode_) {
        case TrackerMode::X: return view(o.x);
        case TrackerMode::Z: return view(o.z);
        case TrackerMode::Mixed:
            if (p < boundary_ && q < boundary_) return view(o.x) != view(o.z);
            return view(o.z);
    }
    return false;
}

std::int64_t XTrackerNode::tap(const PartyView& alice) const {
    return 2 * p_->tap(alice) + (tap_bit(alice) ? 1 : 0);
}

std::int64_t XTrackerNode::partner(Party side, const PartyView& view, std::int64_t pipe) const {
    const bool at_alice = side == Party::Alice;
    if (pipe == extra_) {
        if (side != terminal_.side) return kOpen;
        return 2 * terminal_.pipe(view) + (at_alice ? 1 : 0);
    }
    const std::int64_t q = pipe / 2;
    const int r = static_cast<int>(pipe % 2);
    const std::int64_t u = p_->partner(side, view, q);
    if (u >= 0) return 2 * u + (r ^ (hose_bit(side, view, q, u) ? 1 : 0));
    if (u == kTap) return r == (tap_bit(view) ? 1 : 0) ? kTap : kOpen;
    if (side == terminal_.side && q == terminal_.pipe(view)) {
        // Parity 1 must leave at Bob's side, parity 0 at Alice's.
        const int stays = at_alice ? 0 : 1;
        return r == stays ? kOpen : extra_;
    }
    return kOpen;
}

std::shared_ptr<const XTrackerNode> gh_tracker(GardenHose p, std::shared_ptr<OutcomeTable> outcomes,
                                               TrackerTerminal terminal, TrackerMode mode,
                                               std::int64_t mixed_boundary) {
    if (!p) throw std::invalid_argument("tracker: null protocol");
    return std::make_shared<XTrackerNode>(std::move(p), std::move(outcomes), std::move(terminal), mode,
                                          mixed_boundary);
}

namespace {

TrackerTerminal mirror_terminal(const std::shared_ptr<const MirrorNode>& m) {
    return {Party::Alice, [m](const PartyView& alice) { return m->final_pipe(alice); }};
}

}  // namespace

std::shared_ptr<const XTrackerNode> build_x_tracker(std::shared_ptr<const MirrorNode> m,
                                                    std::shared_ptr<OutcomeTable> outcomes) {
    auto term = mirror_terminal(m);
    return gh_tracker(std::move(m), std::move(outcomes), std::move(term), TrackerMode::X);
}

ZTrackerNode::ZTrackerNode(std::shared_ptr<const SingleOutputNode> f, std::shared_ptr<const XTrackerNode> plain,
                           std::shared_ptr<const XTrackerNode> mixed)
    : f_(std::move(f)), plain_(std::move(plain)), mixed_(std::move(mixed)) {
    if (!f_->both_alice()) throw std::invalid_argument("z tracker: selector needs both outputs at Alice");
    plain_base_ = f_->size();
    mixed_base_ = plain_base_ + plain_->size();
    size_ = mixed_base_ + mixed_->size();
}

std::int64_t ZTrackerNode::partner(Party side, const PartyView& view, std::int64_t pipe) const {
    if (pipe < plain_base_) {
        const std::int64_t q = f_->partner(side, view, pipe);
        if (q != kOpen || side == Party::Bob) return q;
        if (pipe == f_->port(false, view)) return plain_base_ + plain_->tap(view);
        if (pipe == f_->port(true, view)) return mixed_base_ + mixed_->tap(view);
        return kOpen;
    }
    const bool is_plain = pipe < mixed_base_;
    const auto& sub = is_plain ? *plain_ : *mixed_;
    const std::int64_t base = is_plain ? plain_base_ : mixed_base_;
    const std::int64_t q = sub.partner(side, view, pipe - base);
    if (q >= 0) return base + q;
    if (q == kTap) return f_->port(!is_plain, view);
    return q;
}

std::shared_ptr<const ZTrackerNode> build_z_tracker(std::shared_ptr<const MirrorNode> m,
                                                    std::shared_ptr<OutcomeTable> outcomes) {
    auto selector = gh_single_output(m->forward(), true);
    const std::int64_t boundary = m->half();
    auto plain = gh_tracker(m, outcomes, mirror_terminal(m), TrackerMode::Z);
    auto mixed = gh_tracker(m, std::move(outcomes), mirror_terminal(m), TrackerMode::Mixed, boundary);
    return std::make_shared<ZTrackerNode>(std::move(selector), std::move(plain), std::move(mixed));
}

}  // namespace inqc
