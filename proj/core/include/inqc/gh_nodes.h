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


// Node types behind the garden-hose builders. Included from garden_hose.h.

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace inqc {

std::uint64_t read_bits(const PartyView& view, const std::vector<Var>& vars);

class TruthTableNode final : public GhNode {
   public:
    TruthTableNode(TruthTable f, std::vector<Var> alice_in, std::vector<Var> bob_in);

    std::int64_t size() const override { return (std::int64_t{1} << f_.na) + 1; }
    std::int64_t tap(const PartyView& alice) const override;
    std::int64_t partner(Party side, const PartyView& view, std::int64_t pipe) const override;
    std::vector<Var> inputs(Party p) const override { return p == Party::Alice ? alice_in_ : bob_in_; }
    std::string kind() const override { return "truth_table"; }

    const TruthTable& table() const { return f_; }

   private:
    TruthTable f_;
    std::vector<Var> alice_in_;
    std::vector<Var> bob_in_;
};

class ConstantNode final : public GhNode {
   public:
    explicit ConstantNode(bool c) : c_(c) {}

    std::int64_t size() const override { return c_ ? 1 : 2; }
    std::int64_t tap(const PartyView&) const override { return 0; }
    std::int64_t partner(Party side, const PartyView& view, std::int64_t pipe) const override;
    std::vector<Var> inputs(Party) const override { return {}; }
    std::string kind() const override { return "constant"; }

   private:
    bool c_;
};

class LocalXorNode final : public GhNode {
   public:
    LocalXorNode(KeyPolynomial alice_part, KeyPolynomial bob_part);

    std::int64_t size() const override { return 3; }
    std::int64_t tap(const PartyView& alice) const override;
    std::int64_t partner(Party side, const PartyView& view, std::int64_t pipe) const override;
    std::vector<Var> inputs(Party p) const override;
    std::string kind() const override { return "local_xor"; }

    const KeyPolynomial& alice_part() const { return alice_; }
    const KeyPolynomial& bob_part() const { return bob_; }

   private:
    KeyPolynomial alice_;
    KeyPolynomial bob_;
};

class ExplicitNode final : public GhNode {
   public:
    ExplicitNode(std::int64_t pipes, std::vector<Var> alice_in, std::vector<Var> bob_in,
                 std::vector<ExplicitStrategy> alice, std::vector<std::vector<std::int64_t>> bob,
                 std::map<std::int64_t, std::uint32_t> labels);

    std::int64_t size() const override { return pipes_; }
    std::int64_t tap(const PartyView& alice) const override;
    std::int64_t partner(Party side, const PartyView& view, std::int64_t pipe) const override;
    std::optional<std::uint32_t> label(std::int64_t pipe) const override;
    std::vector<Var> inputs(Party p) const override { return p == Party::Alice ? alice_in_ : bob_in_; }
    std::string kind() const override { return "explicit"; }

   private:
    std::int64_t pipes_;
    std::vector<Var> alice_in_;
    std::vector<Var> bob_in_;
    std::vector<ExplicitStrategy> alice_;
    std::vector<std::vector<std::int64_t>> bob_;
    std::map<std::int64_t, std::uint32_t> labels_;
};

/// Pipes [0, s) run a copy of P. Where P's water leaves at Alice's side the
/// hose continues into the OUT0 copy [s, 2s), at Bob's side into OUT1
/// [2s, 3s); both copies are walked backwards to their tap pipe.
class SingleOutputNode final : public GhNode {
   public:
    SingleOutputNode(GardenHose p, bool both_alice);

    std::int64_t size() const override { return 3 * s_ + (both_alice_ ? 0 : 1); }
    std::int64_t tap(const PartyView& alice) const override { return p_->tap(alice); }
    std::int64_t partner(Party side, const PartyView& view, std::int64_t pipe) const override;
    std::optional<std::uint32_t> label(std::int64_t pipe) const override;
    std::vector<Var> inputs(Party p) const override { return p_->inputs(p); }
    std::string kind() const override { return both_alice_ ? "single_output_alice" : "single_output"; }

    /// Pipe where the water leaves for output b. With both_alice unset,
    /// output 1 leaves at Bob's side.
    std::int64_t port(bool b, const PartyView& alice) const;
    bool both_alice() const { return both_alice_; }
    const GardenHose& inner() const { return p_; }

   private:
    GardenHose p_;
    std::int64_t s_;
    bool both_alice_;
};

/// Chained XOR gadgets: per function the copies 0IN, 1IN, 0OUT, 1OUT.
class XorNode final : public GhNode {
   public:
    XorNode(std::vector<GardenHose> ps, bool c);

    std::int64_t size() const override { return size_; }
    std::int64_t tap(const PartyView& alice) const override;
    std::int64_t partner(Party side, const PartyView& view, std::int64_t pipe) const override;
    std::vector<Var> inputs(Party p) const override;
    std::string kind() const override { return "xor"; }

    const std::vector<GardenHose>& parts() const { return ps_; }
    bool constant() const { return c_; }

   private:
    enum Copy { In0 = 0, In1 = 1, Out0 = 2, Out1 = 3 };
    std::int64_t base(std::size_t i, int copy) const { return offsets_[i] + copy * ps_[i]->size(); }
    std::int64_t tap_pipe(std::size_t i, int copy, const PartyView& alice) const {
        return base(i, copy) + ps_[i]->tap(alice);
    }

    std::vector<GardenHose> ps_;
    std::vector<std::int64_t> offsets_;
    bool c_;
    std::int64_t size_;
    std::int64_t extra_;
};

class MultiOutputNode final : public GhNode {
   public:
    explicit MultiOutputNode(std::vector<GardenHose> bits);

    std::int64_t size() const override { return size_; }
    std::int64_t tap(const PartyView& alice) const override { return levels_[0]->tap(alice); }
    std::int64_t partner(Party side, const PartyView& view, std::int64_t pipe) const override;
    std::optional<std::uint32_t> label(std::int64_t pipe) const override;
    std::vector<Var> inputs(Party p) const override;
    std::string kind() const override { return "multi_output"; }

    std::uint32_t width() const { return static_cast<std::uint32_t>(levels_.size()); }
    /// Pipe where the water leaves when the output is `label`.
    std::int64_t exit_pipe(std::uint32_t label, const PartyView& alice) const;
    /// Largest single-output part, the p of the size bound.
    std::int64_t max_part() const;

   private:
    struct Where {
        std::size_t level;
        std::uint32_t copy;
        std::int64_t local;
    };
    Where locate(std::int64_t pipe) const;
    std::int64_t base(std::size_t level, std::uint32_t copy) const {
        return bases_[level] + static_cast<std::int64_t>(copy) * levels_[level]->size();
    }

    std::vector<std::shared_ptr<const SingleOutputNode>> levels_;
    std::vector<std::int64_t> bases_;
    std::int64_t size_;
};

/// F on pipes [0, s), its mirror on [s, 2s).
class MirrorNode final : public GhNode {
   public:
    MirrorNode(GardenHose f, GateKind fix);

    std::int64_t size() const override { return 2 * s_; }
    std::int64_t tap(const PartyView& alice) const override { return f_->tap(alice); }
    std::int64_t partner(Party side, const PartyView& view, std::int64_t pipe) const override;
    std::optional<GateKind> bob_gate(const PartyView& bob, std::int64_t pipe) const override;
    std::vector<Var> inputs(Party p) const override { return f_->inputs(p); }
    std::string kind() const override { return "mirror"; }

    std::int64_t half() const { return s_; }
    const GardenHose& forward() const { return f_; }
    GateKind fix() const { return fix_; }
    std::int64_t final_pipe(const PartyView& alice) const { return s_ + f_->tap(alice); }

   private:
    GardenHose f_;
    std::int64_t s_;
    GateKind fix_;
};

/// Pipes I_q = 2q and X_q = 2q + 1 for every pipe q of the tracked protocol,
/// plus one spare at 2s. A hose with outcome bit 0 joins I to I and X to X,
/// with bit 1 it joins them crosswise.
class XTrackerNode final : public GhNode {
   public:
    XTrackerNode(GardenHose p, std::shared_ptr<OutcomeTable> outcomes, TrackerTerminal terminal, TrackerMode mode,
                 std::int64_t mixed_boundary);

    std::int64_t size() const override { return 2 * p_->size() + 1; }
    std::int64_t tap(const PartyView& alice) const override;
    std::int64_t partner(Party side, const PartyView& view, std::int64_t pipe) const override;
    std::vector<Var> inputs(Party p) const override { return p_->inputs(p); }
    std::string kind() const override { return "tracker"; }

    TrackerMode mode() const { return mode_; }

   private:
    bool tap_bit(const PartyView& alice) const;
    bool hose_bit(Party side, const PartyView& view, std::int64_t p, std::int64_t q) const;

    GardenHose p_;
    std::shared_ptr<OutcomeTable> outcomes_;
    TrackerTerminal terminal_;
    TrackerMode mode_;
    std::int64_t boundary_;
    std::int64_t extra_;
};

/// Single-output copy of f with both outputs at Alice [0, 3s), then a Z
/// tracker [3s, 7s + 1) entered when f = 0 and a mixed tracker
/// [7s + 1, 11s + 2) entered when f = 1.
class ZTrackerNode final : public GhNode {
   public:
    ZTrackerNode(std::shared_ptr<const SingleOutputNode> f, std::shared_ptr<const XTrackerNode> plain,
                 std::shared_ptr<const XTrackerNode> mixed);

    std::int64_t size() const override { return size_; }
    std::int64_t tap(const PartyView& alice) const override { return f_->tap(alice); }
    std::int64_t partner(Party side, const PartyView& view, std::int64_t pipe) const override;
    std::vector<Var> inputs(Party p) const override { return f_->inputs(p); }
    std::string kind() const override { return "z_tracker"; }

   private:
    std::shared_ptr<const SingleOutputNode> f_;
    std::shared_ptr<const XTrackerNode> plain_;
    std::shared_ptr<const XTrackerNode> mixed_;
    std::int64_t plain_base_;
    std::int64_t mixed_base_;
    std::int64_t size_;
};

}  // namespace inqc
