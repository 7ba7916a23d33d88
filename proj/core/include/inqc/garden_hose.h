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
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "inqc/circuit.h"
#include "inqc/key_polynomial.h"
#include "inqc/ledger.h"
#include "inqc/statevec.h"
#include "inqc/variables.h"

namespace inqc {

class GardenHoseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// partner() results that are not pipe indices.
inline constexpr std::int64_t kOpen = -1;
inline constexpr std::int64_t kTap = -2;

struct Exit {
    Party side = Party::Alice;
    std::int64_t pipe = 0;
    std::optional<std::uint32_t> label;

    /// Output bit of a single-output function: water at Bob's side means 1.
    bool bit() const { return side == Party::Bob; }
    friend bool operator==(const Exit&, const Exit&) = default;
};

/// A garden-hose protocol. Strategies are evaluated on demand: the tap and
/// every hose are queried through the acting party's view, so a strategy can
/// only depend on that party's bits.
class GhNode {
   public:
    virtual ~GhNode() = default;

    virtual std::int64_t size() const = 0;
    /// Pipe whose Alice end takes the tap.
    virtual std::int64_t tap(const PartyView& alice) const = 0;
    /// Pipe joined by a hose to `pipe` on `side`; kOpen for an open end, kTap
    /// for the tap pipe's Alice end.
    virtual std::int64_t partner(Party side, const PartyView& view, std::int64_t pipe) const = 0;
    virtual std::optional<std::uint32_t> label(std::int64_t) const { return std::nullopt; }
    /// Gate Bob applies to his half of `pipe` before his Bell measurement.
    virtual std::optional<GateKind> bob_gate(const PartyView&, std::int64_t) const { return std::nullopt; }
    /// Declared input bits, sorted by index. Measurement outcomes read by
    /// trackers are not listed.
    virtual std::vector<Var> inputs(Party p) const = 0;
    virtual std::string kind() const = 0;
};

using GardenHose = std::shared_ptr<const GhNode>;

// ---------------------------------------------------------------------------
// Evaluation.

struct Walk {
    Exit exit;
    /// Pipes in the order the water passes them. Hose i joins path[i] and
    /// path[i + 1] on Bob's side for even i and on Alice's side for odd i.
    std::vector<std::int64_t> path;
};

Walk gh_walk(const GhNode& p, const ViewPair& views);
Exit gh_evaluate(const GhNode& p, const ViewPair& views);

/// Convenience for standalone protocols: writes x and y into p's declared
/// inputs (bit i to input i) and evaluates with unrestricted views.
Exit gh_evaluate(const GhNode& p, VarStore& store, std::uint64_t x, std::uint64_t y);
Walk gh_walk(const GhNode& p, VarStore& store, std::uint64_t x, std::uint64_t y);

/// Max over one party's inputs of the distinct exit pipes on that party's
/// side, ranging over all inputs of the other party.
std::int64_t spilling_pipes(const GhNode& p, VarStore& store, Party side);

struct GhInputs {
    std::vector<Var> alice;
    std::vector<Var> bob;
};
GhInputs allocate_inputs(VarStore& store, std::uint32_t na, std::uint32_t nb, std::string_view prefix = "");

// ---------------------------------------------------------------------------
// Builders.

struct TruthTable {
    std::uint32_t na = 0;
    std::uint32_t nb = 0;
    std::vector<std::uint8_t> bits;  // x major, y minor

    bool at(std::uint64_t x, std::uint64_t y) const { return bits.at((x << nb) | y) != 0; }
    static TruthTable from_function(std::uint32_t na, std::uint32_t nb,
                                    const std::function<bool(std::uint64_t, std::uint64_t)>& f);
};

inline constexpr std::uint32_t kTruthTableAliceCap = 12;

TruthTable parse_truth_table(std::string_view text);
std::string truth_table_text(const TruthTable& t);

/// One pipe per Alice input plus one spare. Alice's tap goes to P_x; Bob joins
/// the pipes P_x with f(x, y) = 0 in pairs (lexicographic, the spare completes
/// an odd count) and leaves the rest open.
GardenHose gh_from_truth_table(const TruthTable& f, std::vector<Var> alice_in, std::vector<Var> bob_in);

/// Constant protocols: one open pipe for 1, two joined pipes for 0.
GardenHose gh_constant(bool c);

/// vA xor vB for a polynomial vA in Alice's bits and vB in Bob's bits, on
/// three pipes.
GardenHose gh_local_xor(const KeyPolynomial& alice_part, const KeyPolynomial& bob_part);

/// Per-input tables, as read from JSON.
struct ExplicitStrategy {
    std::int64_t tap = 0;
    std::vector<std::int64_t> match;  // partner per pipe, kOpen if none
};
GardenHose gh_explicit(std::int64_t pipes, std::vector<Var> alice_in, std::vector<Var> bob_in,
                       std::vector<ExplicitStrategy> alice, std::vector<std::vector<std::int64_t>> bob,
                       std::map<std::int64_t, std::uint32_t> labels = {});

// ---------------------------------------------------------------------------
// Combinators.

class SingleOutputNode;
class MultiOutputNode;
class MirrorNode;

/// Same function with one spilling pipe per side; 3s + 1 pipes, or 3s with
/// both outcomes on Alice's side (pipes labeled 0 and 1).
std::shared_ptr<const SingleOutputNode> gh_single_output(GardenHose p, bool both_alice = false);

/// c xor f_1 xor ... xor f_k; 4 * sum(s_i) + 1 pipes.
GardenHose gh_xor(std::vector<GardenHose> ps, bool c);

inline constexpr std::uint32_t kMultiOutputCap = 8;

/// Exits on Alice's side at a pipe labeled with the bits (f_1, ..., f_k),
/// f_i in bit i - 1.
std::shared_ptr<const MultiOutputNode> gh_multi_output(std::vector<GardenHose> bits);

/// Forward copy of f, then a reversed copy; Bob applies `fix` wherever f's
/// water would leave on his side. The water always ends at the reversed
/// copy's tap pipe on Alice's side.
std::shared_ptr<const MirrorNode> gh_mirror(GardenHose f, GateKind fix = GateKind::Pdag);

// ---------------------------------------------------------------------------
// Quantum execution and trackers.

/// Bell-measurement outcomes of one quantum execution, allocated on first
/// use. A hose joining pipes p and q on one side is keyed by min(p, q).
class OutcomeTable {
   public:
    struct Outcome {
        Var x;
        Var z;
    };

    OutcomeTable(VarStore& store, std::string prefix) : store_(&store), prefix_(std::move(prefix)) {}

    /// Alice's measurement of the input qubit with the tap pipe.
    Outcome tap();
    Outcome hose(Party side, std::int64_t p, std::int64_t q);

    std::size_t count() const { return table_.size(); }
    VarStore& store() const { return *store_; }

   private:
    VarStore* store_;
    std::string prefix_;
    std::map<std::pair<int, std::int64_t>, Outcome> table_;
};

struct QuantumRun {
    Exit exit;
    Walk walk;
    /// X^x Z^z now sitting on the qubit, from the hops actually taken.
    bool frame_x = false;
    bool frame_z = false;
};

/// Teleports wire `wire` of `state` along the water path. Every hop is a
/// random Pauli channel whose bits are the matching outcome variables.
/// Charges p.size() pairs.
QuantumRun gh_quantum_execute(const GhNode& p, const ViewPair& views, OutcomeTable& outcomes, StateVector& state,
                              std::uint32_t wire, Ledger* ledger, const std::string& phase = "garden-hose");

enum class TrackerMode : std::uint8_t { X, Z, Mixed };

/// Where the tracked qubit comes to rest: a side and the pipe, chosen by
/// that side's party.
struct TrackerTerminal {
    Party side = Party::Alice;
    std::function<std::int64_t(const PartyView&)> pipe;
};

class XTrackerNode;
class ZTrackerNode;

/// Parity of the X (or Z) outcomes along the water path of `p`; 2s + 1 pipes.
/// Mixed mode counts x xor z for hoses inside pipes [0, mixed_boundary) and
/// for the tap, and z elsewhere.
std::shared_ptr<const XTrackerNode> gh_tracker(GardenHose p, std::shared_ptr<OutcomeTable> outcomes,
                                               TrackerTerminal terminal, TrackerMode mode,
                                               std::int64_t mixed_boundary = 0);

/// X correction after a mirror execution; 4 GH(f) + 1 pipes.
std::shared_ptr<const XTrackerNode> build_x_tracker(std::shared_ptr<const MirrorNode> m,
                                                    std::shared_ptr<OutcomeTable> outcomes);
/// Z correction after a mirror execution, including the phase fix; 11 GH(f) + 2 pipes.
std::shared_ptr<const ZTrackerNode> build_z_tracker(std::shared_ptr<const MirrorNode> m,
                                                    std::shared_ptr<OutcomeTable> outcomes);

// ---------------------------------------------------------------------------
// Serialization of protocols whose inputs can be enumerated.

std::string gh_to_json(const GhNode& p, VarStore& store);
/// Fresh input variables are allocated in `store`.
GardenHose gh_from_json(std::string_view text, VarStore& store);

}  // namespace inqc

#include "inqc/gh_nodes.h"
