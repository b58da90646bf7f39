// Copyright 2026 The qwalk Authors
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

#include <optional>
#include <utility>
#include <vector>

#include "qwalk/walk_core.hpp"

namespace qwalk {

/// Coefficients below this magnitude are dropped before a construction.
constexpr double kStripTol = 1e-14;

/// A unitary Q with Q * src = dst, built from two Householder reflections
/// through e_0 (src -> e_0 -> dst). Returns a multiple of the identity when
/// dst is src up to phase. Throws NotUnit if either vector is not unit.
CoinMatrix unitary_completion(const CoinVector &src, const CoinVector &dst);

/// Target of a spread: sum_h coeffs[h] |c_h> (x) |nodes[h]> with the coin
/// states left to the construction.
struct TargetSpread {
    std::vector<Vertex> nodes;
    std::vector<Complex> coeffs;
};

struct SpreadResult {
    ControlSequence seq;
    /// Unit coin state c_h reached on each surviving target node.
    std::vector<std::pair<Vertex, CoinVector>> coins;
};

/// Steers c0 (x) |j> to sum_h alpha_h |c_h> (x) |v_h> in exactly k steps.
/// Each target node picks its predecessor in N^{k-1}(j) by smallest vertex
/// (then smallest coin); nodes sharing a predecessor are merged and the
/// construction recurses on the merged weights. Throws Unreachable if a
/// target node is not in N^k(j).
SpreadResult spread_from_node(const WalkSpec &spec, Vertex j, const CoinVector &c0, const TargetSpread &target, int k);

/// Coin operations C1, C2 with C2 S C1 = S^{-1}, when a table entry applies:
/// a degree-2 walk whose permutations invert each other, or more generally
/// any walk whose permutations are closed under inversion.
std::optional<std::pair<CoinOp, CoinOp>> shortcut_pair(const WalkSpec &spec);

/// Steers c0 (x) |j> to `target`, whose vertex support must lie in N^k(j):
/// k spread steps, one coin step fixing every node's coin state, then r - 1
/// idle steps (or, with `shortcut`, the two-step S^{-1} trick for k + 2 in
/// total). Throws Unreachable or ShortcutUnavailable.
ControlSequence reach_full_state(const WalkSpec &spec, Vertex j, const CoinVector &c0, const WalkState &target, int k,
                                 bool shortcut = false);

struct ConcentrateResult {
    ControlSequence seq;
    /// Final coin vector at j.
    CoinVector coin;
};

/// Moves all probability onto j in at most k steps; the state's support must
/// lie in N^k(j). Every support node turns its coin toward a neighbour in the
/// previous reachability layer (smallest such neighbour, then smallest coin).
ConcentrateResult concentrate_to_node(const WalkSpec &spec, Vertex j, const WalkState &state, int k);

struct TransferOptions {
    bool shortcut = false;
};

struct TransferResult {
    ControlSequence seq;
    int64_t bound = 0;  // 2 kappa + r, or 2 kappa + 2 with the shortcut
    double fidelity = 0.0;
    Vertex hub = 0;
    int kappa = 0;
};

/// Arbitrary state transfer through the hub vertex attaining kappa: gather
/// to the hub, then spread to the target. Throws NotControllable (naming the
/// two classes) for walks with m = 2.
TransferResult arbitrary_transfer(const WalkSpec &spec, const WalkState &from, const WalkState &to,
                                  const TransferOptions &options = {});

}  // namespace qwalk
