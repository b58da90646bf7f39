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

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/permutation.hpp"

namespace qwalk {

/// A connected d-regular simple graph together with the permutations
/// P_1 ... P_d that move the walker for each coin value. Coin values are
/// 0-based in code (coin c selects `perm(c)`).
///
/// Invariants, checked by `validate`: n >= 3, d >= 2, no permutation has a
/// fixed point, distinct coins send every vertex to distinct neighbours,
/// and the sum of the permutation matrices is a symmetric 0/1 adjacency
/// matrix of a connected graph.
class WalkSpec {
  public:
    int n() const { return n_; }
    int d() const { return static_cast<int>(perms_.size()); }
    int dim() const { return n_ * d(); }

    const std::vector<Permutation> &perms() const { return perms_; }
    const Permutation &perm(int coin) const { return perms_[static_cast<size_t>(coin)]; }

    /// Row-major n*n 0/1 adjacency matrix.
    const std::vector<uint8_t> &adjacency() const { return adjacency_; }
    bool adjacent(Vertex a, Vertex b) const { return adjacency_[static_cast<size_t>(a * n_ + b)] != 0; }

    /// Neighbours of `v`, in coin order: neighbours(v)[c] = P_c(v).
    std::vector<Vertex> neighbours(Vertex v) const;

    friend bool operator==(const WalkSpec &, const WalkSpec &) = default;

  private:
    friend WalkSpec validate(int n, const std::vector<Permutation> &perms);

    int n_ = 0;
    std::vector<Permutation> perms_;
    std::vector<uint8_t> adjacency_;
};

WalkSpec validate(int n, const std::vector<std::vector<Vertex>> &perms);
WalkSpec validate(int n, const std::vector<Permutation> &perms);

/// Cartesian product walk. Vertex (j, k) of a x b is flattened to
/// j * b.n() + k; the first a.d() coins move j, the remaining b.d() move k.
WalkSpec product_walk(const WalkSpec &a, const WalkSpec &b);

inline Vertex product_vertex(const WalkSpec &b, Vertex first, Vertex second) { return first * b.n() + second; }

// Built-in gallery.
WalkSpec cycle_shift(int n);
/// Requires even n; throws ParityError otherwise.
WalkSpec cycle_exchange(int n);
WalkSpec complete_graph(int n);
WalkSpec figure1();
WalkSpec torus(int n1, int n2);

/// Looks up a gallery entry by name, e.g. builtin("cycle_shift", {5}) or
/// builtin("torus", {3, 5}).
WalkSpec builtin(std::string_view name, const std::vector<int> &params);

/// Parses "cycle_shift:5", "torus:3,5", "figure1".
WalkSpec builtin_from_string(std::string_view text);

/// Random valid walk: a uniformly paired d-regular simple connected graph
/// on n vertices, split into d permutations by repeated random perfect
/// matchings of its bipartite double cover. Requires 2 <= d < n, n*d even.
WalkSpec random_walk_spec(int n, int d, std::mt19937_64 &rng);

enum class Degree2Kind { FullCycle, Exchange, NotDegree2 };

/// Shape of a degree-2 walk: either both permutations are single n-cycles
/// that invert each other, or both are products of n/2 disjoint
/// transpositions.
Degree2Kind classify_degree2(const WalkSpec &spec);
std::string_view to_string(Degree2Kind kind);

}  // namespace qwalk
