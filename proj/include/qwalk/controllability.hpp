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
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "qwalk/walk_spec.hpp"

namespace qwalk {

/// Pairs (P_l^k j, P_m^k j) over all vertices j and k = 0 ... r-1. Coin
/// indices are 0-based.
struct JointOrbit {
    int l = 0;
    int m = 0;
    std::set<std::pair<Vertex, Vertex>> pairs;

    bool contains(Vertex r, Vertex s) const { return pairs.count({r, s}) != 0; }
};

JointOrbit joint_orbit(const WalkSpec &spec, int l, int m);

/// Undirected graph on the walk's vertices: r and s are adjacent when they
/// share a cycle of P_l^{-k} P_m^k for some coins l < m and 0 <= k < r.
struct ReducedGraph {
    int n = 0;
    std::vector<uint8_t> adjacency;  // row-major n x n

    bool adjacent(Vertex a, Vertex b) const { return adjacency[static_cast<size_t>(a * n + b)] != 0; }
    /// Components sorted internally and by smallest vertex.
    std::vector<std::vector<Vertex>> components() const;
};

ReducedGraph reduced_connectivity_graph(const WalkSpec &spec);

/// N^0(j) ... N^kmax(j), each sorted. N^{k+1} is the image of N^k under all
/// permutations; the sequence need not be monotone.
std::vector<std::vector<Vertex>> reachable_sets(const WalkSpec &spec, Vertex j, int kmax);

/// Search cap for k_j. A non-bipartite connected graph reaches every vertex
/// from j in exactly k steps for some k <= 3N.
inline int reach_search_cap(const WalkSpec &spec) { return 3 * spec.n(); }

/// Least k with N^k(j) = V, or nullopt when none exists. Throws
/// CriterionConflict if the cap is hit although the parity test says the
/// walk is controllable.
std::optional<int> k_of(const WalkSpec &spec, Vertex j);

struct Kappa {
    int k = 0;
    Vertex vertex = 0;  // smallest vertex attaining the minimum
};

std::optional<Kappa> kappa(const WalkSpec &spec);

struct ParityWitness {
    Vertex vertex = 0;
    int even_length = 0;
    int odd_length = 0;
};

/// Parity-labelled BFS from j on the graph. m = 1 when some vertex can be
/// reached by walks of both parities; otherwise m = 2 and the vertices split
/// into the even- and odd-distance classes.
struct ParityResult {
    int m = 1;
    std::optional<ParityWitness> witness;
    std::vector<Vertex> even;
    std::vector<Vertex> odd;
};

ParityResult parity_check(const WalkSpec &spec, Vertex j);

struct VerdictReport {
    bool orbit_controllable = false;   // reduced connectivity graph connected
    bool reach_controllable = false;   // some k_j finite
    bool parity_controllable = false;  // parity test m = 1
    int orbit_components = 0;
    bool reach_conflict = false;       // k_of raised CriterionConflict
    bool partitions_match = true;      // m = 2: orbit components == parity classes
    bool agree = false;
};

VerdictReport verdicts_agree(const WalkSpec &spec);

struct ControllabilityReport {
    std::vector<std::vector<Vertex>> components;
    int m = 0;
    bool controllable = false;
    /// Dimension of the dynamical Lie algebra: sum over components of
    /// (d * v_j)^2, which is (dN)^2 exactly when m = 1.
    int64_t predicted_lie_dim = 0;
    int64_t shift_order = 0;
    std::optional<int> kappa;
    std::optional<Vertex> kappa_vertex;
    std::optional<int64_t> step_bound;  // 2 kappa + r
    bool verdicts_agree = false;
};

ControllabilityReport analyze(const WalkSpec &spec);

int64_t predicted_lie_dim(int d, const std::vector<std::vector<Vertex>> &components);

}  // namespace qwalk
