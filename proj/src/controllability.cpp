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

#include "qwalk/controllability.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "qwalk/error.hpp"
#include "qwalk/walk_core.hpp"

namespace qwalk {

namespace {

void check_coin(const WalkSpec &spec, int coin) {
    if (coin < 0 || coin >= spec.d()) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "coin index " + std::to_string(coin) + " outside [0, " + std::to_string(spec.d()) + ")");
    }
}

void check_vertex(const WalkSpec &spec, Vertex j) {
    if (j < 0 || j >= spec.n()) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "vertex " + std::to_string(j) + " outside [0, " + std::to_string(spec.n()) + ")");
    }
}

std::vector<bool> next_reach(const WalkSpec &spec, const std::vector<bool> &current) {
    std::vector<bool> next(current.size(), false);
    for (Vertex v = 0; v < spec.n(); ++v) {
        if (!current[static_cast<size_t>(v)]) continue;
        for (const auto &p : spec.perms()) next[static_cast<size_t>(p(v))] = true;
    }
    return next;
}

std::vector<Vertex> members(const std::vector<bool> &mask) {
    std::vector<Vertex> out;
    for (size_t v = 0; v < mask.size(); ++v) {
        if (mask[v]) out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

}  // namespace

JointOrbit joint_orbit(const WalkSpec &spec, int l, int m) {
    check_coin(spec, l);
    check_coin(spec, m);
    JointOrbit orbit{l, m, {}};
    const int64_t r = shift_order(spec);
    Permutation pl = Permutation::identity(spec.n());
    Permutation pm = pl;
    for (int64_t k = 0; k < r; ++k) {
        for (Vertex j = 0; j < spec.n(); ++j) orbit.pairs.emplace(pl(j), pm(j));
        pl = spec.perm(l) * pl;
        pm = spec.perm(m) * pm;
    }
    return orbit;
}

std::vector<std::vector<Vertex>> ReducedGraph::components() const {
    std::vector<int> label(static_cast<size_t>(n), -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex start = 0; start < n; ++start) {
        if (label[static_cast<size_t>(start)] >= 0) continue;
        const int id = static_cast<int>(out.size());
        std::vector<Vertex> comp;
        std::vector<Vertex> stack{start};
        label[static_cast<size_t>(start)] = id;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w = 0; w < n; ++w) {
                if (adjacent(v, w) && label[static_cast<size_t>(w)] < 0) {
                    label[static_cast<size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

ReducedGraph reduced_connectivity_graph(const WalkSpec &spec) {
    const int n = spec.n();
    ReducedGraph graph{n, std::vector<uint8_t>(static_cast<size_t>(n * n), 0)};
    const int64_t r = shift_order(spec);
    for (int l = 0; l < spec.d(); ++l) {
        const Permutation step_back = spec.perm(l).inverse();
        for (int m = l + 1; m < spec.d(); ++m) {
            Permutation back = Permutation::identity(n);  // P_l^{-k}
            Permutation fwd = back;                       // P_m^k
            for (int64_t k = 0; k < r; ++k) {
                for (const auto &cycle : (back * fwd).cycles()) {
                    for (size_t a = 0; a < cycle.size(); ++a) {
                        for (size_t b = a + 1; b < cycle.size(); ++b) {
                            graph.adjacency[static_cast<size_t>(cycle[a] * n + cycle[b])] = 1;
                            graph.adjacency[static_cast<size_t>(cycle[b] * n + cycle[a])] = 1;
                        }
                    }
                }
                back = back * step_back;
                fwd = spec.perm(m) * fwd;
            }
        }
    }
    return graph;
}

std::vector<std::vector<Vertex>> reachable_sets(const WalkSpec &spec, Vertex j, int kmax) {
    check_vertex(spec, j);
    if (kmax < 0) throw Error(ErrorKind::IndexOutOfRange, "kmax must be non-negative");
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> current(static_cast<size_t>(spec.n()), false);
    current[static_cast<size_t>(j)] = true;
    out.push_back(members(current));
    for (int k = 1; k <= kmax; ++k) {
        current = next_reach(spec, current);
        out.push_back(members(current));
    }
    return out;
}

std::optional<int> k_of(const WalkSpec &spec, Vertex j) {
    check_vertex(spec, j);
    std::vector<bool> current(static_cast<size_t>(spec.n()), false);
    current[static_cast<size_t>(j)] = true;
    const int cap = reach_search_cap(spec);
    for (int k = 0; k <= cap; ++k) {
        if (std::all_of(current.begin(), current.end(), [](bool b) { return b; })) return k;
        current = next_reach(spec, current);
    }
    if (parity_check(spec, j).m == 1) {
        throw Error(ErrorKind::CriterionConflict, "no k <= " + std::to_string(cap) + " reaches every vertex from " +
                                                      std::to_string(j) + " although the parity test finds m = 1");
    }
    return std::nullopt;
}

std::optional<Kappa> kappa(const WalkSpec &spec) {
    std::optional<Kappa> best;
    for (Vertex j = 0; j < spec.n(); ++j) {
        const auto kj = k_of(spec, j);
        if (!kj) return std::nullopt;  // finite for one vertex iff for all
        if (!best || *kj < best->k) best = Kappa{*kj, j};
    }
    return best;
}

ParityResult parity_check(const WalkSpec &spec, Vertex j) {
    check_vertex(spec, j);
    const int n = spec.n();
    constexpr int kUnseen = -1;
    // dist[2 v + p]: shortest walk length from j to v with parity p.
    std::vector<int> dist(static_cast<size_t>(2 * n), kUnseen);
    std::queue<int> frontier;
    dist[static_cast<size_t>(2 * j)] = 0;
    frontier.push(2 * j);
    while (!frontier.empty()) {
        const int node = frontier.front();
        frontier.pop();
        const Vertex v = node / 2;
        const int parity = node % 2;
        for (Vertex w : spec.neighbours(v)) {
            const int next = 2 * w + (1 - parity);
            if (dist[static_cast<size_t>(next)] == kUnseen) {
                dist[static_cast<size_t>(next)] = dist[static_cast<size_t>(node)] + 1;
                frontier.push(next);
            }
        }
    }

    ParityResult result;
    for (Vertex v = 0; v < n; ++v) {
        const int even = dist[static_cast<size_t>(2 * v)];
        const int odd = dist[static_cast<size_t>(2 * v + 1)];
        if (even != kUnseen) result.even.push_back(v);
        if (odd != kUnseen) result.odd.push_back(v);
        if (even != kUnseen && odd != kUnseen && !result.witness) {
            // report a non-empty even walk: out to a neighbour and back
            result.witness = ParityWitness{v, even == 0 ? 2 : even, odd};
        }
    }
    result.m = result.witness ? 1 : 2;
    return result;
}

VerdictReport verdicts_agree(const WalkSpec &spec) {
    VerdictReport report;
    const auto components = reduced_connectivity_graph(spec).components();
    report.orbit_components = static_cast<int>(components.size());
    report.orbit_controllable = components.size() == 1;

    for (Vertex j = 0; j < spec.n() && !report.reach_controllable; ++j) {
        try {
            if (k_of(spec, j)) report.reach_controllable = true;
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::CriterionConflict) throw;
            report.reach_conflict = true;
        }
    }

    const auto parity = parity_check(spec, 0);
    report.parity_controllable = parity.m == 1;
    if (!report.orbit_controllable) {
        std::vector<std::vector<Vertex>> classes{parity.even, parity.odd};
        std::sort(classes.begin(), classes.end());
        report.partitions_match = parity.m == 2 && classes == components;
    }

    report.agree = !report.reach_conflict && report.orbit_components <= 2 &&
                   report.orbit_controllable == report.reach_controllable &&
                   report.reach_controllable == report.parity_controllable && report.partitions_match;
    return report;
}

int64_t predicted_lie_dim(int d, const std::vector<std::vector<Vertex>> &components) {
    int64_t dim = 0;
    for (const auto &c : components) {
        const int64_t block = static_cast<int64_t>(d) * static_cast<int64_t>(c.size());
        dim += block * block;
    }
    return dim;
}

ControllabilityReport analyze(const WalkSpec &spec) {
    ControllabilityReport report;
    report.components = reduced_connectivity_graph(spec).components();
    report.m = static_cast<int>(report.components.size());
    report.controllable = report.m == 1;
    report.predicted_lie_dim = predicted_lie_dim(spec.d(), report.components);
    report.shift_order = shift_order(spec);
    if (report.controllable) {
        if (const auto k = kappa(spec)) {
            report.kappa = k->k;
            report.kappa_vertex = k->vertex;
            report.step_bound = 2 * static_cast<int64_t>(k->k) + report.shift_order;
        }
    }
    report.verdicts_agree = verdicts_agree(spec).agree;
    return report;
}

}  // namespace qwalk
