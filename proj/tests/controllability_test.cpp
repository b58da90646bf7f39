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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "qwalk/controllability.hpp"
#include "test_util.hpp"

using namespace qwalk;

namespace {

// Reachable sets by repeated boolean matrix-vector products on the adjacency.
std::vector<std::vector<Vertex>> oracle_reach(const WalkSpec &s, Vertex j, int kmax) {
    const int n = s.n();
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> cur(static_cast<size_t>(n), false);
    cur[static_cast<size_t>(j)] = true;
    for (int k = 0; k <= kmax; ++k) {
        std::vector<Vertex> set;
        for (Vertex v = 0; v < n; ++v)
            if (cur[static_cast<size_t>(v)]) set.push_back(v);
        out.push_back(set);
        std::vector<bool> next(static_cast<size_t>(n), false);
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = 0; b < n; ++b)
                if (cur[static_cast<size_t>(a)] && s.adjacent(a, b)) next[static_cast<size_t>(b)] = true;
        cur = next;
    }
    return out;
}

std::vector<Vertex> all_vertices(int n) {
    std::vector<Vertex> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return v;
}

bool in(const std::vector<Vertex> &s, Vertex v) { return std::find(s.begin(), s.end(), v) != s.end(); }

std::vector<WalkSpec> random_specs(int count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<WalkSpec> out;
    while (static_cast<int>(out.size()) < count) {
        int n = std::uniform_int_distribution<int>(3, 8)(rng);
        int d = std::uniform_int_distribution<int>(2, 3)(rng);
        if (d >= n || (d * n) % 2 != 0) continue;
        out.push_back(random_walk_spec(n, d, rng));
    }
    return out;
}

}  // namespace

TEST_CASE("joint orbit of a coin with itself is the diagonal") {
    WalkSpec s = figure1();
    for (int l = 0; l < 3; ++l) {
        JointOrbit o = joint_orbit(s, l, l);
        CHECK(o.pairs.size() == 6);
        for (auto [a, b] : o.pairs) CHECK(a == b);
    }
}

TEST_CASE("joint orbit of the two cycle directions") {
    JointOrbit o = joint_orbit(cycle_shift(5), 0, 1);
    std::set<std::pair<Vertex, Vertex>> expect;
    for (int j = 0; j < 5; ++j)
        for (int k = 0; k < 5; ++k) expect.insert({(j + k) % 5, ((j - k) % 5 + 5) % 5});
    CHECK(o.pairs == expect);
    CHECK(o.contains(2, 3));
    CHECK(joint_orbit(figure1(), 0, 2).contains(1, 3));
    CHECK_THROWS_KIND(joint_orbit(figure1(), 0, 3), ErrorKind::IndexOutOfRange);
}

TEST_CASE("reduced connectivity graph components") {
    CHECK(reduced_connectivity_graph(cycle_shift(5)).components().size() == 1);
    auto c4 = reduced_connectivity_graph(cycle_shift(4)).components();
    REQUIRE(c4.size() == 2);
    CHECK(c4[0] == std::vector<Vertex>{0, 2});
    CHECK(c4[1] == std::vector<Vertex>{1, 3});
    for (int n = 3; n <= 8; ++n) CHECK(reduced_connectivity_graph(complete_graph(n)).components().size() == 1);
}

TEST_CASE("analyze the odd cycle") {
    ControllabilityReport r = analyze(cycle_shift(5));
    CHECK(r.m == 1);
    CHECK(r.controllable);
    CHECK(r.predicted_lie_dim == 100);
    CHECK(r.shift_order == 5);
    CHECK(r.kappa == 4);
    CHECK(r.step_bound == 13);
    CHECK(r.verdicts_agree);
}

TEST_CASE("analyze the even cycle, both constructions") {
    ControllabilityReport a = analyze(cycle_shift(4));
    ControllabilityReport b = analyze(cycle_exchange(4));
    for (const auto &r : {a, b}) {
        CHECK(r.m == 2);
        CHECK_FALSE(r.controllable);
        CHECK(r.components == std::vector<std::vector<Vertex>>{{0, 2}, {1, 3}});
        CHECK_FALSE(r.kappa.has_value());
        CHECK_FALSE(r.step_bound.has_value());
        CHECK(r.verdicts_agree);
    }
    CHECK(a.predicted_lie_dim == b.predicted_lie_dim);
    CHECK(a.components == b.components);
}

TEST_CASE("predicted dimension from component sizes") {
    CHECK(predicted_lie_dim(2, {{0, 1, 2, 3, 4}}) == 100);
    CHECK(predicted_lie_dim(3, {{0, 1, 2, 3, 4, 5}}) == 324);
    // two blocks of u(4): the closure of the support pattern has dimension 32
    CHECK(predicted_lie_dim(2, {{0, 2}, {1, 3}}) == 32);
}

TEST_CASE("reachable sets of the six-vertex walk") {
    auto sets = reachable_sets(figure1(), 0, 3);
    REQUIRE(sets.size() == 4);
    CHECK(sets[0] == std::vector<Vertex>{0});
    CHECK(sets[1] == std::vector<Vertex>{1, 3, 5});
    CHECK(sets[2] == std::vector<Vertex>{0, 1, 2, 4, 5});
    CHECK(sets[3] == all_vertices(6));
}

TEST_CASE("even cycle reach alternates parity") {
    auto sets = reachable_sets(cycle_shift(4), 0, 12);
    for (size_t k = 1; k < sets.size(); ++k) {
        CHECK(sets[k].size() == 2);
        for (Vertex v : sets[k]) CHECK(v % 2 == static_cast<int>(k % 2));
    }
}

TEST_CASE("reachable sets match the adjacency oracle") {
    for (const WalkSpec &s : random_specs(40, 21)) {
        for (Vertex j = 0; j < s.n(); ++j) CHECK(reachable_sets(s, j, 2 * s.n()) == oracle_reach(s, j, 2 * s.n()));
    }
}

TEST_CASE("k_j and kappa") {
    CHECK(k_of(cycle_shift(5), 0) == 4);
    CHECK(k_of(figure1(), 0) == 3);
    CHECK_FALSE(k_of(cycle_shift(4), 0).has_value());
    auto kf = kappa(figure1());
    REQUIRE(kf.has_value());
    CHECK(kf->k == 3);
    CHECK_FALSE(kappa(cycle_shift(6)).has_value());
}

TEST_CASE("parity check") {
    ParityResult odd = parity_check(cycle_shift(5), 0);
    CHECK(odd.m == 1);
    REQUIRE(odd.witness.has_value());
    CHECK(odd.witness->vertex == 0);
    CHECK(odd.witness->even_length == 2);
    CHECK(odd.witness->odd_length == 5);
    ParityResult even = parity_check(cycle_shift(4), 0);
    CHECK(even.m == 2);
    CHECK(even.even == std::vector<Vertex>{0, 2});
    CHECK(even.odd == std::vector<Vertex>{1, 3});
    CHECK(parity_check(figure1(), 0).m == 1);
}

TEST_CASE("verdicts agree on builtins") {
    std::vector<WalkSpec> specs = {cycle_shift(3), cycle_shift(4), cycle_shift(5), cycle_shift(6), cycle_exchange(6),
                                   figure1(), complete_graph(4), torus(3, 3), torus(4, 4), torus(3, 4)};
    for (const auto &s : specs) {
        VerdictReport v = verdicts_agree(s);
        CHECK(v.agree);
        CHECK(v.partitions_match);
        CHECK_FALSE(v.reach_conflict);
    }
    VerdictReport c6 = verdicts_agree(cycle_shift(6));
    CHECK(c6.orbit_components == 2);
    VerdictReport t33 = verdicts_agree(torus(3, 3));
    CHECK(t33.orbit_components == 1);
    CHECK(t33.orbit_controllable);
}

TEST_CASE("reachability is symmetric and composes") {
    for (const WalkSpec &s : random_specs(40, 5)) {
        const int n = s.n(), K = 2 * n;
        std::vector<std::vector<std::vector<Vertex>>> R;
        for (Vertex j = 0; j < n; ++j) R.push_back(reachable_sets(s, j, 2 * K));
        for (Vertex j = 0; j < n; ++j)
            for (Vertex l = 0; l < n; ++l)
                for (int k = 0; k <= K; ++k) {
                    CHECK(in(R[j][k], l) == in(R[l][k], j));
                    if (!in(R[j][k], l)) continue;
                    for (int t = 0; t <= K; ++t)
                        for (Vertex i : R[j][t]) CHECK(in(R[l][k + t], i));
                }
    }
}

TEST_CASE("more coins than half the vertices gives controllability") {
    for (int n = 3; n <= 8; ++n) {
        ControllabilityReport r = analyze(complete_graph(n));
        CHECK(r.controllable);
        CHECK(r.m == 1);
    }
}

TEST_CASE("report depends only on the graph") {
    for (int n : {4, 6, 8}) {
        ControllabilityReport a = analyze(cycle_shift(n));
        ControllabilityReport b = analyze(cycle_exchange(n));
        CHECK(a.components == b.components);
        CHECK(a.m == b.m);
        CHECK(a.predicted_lie_dim == b.predicted_lie_dim);
        CHECK(a.kappa == b.kappa);
    }
    // relabelling the coins of a spec
    WalkSpec f = figure1();
    WalkSpec g = validate(6, std::vector<Permutation>{f.perm(2), f.perm(0), f.perm(1)});
    CHECK(analyze(f).components == analyze(g).components);
    CHECK(analyze(f).kappa == analyze(g).kappa);
}

TEST_CASE("products of controllable walks stay controllable") {
    CHECK(analyze(torus(3, 3)).m == 1);
    CHECK(analyze(torus(3, 5)).m == 1);
    CHECK(analyze(product_walk(figure1(), cycle_shift(3))).m == 1);
    ControllabilityReport t44 = analyze(torus(4, 4));
    CHECK(t44.m == 2);
    CHECK(t44.verdicts_agree);
}

TEST_CASE("component count is one or two on random specs") {
    for (const WalkSpec &s : random_specs(100, 99)) {
        ControllabilityReport r = analyze(s);
        CHECK((r.m == 1 || r.m == 2));
        CHECK(r.verdicts_agree);
        CHECK(r.controllable == (r.m == 1));
        CHECK(r.kappa.has_value() == r.controllable);
    }
}
