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

#include <random>

#include "qwalk/walk_spec.hpp"
#include "test_util.hpp"

using namespace qwalk;

namespace {

std::vector<Vertex> shift_map(int n, int by) {
    std::vector<Vertex> m(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) m[static_cast<size_t>(j)] = ((j + by) % n + n) % n;
    return m;
}

int degree(const WalkSpec &s, Vertex v) {
    int c = 0;
    for (Vertex u = 0; u < s.n(); ++u) c += s.adjacent(v, u) ? 1 : 0;
    return c;
}

}  // namespace

TEST_CASE("validate accepts the six-vertex three-coin walk") {
    WalkSpec s = validate(6, {shift_map(6, 1), shift_map(6, -1), {3, 5, 4, 0, 2, 1}});
    CHECK(s.d() == 3);
    CHECK(s.dim() == 18);
    CHECK(s == figure1());
    CHECK(s.neighbours(0) == std::vector<Vertex>{1, 5, 3});
    for (Vertex v = 0; v < 6; ++v) CHECK(degree(s, v) == 3);
}

TEST_CASE("validate accepts a cycle") {
    WalkSpec s = validate(5, {shift_map(5, 1), shift_map(5, -1)});
    CHECK(s.d() == 2);
    CHECK(s == cycle_shift(5));
}

TEST_CASE("validate errors") {
    CHECK_THROWS_KIND(validate(4, {{0, 1, 2, 3}, shift_map(4, 1)}), ErrorKind::SelfLoop);
    CHECK_THROWS_KIND(validate(4, {shift_map(4, 1), shift_map(4, 1)}), ErrorKind::CoinCollision);
    CHECK_THROWS_KIND(validate(4, {{1, 0, 3, 2}, shift_map(4, 1)}), ErrorKind::CoinCollision);
    // 0->1 via coin 0, but neither coin sends 1 back to 0
    CHECK_THROWS_KIND(validate(4, {{1, 2, 3, 0}, {2, 3, 0, 1}}), ErrorKind::NotSymmetric);
    CHECK_THROWS_KIND(validate(4, {shift_map(4, 1), {1, 0, 2, 3}}), ErrorKind::SelfLoop);
    CHECK_THROWS_KIND(validate(4, {{1, 0, 3, 2}, {1, 0, 3, 2}}), ErrorKind::CoinCollision);
    CHECK_THROWS_KIND(validate(4, {{1, 0, 3, 2}, {1, 0, 3}}), ErrorKind::LengthMismatch);
    CHECK_THROWS_KIND(validate(2, {{1, 0}, {1, 0}}), ErrorKind::InvalidSpec);
    CHECK_THROWS_KIND(validate(4, {{1, 0, 3, 2}}), ErrorKind::InvalidSpec);
    CHECK_THROWS_KIND(validate(4, {{0, 0, 1, 2}, shift_map(4, 1)}), ErrorKind::NotBijection);
}

TEST_CASE("validate rejects disconnected graphs") {
    // two disjoint triangles
    std::vector<Vertex> fwd = {1, 2, 0, 4, 5, 3};
    std::vector<Vertex> bwd = {2, 0, 1, 5, 3, 4};
    CHECK_THROWS_KIND(validate(6, {fwd, bwd}), ErrorKind::Disconnected);
}

TEST_CASE("product of two triangles is the 3x3 torus") {
    WalkSpec t = product_walk(cycle_shift(3), cycle_shift(3));
    CHECK(t.n() == 9);
    CHECK(t.d() == 4);
    for (Vertex v = 0; v < 9; ++v) CHECK(degree(t, v) == 4);
    Vertex v12 = product_vertex(cycle_shift(3), 1, 2);
    CHECK(v12 == 5);
    CHECK(t.perm(0)(v12) == 8);
    CHECK(t == torus(3, 3));
}

TEST_CASE("product of a five-cycle and a triangle") {
    WalkSpec t = product_walk(cycle_shift(5), cycle_shift(3));
    CHECK(t.n() == 15);
    CHECK(t.d() == 4);
    for (Vertex v = 0; v < 15; ++v) CHECK(degree(t, v) == 4);
}

TEST_CASE("exchange cycle") {
    WalkSpec s = cycle_exchange(4);
    CHECK(s.perm(0) == Permutation::parse_cycles("(0 1)(2 3)", 4));
    CHECK(s.perm(1) == Permutation::parse_cycles("(1 2)(3 0)", 4));
    CHECK(s.adjacency() == cycle_shift(4).adjacency());
    CHECK_THROWS_KIND(cycle_exchange(5), ErrorKind::ParityError);
}

TEST_CASE("complete graph coins sum to J - I") {
    for (int n = 3; n <= 8; ++n) {
        WalkSpec s = complete_graph(n);
        CHECK(s.d() == n - 1);
        std::vector<int> sum(static_cast<size_t>(n * n), 0);
        for (const auto &p : s.perms())
            for (Vertex j = 0; j < n; ++j) sum[static_cast<size_t>(p(j) * n + j)] += 1;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = 0; b < n; ++b) CHECK(sum[static_cast<size_t>(a * n + b)] == (a == b ? 0 : 1));
    }
}

TEST_CASE("builtin lookup") {
    CHECK(builtin("cycle_shift", {6}) == cycle_shift(6));
    CHECK(builtin_from_string("torus:3,5") == torus(3, 5));
    CHECK(builtin_from_string("figure1") == figure1());
    CHECK_THROWS_KIND(builtin("nope", {}), ErrorKind::UnknownBuiltin);
}

TEST_CASE("random specs are valid regular graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + trial % 6;
        int d = 2 + trial % 2;
        if (d >= n || (d * n) % 2 != 0) continue;
        WalkSpec s = random_walk_spec(n, d, rng);
        CHECK(s.n() == n);
        CHECK(s.d() == d);
        for (Vertex v = 0; v < n; ++v) CHECK(degree(s, v) == d);
        CHECK_NOTHROW(validate(n, s.perms()));
    }
}

TEST_CASE("degree two classification") {
    CHECK(classify_degree2(cycle_shift(5)) == Degree2Kind::FullCycle);
    CHECK(classify_degree2(cycle_exchange(6)) == Degree2Kind::Exchange);
    CHECK(classify_degree2(figure1()) == Degree2Kind::NotDegree2);
}
