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

#include "qwalk/permutation.hpp"
#include "test_util.hpp"

using namespace qwalk;

namespace {

Permutation shift(int n, int by) {
    std::vector<Vertex> m(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) m[static_cast<size_t>(j)] = ((j + by) % n + n) % n;
    return Permutation(m);
}

}  // namespace

TEST_CASE("bijection check") {
    CHECK_NOTHROW(Permutation({2, 0, 1}));
    CHECK_THROWS_KIND(Permutation({0, 0, 1}), ErrorKind::NotBijection);
    CHECK_THROWS_KIND(Permutation({0, 3, 1}), ErrorKind::NotBijection);
    CHECK_THROWS_KIND(Permutation({-1, 0, 1}), ErrorKind::NotBijection);
}

TEST_CASE("composition applies right operand first") {
    Permutation p({1, 2, 0});
    Permutation q({1, 0, 2});
    Permutation pq = p * q;
    for (int j = 0; j < 3; ++j) CHECK(pq(j) == p(q(j)));
    CHECK(compose(p, q) == pq);
    CHECK_THROWS_KIND(p * Permutation::identity(4), ErrorKind::LengthMismatch);
}

TEST_CASE("inverse gives identity") {
    Permutation p = shift(3, 1);
    CHECK((p * p.inverse()).is_identity());
    CHECK((p.inverse() * p).is_identity());
}

TEST_CASE("difference of the two cycle directions is a double step") {
    Permutation plus = shift(5, 1);
    Permutation minus = shift(5, -1);
    Permutation w = minus.inverse() * plus;
    CHECK(w == plus.power(2));
    CHECK(w.to_cycle_string() == "(0 2 4 1 3)");
    CHECK(w.cycles().size() == 1);
}

TEST_CASE("order is the lcm of cycle lengths") {
    CHECK(Permutation::parse_cycles("(03)(15)(24)", 6).order() == 2);
    CHECK(Permutation::parse_cycles("(0 1 2)(3 4)", 6).order() == 6);
    CHECK(Permutation::identity(4).order() == 1);
    CHECK(shift(7, 1).order() == 7);
}

TEST_CASE("powers") {
    Permutation p = shift(6, 1);
    CHECK(p.power(0).is_identity());
    CHECK(p.power(6).is_identity());
    CHECK(p.power(-1) == p.inverse());
    CHECK(p.power(-7) == p.inverse());
    CHECK(p.power(4) == p * p * p * p);
}

TEST_CASE("cycle parsing") {
    Permutation a = Permutation::parse_cycles("(0 3)(1 5)(2 4)", 6);
    Permutation b = Permutation::parse_cycles("(03)(15)(24)", 6);
    Permutation c = Permutation::parse_cycles("(0,3) (1,5) (2,4)", 6);
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a(2) == 4);
    CHECK(a(4) == 2);
    CHECK(Permutation::parse_cycles("(10 11)", 12)(10) == 11);
    CHECK(Permutation::parse_cycles("", 3).is_identity());
    CHECK_THROWS(Permutation::parse_cycles("(0 1", 3));
    CHECK_THROWS(Permutation::parse_cycles("(0 5)", 3));
    CHECK_THROWS(Permutation::parse_cycles("(0 1)(1 2)", 3));
}

TEST_CASE("cycles list fixed points and round-trip through text") {
    Permutation p({0, 2, 1, 3});
    auto cyc = p.cycles();
    REQUIRE(cyc.size() == 3);
    CHECK(cyc[0] == std::vector<Vertex>{0});
    CHECK(cyc[1] == std::vector<Vertex>{1, 2});
    CHECK(cyc[2] == std::vector<Vertex>{3});
    Permutation q = Permutation::parse_cycles("(4 0 2)(1 3)", 5);
    CHECK(Permutation::parse_cycles(q.to_cycle_string(), 5) == q);
}
