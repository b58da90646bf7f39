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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qwalk {

using Vertex = int;

/// A bijection on {0, ..., n-1} stored in one-line notation: `image(j)` is
/// where `j` is sent. Cycle notation is only used for parsing and display.
class Permutation {
  public:
    Permutation() = default;

    /// Throws NotBijection if `map` is not a bijection on {0, ..., size-1}.
    explicit Permutation(std::vector<Vertex> map);

    static Permutation identity(int n);

    /// Parses "(0 1 2)(3 4)" style text. Symbols inside a cycle are separated
    /// by whitespace or commas; a cycle written without separators, such as
    /// "(03)", is read one digit per symbol. Unlisted vertices are fixed.
    static Permutation parse_cycles(std::string_view text, int n);

    int size() const { return static_cast<int>(map_.size()); }
    Vertex operator()(Vertex j) const { return map_[static_cast<size_t>(j)]; }
    std::span<const Vertex> map() const { return map_; }

    /// (p * q)(j) = p(q(j)), i.e. q is applied first.
    friend Permutation operator*(const Permutation &p, const Permutation &q);
    friend bool operator==(const Permutation &, const Permutation &) = default;

    Permutation inverse() const;
    Permutation power(int64_t k) const;
    bool is_identity() const;
    int64_t order() const;

    /// Disjoint cycles covering every vertex; each cycle starts at its
    /// smallest element and cycles are sorted by that element. Fixed points
    /// appear as length-1 cycles.
    std::vector<std::vector<Vertex>> cycles() const;

    std::string to_cycle_string() const;

  private:
    std::vector<Vertex> map_;
};

Permutation compose(const Permutation &p, const Permutation &q);

}  // namespace qwalk
