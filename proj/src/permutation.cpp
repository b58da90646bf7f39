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

#include "qwalk/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "qwalk/error.hpp"

namespace qwalk {

Permutation::Permutation(std::vector<Vertex> map) : map_(std::move(map)) {
    const int n = size();
    std::vector<bool> seen(map_.size(), false);
    for (int j = 0; j < n; ++j) {
        const Vertex v = map_[static_cast<size_t>(j)];
        if (v < 0 || v >= n) {
            throw Error(ErrorKind::NotBijection,
                        "image " + std::to_string(v) + " of vertex " + std::to_string(j) + " is outside [0, " +
                            std::to_string(n) + ")");
        }
        if (seen[static_cast<size_t>(v)]) {
            throw Error(ErrorKind::NotBijection,
                        "vertex " + std::to_string(v) + " is the image of more than one vertex (second at " +
                            std::to_string(j) + ")");
        }
        seen[static_cast<size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<Vertex> map(static_cast<size_t>(n));
    std::iota(map.begin(), map.end(), 0);
    return Permutation(std::move(map));
}

Permutation Permutation::parse_cycles(std::string_view text, int n) {
    std::vector<Vertex> map(static_cast<size_t>(n));
    std::iota(map.begin(), map.end(), 0);
    std::vector<bool> used(static_cast<size_t>(n), false);

    size_t pos = 0;
    auto fail = [&](const std::string &why) {
        throw Error(ErrorKind::ParseError, "cycle notation '" + std::string(text) + "': " + why);
    };
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        if (text[pos] != '(') fail("expected '('");
        const size_t close = text.find(')', pos);
        if (close == std::string_view::npos) fail("unterminated cycle");
        const std::string_view body = text.substr(pos + 1, close - pos - 1);
        pos = close + 1;

        std::vector<Vertex> cycle;
        const bool separated = body.find_first_of(" \t,") != std::string_view::npos;
        if (separated) {
            std::string token;
            auto flush = [&] {
                if (!token.empty()) {
                    cycle.push_back(std::stoi(token));
                    token.clear();
                }
            };
            for (char ch : body) {
                if (std::isdigit(static_cast<unsigned char>(ch))) {
                    token.push_back(ch);
                } else if (ch == ' ' || ch == '\t' || ch == ',') {
                    flush();
                } else {
                    fail(std::string("unexpected character '") + ch + "'");
                }
            }
            flush();
        } else {
            for (char ch : body) {
                if (!std::isdigit(static_cast<unsigned char>(ch))) fail(std::string("unexpected character '") + ch + "'");
                cycle.push_back(ch - '0');
            }
        }
        for (Vertex v : cycle) {
            if (v < 0 || v >= n) fail("symbol " + std::to_string(v) + " out of range");
            if (used[static_cast<size_t>(v)]) fail("symbol " + std::to_string(v) + " repeated");
            used[static_cast<size_t>(v)] = true;
        }
        for (size_t i = 0; i < cycle.size(); ++i) {
            map[static_cast<size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
        }
    }
    return Permutation(std::move(map));
}

Permutation operator*(const Permutation &p, const Permutation &q) {
    if (p.size() != q.size()) {
        throw Error(ErrorKind::LengthMismatch,
                    "cannot compose permutations of sizes " + std::to_string(p.size()) + " and " +
                        std::to_string(q.size()));
    }
    std::vector<Vertex> map(p.map_.size());
    for (size_t j = 0; j < map.size(); ++j) map[j] = p.map_[static_cast<size_t>(q.map_[j])];
    Permutation out;
    out.map_ = std::move(map);
    return out;
}

Permutation compose(const Permutation &p, const Permutation &q) { return p * q; }

Permutation Permutation::inverse() const {
    std::vector<Vertex> inv(map_.size());
    for (size_t j = 0; j < map_.size(); ++j) inv[static_cast<size_t>(map_[j])] = static_cast<Vertex>(j);
    Permutation out;
    out.map_ = std::move(inv);
    return out;
}

Permutation Permutation::power(int64_t k) const {
    // Walk each cycle once; cheaper than repeated squaring for any k.
    const auto cs = cycles();
    std::vector<Vertex> out(map_.size());
    for (const auto &cycle : cs) {
        const auto len = static_cast<int64_t>(cycle.size());
        const int64_t shift = ((k % len) + len) % len;
        for (int64_t i = 0; i < len; ++i) {
            out[static_cast<size_t>(cycle[static_cast<size_t>(i)])] = cycle[static_cast<size_t>((i + shift) % len)];
        }
    }
    Permutation p;
    p.map_ = std::move(out);
    return p;
}

bool Permutation::is_identity() const {
    for (size_t j = 0; j < map_.size(); ++j) {
        if (map_[j] != static_cast<Vertex>(j)) return false;
    }
    return true;
}

int64_t Permutation::order() const {
    int64_t result = 1;
    for (const auto &cycle : cycles()) result = std::lcm(result, static_cast<int64_t>(cycle.size()));
    return result;
}

std::vector<std::vector<Vertex>> Permutation::cycles() const {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(map_.size(), false);
    for (size_t start = 0; start < map_.size(); ++start) {
        if (seen[start]) continue;
        std::vector<Vertex> cycle;
        for (Vertex v = static_cast<Vertex>(start); !seen[static_cast<size_t>(v)]; v = map_[static_cast<size_t>(v)]) {
            seen[static_cast<size_t>(v)] = true;
            cycle.push_back(v);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::string Permutation::to_cycle_string() const {
    std::ostringstream os;
    bool any = false;
    for (const auto &cycle : cycles()) {
        if (cycle.size() < 2) continue;
        any = true;
        os << '(';
        for (size_t i = 0; i < cycle.size(); ++i) os << (i ? " " : "") << cycle[i];
        os << ')';
    }
    if (!any) os << "()";
    return os.str();
}

}  // namespace qwalk
