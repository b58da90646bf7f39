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

#include "qwalk/synthesis.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "qwalk/controllability.hpp"
#include "qwalk/error.hpp"

namespace qwalk {

namespace {

// Layers N^0(j) ... N^k(j) as membership masks.
std::vector<std::vector<bool>> reach_layers(const WalkSpec &spec, Vertex j, int k) {
    std::vector<std::vector<bool>> layers;
    for (const auto &set : reachable_sets(spec, j, k)) {
        std::vector<bool> mask(static_cast<size_t>(spec.n()), false);
        for (Vertex v : set) mask[static_cast<size_t>(v)] = true;
        layers.push_back(std::move(mask));
    }
    return layers;
}

bool in_layer(const std::vector<bool> &layer, Vertex v) { return layer[static_cast<size_t>(v)]; }

void require_unit(const CoinVector &v, const char *what) {
    const double norm = v.norm();
    if (std::abs(norm - 1.0) > kNormTol) {
        throw Error(ErrorKind::NotUnit, std::string(what) + " has norm " + std::to_string(norm));
    }
}

CoinVector basis_coin(int d, int c) {
    CoinVector e = CoinVector::Zero(d);
    e(c) = 1.0;
    return e;
}

// Householder reflection H (Hermitian, unitary) with H x = alpha e_0.
std::pair<CoinMatrix, Complex> reflect_to_first(const CoinVector &x) {
    const auto d = x.size();
    const double mag = std::abs(x(0));
    const Complex alpha = mag > 0.0 ? -x(0) / mag : Complex(-1.0);
    CoinVector u = x;
    u(0) -= alpha;
    const CoinMatrix h = CoinMatrix::Identity(d, d) - (2.0 / u.squaredNorm()) * u * u.adjoint();
    return {h, alpha};
}

std::map<Vertex, double> node_weights(const WalkState &state) {
    std::map<Vertex, double> out;
    for (Vertex v = 0; v < state.n(); ++v) {
        const double w = state.coin_at(v).norm();
        if (w > kStripTol) out[v] = w;
    }
    return out;
}

std::string describe(const std::vector<Vertex> &vs) {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
    os << '}';
    return os.str();
}

}  // namespace

CoinMatrix unitary_completion(const CoinVector &src, const CoinVector &dst) {
    if (src.size() != dst.size()) throw Error(ErrorKind::DimensionMismatch, "source and target coin sizes differ");
    require_unit(src, "source coin vector");
    require_unit(dst, "target coin vector");
    const auto d = src.size();
    const Complex overlap = src.dot(dst);
    if (std::abs(overlap) >= 1.0 - 1e-15) return (overlap / std::abs(overlap)) * CoinMatrix::Identity(d, d);
    const auto [h_src, alpha] = reflect_to_first(src);
    const auto [h_dst, beta] = reflect_to_first(dst);
    // conj(alpha) H_src sends src to e_0; beta H_dst sends e_0 to dst.
    return (beta * std::conj(alpha)) * (h_dst * h_src);
}

SpreadResult spread_from_node(const WalkSpec &spec, Vertex j, const CoinVector &c0, const TargetSpread &target, int k) {
    if (k < 0) throw Error(ErrorKind::IndexOutOfRange, "k must be non-negative");
    if (j < 0 || j >= spec.n()) throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(j));
    if (c0.size() != spec.d()) throw Error(ErrorKind::DimensionMismatch, "initial coin has wrong dimension");
    require_unit(c0, "initial coin state");
    if (target.nodes.size() != target.coeffs.size()) {
        throw Error(ErrorKind::DimensionMismatch, "target nodes and coefficients differ in length");
    }
    double total = 0.0;
    std::map<Vertex, Complex> top;
    for (size_t h = 0; h < target.nodes.size(); ++h) {
        const Vertex v = target.nodes[h];
        if (v < 0 || v >= spec.n()) throw Error(ErrorKind::IndexOutOfRange, "target vertex " + std::to_string(v));
        total += std::norm(target.coeffs[h]);
        if (std::abs(target.coeffs[h]) > kStripTol && !top.emplace(v, target.coeffs[h]).second) {
            throw Error(ErrorKind::InvalidSpec, "target vertex " + std::to_string(v) + " listed twice");
        }
    }
    if (std::abs(total - 1.0) > kNormTol) {
        throw Error(ErrorKind::NotNormalized, "target coefficients have squared norm " + std::to_string(total));
    }

    const auto layers = reach_layers(spec, j, k);
    for (const auto &[v, a] : top) {
        if (!in_layer(layers[static_cast<size_t>(k)], v)) {
            throw Error(ErrorKind::Unreachable, "vertex " + std::to_string(v) + " is not in N^" + std::to_string(k) +
                                                    "(" + std::to_string(j) + ")");
        }
    }

    // level[t]: amplitude on each node after t steps. Intermediate levels
    // carry the real merged weights gamma.
    std::vector<std::map<Vertex, Complex>> level(static_cast<size_t>(k) + 1);
    std::vector<std::map<Vertex, std::vector<std::pair<int, Vertex>>>> children(static_cast<size_t>(k));
    level[static_cast<size_t>(k)] = top;
    for (int t = k; t >= 1; --t) {
        std::map<Vertex, double> weight;
        for (const auto &[v, a] : level[static_cast<size_t>(t)]) {
            Vertex best_w = -1;
            int best_c = -1;
            for (int c = 0; c < spec.d(); ++c) {
                const Vertex w = spec.perm(c).inverse()(v);
                if (in_layer(layers[static_cast<size_t>(t - 1)], w) && (best_w < 0 || w < best_w)) {
                    best_w = w;
                    best_c = c;
                }
            }
            if (best_w < 0) {
                throw Error(ErrorKind::Unreachable,
                            "vertex " + std::to_string(v) + " has no predecessor in layer " + std::to_string(t - 1));
            }
            auto &group = children[static_cast<size_t>(t - 1)][best_w];
            group.emplace_back(best_c, v);
            // Distinct targets from one predecessor use distinct coins, so
            // this only fires on a corrupted spec.
            if (static_cast<int>(group.size()) > spec.d()) {
                throw Error(ErrorKind::GroupTooLarge, "more than d targets share predecessor " + std::to_string(best_w));
            }
            weight[best_w] += std::norm(a);
        }
        for (const auto &[w, sq] : weight) level[static_cast<size_t>(t - 1)][w] = std::sqrt(sq);
    }

    SpreadResult result;
    std::map<Vertex, CoinVector> coin_state{{j, c0}};
    for (int t = 1; t <= k; ++t) {
        std::vector<CoinMatrix> blocks(static_cast<size_t>(spec.n()), CoinMatrix::Identity(spec.d(), spec.d()));
        std::map<Vertex, CoinVector> next;
        for (const auto &[w, gamma] : level[static_cast<size_t>(t - 1)]) {
            CoinVector u = CoinVector::Zero(spec.d());
            for (const auto &[c, v] : children[static_cast<size_t>(t - 1)][w]) {
                const Complex a = level[static_cast<size_t>(t)][v];
                u(c) = a;
                next[v] = (a / std::abs(a)) * basis_coin(spec.d(), c);
            }
            u /= gamma.real();
            blocks[static_cast<size_t>(w)] = unitary_completion(coin_state.at(w), u);
        }
        result.seq.push(CoinOp(std::move(blocks)), "spread");
        coin_state = std::move(next);
    }

    for (const auto &[v, a] : top) {
        // The stored coin state carries the phase of a; strip it so the
        // reached state reads sum_h a_h c_h (x) v_h.
        const CoinVector &c = coin_state.at(v);
        result.coins.emplace_back(v, (std::conj(a) / std::abs(a)) * c);
    }
    return result;
}

std::optional<std::pair<CoinOp, CoinOp>> shortcut_pair(const WalkSpec &spec) {
    const int d = spec.d(), n = spec.n();
    if (d == 2 && spec.perm(1) == spec.perm(0).inverse()) {
        CoinMatrix first(2, 2), second(2, 2);
        first << 0.0, 1.0, -1.0, 0.0;
        second << 0.0, -1.0, 1.0, 0.0;
        return std::make_pair(CoinOp(std::vector<CoinMatrix>(static_cast<size_t>(n), first)),
                              CoinOp(std::vector<CoinMatrix>(static_cast<size_t>(n), second)));
    }
    // Coins paired by inversion: P_{pair(c)} = P_c^{-1}.
    CoinMatrix swap = CoinMatrix::Zero(d, d);
    for (int c = 0; c < d; ++c) {
        const Permutation inv = spec.perm(c).inverse();
        int partner = -1;
        for (int e = 0; e < d; ++e) {
            if (spec.perm(e) == inv) partner = e;
        }
        if (partner < 0) return std::nullopt;
        swap(partner, c) = 1.0;
    }
    return std::make_pair(CoinOp(std::vector<CoinMatrix>(static_cast<size_t>(n), swap)),
                          CoinOp(std::vector<CoinMatrix>(static_cast<size_t>(n), swap.adjoint())));
}

ControlSequence reach_full_state(const WalkSpec &spec, Vertex j, const CoinVector &c0, const WalkState &target, int k,
                                 bool shortcut) {
    if (target.d() != spec.d() || target.n() != spec.n()) {
        throw Error(ErrorKind::DimensionMismatch, "target state does not match the walk");
    }
    std::optional<std::pair<CoinOp, CoinOp>> trick;
    if (shortcut) {
        trick = shortcut_pair(spec);
        if (!trick) throw Error(ErrorKind::ShortcutUnavailable, "no C1, C2 with C2 S C1 = S^-1 is known for this walk");
    }

    const auto weights = node_weights(target);
    TargetSpread spread_target;
    double total = 0.0;
    for (const auto &[v, beta] : weights) total += beta * beta;
    for (const auto &[v, beta] : weights) {
        spread_target.nodes.push_back(v);
        spread_target.coeffs.emplace_back(beta / std::sqrt(total));
    }
    auto spread = spread_from_node(spec, j, c0, spread_target, k);

    ControlSequence seq = std::move(spread.seq);
    std::vector<CoinMatrix> blocks(static_cast<size_t>(spec.n()), CoinMatrix::Identity(spec.d(), spec.d()));
    for (const auto &[v, coin] : spread.coins) {
        const CoinVector wanted = target.coin_at(v) / weights.at(v);
        blocks[static_cast<size_t>(v)] = unitary_completion(coin, wanted);
    }

    if (trick) {
        for (Vertex v = 0; v < spec.n(); ++v) {
            blocks[static_cast<size_t>(v)] = trick->first.block(v) * blocks[static_cast<size_t>(v)];
        }
        seq.push(CoinOp(std::move(blocks)), "reshape+shortcut");
        seq.push(trick->second, "shortcut");
    } else {
        seq.push(CoinOp(std::move(blocks)), "reshape");
        const int64_t r = shift_order(spec);
        for (int64_t i = 1; i < r; ++i) seq.push(CoinOp::identity(spec.d(), spec.n()), "idle");
    }
    return seq;
}

ConcentrateResult concentrate_to_node(const WalkSpec &spec, Vertex j, const WalkState &state, int k) {
    if (state.d() != spec.d() || state.n() != spec.n()) {
        throw Error(ErrorKind::DimensionMismatch, "state does not match the walk");
    }
    if (k < 0) throw Error(ErrorKind::IndexOutOfRange, "k must be non-negative");
    const auto layers = reach_layers(spec, j, k);
    auto weights = node_weights(state);

    auto inside = [&](int t) {
        for (const auto &[v, w] : weights) {
            if (!in_layer(layers[static_cast<size_t>(t)], v)) return false;
        }
        return true;
    };
    if (!inside(k)) {
        for (const auto &[v, w] : weights) {
            if (!in_layer(layers[static_cast<size_t>(k)], v)) {
                throw Error(ErrorKind::Unreachable, "state has weight on vertex " + std::to_string(v) + " outside N^" +
                                                        std::to_string(k) + "(" + std::to_string(j) + ")");
            }
        }
    }
    int start = 0;
    while (!inside(start)) ++start;

    ConcentrateResult result;
    WalkState current = state;
    for (int t = start; t >= 1; --t) {
        std::vector<CoinMatrix> blocks(static_cast<size_t>(spec.n()), CoinMatrix::Identity(spec.d(), spec.d()));
        for (const auto &[v, gamma] : weights) {
            Vertex best_w = -1;
            int best_c = -1;
            for (int c = 0; c < spec.d(); ++c) {
                const Vertex w = spec.perm(c)(v);
                if (in_layer(layers[static_cast<size_t>(t - 1)], w) && (best_w < 0 || w < best_w)) {
                    best_w = w;
                    best_c = c;
                }
            }
            if (best_w < 0) {
                throw Error(ErrorKind::Unreachable,
                            "vertex " + std::to_string(v) + " has no neighbour in layer " + std::to_string(t - 1));
            }
            const CoinVector here = current.coin_at(v) / gamma;
            blocks[static_cast<size_t>(v)] = unitary_completion(here / here.norm(), basis_coin(spec.d(), best_c));
        }
        CoinOp op(std::move(blocks));
        current = step(current, op, spec);
        result.seq.push(std::move(op), "concentrate");
        weights = node_weights(current);
    }
    result.coin = current.coin_at(j);
    return result;
}

TransferResult arbitrary_transfer(const WalkSpec &spec, const WalkState &from, const WalkState &to,
                                  const TransferOptions &options) {
    const auto report = analyze(spec);
    if (!report.controllable) {
        std::string classes;
        for (const auto &c : report.components) classes += (classes.empty() ? "" : " and ") + describe(c);
        throw Error(ErrorKind::NotControllable, "the walk splits into " + std::to_string(report.m) +
                                                    " invariant vertex classes " + classes);
    }
    if (from.d() != spec.d() || from.n() != spec.n() || to.d() != spec.d() || to.n() != spec.n()) {
        throw Error(ErrorKind::DimensionMismatch, "states do not match the walk");
    }
    std::optional<std::pair<CoinOp, CoinOp>> trick;
    if (options.shortcut) {
        trick = shortcut_pair(spec);
        if (!trick) throw Error(ErrorKind::ShortcutUnavailable, "no C1, C2 with C2 S C1 = S^-1 is known for this walk");
    }

    TransferResult result;
    result.kappa = *report.kappa;
    result.hub = *report.kappa_vertex;
    result.bound = 2 * static_cast<int64_t>(result.kappa) + (options.shortcut ? 2 : report.shift_order);

    if (fidelity(from, to) >= 1.0 - 1e-12) {
        if (trick) {
            result.seq.push(trick->first, "shortcut");
            result.seq.push(trick->second, "shortcut");
        } else {
            for (int64_t i = 0; i < report.shift_order; ++i) result.seq.push(CoinOp::identity(spec.d(), spec.n()), "idle");
        }
    } else {
        auto gather = concentrate_to_node(spec, result.hub, from, result.kappa);
        const CoinVector hub_coin = gather.coin / gather.coin.norm();
        result.seq = std::move(gather.seq);
        result.seq.append(reach_full_state(spec, result.hub, hub_coin, to, result.kappa, options.shortcut));
    }
    result.fidelity = fidelity(apply_sequence(from, result.seq, spec), to);
    return result;
}

}  // namespace qwalk
