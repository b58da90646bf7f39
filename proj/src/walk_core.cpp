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

#include "qwalk/walk_core.hpp"

#include <cmath>
#include <numeric>

#include "qwalk/error.hpp"

namespace qwalk {

WalkState::WalkState(int d, int n, Eigen::VectorXcd amps) : d_(d), n_(n), amps_(std::move(amps)) {
    if (amps_.size() != static_cast<Eigen::Index>(d) * n) {
        throw Error(ErrorKind::DimensionMismatch, "state has " + std::to_string(amps_.size()) + " amplitudes, expected " +
                                                      std::to_string(d * n));
    }
    const double norm = amps_.norm();
    if (std::abs(norm - 1.0) > kNormTol) {
        throw Error(ErrorKind::NotNormalized, "state norm is " + std::to_string(norm));
    }
}

WalkState WalkState::normalized(int d, int n, Eigen::VectorXcd amps) {
    const double norm = amps.norm();
    if (norm == 0.0) throw Error(ErrorKind::NotNormalized, "zero vector cannot be normalized");
    amps /= norm;
    return WalkState(d, n, std::move(amps));
}

WalkState WalkState::basis(const WalkSpec &spec, int coin, Vertex j) {
    if (coin < 0 || coin >= spec.d() || j < 0 || j >= spec.n()) {
        throw Error(ErrorKind::IndexOutOfRange, "basis state (" + std::to_string(coin) + ", " + std::to_string(j) + ")");
    }
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(spec.dim());
    amps(basis_index(spec.n(), coin, j)) = 1.0;
    return WalkState(spec.d(), spec.n(), std::move(amps));
}

WalkState WalkState::localized(const WalkSpec &spec, const CoinVector &coin, Vertex j) {
    if (coin.size() != spec.d()) throw Error(ErrorKind::DimensionMismatch, "coin vector has wrong dimension");
    if (j < 0 || j >= spec.n()) throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(j));
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(spec.dim());
    for (int c = 0; c < spec.d(); ++c) amps(basis_index(spec.n(), c, j)) = coin(c);
    return WalkState(spec.d(), spec.n(), std::move(amps));
}

CoinVector WalkState::coin_at(Vertex j) const {
    CoinVector v(d_);
    for (int c = 0; c < d_; ++c) v(c) = amp(c, j);
    return v;
}

double unitarity_error(const CoinMatrix &q) {
    const auto eye = CoinMatrix::Identity(q.rows(), q.cols());
    return (q.adjoint() * q - eye).cwiseAbs().maxCoeff();
}

CoinOp::CoinOp(std::vector<CoinMatrix> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw Error(ErrorKind::DimensionMismatch, "coin operation has no blocks");
    const auto d = blocks_.front().rows();
    for (size_t j = 0; j < blocks_.size(); ++j) {
        const auto &q = blocks_[j];
        if (q.rows() != d || q.cols() != d) {
            throw Error(ErrorKind::DimensionMismatch, "coin block at vertex " + std::to_string(j) + " is " +
                                                          std::to_string(q.rows()) + "x" + std::to_string(q.cols()));
        }
        const double err = unitarity_error(q);
        if (err > kUnitaryTol) {
            throw Error(ErrorKind::NotUnitary,
                        "coin block at vertex " + std::to_string(j) + " deviates from unitarity by " + std::to_string(err));
        }
    }
}

CoinOp CoinOp::identity(int d, int n) {
    return CoinOp(std::vector<CoinMatrix>(static_cast<size_t>(n), CoinMatrix::Identity(d, d)));
}

ShiftOp::ShiftOp(const WalkSpec &spec) : image_(static_cast<size_t>(spec.dim())) {
    for (int c = 0; c < spec.d(); ++c) {
        for (Vertex j = 0; j < spec.n(); ++j) {
            image_[static_cast<size_t>(basis_index(spec.n(), c, j))] = basis_index(spec.n(), c, spec.perm(c)(j));
        }
    }
}

Eigen::MatrixXcd ShiftOp::matrix() const {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim(), dim());
    for (int a = 0; a < dim(); ++a) m(image(a), a) = 1.0;
    return m;
}

void ControlSequence::append(const ControlSequence &other) {
    ops.insert(ops.end(), other.ops.begin(), other.ops.end());
    phases.insert(phases.end(), other.phases.begin(), other.phases.end());
}

Eigen::MatrixXcd coin_matrix(const CoinOp &coin) {
    const int d = coin.d(), n = coin.n();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d * n, d * n);
    for (Vertex j = 0; j < n; ++j) {
        for (int k = 0; k < d; ++k) {
            for (int i = 0; i < d; ++i) m(basis_index(n, k, j), basis_index(n, i, j)) = coin.block(j)(k, i);
        }
    }
    return m;
}

ShiftOp shift_matrix(const WalkSpec &spec) { return ShiftOp(spec); }

int64_t shift_order(const WalkSpec &spec) {
    int64_t r = 1;
    for (const auto &p : spec.perms()) r = std::lcm(r, p.order());
    return r;
}

WalkState step(const WalkState &state, const CoinOp &coin, const WalkSpec &spec) {
    const int d = spec.d(), n = spec.n();
    if (state.d() != d || state.n() != n || coin.d() != d || coin.n() != n) {
        throw Error(ErrorKind::DimensionMismatch, "state, coin and walk dimensions disagree");
    }
    const auto &in = state.amps();
    Eigen::VectorXcd out(in.size());
    CoinVector local(d);
    for (Vertex j = 0; j < n; ++j) {
        for (int c = 0; c < d; ++c) local(c) = in(basis_index(n, c, j));
        const CoinVector tossed = coin.block(j) * local;
        for (int c = 0; c < d; ++c) out(basis_index(n, c, spec.perm(c)(j))) = tossed(c);
    }
    // Exactly S*C*state: the norm drifts only by the coin's unitarity error.
    return WalkState(WalkState::Unchecked{}, d, n, std::move(out));
}

WalkState apply_sequence(const WalkState &state, const ControlSequence &seq, const WalkSpec &spec) {
    WalkState current = state;
    for (const auto &op : seq.ops) current = step(current, op, spec);
    return current;
}

std::vector<double> position_probabilities(const WalkState &state) {
    std::vector<double> p(static_cast<size_t>(state.n()), 0.0);
    for (int c = 0; c < state.d(); ++c) {
        for (Vertex j = 0; j < state.n(); ++j) p[static_cast<size_t>(j)] += std::norm(state.amp(c, j));
    }
    return p;
}

double fidelity(const WalkState &a, const WalkState &b) {
    if (a.amps().size() != b.amps().size()) throw Error(ErrorKind::DimensionMismatch, "fidelity of different sizes");
    return std::abs(a.amps().dot(b.amps()));
}

CoinMatrix random_unitary(int d, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    CoinMatrix g(d, d);
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) g(i, k) = Complex(gauss(rng), gauss(rng));
    }
    Eigen::HouseholderQR<CoinMatrix> qr(g);
    CoinMatrix q = qr.householderQ();
    const CoinMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix column phases so the distribution is Haar.
    for (int i = 0; i < d; ++i) {
        const Complex diag = r(i, i);
        if (std::abs(diag) > 0.0) q.col(i) *= diag / std::abs(diag);
    }
    return q;
}

CoinVector random_unit_vector(int d, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    CoinVector v(d);
    for (int i = 0; i < d; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    return v / v.norm();
}

WalkState random_state(const WalkSpec &spec, std::mt19937_64 &rng) {
    return WalkState::normalized(spec.d(), spec.n(), random_unit_vector(spec.dim(), rng));
}

CoinOp random_coin(const WalkSpec &spec, std::mt19937_64 &rng) {
    std::vector<CoinMatrix> blocks;
    for (Vertex j = 0; j < spec.n(); ++j) blocks.push_back(random_unitary(spec.d(), rng));
    return CoinOp(std::move(blocks));
}

}  // namespace qwalk
