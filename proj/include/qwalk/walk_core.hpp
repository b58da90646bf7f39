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

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/walk_spec.hpp"

namespace qwalk {

using Complex = std::complex<double>;
using CoinVector = Eigen::VectorXcd;
using CoinMatrix = Eigen::MatrixXcd;

constexpr double kUnitaryTol = 1e-10;
constexpr double kNormTol = 1e-12;

/// Basis ordering used everywhere: coin c (0-based) and vertex j map to
/// index c * n + j, so the shift is block diagonal with one n x n block per
/// coin value.
inline int basis_index(int n, int coin, Vertex j) { return coin * n + j; }

class CoinOp;

/// Unit vector in C^d (x) C^n.
class WalkState {
  public:
    /// Throws NotNormalized if | ||amps|| - 1 | > 1e-12.
    WalkState(int d, int n, Eigen::VectorXcd amps);

    /// Rescales to unit norm; throws NotNormalized for a zero vector.
    static WalkState normalized(int d, int n, Eigen::VectorXcd amps);
    static WalkState basis(const WalkSpec &spec, int coin, Vertex j);
    /// coin (x) |j>
    static WalkState localized(const WalkSpec &spec, const CoinVector &coin, Vertex j);

    int d() const { return d_; }
    int n() const { return n_; }
    const Eigen::VectorXcd &amps() const { return amps_; }
    Complex amp(int coin, Vertex j) const { return amps_(basis_index(n_, coin, j)); }
    /// Unnormalized coin vector sitting on vertex j.
    CoinVector coin_at(Vertex j) const;

  private:
    struct Unchecked {};
    WalkState(Unchecked, int d, int n, Eigen::VectorXcd amps) : d_(d), n_(n), amps_(std::move(amps)) {}
    friend WalkState step(const WalkState &, const CoinOp &, const WalkSpec &);

    int d_;
    int n_;
    Eigen::VectorXcd amps_;
};

/// One d x d unitary per vertex.
class CoinOp {
  public:
    /// Throws NotUnitary if any block deviates from unitarity by more than
    /// 1e-10 in max-norm, DimensionMismatch on ragged shapes.
    explicit CoinOp(std::vector<CoinMatrix> blocks);

    static CoinOp identity(int d, int n);

    int d() const { return static_cast<int>(blocks_.front().rows()); }
    int n() const { return static_cast<int>(blocks_.size()); }
    const CoinMatrix &block(Vertex j) const { return blocks_[static_cast<size_t>(j)]; }
    const std::vector<CoinMatrix> &blocks() const { return blocks_; }

  private:
    std::vector<CoinMatrix> blocks_;
};

/// Conditional shift S = diag(P_1, ..., P_d) in the coin-major basis.
class ShiftOp {
  public:
    explicit ShiftOp(const WalkSpec &spec);

    int dim() const { return static_cast<int>(image_.size()); }
    /// S e_a = e_{image(a)}.
    int image(int a) const { return image_[static_cast<size_t>(a)]; }
    Eigen::MatrixXcd matrix() const;

  private:
    std::vector<int> image_;
};

/// Ordered coin operations; step t applies S * ops[t]. `phases[t]` records
/// which construction produced the step.
struct ControlSequence {
    std::vector<CoinOp> ops;
    std::vector<std::string> phases;

    size_t size() const { return ops.size(); }
    bool empty() const { return ops.empty(); }
    void push(CoinOp op, std::string phase) {
        ops.push_back(std::move(op));
        phases.push_back(std::move(phase));
    }
    void append(const ControlSequence &other);
};

Eigen::MatrixXcd coin_matrix(const CoinOp &coin);
ShiftOp shift_matrix(const WalkSpec &spec);

/// Least r >= 1 with S^r = I: the lcm of the permutation orders.
int64_t shift_order(const WalkSpec &spec);

/// S * C * state, applied block by block without forming dN x dN matrices.
WalkState step(const WalkState &state, const CoinOp &coin, const WalkSpec &spec);
WalkState apply_sequence(const WalkState &state, const ControlSequence &seq, const WalkSpec &spec);

/// p_j = sum_c |alpha_{c j}|^2.
std::vector<double> position_probabilities(const WalkState &state);

/// |<a|b>|, insensitive to global phase.
double fidelity(const WalkState &a, const WalkState &b);

double unitarity_error(const CoinMatrix &q);

// Random sampling helpers shared by the CLI and the property tests.
CoinMatrix random_unitary(int d, std::mt19937_64 &rng);
CoinVector random_unit_vector(int d, std::mt19937_64 &rng);
WalkState random_state(const WalkSpec &spec, std::mt19937_64 &rng);
CoinOp random_coin(const WalkSpec &spec, std::mt19937_64 &rng);

}  // namespace qwalk
