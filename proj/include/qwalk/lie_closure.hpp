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
#include <vector>

#include <Eigen/Dense>

#include "qwalk/walk_spec.hpp"

namespace qwalk {

/// Where an elementary generator lives: basis positions a = (coin_a, vertex_a)
/// and b = (coin_b, vertex_b) in the coin-major ordering.
struct GeneratorPosition {
    enum class Kind { Diagonal, RealPair, ImagPair };
    Kind kind = Kind::Diagonal;
    int coin_a = 0;
    Vertex vertex_a = 0;
    int coin_b = 0;
    Vertex vertex_b = 0;
};

/// Elementary skew-Hermitian matrices spanning every matrix whose
/// ((l, r), (m, s)) entry is allowed to be non-zero, i.e. (r, s) lies in the
/// joint orbit O_{l,m}. Diagonal entries are always free.
struct GeneratorBasis {
    int dim = 0;  // dN
    std::vector<Eigen::MatrixXcd> mats;
    std::vector<GeneratorPosition> positions;

    size_t size() const { return mats.size(); }
};

GeneratorBasis generator_basis(const WalkSpec &spec);

struct LieOptions {
    /// Relative rank tolerance: a candidate is new when its residual after
    /// projection exceeds tol times its norm before projection.
    double tol = 1e-9;
    /// Worker threads for bracket evaluation; negative reads QWALK_THREADS,
    /// 0 or 1 runs serially.
    int threads = -1;
    /// verify_structure refuses walks with dN above this.
    int dim_cap = 24;
};

struct LieClosureResult {
    int64_t dim = 0;
    int64_t predicted = 0;
    bool match = false;
    int iterations = 0;
    /// verify_structure only: largest entry coupling two different
    /// components once indices are grouped by component.
    double max_off_block = 0.0;
    bool block_diagonal = true;
};

/// Spanning set of the Lie algebra generated by `basis`, orthonormal in the
/// real Frobenius inner product.
struct LieSpan {
    int64_t dim = 0;
    int iterations = 0;
    std::vector<Eigen::MatrixXcd> elements;
};

/// Closure under commutators. Throws ToleranceDegenerate when a residual
/// ratio falls within a factor of 10 of `tol`.
LieSpan lie_closure(const GeneratorBasis &basis, const LieOptions &options = {});

/// Dimension-only view of `lie_closure`; `predicted` and `match` are left
/// for the caller.
LieClosureResult lie_closure_dim(const GeneratorBasis &basis, const LieOptions &options = {});

/// Closure dimension of the walk's generators compared against the
/// component-count prediction, plus a block-diagonality check of every
/// closure element. Throws CapExceeded when dN > options.dim_cap.
LieClosureResult verify_structure(const WalkSpec &spec, const LieOptions &options = {});

/// Real coordinates of a skew-Hermitian matrix, isometric for the
/// Frobenius norm: Im M_aa, then sqrt(2) Re M_ab and sqrt(2) Im M_ab, a < b.
Eigen::VectorXd skew_to_real(const Eigen::MatrixXcd &m);
Eigen::MatrixXcd real_to_skew(const Eigen::VectorXd &v, int dim);

int configured_threads();

}  // namespace qwalk
