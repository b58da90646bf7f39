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

#include "qwalk/lie_closure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "qwalk/controllability.hpp"
#include "qwalk/error.hpp"
#include "qwalk/walk_core.hpp"

namespace qwalk {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
// Brackets of unit-norm elements smaller than this are rounding noise.
constexpr double kZeroBracket = 1e-12;

Eigen::MatrixXcd elementary(int dim, int a, int b, Complex ab, Complex ba) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    m(a, b) = ab;
    m(b, a) = ba;
    return m;
}

class OrthonormalSpan {
  public:
    OrthonormalSpan(int dim, double tol)
        : dim_(dim), tol_(tol), vectors_(static_cast<Eigen::Index>(dim) * dim, static_cast<Eigen::Index>(dim) * dim) {}

    int64_t size() const { return count_; }
    int64_t capacity() const { return static_cast<int64_t>(dim_) * dim_; }

    /// Returns the normalized new direction, or an empty matrix if `m` is
    /// already in the span.
    Eigen::MatrixXcd absorb(const Eigen::MatrixXcd &m) {
        Eigen::VectorXd v = skew_to_real(m);
        const double before = v.norm();
        if (before < kZeroBracket) return {};
        // Modified Gram-Schmidt, then one re-orthogonalization pass.
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index c = 0; c < count_; ++c) v -= vectors_.col(c).dot(v) * vectors_.col(c);
        }
        const double ratio = v.norm() / before;
        if (ratio > tol_ / 10.0 && ratio <= tol_ * 10.0) {
            throw Error(ErrorKind::ToleranceDegenerate,
                        "residual ratio " + std::to_string(ratio) + " is within a factor 10 of tolerance " +
                            std::to_string(tol_));
        }
        if (ratio <= tol_) return {};
        v /= v.norm();
        vectors_.col(count_++) = v;
        return real_to_skew(v, dim_);
    }

  private:
    int dim_;
    double tol_;
    Eigen::Index count_ = 0;
    Eigen::MatrixXd vectors_;
};

}  // namespace

int configured_threads() {
    const char *env = std::getenv("QWALK_THREADS");
    if (env == nullptr) return 0;
    try {
        return std::max(0, std::stoi(env));
    } catch (const std::exception &) {
        return 0;
    }
}

Eigen::VectorXd skew_to_real(const Eigen::MatrixXcd &m) {
    const auto dim = m.rows();
    Eigen::VectorXd v(dim * dim);
    Eigen::Index idx = 0;
    for (Eigen::Index a = 0; a < dim; ++a) v(idx++) = m(a, a).imag();
    for (Eigen::Index a = 0; a < dim; ++a) {
        for (Eigen::Index b = a + 1; b < dim; ++b) {
            v(idx++) = kSqrt2 * m(a, b).real();
            v(idx++) = kSqrt2 * m(a, b).imag();
        }
    }
    return v;
}

Eigen::MatrixXcd real_to_skew(const Eigen::VectorXd &v, int dim) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::Index idx = 0;
    for (int a = 0; a < dim; ++a) m(a, a) = Complex(0.0, v(idx++));
    for (int a = 0; a < dim; ++a) {
        for (int b = a + 1; b < dim; ++b) {
            const Complex z(v(idx) / kSqrt2, v(idx + 1) / kSqrt2);
            idx += 2;
            m(a, b) = z;
            m(b, a) = -std::conj(z);
        }
    }
    return m;
}

GeneratorBasis generator_basis(const WalkSpec &spec) {
    const int n = spec.n();
    const int dim = spec.dim();
    GeneratorBasis basis;
    basis.dim = dim;
    for (int c = 0; c < spec.d(); ++c) {
        for (Vertex j = 0; j < n; ++j) {
            const int a = basis_index(n, c, j);
            basis.mats.push_back(elementary(dim, a, a, Complex(0.0, 1.0), Complex(0.0, 1.0)));
            basis.positions.push_back({GeneratorPosition::Kind::Diagonal, c, j, c, j});
        }
    }
    // O_{l,l} is the diagonal, so only l < m contributes off-diagonal pairs;
    // O_{m,l} is the transpose of O_{l,m} and adds nothing new.
    for (int l = 0; l < spec.d(); ++l) {
        for (int m = l + 1; m < spec.d(); ++m) {
            for (const auto &[r, s] : joint_orbit(spec, l, m).pairs) {
                const int a = basis_index(n, l, r);
                const int b = basis_index(n, m, s);
                basis.mats.push_back(elementary(dim, a, b, 1.0, -1.0));
                basis.positions.push_back({GeneratorPosition::Kind::RealPair, l, r, m, s});
                basis.mats.push_back(elementary(dim, a, b, Complex(0.0, 1.0), Complex(0.0, 1.0)));
                basis.positions.push_back({GeneratorPosition::Kind::ImagPair, l, r, m, s});
            }
        }
    }
    return basis;
}

LieSpan lie_closure(const GeneratorBasis &basis, const LieOptions &options) {
    if (basis.mats.empty()) throw Error(ErrorKind::DimensionMismatch, "empty generator basis");
    if (!(options.tol > 0.0)) throw Error(ErrorKind::ToleranceDegenerate, "tolerance must be positive");
    const int dim = basis.dim;
    OrthonormalSpan span(dim, options.tol);
    LieSpan out;

    auto accept = [&](const Eigen::MatrixXcd &m) {
        auto added = span.absorb(m);
        if (added.size() != 0) out.elements.push_back(std::move(added));
    };
    for (const auto &g : basis.mats) {
        accept(g);
        if (span.size() == span.capacity()) break;
    }

    const int threads = options.threads < 0 ? configured_threads() : options.threads;
    size_t fresh_begin = 0;
    while (fresh_begin < out.elements.size() && span.size() < span.capacity()) {
        ++out.iterations;
        const size_t fresh_end = out.elements.size();
        // Every pair with at least one element from the latest round, each
        // pair once, older partner first.
        std::vector<std::pair<size_t, size_t>> pairs;
        for (size_t i = fresh_begin; i < fresh_end; ++i) {
            for (size_t j = 0; j < i; ++j) pairs.emplace_back(i, j);
        }

        constexpr size_t kBatch = 256;
        std::vector<Eigen::MatrixXcd> brackets;
        for (size_t start = 0; start < pairs.size() && span.size() < span.capacity(); start += kBatch) {
            const size_t stop = std::min(pairs.size(), start + kBatch);
            brackets.assign(stop - start, Eigen::MatrixXcd());
            auto work = [&](size_t lo, size_t hi) {
                for (size_t p = lo; p < hi; ++p) {
                    const auto &x = out.elements[pairs[start + p].first];
                    const auto &y = out.elements[pairs[start + p].second];
                    brackets[p] = x * y - y * x;
                }
            };
            if (threads > 1) {
                std::vector<std::thread> pool;
                const size_t count = stop - start;
                const size_t chunk = (count + static_cast<size_t>(threads) - 1) / static_cast<size_t>(threads);
                for (size_t lo = 0; lo < count; lo += chunk) pool.emplace_back(work, lo, std::min(count, lo + chunk));
                for (auto &t : pool) t.join();
            } else {
                work(0, stop - start);
            }
            // Acceptance is serial and in pair order, so the thread count
            // never changes the result.
            for (const auto &b : brackets) {
                accept(b);
                if (span.size() == span.capacity()) break;
            }
        }
        fresh_begin = fresh_end;
    }
    out.dim = span.size();
    return out;
}

LieClosureResult lie_closure_dim(const GeneratorBasis &basis, const LieOptions &options) {
    const auto span = lie_closure(basis, options);
    LieClosureResult result;
    result.dim = span.dim;
    result.iterations = span.iterations;
    return result;
}

LieClosureResult verify_structure(const WalkSpec &spec, const LieOptions &options) {
    if (spec.dim() > options.dim_cap) {
        throw Error(ErrorKind::CapExceeded, "dN = " + std::to_string(spec.dim()) + " exceeds the closure cap " +
                                                std::to_string(options.dim_cap));
    }
    const auto report = analyze(spec);
    const auto span = lie_closure(generator_basis(spec), options);

    std::vector<int> component_of(static_cast<size_t>(spec.n()), 0);
    for (size_t c = 0; c < report.components.size(); ++c) {
        for (Vertex v : report.components[c]) component_of[static_cast<size_t>(v)] = static_cast<int>(c);
    }
    LieClosureResult result;
    result.dim = span.dim;
    result.iterations = span.iterations;
    result.predicted = report.predicted_lie_dim;
    for (const auto &m : span.elements) {
        for (int a = 0; a < spec.dim(); ++a) {
            for (int b = 0; b < spec.dim(); ++b) {
                if (component_of[static_cast<size_t>(a % spec.n())] != component_of[static_cast<size_t>(b % spec.n())]) {
                    result.max_off_block = std::max(result.max_off_block, std::abs(m(a, b)));
                }
            }
        }
    }
    result.block_diagonal = result.max_off_block < 1e-9;
    result.match = result.dim == result.predicted && result.block_diagonal;
    return result;
}

}  // namespace qwalk
