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

#include "qwalk/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qwalk/error.hpp"

namespace qwalk::io {

namespace {

Complex complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::ParseError, "complex number must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(Complex z) { return json::array({round12(z.real()), round12(z.imag())}); }

const json &field(const json &j, const char *name) {
    if (!j.is_object() || !j.contains(name)) throw Error(ErrorKind::ParseError, std::string("missing field '") + name + "'");
    return j.at(name);
}

}  // namespace

double round12(double x) {
    if (x == 0.0 || !std::isfinite(x)) return x == 0.0 ? 0.0 : x;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    const double y = std::strtod(buf, nullptr);
    return y == 0.0 ? 0.0 : y;  // no negative zero in output
}

json load_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::IoError, "'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
    out << text;
    if (!out) throw Error(ErrorKind::IoError, "write to '" + path + "' failed");
}

WalkSpec spec_from_json(const json &j) {
    try {
        if (j.is_object() && j.contains("builtin")) return builtin_from_string(j.at("builtin").get<std::string>());
        const int n = field(j, "n").get<int>();
        std::vector<Permutation> perms;
        const auto &raw = field(j, "perms");
        if (!raw.is_array()) throw Error(ErrorKind::ParseError, "'perms' must be an array");
        std::vector<std::vector<Vertex>> arrays;
        bool all_arrays = true;
        for (const auto &p : raw) all_arrays = all_arrays && p.is_array();
        if (all_arrays) {
            for (const auto &p : raw) arrays.push_back(p.get<std::vector<Vertex>>());
            return validate(n, arrays);
        }
        for (size_t i = 0; i < raw.size(); ++i) {
            const auto &p = raw[i];
            if (p.is_string()) {
                perms.push_back(Permutation::parse_cycles(p.get<std::string>(), n));
            } else {
                const auto map = p.get<std::vector<Vertex>>();
                if (static_cast<int>(map.size()) != n) {
                    throw Error(ErrorKind::LengthMismatch, "P" + std::to_string(i + 1) + " has length " +
                                                               std::to_string(map.size()) + ", expected " + std::to_string(n));
                }
                perms.emplace_back(map);
            }
        }
        return validate(n, perms);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseError, std::string("walk spec: ") + e.what());
    }
}

json spec_to_json(const WalkSpec &spec) {
    json perms = json::array();
    for (const auto &p : spec.perms()) perms.push_back(std::vector<Vertex>(p.map().begin(), p.map().end()));
    return {{"n", spec.n()}, {"perms", perms}};
}

WalkState state_from_json(const json &j) {
    try {
        const int d = field(j, "d").get<int>();
        const int n = field(j, "n").get<int>();
        const auto &amps = field(j, "amps");
        if (!amps.is_array() || static_cast<int>(amps.size()) != d * n) {
            throw Error(ErrorKind::DimensionMismatch, "'amps' must hold d*n = " + std::to_string(d * n) + " entries");
        }
        Eigen::VectorXcd v(d * n);
        for (int i = 0; i < d * n; ++i) v(i) = complex_from_json(amps[static_cast<size_t>(i)]);
        if (std::abs(v.norm() - 1.0) > 1e-9) {
            throw Error(ErrorKind::NotNormalized, "state norm is " + std::to_string(v.norm()));
        }
        return WalkState::normalized(d, n, std::move(v));
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseError, std::string("state: ") + e.what());
    }
}

json state_to_json(const WalkState &state) {
    json amps = json::array();
    for (Eigen::Index i = 0; i < state.amps().size(); ++i) amps.push_back(complex_to_json(state.amps()(i)));
    return {{"d", state.d()}, {"n", state.n()}, {"amps", amps}};
}

CoinOp coin_op_from_json(const json &j) {
    try {
        if (!j.is_array() || j.empty()) throw Error(ErrorKind::ParseError, "coin operation must be a non-empty list");
        std::vector<CoinMatrix> blocks;
        for (const auto &m : j) {
            const auto d = static_cast<Eigen::Index>(m.size());
            CoinMatrix q(d, d);
            for (Eigen::Index r = 0; r < d; ++r) {
                const auto &row = m[static_cast<size_t>(r)];
                if (static_cast<Eigen::Index>(row.size()) != d) throw Error(ErrorKind::DimensionMismatch, "coin block is not square");
                for (Eigen::Index c = 0; c < d; ++c) q(r, c) = complex_from_json(row[static_cast<size_t>(c)]);
            }
            blocks.push_back(std::move(q));
        }
        return CoinOp(std::move(blocks));
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseError, std::string("coin operation: ") + e.what());
    }
}

json coin_op_to_json(const CoinOp &op) {
    json blocks = json::array();
    for (const auto &q : op.blocks()) {
        json rows = json::array();
        for (Eigen::Index r = 0; r < q.rows(); ++r) {
            json row = json::array();
            for (Eigen::Index c = 0; c < q.cols(); ++c) row.push_back(complex_to_json(q(r, c)));
            rows.push_back(std::move(row));
        }
        blocks.push_back(std::move(rows));
    }
    return blocks;
}

ControlSequence sequence_from_json(const json &j) {
    ControlSequence seq;
    const auto &steps = j.is_array() ? j : field(j, "steps");
    for (const auto &s : steps) {
        seq.push(coin_op_from_json(field(s, "coins")), s.value("phase", std::string("input")));
    }
    return seq;
}

json sequence_to_json(const ControlSequence &seq) {
    json steps = json::array();
    for (size_t t = 0; t < seq.size(); ++t) {
        steps.push_back({{"coins", coin_op_to_json(seq.ops[t])}, {"phase", seq.phases[t]}});
    }
    return {{"schema_version", kSchemaVersion}, {"steps", steps}};
}

json report_to_json(const ControllabilityReport &report) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["m"] = report.m;
    j["components"] = report.components;
    j["controllable"] = report.controllable;
    j["predicted_lie_dim"] = report.predicted_lie_dim;
    j["r"] = report.shift_order;
    j["kappa"] = report.kappa ? json(*report.kappa) : json(nullptr);
    j["kappa_vertex"] = report.kappa_vertex ? json(*report.kappa_vertex) : json(nullptr);
    j["step_bound"] = report.step_bound ? json(*report.step_bound) : json(nullptr);
    j["verdicts_agree"] = report.verdicts_agree;
    return j;
}

json lie_result_to_json(const LieClosureResult &result) {
    return {{"schema_version", kSchemaVersion},
            {"dim", result.dim},
            {"predicted", result.predicted},
            {"match", result.match},
            {"iterations", result.iterations},
            {"block_diagonal", result.block_diagonal},
            {"max_off_block", round12(result.max_off_block)}};
}

}  // namespace qwalk::io
