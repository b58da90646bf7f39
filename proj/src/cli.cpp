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

#include "qwalk/cli.hpp"

#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "qwalk/controllability.hpp"
#include "qwalk/error.hpp"
#include "qwalk/io.hpp"
#include "qwalk/lie_closure.hpp"
#include "qwalk/synthesis.hpp"

namespace qwalk::cli {

namespace {

using io::json;

constexpr double kFidelityFloor = 1.0 - 1e-9;

WalkSpec load_spec(const std::string &where) {
    if (where.empty()) throw Error(ErrorKind::ParseError, "--spec is required");
    constexpr std::string_view prefix = "builtin:";
    if (where.rfind(prefix, 0) == 0) return builtin_from_string(std::string_view(where).substr(prefix.size()));
    return io::spec_from_json(io::load_json_file(where));
}

WalkState load_state(const std::string &path, const WalkSpec &spec) {
    auto state = io::state_from_json(io::load_json_file(path));
    if (state.d() != spec.d() || state.n() != spec.n()) {
        throw Error(ErrorKind::DimensionMismatch, "state '" + path + "' does not match the walk's d and n");
    }
    return state;
}

void emit(const RunConfig &config, std::ostream &out, const std::string &text) {
    if (config.out.empty()) {
        out << text << '\n';
    } else {
        io::write_text_file(config.out, text + '\n');
    }
}

LieOptions lie_options(const RunConfig &config) {
    LieOptions options;
    if (config.tol) options.tol = *config.tol;
    return options;
}

int run_validate(const RunConfig &config, std::ostream &out) {
    const auto spec = load_spec(config.spec);
    json perms = json::array();
    for (const auto &p : spec.perms()) perms.push_back(p.to_cycle_string());
    json j{{"schema_version", io::kSchemaVersion},
           {"valid", true},
           {"n", spec.n()},
           {"d", spec.d()},
           {"r", shift_order(spec)},
           {"cycles", perms}};
    if (spec.d() == 2) j["degree2"] = std::string(to_string(classify_degree2(spec)));
    emit(config, out, j.dump());
    return kOk;
}

int run_analyze(const RunConfig &config, std::ostream &out) {
    const auto report = analyze(load_spec(config.spec));
    emit(config, out, io::report_to_json(report).dump());
    return report.verdicts_agree ? kOk : kCrossCheckFailed;
}

int run_reach(const RunConfig &config, std::ostream &out) {
    const auto spec = load_spec(config.spec);
    const Vertex node = config.node.value_or(0);
    const auto kj = k_of(spec, node);
    const int kmax = config.k.value_or(kj.value_or(reach_search_cap(spec)));
    json j{{"schema_version", io::kSchemaVersion},
           {"node", node},
           {"sets", reachable_sets(spec, node, kmax)},
           {"k_j", kj ? json(*kj) : json(nullptr)}};
    emit(config, out, j.dump());
    return kOk;
}

int run_lie_check(const RunConfig &config, std::ostream &out) {
    const auto result = verify_structure(load_spec(config.spec), lie_options(config));
    emit(config, out, io::lie_result_to_json(result).dump());
    return result.match ? kOk : kCrossCheckFailed;
}

int run_synthesize(const RunConfig &config, std::ostream &out) {
    const auto spec = load_spec(config.spec);
    if (config.target.empty()) throw Error(ErrorKind::ParseError, "--target is required");
    const WalkState from = !config.state.empty() ? load_state(config.state, spec)
                                                 : WalkState::basis(spec, 0, config.node.value_or(0));
    const WalkState to = load_state(config.target, spec);
    const auto result = arbitrary_transfer(spec, from, to, {config.shortcut});
    json j = io::sequence_to_json(result.seq);
    j["bound"] = result.bound;
    j["length"] = result.seq.size();
    j["hub"] = result.hub;
    j["kappa"] = result.kappa;
    j["achieved_fidelity"] = io::round12(result.fidelity);
    emit(config, out, j.dump());
    const bool ok = result.fidelity >= kFidelityFloor && static_cast<int64_t>(result.seq.size()) <= result.bound;
    return ok ? kOk : kCrossCheckFailed;
}

int run_simulate(const RunConfig &config, std::ostream &out) {
    const auto spec = load_spec(config.spec);
    if (config.state.empty() || config.seq.empty()) throw Error(ErrorKind::ParseError, "--state and --seq are required");
    const auto start = load_state(config.state, spec);
    const auto seq = io::sequence_from_json(io::load_json_file(config.seq));
    const auto final_state = apply_sequence(start, seq, spec);
    json probs = json::array();
    for (double p : position_probabilities(final_state)) probs.push_back(io::round12(p));
    json j{{"schema_version", io::kSchemaVersion},
           {"steps", seq.size()},
           {"probabilities", probs},
           {"state", io::state_to_json(final_state)}};
    if (!config.target.empty()) {
        j["fidelity"] = io::round12(fidelity(final_state, load_state(config.target, spec)));
    }
    emit(config, out, j.dump());
    return kOk;
}

std::string set_string(const std::vector<Vertex> &vs) {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
    os << '}';
    return os.str();
}

int run_demo(const RunConfig &config, std::ostream &out) {
    std::vector<std::pair<std::string, WalkSpec>> gallery;
    for (int n = 3; n <= 8; ++n) gallery.emplace_back("cycle_shift(" + std::to_string(n) + ")", cycle_shift(n));
    for (int n = 4; n <= 8; n += 2) gallery.emplace_back("cycle_exchange(" + std::to_string(n) + ")", cycle_exchange(n));
    gallery.emplace_back("figure1", figure1());
    gallery.emplace_back("complete(4)", complete_graph(4));
    gallery.emplace_back("torus(3,3)", torus(3, 3));
    std::mt19937_64 rng(config.seed);
    for (int i = 0; i < 4; ++i) {
        const int d = 2 + static_cast<int>(rng() % 2);
        int n = 0;
        do {
            n = 3 + static_cast<int>(rng() % 6);
        } while (n <= d || (n * d) % 2 != 0);
        gallery.emplace_back("random#" + std::to_string(i) + "(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")",
                             random_walk_spec(n, d, rng));
    }

    std::ostringstream table;
    table << std::left << std::setw(26) << "walk" << std::setw(4) << "N" << std::setw(3) << "d" << std::setw(5) << "r"
          << std::setw(3) << "m" << std::setw(6) << "ctrl" << std::setw(6) << "kappa" << std::setw(7) << "bound"
          << std::setw(12) << "lie/pred" << std::setw(18) << "transfer len/fid" << std::setw(7) << "agree"
          << "N^kappa(hub)\n";
    bool all_ok = true;
    const auto options = lie_options(config);
    for (const auto &[name, spec] : gallery) {
        const auto report = analyze(spec);
        bool ok = report.verdicts_agree;

        std::string lie = "skipped";
        if (spec.dim() <= options.dim_cap) {
            const auto result = verify_structure(spec, options);
            lie = std::to_string(result.dim) + "/" + std::to_string(result.predicted);
            ok = ok && result.match;
        }

        std::string transfer = "-";
        std::string layer = "-";
        if (report.controllable) {
            const auto from = random_state(spec, rng);
            const auto to = random_state(spec, rng);
            const auto result = arbitrary_transfer(spec, from, to);
            std::ostringstream os;
            os << result.seq.size() << "/" << std::fixed << std::setprecision(10) << result.fidelity;
            transfer = os.str();
            ok = ok && result.fidelity >= kFidelityFloor && static_cast<int64_t>(result.seq.size()) <= result.bound;
            layer = set_string(reachable_sets(spec, *report.kappa_vertex, *report.kappa).back());
        }
        all_ok = all_ok && ok;

        table << std::left << std::setw(26) << name << std::setw(4) << spec.n() << std::setw(3) << spec.d()
              << std::setw(5) << report.shift_order << std::setw(3) << report.m << std::setw(6)
              << (report.controllable ? "yes" : "no") << std::setw(6)
              << (report.kappa ? std::to_string(*report.kappa) : "-") << std::setw(7)
              << (report.step_bound ? std::to_string(*report.step_bound) : "-") << std::setw(12) << lie << std::setw(18)
              << transfer << std::setw(7) << (ok ? "yes" : "NO") << layer << "\n";
    }
    table << (all_ok ? "all cross-checks passed" : "CROSS-CHECK FAILURE");
    emit(config, out, table.str());
    return all_ok ? kOk : kCrossCheckFailed;
}

}  // namespace

std::optional<Command> parse_command(const std::string &name) {
    if (name == "validate") return Command::Validate;
    if (name == "analyze") return Command::Analyze;
    if (name == "reach") return Command::Reach;
    if (name == "lie-check") return Command::LieCheck;
    if (name == "synthesize") return Command::Synthesize;
    if (name == "simulate") return Command::Simulate;
    if (name == "demo") return Command::Demo;
    return std::nullopt;
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    try {
        if (config.tol && !(*config.tol > 0.0)) throw Error(ErrorKind::ParseError, "--tol must be positive");
        switch (config.command) {
            case Command::Validate: return run_validate(config, out);
            case Command::Analyze: return run_analyze(config, out);
            case Command::Reach: return run_reach(config, out);
            case Command::LieCheck: return run_lie_check(config, out);
            case Command::Synthesize: return run_synthesize(config, out);
            case Command::Simulate: return run_simulate(config, out);
            case Command::Demo: return run_demo(config, out);
        }
    } catch (const Error &e) {
        const json j{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
        if (config.command == Command::Validate && e.kind() != ErrorKind::IoError) {
            json v = j;
            v["valid"] = false;
            out << v.dump() << '\n';
        } else {
            err << j.dump() << '\n';
        }
        switch (e.kind()) {
            case ErrorKind::IoError: return kIoError;
            case ErrorKind::CriterionConflict: return kCrossCheckFailed;
            default: return kValidationError;
        }
    } catch (const std::exception &e) {
        err << json{{"error", "Internal"}, {"message", e.what()}}.dump() << '\n';
        return kValidationError;
    }
    return kValidationError;
}

}  // namespace qwalk::cli
