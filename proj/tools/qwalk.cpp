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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qwalk/cli.hpp"

int main(int argc, char **argv) {
    CLI::App app{"qwalk: controllability and control synthesis for coined quantum walks"};
    app.require_subcommand(1);

    qwalk::cli::RunConfig config;
    int node = 0;
    int k = 0;
    double tol = 0.0;

    const char *commands[] = {"validate", "analyze", "reach", "lie-check", "synthesize", "simulate", "demo"};
    for (const char *name : commands) {
        auto *sub = app.add_subcommand(name);
        sub->add_option("--spec", config.spec, "walk spec JSON path, or builtin:<name>[:params]");
        sub->add_option("--state", config.state, "state JSON path");
        sub->add_option("--seq", config.seq, "control sequence JSON path");
        sub->add_option("--target", config.target, "target state JSON path");
        sub->add_option("--node", node, "vertex index");
        sub->add_option("--k", k, "number of steps");
        sub->add_option("--tol", tol, "relative rank tolerance for the Lie closure");
        sub->add_flag("--shortcut", config.shortcut, "use the two-step S^-1 shortcut when available");
        sub->add_option("--out", config.out, "write output to this path instead of stdout");
        sub->add_option("--seed", config.seed, "seed for randomized checks");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : qwalk::cli::kValidationError;
    }

    for (auto *sub : app.get_subcommands()) {
        config.command = *qwalk::cli::parse_command(sub->get_name());
        if (sub->count("--node")) config.node = node;
        if (sub->count("--k")) config.k = k;
        if (sub->count("--tol")) config.tol = tol;
    }
    return qwalk::cli::run(config, std::cout, std::cerr);
}
