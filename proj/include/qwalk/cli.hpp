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
#include <iosfwd>
#include <optional>
#include <string>

namespace qwalk::cli {

enum class Command { Validate, Analyze, Reach, LieCheck, Synthesize, Simulate, Demo };

std::optional<Command> parse_command(const std::string &name);

enum ExitCode : int {
    kOk = 0,
    kValidationError = 1,
    kCrossCheckFailed = 2,
    kIoError = 3,
};

struct RunConfig {
    Command command = Command::Demo;
    /// File path, or "builtin:<name>[:params]" such as "builtin:cycle_shift:5".
    std::string spec;
    std::string state;
    std::string seq;
    std::string target;
    std::optional<int> node;
    std::optional<int> k;
    std::optional<double> tol;
    bool shortcut = false;
    std::string out;
    uint64_t seed = 0;
};

/// Runs one command, writing JSON (or the demo table) to `out` unless
/// `config.out` names a file, and diagnostics to `err`.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

}  // namespace qwalk::cli
