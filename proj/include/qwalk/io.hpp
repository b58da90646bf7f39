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

#include <optional>
#include <string>

#include "json.hpp"

#include "qwalk/controllability.hpp"
#include "qwalk/lie_closure.hpp"
#include "qwalk/synthesis.hpp"
#include "qwalk/walk_core.hpp"

namespace qwalk::io {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

/// Rounds to 12 significant digits so emitted JSON is byte-stable.
double round12(double x);

json load_json_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

/// {"n": 6, "perms": [[1,2,3,4,5,0], "(0 5 4 3 2 1)", ...]} or
/// {"builtin": "cycle_shift:5"}. Permutation entries may be one-line arrays
/// or cycle-notation strings.
WalkSpec spec_from_json(const json &j);
json spec_to_json(const WalkSpec &spec);

/// {"d": 3, "n": 6, "amps": [[re, im], ...]}. Input within 1e-9 of unit norm
/// is renormalized (12-digit files cannot meet 1e-12 exactly).
WalkState state_from_json(const json &j);
json state_to_json(const WalkState &state);

/// List of N matrices, each a list of rows of [re, im] pairs.
CoinOp coin_op_from_json(const json &j);
json coin_op_to_json(const CoinOp &op);

/// {"steps": [{"coins": [...], "phase": "..."}, ...], ...}
ControlSequence sequence_from_json(const json &j);
json sequence_to_json(const ControlSequence &seq);

json report_to_json(const ControllabilityReport &report);
json lie_result_to_json(const LieClosureResult &result);

}  // namespace qwalk::io
