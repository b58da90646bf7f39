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

#include "qwalk/error.hpp"

namespace qwalk {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotBijection: return "NotBijection";
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::CoinCollision: return "CoinCollision";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::MultiEdge: return "MultiEdge";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::InvalidSpec: return "InvalidSpec";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::ParityError: return "ParityError";
        case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
        case ErrorKind::NotUnitary: return "NotUnitary";
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::CriterionConflict: return "CriterionConflict";
        case ErrorKind::ToleranceDegenerate: return "ToleranceDegenerate";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::NotUnit: return "NotUnit";
        case ErrorKind::Unreachable: return "Unreachable";
        case ErrorKind::GroupTooLarge: return "GroupTooLarge";
        case ErrorKind::ShortcutUnavailable: return "ShortcutUnavailable";
        case ErrorKind::NotControllable: return "NotControllable";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace qwalk
