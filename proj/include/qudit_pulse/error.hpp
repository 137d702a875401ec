// Copyright 2026 The qudit-pulse Authors
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

#ifndef QUDIT_PULSE_ERROR_HPP
#define QUDIT_PULSE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qudit_pulse {

enum class ErrorCode {
    Normalization,
    InvalidDensity,
    InvalidLevels,
    AncillaCollision,
    DimensionMismatch,
    Domain,
    InfeasibleTarget,
    UnsupportedGate,
    InvalidAlpha,
    NoConjugate,
    InvalidShots,
    InvalidNoise,
    MalformedJson,
    UnknownAxis,
    LevelsOutOfRange,
    DegenerateTransition,
    UnknownGate,
    Usage,
    Io,
};

/// Stable, machine-parseable token for an error code (used on the CLI).
constexpr std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Normalization: return "E_NORMALIZATION";
        case ErrorCode::InvalidDensity: return "E_INVALID_DENSITY";
        case ErrorCode::InvalidLevels: return "E_INVALID_LEVELS";
        case ErrorCode::AncillaCollision: return "E_ANCILLA_COLLISION";
        case ErrorCode::DimensionMismatch: return "E_DIMENSION_MISMATCH";
        case ErrorCode::Domain: return "E_DOMAIN";
        case ErrorCode::InfeasibleTarget: return "E_INFEASIBLE_TARGET";
        case ErrorCode::UnsupportedGate: return "E_UNSUPPORTED_GATE";
        case ErrorCode::InvalidAlpha: return "E_INVALID_ALPHA";
        case ErrorCode::NoConjugate: return "E_NO_CONJUGATE";
        case ErrorCode::InvalidShots: return "E_INVALID_SHOTS";
        case ErrorCode::InvalidNoise: return "E_INVALID_NOISE";
        case ErrorCode::MalformedJson: return "E_MALFORMED_JSON";
        case ErrorCode::UnknownAxis: return "E_UNKNOWN_AXIS";
        case ErrorCode::LevelsOutOfRange: return "E_LEVELS_OUT_OF_RANGE";
        case ErrorCode::DegenerateTransition: return "E_DEGENERATE_TRANSITION";
        case ErrorCode::UnknownGate: return "E_UNKNOWN_GATE";
        case ErrorCode::Usage: return "E_USAGE";
        case ErrorCode::Io: return "E_IO";
    }
    return "E_UNKNOWN";
}

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace qudit_pulse

#endif  // QUDIT_PULSE_ERROR_HPP
