// Copyright 2026 The Turnkit Authors
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

#include <stdexcept>
#include <string>
#include <string_view>

namespace turnkit {

enum class ErrorCode {
    NearZeroNorm,
    NormDrift,
    AntipodalPair,
    DegenerateArc,
    OutOfRange,
    DegenerateTriple,
    OrthogonalStates,
    AntipodalTransport,
    NonPositiveInput,
    CentralGate,
    ParseError,
    NonUnitaryMatrix,
};

inline std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NearZeroNorm: return "NearZeroNorm";
        case ErrorCode::NormDrift: return "NormDrift";
        case ErrorCode::AntipodalPair: return "AntipodalPair";
        case ErrorCode::DegenerateArc: return "DegenerateArc";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::DegenerateTriple: return "DegenerateTriple";
        case ErrorCode::OrthogonalStates: return "OrthogonalStates";
        case ErrorCode::AntipodalTransport: return "AntipodalTransport";
        case ErrorCode::NonPositiveInput: return "NonPositiveInput";
        case ErrorCode::CentralGate: return "CentralGate";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NonUnitaryMatrix: return "NonUnitaryMatrix";
    }
    return "Unknown";
}

/// Domain error raised by every library operation. `code()` identifies the
/// failure class; `what()` carries a human-readable message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace turnkit
