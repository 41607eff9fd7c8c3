// Copyright 2026 The rsym Authors
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

#include "error.hpp"

namespace rsym {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ValidationError: return "ValidationError";
        case ErrorCode::NonSquareInput: return "NonSquareInput";
        case ErrorCode::RankMismatch: return "RankMismatch";
        case ErrorCode::NonIntegerFusion: return "NonIntegerFusion";
        case ErrorCode::NegativeFusion: return "NegativeFusion";
        case ErrorCode::NonIntegerCertificate: return "NonIntegerCertificate";
        case ErrorCode::BoundViolation: return "BoundViolation";
        case ErrorCode::ParityViolation: return "ParityViolation";
        case ErrorCode::TraceMismatch: return "TraceMismatch";
        case ErrorCode::MissingIota: return "MissingIota";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

bool is_certificate_failure(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonIntegerCertificate:
        case ErrorCode::BoundViolation:
        case ErrorCode::ParityViolation:
        case ErrorCode::TraceMismatch:
            return true;
        default:
            return false;
    }
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code), detail_(message) {
}

}  // namespace rsym
