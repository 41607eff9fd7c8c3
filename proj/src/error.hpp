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

#ifndef RSYM_ERROR_HPP
#define RSYM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace rsym {

enum class ErrorCode {
    IoError,
    ParseError,
    ValidationError,
    NonSquareInput,
    RankMismatch,
    NonIntegerFusion,
    NegativeFusion,
    NonIntegerCertificate,
    BoundViolation,
    ParityViolation,
    TraceMismatch,
    MissingIota,
    InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// True for failures of the integrality, bound and parity theorems, as
/// opposed to malformed or unreadable input.
bool is_certificate_failure(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept { return code_; }
    /// The message without the code prefix.
    const std::string &detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace rsym

#endif
