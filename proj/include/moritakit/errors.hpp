/**************************************************************************
 * Copyright 2026 The moritakit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <stdexcept>
#include <string>

namespace moritakit {

enum class ErrorCode {
    division_by_zero,
    ring_mismatch,
    index_out_of_range,
    invalid_presentation,
    invalid_algebra,
    invalid_category,
    not_idempotent,
    bound_mismatch,
    object_mismatch,
    not_projective,
    not_finitely_generated,
    not_azumaya,
    extension_mismatch,
    invalid_input,
    unsupported,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::ring_mismatch: return "RingMismatch";
    case ErrorCode::index_out_of_range: return "IndexOutOfRange";
    case ErrorCode::invalid_presentation: return "InvalidPresentation";
    case ErrorCode::invalid_algebra: return "InvalidAlgebra";
    case ErrorCode::invalid_category: return "InvalidCategory";
    case ErrorCode::not_idempotent: return "NotIdempotent";
    case ErrorCode::bound_mismatch: return "BoundMismatch";
    case ErrorCode::object_mismatch: return "ObjectMismatch";
    case ErrorCode::not_projective: return "NotProjective";
    case ErrorCode::not_finitely_generated: return "NotFinitelyGenerated";
    case ErrorCode::not_azumaya: return "NotAzumaya";
    case ErrorCode::extension_mismatch: return "ExtensionMismatch";
    case ErrorCode::invalid_input: return "InvalidInput";
    case ErrorCode::unsupported: return "Unsupported";
    }
    return "Error";
}

} // namespace moritakit
