// Copyright 2026 The certlab Authors
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

namespace certlab {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::invalid_argument: return "invalid-argument";
        case ErrorCode::invalid_dimension: return "invalid-dimension";
        case ErrorCode::shape: return "shape";
        case ErrorCode::domain: return "domain";
        case ErrorCode::not_unitary: return "not-unitary";
        case ErrorCode::unsupported: return "unsupported";
        case ErrorCode::precondition: return "precondition";
        case ErrorCode::not_converged: return "not-converged";
        case ErrorCode::decomposition_failed: return "decomposition-failed";
        case ErrorCode::not_found: return "not-found";
        case ErrorCode::parse: return "parse";
        case ErrorCode::io: return "io";
    }
    return "unknown";
}

}  // namespace certlab
