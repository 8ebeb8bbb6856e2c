/*
   Copyright 2026 The lwhss Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "lwhss/error.hpp"

namespace lwhss {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
        case ErrorKind::BadGoppaPolynomial: return "BadGoppaPolynomial";
        case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorKind::InsufficientLabelweight: return "InsufficientLabelweight";
        case ErrorKind::MissingShare: return "MissingShare";
        case ErrorKind::DecodeError: return "DecodeError";
        case ErrorKind::ConditionViolated: return "ConditionViolated";
        case ErrorKind::NotACube: return "NotACube";
        case ErrorKind::Degenerate: return "Degenerate";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace lwhss
