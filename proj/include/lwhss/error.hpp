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

#ifndef LWHSS_ERROR_HPP
#define LWHSS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace lwhss {

enum class ErrorKind {
    DivisionByZero,
    FieldMismatch,
    DimensionMismatch,
    EnumerationBudgetExceeded,
    BadGoppaPolynomial,
    ParameterOutOfRange,
    InsufficientLabelweight,
    MissingShare,
    DecodeError,
    ConditionViolated,
    NotACube,
    Degenerate,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (the CLI, the Python bindings) can map it without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace lwhss

#endif  // LWHSS_ERROR_HPP
