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

/**
 * @file io.hpp
 * @brief Line-oriented text formats for codes and schemes.
 *
 * Code document:
 *
 *     labelweight-code/v1
 *     field GF(2^2)/modulus=[1,1,1]
 *     length 8
 *     dimension 5
 *     servers 8
 *     labels 0 1 2 3 4 5 6 7
 *     row 1 1 1 1 1 1 1 1
 *     ...                                 (one row line per generator row)
 *     end
 *
 * Scheme document: a `labelweight-hss-scheme/v1` header, `params s t d l m`, `selection ...`,
 * `labelweight verified <w>` or `labelweight asserted`, the embedded code document, then
 * `terms <count>` followed by `term <r> <i> <T_1>;...;<T_d> <coefficient>` lines ordered by
 * coordinate and monomial index. Each T_k is written as comma-separated server ids.
 * Writing a parsed document reproduces it byte for byte.
 */

#ifndef LWHSS_IO_HPP
#define LWHSS_IO_HPP

#include <string>

#include "lwhss/codes.hpp"
#include "lwhss/hss.hpp"

namespace lwhss {

std::string write_code(const LabeledCode& code);
/// Throws ParseError on malformed input; the usual construction errors otherwise.
LabeledCode read_code(const std::string& text);

std::string write_scheme(const HssScheme& scheme);
HssScheme read_scheme(const std::string& text);

}  // namespace lwhss

#endif  // LWHSS_IO_HPP
