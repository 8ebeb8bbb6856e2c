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
 * @file codes.hpp
 * @brief Linear codes carrying a server labeling, and the concrete families used to build HSS schemes.
 *
 * The labelweight of a word is the number of distinct servers owning a nonzero coordinate; the
 * minimum labelweight of a code is taken over its nonzero codewords. Under the identity labeling this
 * is the Hamming weight / minimum distance.
 */

#ifndef LWHSS_CODES_HPP
#define LWHSS_CODES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lwhss/galois.hpp"
#include "lwhss/labeling.hpp"
#include "lwhss/matrix.hpp"
#include "lwhss/polynomial.hpp"

namespace lwhss {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<std::int64_t>;

/// Default cap on q^dim for exhaustive codeword enumeration.
inline constexpr std::uint64_t kLabelweightBudget = std::uint64_t{1} << 24;

/// Generator matrix (full row rank) plus a labeling of its columns.
class LabeledCode {
public:
    LabeledCode(Matrix generator, Labeling labeling);

    const Field& field() const noexcept { return generator_.field(); }
    const Matrix& generator() const noexcept { return generator_; }
    const Labeling& labeling() const noexcept { return labeling_; }
    std::size_t length() const noexcept { return generator_.cols(); }
    std::size_t dimension() const noexcept { return generator_.rows(); }
    std::size_t servers() const noexcept { return labeling_.servers(); }
    Rational rate() const;

    Vector encode(std::span<const Code> message) const { return generator_.apply_left(message); }

private:
    Matrix generator_;
    Labeling labeling_;
};

std::size_t labelweight(const LabeledCode& code, std::span<const Code> word);

/**
 * Minimum labelweight over all q^dim - 1 nonzero codewords, by exhaustive enumeration.
 * Throws EnumerationBudgetExceeded when q^dim > budget.
 */
std::size_t min_labelweight(const LabeledCode& code, std::uint64_t budget = kLabelweightBudget);

/// Minimum labelweight of xG over nonzero messages x for an arbitrary matrix; 0 when G is rank deficient.
std::size_t min_message_labelweight(const Matrix& generator, const Labeling& labeling,
                                    std::uint64_t budget = kLabelweightBudget);

/// Number of codewords min_labelweight would visit, saturating at UINT64_MAX.
std::uint64_t codeword_count(const LabeledCode& code);

/// Size of the labelweight ball of radius r under the balanced labeling with s blocks of width w.
BigInt ball_volume(std::uint64_t s, std::uint64_t w, std::uint64_t q, std::uint64_t r);

// ---------------------------------------------------------------------------------------------
// Binary Goppa codes

/// 2r - 2 < (2^u - 1) / 2^(u/2), decided in exact integer arithmetic.
bool goppa_condition(unsigned u, std::size_t r);

struct GoppaCode {
    Field extension;            ///< GF(2^u)
    Polynomial polynomial;      ///< g(x)
    std::vector<Code> support;  ///< alpha_1..alpha_n, increasing
    Matrix parity_check;        ///< r x n over GF(2^u): H[j][i] = alpha_i^j / g(alpha_i)
    Matrix binary_parity_check; ///< (u r) x n over GF(2), bit b of H[j][i] in row j*u + b
    LabeledCode code;           ///< binary kernel, identity labeling
};

/**
 * Binary Goppa code of length |support| defined by g over GF(2^u).
 *
 * With no polynomial, g is the lexicographically smallest monic irreducible of degree r avoiding the
 * support. With no support, the support is all of GF(2^u); for r = 1 the root of g is dropped from it.
 */
GoppaCode goppa_build(unsigned u, std::size_t r, std::optional<Polynomial> polynomial = std::nullopt,
                      std::optional<std::vector<Code>> support = std::nullopt);

// ---------------------------------------------------------------------------------------------
// Hermitian one-point codes over GF(q^2)

struct AffinePoint {
    Code x;
    Code y;
    friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

/// GF(q^2) for a prime power q.
Field hermitian_field(std::uint32_t q);

/// Affine solutions of y^q + y = x^(q+1) over GF(q^2), ordered by (x, y).
std::vector<AffinePoint> hermitian_points(std::uint32_t q);

/// Exponents (a, b) of the first k monomials x^a y^b, b < q, in increasing pole order aq + b(q+1).
std::vector<std::pair<std::size_t, std::size_t>> hermitian_basis(std::uint32_t q, std::size_t k);

/// q^3 - k - q(q-1)/2 + 1.
std::int64_t hermitian_designed_distance(std::uint32_t q, std::size_t k);

/// [q^3, k] one-point Hermitian code with identity labeling. Requires 1 <= k <= q^3 - q(q-1)/2.
LabeledCode hermitian_build(std::uint32_t q, std::size_t k);

// ---------------------------------------------------------------------------------------------
// Reed-Solomon baseline

/// Evaluations of 1, x, ..., x^(k-1) at the field elements with codes 0..n-1. Requires k <= n <= q.
LabeledCode rs_build(std::uint32_t q, std::size_t n, std::size_t k);

}  // namespace lwhss

#endif  // LWHSS_CODES_HPP
