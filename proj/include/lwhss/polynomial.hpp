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

#ifndef LWHSS_POLYNOMIAL_HPP
#define LWHSS_POLYNOMIAL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lwhss/galois.hpp"

namespace lwhss {

/// Univariate polynomial over a Field, constant term first, trailing zeros trimmed.
class Polynomial {
public:
    explicit Polynomial(Field field);
    Polynomial(Field field, std::vector<Code> coeffs);

    static Polynomial monomial(Field field, std::size_t degree, Code coeff = 1);

    const Field& field() const noexcept { return field_; }
    /// std::nullopt stands for the degree of the zero polynomial (negative infinity).
    std::optional<std::size_t> degree() const noexcept;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
    const std::vector<Code>& coefficients() const noexcept { return coeffs_; }
    Code coefficient(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Code leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

    Code eval(Code at) const;
    bool has_root_in(std::span<const Code> points) const;
    Polynomial make_monic() const;
    Polynomial scaled(Code c) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    std::string to_string() const;

private:
    void trim();

    Field field_;
    std::vector<Code> coeffs_;
};

/// Euclidean division: a = quotient * b + remainder with deg(remainder) < deg(b).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Root check for degree <= 3, trial division by every monic polynomial of degree <= r/2 otherwise.
bool is_irreducible(const Polynomial& f);

enum class IrreducibleSearch { LexicographicSmallest, SeededRandom };

/**
 * A monic irreducible polynomial of degree r over `base` that has no root in `exclude`.
 *
 * LexicographicSmallest walks candidates x^r + c_{r-1}x^{r-1} + ... + c_0 in increasing order of
 * the base-q integer c_0 + c_1 q + ... (deterministic). SeededRandom draws candidates from a
 * 64-bit Mersenne Twister seeded with `seed`.
 */
Polynomial find_irreducible(const Field& base, std::size_t r,
                            IrreducibleSearch strategy = IrreducibleSearch::LexicographicSmallest,
                            std::uint64_t seed = 0, std::span<const Code> exclude = {});

}  // namespace lwhss

#endif  // LWHSS_POLYNOMIAL_HPP
