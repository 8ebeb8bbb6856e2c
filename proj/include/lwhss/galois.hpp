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
 * @file galois.hpp
 * @brief Finite fields GF(p^k) in the polynomial basis.
 *
 * An element of GF(p^k) = GF(p)[x]/(m(x)) is a coefficient vector (c_0, ..., c_{k-1}) over GF(p),
 * constant term first. Throughout the library such a vector is packed into one integer
 *
 *     code = c_0 + c_1 p + c_2 p^2 + ... + c_{k-1} p^{k-1},
 *
 * so two elements are equal iff their codes are equal, and "lexicographic order" on elements is the
 * numeric order of codes. Hot loops (matrices, enumeration, Eval) work on raw codes through the Field
 * handle; FieldElement is the checked value type for the public API.
 */

#ifndef LWHSS_GALOIS_HPP
#define LWHSS_GALOIS_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lwhss {

/// Packed coefficient vector of a field element (see file comment).
using Code = std::uint32_t;

/**
 * Immutable handle to GF(p^k) with an explicit monic irreducible modulus.
 *
 * Copies share one immutable description, so a Field may be passed around by value and read
 * concurrently. Two handles compare equal iff p, k and the modulus agree.
 */
class Field {
public:
    /// GF(p^k) with the lexicographically smallest monic irreducible modulus of degree k.
    static Field make(std::uint32_t p, unsigned k = 1);

    /// GF(p^k) for an explicit modulus (constant term first, monic, degree k). Verifies irreducibility.
    static Field with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

    /// Parses the textual form produced by to_string(): `GF(p^k)/modulus=[c0,c1,...,ck]`.
    static Field parse(std::string_view text);

    std::uint32_t characteristic() const noexcept;
    unsigned degree() const noexcept;
    std::uint32_t order() const noexcept;
    const std::vector<std::uint32_t>& modulus() const noexcept;
    std::string to_string() const;

    /// Bytes of the fixed-width little-endian wire encoding: ceil(k log2(p) / 8).
    unsigned element_bytes() const noexcept;
    /// log2(q), the information content of one symbol.
    double bits_per_symbol() const noexcept;

    bool contains(Code a) const noexcept { return a < order(); }
    Code zero() const noexcept { return 0; }
    Code one() const noexcept { return 1; }

    Code add(Code a, Code b) const;
    Code sub(Code a, Code b) const;
    Code neg(Code a) const;
    Code mul(Code a, Code b) const;
    Code inv(Code a) const;  ///< throws DivisionByZero for a == 0
    Code div(Code a, Code b) const;
    Code pow(Code a, std::uint64_t e) const;

    /// The element c*1 for an integer c (reduced mod p).
    Code from_integer(std::uint64_t c) const;
    std::vector<std::uint32_t> coefficients(Code a) const;
    Code from_coefficients(std::span<const std::uint32_t> coeffs) const;

    friend bool operator==(const Field& a, const Field& b) noexcept;

    struct Impl;

private:
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// Throws FieldMismatch unless the two handles describe the same field.
void require_same_field(const Field& a, const Field& b);

/// Checked element value: field handle plus packed coefficient vector.
class FieldElement {
public:
    FieldElement(Field field, Code code);

    const Field& field() const noexcept { return field_; }
    Code code() const noexcept { return code_; }
    std::vector<std::uint32_t> coefficients() const { return field_.coefficients(code_); }
    bool is_zero() const noexcept { return code_ == 0; }

    FieldElement inv() const;
    FieldElement pow(std::uint64_t e) const;

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    Field field_;
    Code code_;
};

/// Returns (p, e) if q = p^e for a prime p, otherwise (0, 0).
std::pair<std::uint32_t, unsigned> prime_power(std::uint64_t q);
bool is_prime(std::uint64_t n);

}  // namespace lwhss

#endif  // LWHSS_GALOIS_HPP
