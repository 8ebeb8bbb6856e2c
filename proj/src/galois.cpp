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

#include "lwhss/galois.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "lwhss/error.hpp"
#include "lwhss/polynomial.hpp"

namespace lwhss {

namespace {

constexpr unsigned kMaxDegree = 31;
// Fields up to this order get full multiplication / inversion tables.
constexpr std::uint32_t kTableOrder = 256;

using Digits = std::array<std::uint32_t, 2 * kMaxDegree>;

}  // namespace

struct Field::Impl {
    std::uint32_t p = 2;
    unsigned k = 1;
    std::uint32_t q = 2;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> powers;  // p^i, i < k
    std::uint32_t modulus_bits = 0;     // p == 2 only: modulus with the x^k term dropped
    std::vector<Code> mul_table;
    std::vector<Code> inv_table;

    void unpack(Code a, std::uint32_t* out) const {
        for (unsigned i = 0; i < k; ++i) {
            out[i] = a % p;
            a /= p;
        }
    }

    Code pack(const std::uint32_t* digits) const {
        Code c = 0;
        for (unsigned i = k; i-- > 0;) c = c * p + digits[i];
        return c;
    }

    Code add(Code a, Code b) const {
        if (p == 2) return a ^ b;
        if (k == 1) return static_cast<Code>((std::uint64_t{a} + b) % p);
        Code c = 0;
        for (unsigned i = 0; i < k; ++i) {
            c += ((a % p + b % p) % p) * powers[i];
            a /= p;
            b /= p;
        }
        return c;
    }

    Code neg(Code a) const {
        if (p == 2) return a;
        Code c = 0;
        for (unsigned i = 0; i < k; ++i) {
            c += ((p - a % p) % p) * powers[i];
            a /= p;
        }
        return c;
    }

    Code mul_direct(Code a, Code b) const {
        if (p == 2) {
            Code result = 0;
            Code shifted = a;
            const Code top = Code{1} << k;
            while (b != 0) {
                if (b & 1u) result ^= shifted;
                b >>= 1;
                shifted <<= 1;
                if (shifted & top) shifted ^= top | modulus_bits;
            }
            return result;
        }
        if (k == 1) return static_cast<Code>((std::uint64_t{a} * b) % p);
        Digits x{}, y{}, prod{};
        unpack(a, x.data());
        unpack(b, y.data());
        for (unsigned i = 0; i < k; ++i) {
            if (x[i] == 0) continue;
            for (unsigned j = 0; j < k; ++j)
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p);
        }
        for (unsigned top = 2 * k - 1; top-- > k;) {
            const std::uint32_t c = prod[top];
            if (c == 0) continue;
            for (unsigned j = 0; j <= k; ++j) {
                const std::uint64_t sub = (std::uint64_t{c} * modulus[j]) % p;
                prod[top - k + j] = static_cast<std::uint32_t>((prod[top - k + j] + p - sub) % p);
            }
        }
        return pack(prod.data());
    }

    Code pow_direct(Code a, std::uint64_t e) const {
        Code result = 1;
        while (e != 0) {
            if (e & 1u) result = mul_direct(result, a);
            a = mul_direct(a, a);
            e >>= 1;
        }
        return result;
    }

    Code mul(Code a, Code b) const {
        if (!mul_table.empty()) return mul_table[std::size_t{a} * q + b];
        return mul_direct(a, b);
    }

    Code inv(Code a) const {
        if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in " + describe());
        if (!inv_table.empty()) return inv_table[a];
        return pow_direct(a, q - 2);
    }

    std::string describe() const {
        std::ostringstream os;
        os << "GF(" << p << '^' << k << ")/modulus=[";
        for (std::size_t i = 0; i < modulus.size(); ++i) os << (i ? "," : "") << modulus[i];
        os << ']';
        return os.str();
    }
};

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<std::uint32_t, unsigned> prime_power(std::uint64_t q) {
    if (q < 2) return {0, 0};
    std::uint64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    unsigned e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    if (q != 1) return {0, 0};
    return {static_cast<std::uint32_t>(p), e};
}

Field Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) fail(ErrorKind::ParameterOutOfRange, "characteristic " + std::to_string(p) + " is not prime");
    if (modulus.size() < 2 || modulus.size() - 1 > kMaxDegree)
        fail(ErrorKind::ParameterOutOfRange, "modulus degree must be in [1, 31]");
    if (modulus.back() != 1) fail(ErrorKind::ParameterOutOfRange, "modulus must be monic");
    for (auto c : modulus)
        if (c >= p) fail(ErrorKind::ParameterOutOfRange, "modulus coefficient out of range");

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->k = static_cast<unsigned>(modulus.size() - 1);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < impl->k; ++i) {
        impl->powers.push_back(static_cast<std::uint32_t>(q));
        q *= p;
        if (q >= (std::uint64_t{1} << 31)) fail(ErrorKind::ParameterOutOfRange, "field order must be below 2^31");
    }
    impl->q = static_cast<std::uint32_t>(q);
    impl->modulus = std::move(modulus);
    if (p == 2)
        for (unsigned i = 0; i < impl->k; ++i) impl->modulus_bits |= impl->modulus[i] << i;

    if (impl->k > 1) {
        const Field prime = Field::make(p, 1);
        std::vector<Code> coeffs(impl->modulus.begin(), impl->modulus.end());
        if (!is_irreducible(Polynomial(prime, std::move(coeffs))))
            fail(ErrorKind::ParameterOutOfRange, "modulus of " + impl->describe() + " is reducible");
    }

    if (impl->q <= kTableOrder) {
        const std::uint32_t n = impl->q;
        impl->mul_table.resize(std::size_t{n} * n);
        for (Code a = 0; a < n; ++a)
            for (Code b = a; b < n; ++b) {
                const Code c = impl->mul_direct(a, b);
                impl->mul_table[std::size_t{a} * n + b] = c;
                impl->mul_table[std::size_t{b} * n + a] = c;
            }
        impl->inv_table.assign(n, 0);
        for (Code a = 1; a < n; ++a)
            for (Code b = 1; b < n; ++b)
                if (impl->mul_table[std::size_t{a} * n + b] == 1) {
                    impl->inv_table[a] = b;
                    break;
                }
    }
    return Field(std::move(impl));
}

Field Field::make(std::uint32_t p, unsigned k) {
    if (k == 0) fail(ErrorKind::ParameterOutOfRange, "extension degree must be >= 1");
    if (k == 1) return with_modulus(p, {0, 1});
    if (!is_prime(p)) fail(ErrorKind::ParameterOutOfRange, "characteristic " + std::to_string(p) + " is not prime");
    const Field prime = make(p, 1);
    const Polynomial m = find_irreducible(prime, k);
    return with_modulus(p, std::vector<std::uint32_t>(m.coefficients().begin(), m.coefficients().end()));
}

Field Field::parse(std::string_view text) {
    auto bad = [&]() -> Field { fail(ErrorKind::ParseError, "bad field spec '" + std::string(text) + "'"); };
    auto read_uint = [&](std::string_view& s, std::uint32_t& out) {
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        if (ec != std::errc{} || ptr == s.data()) bad();
        s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    };
    auto expect = [&](std::string_view& s, std::string_view lit) {
        if (s.substr(0, lit.size()) != lit) bad();
        s.remove_prefix(lit.size());
    };
    std::string_view s = text;
    std::uint32_t p = 0, k = 0;
    expect(s, "GF(");
    read_uint(s, p);
    expect(s, "^");
    read_uint(s, k);
    expect(s, ")/modulus=[");
    std::vector<std::uint32_t> modulus;
    while (true) {
        std::uint32_t c = 0;
        read_uint(s, c);
        modulus.push_back(c);
        if (!s.empty() && s.front() == ',') {
            s.remove_prefix(1);
            continue;
        }
        break;
    }
    expect(s, "]");
    if (!s.empty() || modulus.size() != k + 1) bad();
    return with_modulus(p, std::move(modulus));
}

std::uint32_t Field::characteristic() const noexcept { return impl_->p; }
unsigned Field::degree() const noexcept { return impl_->k; }
std::uint32_t Field::order() const noexcept { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return impl_->modulus; }
std::string Field::to_string() const { return impl_->describe(); }

unsigned Field::element_bytes() const noexcept {
    unsigned bytes = 1;
    std::uint64_t capacity = 256;
    while (capacity < impl_->q) {
        capacity <<= 8;
        ++bytes;
    }
    return bytes;
}

double Field::bits_per_symbol() const noexcept { return std::log2(static_cast<double>(impl_->q)); }

Code Field::add(Code a, Code b) const { return impl_->add(a, b); }
Code Field::sub(Code a, Code b) const { return impl_->add(a, impl_->neg(b)); }
Code Field::neg(Code a) const { return impl_->neg(a); }
Code Field::mul(Code a, Code b) const { return impl_->mul(a, b); }
Code Field::inv(Code a) const { return impl_->inv(a); }
Code Field::div(Code a, Code b) const { return impl_->mul(a, impl_->inv(b)); }

Code Field::pow(Code a, std::uint64_t e) const {
    Code result = 1;
    while (e != 0) {
        if (e & 1u) result = impl_->mul(result, a);
        a = impl_->mul(a, a);
        e >>= 1;
    }
    return result;
}

Code Field::from_integer(std::uint64_t c) const { return static_cast<Code>(c % impl_->p); }

std::vector<std::uint32_t> Field::coefficients(Code a) const {
    std::vector<std::uint32_t> out(impl_->k);
    impl_->unpack(a, out.data());
    return out;
}

Code Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > impl_->k) fail(ErrorKind::DimensionMismatch, "too many coefficients for " + to_string());
    Code c = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] >= impl_->p) fail(ErrorKind::ParameterOutOfRange, "coefficient not reduced mod p");
        c += coeffs[i] * impl_->powers[i];
    }
    return c;
}

bool operator==(const Field& a, const Field& b) noexcept {
    if (a.impl_ == b.impl_) return true;
    return a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus;
}

void require_same_field(const Field& a, const Field& b) {
    if (!(a == b)) fail(ErrorKind::FieldMismatch, a.to_string() + " vs " + b.to_string());
}

FieldElement::FieldElement(Field field, Code code) : field_(std::move(field)), code_(code) {
    if (!field_.contains(code_))
        fail(ErrorKind::ParameterOutOfRange, "code " + std::to_string(code) + " outside " + field_.to_string());
}

FieldElement FieldElement::inv() const { return {field_, field_.inv(code_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_.pow(code_, e)}; }
FieldElement FieldElement::operator-() const { return {field_, field_.neg(code_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_.add(a.code_, b.code_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_.sub(a.code_, b.code_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_.mul(a.code_, b.code_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_.div(a.code_, b.code_)};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_);
    return a.code_ == b.code_;
}

}  // namespace lwhss
