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

#include "lwhss/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "lwhss/error.hpp"
#include "lwhss/random.hpp"

namespace lwhss {

Polynomial::Polynomial(Field field) : field_(std::move(field)) {}

Polynomial::Polynomial(Field field, std::vector<Code> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (Code c : coeffs_)
        if (!field_.contains(c)) fail(ErrorKind::ParameterOutOfRange, "coefficient outside " + field_.to_string());
    trim();
}

Polynomial Polynomial::monomial(Field field, std::size_t degree, Code coeff) {
    std::vector<Code> c(degree + 1, 0);
    c[degree] = coeff;
    return Polynomial(std::move(field), std::move(c));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Code Polynomial::eval(Code at) const {
    Code acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, at), *it);
    return acc;
}

bool Polynomial::has_root_in(std::span<const Code> points) const {
    return std::any_of(points.begin(), points.end(), [&](Code a) { return eval(a) == 0; });
}

Polynomial Polynomial::scaled(Code c) const {
    std::vector<Code> out(coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.mul(coeffs_[i], c);
    return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::make_monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading()));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field_, b.field_);
    std::vector<Code> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_.add(a.coefficient(i), b.coefficient(i));
    return Polynomial(a.field_, std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field_, b.field_);
    std::vector<Code> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_.sub(a.coefficient(i), b.coefficient(i));
    return Polynomial(a.field_, std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field_, b.field_);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    const Field& f = a.field_;
    std::vector<Code> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    return Polynomial(f, std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    require_same_field(a.field(), b.field());
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    const Field& f = a.field();
    const auto db = *b.degree();
    std::vector<Code> rem = a.coefficients();
    if (rem.size() <= db) return {Polynomial(f), a};
    std::vector<Code> quot(rem.size() - db, 0);
    const Code lead_inv = f.inv(b.leading());
    for (std::size_t top = rem.size(); top-- > db;) {
        const Code c = f.mul(rem[top], lead_inv);
        if (c == 0) continue;
        quot[top - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            rem[top - db + j] = f.sub(rem[top - db + j], f.mul(c, b.coefficient(j)));
    }
    rem.resize(db);
    return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.make_monic();
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (coeffs_[i] != 1 || i == 0) os << '[' << coeffs_[i] << ']';
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

namespace {

// Advance a base-q little-endian digit vector; false on wrap-around.
bool next_digits(std::vector<Code>& digits, std::uint32_t q) {
    for (auto& d : digits) {
        if (++d < q) return true;
        d = 0;
    }
    return false;
}

}  // namespace

bool is_irreducible(const Polynomial& f) {
    const auto deg = f.degree();
    if (!deg || *deg == 0) return false;
    if (*deg == 1) return true;
    const Field& field = f.field();
    const std::uint32_t q = field.order();
    if (*deg <= 3) {
        for (Code a = 0; a < q; ++a)
            if (f.eval(a) == 0) return false;
        return true;
    }
    for (std::size_t d = 1; d <= *deg / 2; ++d) {
        std::vector<Code> low(d, 0);
        do {
            std::vector<Code> c = low;
            c.push_back(1);
            if ((f % Polynomial(field, std::move(c))).is_zero()) return false;
        } while (next_digits(low, q));
    }
    return true;
}

Polynomial find_irreducible(const Field& base, std::size_t r, IrreducibleSearch strategy, std::uint64_t seed,
                            std::span<const Code> exclude) {
    if (r == 0) fail(ErrorKind::ParameterOutOfRange, "irreducible polynomial degree must be >= 1");
    const std::uint32_t q = base.order();
    auto accept = [&](std::vector<Code> low) -> std::optional<Polynomial> {
        low.push_back(1);
        Polynomial cand(base, std::move(low));
        if (cand.has_root_in(exclude)) return std::nullopt;
        if (!is_irreducible(cand)) return std::nullopt;
        return cand;
    };
    if (strategy == IrreducibleSearch::LexicographicSmallest) {
        std::vector<Code> low(r, 0);
        do {
            if (auto p = accept(low)) return *p;
        } while (next_digits(low, q));
        fail(ErrorKind::ParameterOutOfRange, "no monic irreducible of degree " + std::to_string(r) +
                                                 " avoids the exclusion set");
    }
    RandomStream rng(seed);
    // A uniform monic polynomial is irreducible with probability about 1/r; give up only when every
    // candidate is excluded, which is the degree-1 case with the whole field excluded.
    if (r == 1 && exclude.size() >= q) {
        std::vector<bool> seen(q, false);
        std::size_t distinct = 0;
        for (Code a : exclude)
            if (a < q && !seen[a]) seen[a] = true, ++distinct;
        if (distinct == q) fail(ErrorKind::ParameterOutOfRange, "every linear polynomial has a root in the exclusion set");
    }
    while (true) {
        std::vector<Code> low(r);
        for (auto& c : low) c = rng.element(base);
        if (auto p = accept(std::move(low))) return *p;
    }
}

}  // namespace lwhss
