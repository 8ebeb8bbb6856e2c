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

#include <string>

#include "lwhss/codes.hpp"
#include "lwhss/error.hpp"

namespace lwhss {

namespace {

std::pair<std::uint32_t, unsigned> require_prime_power(std::uint64_t q) {
    const auto pp = prime_power(q);
    if (pp.first == 0) fail(ErrorKind::ParameterOutOfRange, std::to_string(q) + " is not a prime power");
    return pp;
}

}  // namespace

Field hermitian_field(std::uint32_t q) {
    const auto [p, e] = require_prime_power(q);
    return Field::make(p, 2 * e);
}

std::vector<AffinePoint> hermitian_points(std::uint32_t q) {
    const Field f = hermitian_field(q);
    std::vector<AffinePoint> points;
    for (Code x = 0; x < f.order(); ++x) {
        const Code rhs = f.pow(x, q + 1);
        for (Code y = 0; y < f.order(); ++y)
            if (f.add(f.pow(y, q), y) == rhs) points.push_back({x, y});
    }
    return points;
}

std::vector<std::pair<std::size_t, std::size_t>> hermitian_basis(std::uint32_t q, std::size_t k) {
    // Pole orders aq + b(q+1) with b < q are pairwise distinct, so walking orders upward and
    // solving for (a, b) lists each monomial once.
    std::vector<std::pair<std::size_t, std::size_t>> basis;
    for (std::size_t order = 0; basis.size() < k; ++order)
        for (std::size_t b = 0; b < q; ++b) {
            const std::size_t used = b * (q + 1);
            if (used > order || (order - used) % q != 0) continue;
            basis.emplace_back((order - used) / q, b);
            break;
        }
    return basis;
}

std::int64_t hermitian_designed_distance(std::uint32_t q, std::size_t k) {
    const std::int64_t n = std::int64_t{q} * q * q;
    return n - static_cast<std::int64_t>(k) - std::int64_t{q} * (q - 1) / 2 + 1;
}

LabeledCode hermitian_build(std::uint32_t q, std::size_t k) {
    require_prime_power(q);
    const std::size_t n = std::size_t{q} * q * q;
    const std::size_t genus = std::size_t{q} * (q - 1) / 2;
    if (k < 1 || k > n - genus)
        fail(ErrorKind::ParameterOutOfRange, "Hermitian code dimension k=" + std::to_string(k) + " outside [1, " +
                                                 std::to_string(n - genus) + "] for q=" + std::to_string(q));
    const Field f = hermitian_field(q);
    const auto points = hermitian_points(q);
    const auto basis = hermitian_basis(q, k);
    Matrix g(f, k, n);
    for (std::size_t row = 0; row < k; ++row) {
        const auto [a, b] = basis[row];
        for (std::size_t c = 0; c < n; ++c) g(row, c) = f.mul(f.pow(points[c].x, a), f.pow(points[c].y, b));
    }
    return LabeledCode(std::move(g), Labeling::identity(n));
}

LabeledCode rs_build(std::uint32_t q, std::size_t n, std::size_t k) {
    const auto [p, e] = require_prime_power(q);
    if (k < 1 || k > n || n > q)
        fail(ErrorKind::ParameterOutOfRange, "Reed-Solomon needs 1 <= k <= n <= q, got [n,k]=[" + std::to_string(n) +
                                                 "," + std::to_string(k) + "] over q=" + std::to_string(q));
    const Field f = Field::make(p, e);
    Matrix g(f, k, n);
    for (std::size_t c = 0; c < n; ++c) {
        Code power = 1;
        for (std::size_t row = 0; row < k; ++row) {
            g(row, c) = power;
            power = f.mul(power, static_cast<Code>(c));
        }
    }
    return LabeledCode(std::move(g), Labeling::identity(n));
}

}  // namespace lwhss
