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

#include <algorithm>
#include <string>

#include "lwhss/codes.hpp"
#include "lwhss/error.hpp"

namespace lwhss {

bool goppa_condition(unsigned u, std::size_t r) {
    if (u == 0 || r == 0) fail(ErrorKind::ParameterOutOfRange, "goppa_condition needs u, r >= 1");
    // 2r-2 < (2^u-1)/2^(u/2)  <=>  (2r-2)^2 * 2^u < (2^u-1)^2, both sides non-negative.
    const BigInt two_u = BigInt(1) << u;
    const BigInt lhs = BigInt(2 * r - 2) * BigInt(2 * r - 2) * two_u;
    const BigInt rhs = (two_u - 1) * (two_u - 1);
    return lhs < rhs;
}

GoppaCode goppa_build(unsigned u, std::size_t r, std::optional<Polynomial> polynomial,
                      std::optional<std::vector<Code>> support) {
    if (u == 0 || u > 20) fail(ErrorKind::ParameterOutOfRange, "u must be in [1, 20]");
    if (r == 0) fail(ErrorKind::ParameterOutOfRange, "Goppa polynomial degree must be >= 1");
    const Field ext = Field::make(2, u);
    const Field binary = Field::make(2, 1);

    std::vector<Code> all(ext.order());
    for (Code a = 0; a < ext.order(); ++a) all[a] = a;

    Polynomial g(ext);
    if (polynomial) {
        require_same_field(polynomial->field(), ext);
        g = *polynomial;
        if (g.degree() != r)
            fail(ErrorKind::BadGoppaPolynomial, "polynomial has degree " +
                                                    (g.degree() ? std::to_string(*g.degree()) : std::string("-inf")) +
                                                    ", expected " + std::to_string(r));
    } else if (support) {
        g = find_irreducible(ext, r, IrreducibleSearch::LexicographicSmallest, 0, *support);
    } else if (r == 1) {
        g = find_irreducible(ext, 1);
    } else {
        g = find_irreducible(ext, r, IrreducibleSearch::LexicographicSmallest, 0, all);
    }
    if (!polynomial && !is_irreducible(g)) fail(ErrorKind::BadGoppaPolynomial, "search returned a reducible polynomial");

    std::vector<Code> points;
    if (support) {
        points = *support;
        std::sort(points.begin(), points.end());
        if (std::adjacent_find(points.begin(), points.end()) != points.end())
            fail(ErrorKind::ParameterOutOfRange, "support has repeated points");
        for (Code a : points)
            if (!ext.contains(a)) fail(ErrorKind::ParameterOutOfRange, "support point outside GF(2^u)");
    } else {
        for (Code a : all)
            if (r != 1 || g.eval(a) != 0) points.push_back(a);
    }
    for (Code a : points)
        if (g.eval(a) == 0)
            fail(ErrorKind::BadGoppaPolynomial, "g vanishes at support point " + std::to_string(a));
    const std::size_t n = points.size();
    if (n == 0) fail(ErrorKind::ParameterOutOfRange, "empty support");

    Matrix h(ext, r, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Code scale = ext.inv(g.eval(points[i]));
        Code power = 1;
        for (std::size_t j = 0; j < r; ++j) {
            h(j, i) = ext.mul(power, scale);
            power = ext.mul(power, points[i]);
        }
    }
    Matrix hb(binary, r * u, n);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            const Code e = h(j, i);
            for (unsigned b = 0; b < u; ++b) hb(j * u + b, i) = (e >> b) & 1u;
        }
    const std::vector<Vector> kernel = kernel_basis(hb);
    if (kernel.empty()) fail(ErrorKind::Degenerate, "Goppa code is the zero code");
    Matrix gen = Matrix::from_rows(binary, kernel, n);
    LabeledCode code(std::move(gen), Labeling::identity(n));
    return GoppaCode{ext, std::move(g), std::move(points), std::move(h), std::move(hb), std::move(code)};
}

}  // namespace lwhss
