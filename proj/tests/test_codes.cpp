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

#include <map>

#include "doctest.h"
#include "lwhss/codes.hpp"
#include "oracles.hpp"

using namespace lwhss;

namespace {

// Smallest-degree-below-r polynomial h with (x - a) h = 1 mod g, found by search.
Polynomial inverse_linear_mod(const Polynomial& g, Code a) {
    const Field& f = g.field();
    const std::size_t r = *g.degree();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < r; ++i) total *= f.order();
    const Polynomial lin(f, {f.neg(a), 1});
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<Code> c(r);
        std::uint64_t v = idx;
        for (auto& ci : c) {
            ci = static_cast<Code>(v % f.order());
            v /= f.order();
        }
        const Polynomial h(f, c);
        if ((lin * h) % g == Polynomial(f, {1})) return h;
    }
    throw std::runtime_error("no inverse");
}

// Sum of c_i / (x - alpha_i) modulo g, for a binary word c.
bool goppa_syndrome_zero(const GoppaCode& gc, std::span<const Code> word) {
    Polynomial acc(gc.extension);
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] != 0) acc = acc + inverse_linear_mod(gc.polynomial, gc.support[i]);
    return (acc % gc.polynomial).is_zero();
}

}  // namespace

TEST_CASE("labeled code validation") {
    const Field f = Field::make(2);
    CHECK(oracle::error_of([&] { LabeledCode(Matrix::from_rows(f, {{1, 1}, {1, 1}}, 2), Labeling::identity(2)); }) ==
          ErrorKind::ParameterOutOfRange);
    CHECK(oracle::error_of([&] { LabeledCode(Matrix::from_rows(f, {{1, 1}}, 2), Labeling::identity(3)); }) ==
          ErrorKind::DimensionMismatch);
    const LabeledCode rep(Matrix::from_rows(f, {{1, 1}}, 2), Labeling::identity(2));
    CHECK(rep.rate() == Rational(1, 2));
    CHECK(rep.encode(std::vector<Code>{1}) == Vector{1, 1});
    CHECK(min_labelweight(rep) == 2);
}

TEST_CASE("labelweight under a non-trivial labeling") {
    const Field f = Field::make(2);
    // Coordinates 0,1 belong to server 0, coordinates 2,3 to server 1.
    const LabeledCode code(Matrix::from_rows(f, {{1, 1, 0, 0}, {0, 1, 1, 0}}, 4), Labeling::balanced(2, 2));
    CHECK(labelweight(code, std::vector<Code>{1, 1, 0, 0}) == 1);
    CHECK(min_labelweight(code) == 1);
    CHECK(min_labelweight(code) == oracle::min_labelweight(code));
    const LabeledCode spread(Matrix::from_rows(f, {{1, 0, 1, 0}, {0, 1, 0, 1}}, 4), Labeling::balanced(2, 2));
    CHECK(min_labelweight(spread) == 2);
    CHECK(oracle::error_of([&] { min_labelweight(spread, 3); }) == ErrorKind::EnumerationBudgetExceeded);
}

TEST_CASE("rank-deficient generators report labelweight zero") {
    const Field f = Field::make(3);
    const Matrix g = Matrix::from_rows(f, {{1, 2, 0}, {2, 1, 0}}, 3);
    CHECK(min_message_labelweight(g, Labeling::identity(3)) == 0);
}

TEST_CASE("goppa condition in exact arithmetic") {
    CHECK(goppa_condition(3, 1));
    CHECK(goppa_condition(4, 2));
    CHECK(goppa_condition(6, 4));
    CHECK_FALSE(goppa_condition(5, 4));  // 36*32 = 1152 >= 961
    CHECK_FALSE(goppa_condition(2, 2));  // 4*4 = 16 >= 9
    CHECK(goppa_condition(20, 400));
    CHECK_FALSE(goppa_condition(20, 600));
}

TEST_CASE("degree-one Goppa code is the [7,4,3] Hamming code") {
    const GoppaCode gc = goppa_build(3, 1);
    CHECK(gc.polynomial.coefficients() == std::vector<Code>{0, 1});
    CHECK(gc.support.size() == 7);
    CHECK(gc.code.length() == 7);
    CHECK(gc.code.dimension() == 4);
    CHECK(oracle::min_distance(gc.code) == 3);
    CHECK(min_labelweight(gc.code) == 3);
}

TEST_CASE("Goppa u=4, r=2") {
    const GoppaCode gc = goppa_build(4, 2);
    CHECK(gc.code.length() == 16);
    CHECK(gc.code.dimension() == 8);
    CHECK(is_irreducible(gc.polynomial));
    CHECK(gc.binary_parity_check.rows() == 8);
    const std::size_t d = oracle::min_distance(gc.code);
    CHECK(d >= 5);
    CHECK(min_labelweight(gc.code) == d);
    for (std::size_t r = 0; r < gc.code.dimension(); ++r) {
        CHECK(goppa_syndrome_zero(gc, gc.code.generator().row(r)));
        CHECK(gc.binary_parity_check.apply(gc.code.generator().row(r)) == Vector(8, 0));
    }
}

TEST_CASE("Goppa u=6, r=4 has dimension 40") {
    const GoppaCode gc = goppa_build(6, 4);
    CHECK(gc.code.length() == 64);
    CHECK(gc.code.dimension() == 40);
}

TEST_CASE("Goppa errors and explicit inputs") {
    const Field f16 = Field::make(2, 4);
    CHECK(oracle::error_of([&] { goppa_build(4, 2, Polynomial(f16, {0, 0, 1})); }) == ErrorKind::BadGoppaPolynomial);
    CHECK(oracle::error_of([&] { goppa_build(4, 3, Polynomial(f16, {1, 1, 1})); }) == ErrorKind::BadGoppaPolynomial);
    CHECK(oracle::error_of([] { goppa_build(0, 1); }) == ErrorKind::ParameterOutOfRange);
    // x over a support avoiding zero is fine.
    std::vector<Code> support;
    for (Code a = 1; a < 16; ++a) support.push_back(a);
    const GoppaCode gc = goppa_build(4, 1, Polynomial(f16, {0, 1}), support);
    CHECK(gc.code.length() == 15);
    CHECK(gc.code.dimension() == 11);
    const GoppaCode auto_sup = goppa_build(4, 2, std::nullopt, support);
    CHECK(auto_sup.code.length() == 15);
}

TEST_CASE("Hermitian curve points") {
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const auto pts = hermitian_points(q);
        CHECK(pts.size() == q * q * q);
        const Field f = hermitian_field(q);
        for (const auto& pt : pts) CHECK(f.add(f.pow(pt.y, q), pt.y) == f.pow(pt.x, q + 1));
        CHECK(std::is_sorted(pts.begin(), pts.end(),
                             [](const AffinePoint& a, const AffinePoint& b) { return std::pair(a.x, a.y) < std::pair(b.x, b.y); }));
    }
}

TEST_CASE("Hermitian basis by pole order") {
    using E = std::vector<std::pair<std::size_t, std::size_t>>;
    CHECK(hermitian_basis(2, 5) == E{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}});
    CHECK(hermitian_basis(3, 4) == E{{0, 0}, {1, 0}, {0, 1}, {2, 0}});
}

TEST_CASE("Hermitian codes meet the designed distance") {
    const LabeledCode c5 = hermitian_build(2, 5);
    CHECK(c5.length() == 8);
    CHECK(c5.dimension() == 5);
    CHECK(hermitian_designed_distance(2, 5) == 3);
    CHECK(oracle::min_distance(c5) == 3);
    CHECK(min_labelweight(c5) == 3);
    CHECK(oracle::min_distance(hermitian_build(2, 6)) == 2);
    CHECK(min_labelweight(hermitian_build(2, 7)) >= static_cast<std::size_t>(hermitian_designed_distance(2, 7)));
    CHECK(oracle::error_of([] { hermitian_build(2, 8); }) == ErrorKind::ParameterOutOfRange);
    CHECK(oracle::error_of([] { hermitian_build(2, 0); }) == ErrorKind::ParameterOutOfRange);
    CHECK(oracle::error_of([] { hermitian_build(6, 3); }) == ErrorKind::ParameterOutOfRange);
    const LabeledCode c3 = hermitian_build(3, 4);
    CHECK(c3.length() == 27);
    CHECK(min_labelweight(c3) == hermitian_designed_distance(3, 4));
}

TEST_CASE("Reed-Solomon codes are MDS") {
    const LabeledCode rs = rs_build(5, 4, 2);
    CHECK(oracle::min_distance(rs) == 3);
    const LabeledCode rs52 = rs_build(5, 5, 2);
    CHECK(min_labelweight(rs52) == 4);
    CHECK(min_labelweight(rs_build(8, 7, 3)) == 5);
    CHECK(oracle::error_of([] { rs_build(5, 6, 2); }) == ErrorKind::ParameterOutOfRange);
    CHECK(oracle::error_of([] { rs_build(5, 3, 4); }) == ErrorKind::ParameterOutOfRange);
    CHECK(oracle::error_of([] { rs_build(10, 3, 2); }) == ErrorKind::ParameterOutOfRange);
}

TEST_CASE("ball volume matches enumeration") {
    for (std::uint64_t q : {2u, 3u}) {
        for (std::uint64_t s = 1; s <= 8; ++s)
            for (std::uint64_t w = 1; w <= 4; ++w) {
                if (s * w > (q == 2 ? 16u : 8u)) continue;
                for (std::uint64_t r = 0; r <= s; ++r) {
                    CAPTURE(q);
                    CAPTURE(s);
                    CAPTURE(w);
                    CAPTURE(r);
                    CHECK(ball_volume(s, w, q, r) == oracle::ball_by_enumeration(s, w, q, r));
                }
            }
    }
    CHECK(oracle::error_of([] { ball_volume(3, 1, 2, 4); }) == ErrorKind::ParameterOutOfRange);
}
