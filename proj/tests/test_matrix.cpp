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

#include <random>

#include "doctest.h"
#include "lwhss/labeling.hpp"
#include "lwhss/matrix.hpp"
#include "oracles.hpp"

using namespace lwhss;

namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(f, rows, cols);
    std::uniform_int_distribution<Code> pick(0, f.order() - 1);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = pick(rng);
    return m;
}

// Does A x = b have a solution?  Checked by trying every x.
bool solvable_by_search(const Matrix& a, const Vector& b) {
    const Field& f = a.field();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < a.cols(); ++i) total *= f.order();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Vector x(a.cols());
        std::uint64_t v = idx;
        for (auto& xi : x) {
            xi = static_cast<Code>(v % f.order());
            v /= f.order();
        }
        if (a.apply(x) == b) return true;
    }
    return false;
}

// Rank as the size of the row space, counted by enumerating all combinations of rows.
std::size_t rank_by_span(const Matrix& a) {
    const Field& f = a.field();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < a.rows(); ++i) total *= f.order();
    std::vector<Vector> words;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Vector m(a.rows());
        std::uint64_t v = idx;
        for (auto& mi : m) {
            mi = static_cast<Code>(v % f.order());
            v /= f.order();
        }
        words.push_back(a.apply_left(m));
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    std::size_t r = 0;
    for (std::uint64_t size = 1; size < words.size(); size *= f.order()) ++r;
    return r;
}

}  // namespace

TEST_CASE("basic matrix operations") {
    const Field f = Field::make(5);
    const Matrix a = Matrix::from_rows(f, {{1, 2, 3}, {4, 0, 1}}, 3);
    CHECK(a.transpose().rows() == 3);
    CHECK(a.transpose()(2, 1) == 1);
    const std::vector<Code> x{1, 1, 1};
    CHECK(a.apply(x) == Vector{1, 0});
    const std::vector<Code> y{1, 1};
    CHECK(a.apply_left(y) == Vector{0, 2, 4});
    CHECK(Matrix::identity(f, 3) * a.transpose() == a.transpose());
    CHECK(a.column(1) == Vector{2, 0});
    CHECK(oracle::error_of([&] { (void)(a * a); }) == ErrorKind::DimensionMismatch);
    CHECK(oracle::error_of([&] { Matrix(f, 1, 1, {7}); }) == ErrorKind::ParameterOutOfRange);
}

TEST_CASE("rref of a known matrix") {
    const Field f = Field::make(2);
    const Matrix a = Matrix::from_rows(f, {{0, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}}, 4);
    const RowEchelon e = rref(a);
    CHECK(e.rank == 2);
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
    CHECK(e.reduced == Matrix::from_rows(f, {{1, 0, 1, 1}, {0, 1, 1, 0}, {0, 0, 0, 0}}, 4));
    const auto ker = kernel_basis(a);
    REQUIRE(ker.size() == 2);
    CHECK(ker[0] == Vector{1, 1, 1, 0});
    CHECK(ker[1] == Vector{1, 0, 0, 1});
}

TEST_CASE("random matrices over GF(2), GF(3), GF(4)") {
    std::mt19937_64 rng(2026);
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const auto [p, e] = prime_power(q);
        const Field f = Field::make(p, e);
        for (int trial = 0; trial < 1000; ++trial) {
            const std::size_t rows = 1 + rng() % 4;
            const std::size_t cols = 1 + rng() % 5;
            const Matrix a = random_matrix(f, rows, cols, rng);
            const RowEchelon ech = rref(a);
            CAPTURE(q);
            CAPTURE(trial);
            // Shape of the reduced form.
            for (std::size_t i = 0; i < ech.rank; ++i) {
                REQUIRE(ech.reduced(i, ech.pivots[i]) == 1);
                for (std::size_t r = 0; r < rows; ++r)
                    if (r != i) REQUIRE(ech.reduced(r, ech.pivots[i]) == 0);
                if (i > 0) REQUIRE(ech.pivots[i] > ech.pivots[i - 1]);
            }
            for (std::size_t r = ech.rank; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c) REQUIRE(ech.reduced(r, c) == 0);
            REQUIRE(ech.rank == rank_by_span(a));
            REQUIRE(rank(a.transpose()) == ech.rank);

            const auto ker = kernel_basis(a);
            REQUIRE(ker.size() == cols - ech.rank);
            for (const auto& v : ker) REQUIRE(a.apply(v) == Vector(rows, 0));
            if (!ker.empty()) REQUIRE(rank(Matrix::from_rows(f, ker, cols)) == ker.size());

            const Vector b = random_matrix(f, 1, rows, rng).cells();
            const auto sol = solve_particular(a, b);
            REQUIRE(sol.has_value() == solvable_by_search(a, b));
            if (sol) REQUIRE(a.apply(*sol) == b);
            const Vector reachable = a.apply(random_matrix(f, 1, cols, rng).cells());
            const auto sol2 = solve_particular(a, reachable);
            REQUIRE(sol2.has_value());
            REQUIRE(a.apply(*sol2) == reachable);
        }
    }
}

TEST_CASE("particular solutions zero the free variables") {
    const Field f = Field::make(3);
    const Matrix a = Matrix::from_rows(f, {{1, 2, 0}, {0, 0, 1}}, 3);
    const std::vector<Code> b{2, 1};
    const auto x = solve_particular(a, b);
    REQUIRE(x);
    CHECK(*x == Vector{2, 0, 1});
    const Matrix zero(f, 2, 2);
    const std::vector<Code> nz{1, 0};
    CHECK_FALSE(solve_particular(zero, nz).has_value());
    CHECK(oracle::error_of([&] { solve_particular(a, std::vector<Code>{1}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("labelings") {
    const Labeling bal = Labeling::balanced(3, 2);
    CHECK(bal.length() == 6);
    CHECK(bal[0] == 0);
    CHECK(bal[3] == 1);
    CHECK(bal[5] == 2);
    CHECK(bal.coordinates_of(1) == std::vector<std::size_t>{2, 3});
    const std::vector<Code> w{0, 1, 0, 0, 1, 1};
    CHECK(bal.labelweight(w) == 2);
    CHECK(Labeling::identity(4).labelweight(std::vector<Code>{1, 0, 2, 3}) == 3);
    CHECK(oracle::error_of([] { Labeling(3, {0, 1, 1}); }) == ErrorKind::ParameterOutOfRange);
    CHECK(oracle::error_of([] { Labeling(2, {0, 2}); }) == ErrorKind::ParameterOutOfRange);
    CHECK(oracle::error_of([] { Labeling(3, {0, 1}); }) == ErrorKind::ParameterOutOfRange);
}

TEST_CASE("column restriction by labels") {
    const Field f = Field::make(2);
    const Matrix g = Matrix::from_rows(f, {{1, 0, 1, 1}, {0, 1, 1, 0}}, 4);
    const Labeling lab(2, {0, 1, 1, 0});
    const std::vector<std::size_t> keep{0};
    const Matrix r = restrict_columns(g, lab, keep);
    CHECK(r == Matrix::from_rows(f, {{1, 1}, {0, 0}}, 2));
    CHECK(rank(restrict_columns(g, lab, std::vector<std::size_t>{1})) == 2);
}
