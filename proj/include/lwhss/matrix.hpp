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

#ifndef LWHSS_MATRIX_HPP
#define LWHSS_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lwhss/galois.hpp"
#include "lwhss/labeling.hpp"

namespace lwhss {

using Vector = std::vector<Code>;

/// Dense row-major matrix over a finite field.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Code> cells);

    static Matrix identity(Field field, std::size_t n);
    static Matrix from_rows(Field field, const std::vector<Vector>& rows, std::size_t cols);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Code operator()(std::size_t r, std::size_t c) const noexcept { return cells_[r * cols_ + c]; }
    Code& operator()(std::size_t r, std::size_t c) noexcept { return cells_[r * cols_ + c]; }

    std::span<const Code> row(std::size_t r) const noexcept { return {cells_.data() + r * cols_, cols_}; }
    std::span<Code> row(std::size_t r) noexcept { return {cells_.data() + r * cols_, cols_}; }
    Vector column(std::size_t c) const;
    const std::vector<Code>& cells() const noexcept { return cells_; }

    /// A * x.
    Vector apply(std::span<const Code> x) const;
    /// x^T * A (a codeword when A is a generator matrix).
    Vector apply_left(std::span<const Code> x) const;

    Matrix transpose() const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Code> cells_;
};

struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;  ///< strictly increasing pivot columns
    std::size_t rank = 0;
};

/// Reduced row echelon form; pivots taken leftmost column first, topmost nonzero row first.
RowEchelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);

/// Some x with A x = b, free variables set to zero; nullopt when the system is inconsistent.
std::optional<Vector> solve_particular(const Matrix& a, std::span<const Code> b);

/// Null-space basis of A, one vector per free column in increasing column order.
std::vector<Vector> kernel_basis(const Matrix& a);

/// Columns r of G with labeling[r] in `labels`, original order kept.
Matrix restrict_columns(const Matrix& g, const Labeling& labeling, std::span<const std::size_t> labels);

}  // namespace lwhss

#endif  // LWHSS_MATRIX_HPP
