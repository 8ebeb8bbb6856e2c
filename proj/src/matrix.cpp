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

#include "lwhss/matrix.hpp"

#include <algorithm>
#include <string>

#include "lwhss/error.hpp"

namespace lwhss {

Labeling::Labeling(std::size_t servers, std::vector<std::size_t> labels)
    : servers_(servers), labels_(std::move(labels)), owned_(servers) {
    if (servers_ == 0) fail(ErrorKind::ParameterOutOfRange, "labeling needs at least one server");
    if (servers_ > labels_.size()) fail(ErrorKind::ParameterOutOfRange, "labeling with more servers than coordinates");
    for (std::size_t r = 0; r < labels_.size(); ++r) {
        if (labels_[r] >= servers_)
            fail(ErrorKind::ParameterOutOfRange, "label " + std::to_string(labels_[r]) + " outside [0, s)");
        owned_[labels_[r]].push_back(r);
    }
    for (std::size_t j = 0; j < servers_; ++j)
        if (owned_[j].empty()) fail(ErrorKind::ParameterOutOfRange, "labeling is not surjective (server " +
                                                                         std::to_string(j) + " owns nothing)");
}

Labeling Labeling::identity(std::size_t n) {
    std::vector<std::size_t> labels(n);
    for (std::size_t r = 0; r < n; ++r) labels[r] = r;
    return Labeling(n, std::move(labels));
}

Labeling Labeling::balanced(std::size_t servers, std::size_t block) {
    std::vector<std::size_t> labels(servers * block);
    for (std::size_t r = 0; r < labels.size(); ++r) labels[r] = r / block;
    return Labeling(servers, std::move(labels));
}

std::size_t Labeling::labelweight(std::span<const Code> word) const {
    if (word.size() != labels_.size()) fail(ErrorKind::DimensionMismatch, "word length differs from labeling length");
    std::size_t weight = 0;
    for (const auto& coords : owned_)
        if (std::any_of(coords.begin(), coords.end(), [&](std::size_t r) { return word[r] != 0; })) ++weight;
    return weight;
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Code> cells)
    : field_(std::move(field)), rows_(rows), cols_(cols), cells_(std::move(cells)) {
    if (cells_.size() != rows_ * cols_) fail(ErrorKind::DimensionMismatch, "cell count differs from rows*cols");
    for (Code c : cells_)
        if (!field_.contains(c)) fail(ErrorKind::ParameterOutOfRange, "matrix entry outside " + field_.to_string());
}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<Vector>& rows, std::size_t cols) {
    std::vector<Code> cells;
    cells.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) fail(ErrorKind::DimensionMismatch, "ragged rows");
        cells.insert(cells.end(), r.begin(), r.end());
    }
    return Matrix(std::move(field), rows.size(), cols, std::move(cells));
}

Vector Matrix::column(std::size_t c) const {
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

Vector Matrix::apply(std::span<const Code> x) const {
    if (x.size() != cols_) fail(ErrorKind::DimensionMismatch, "A*x with mismatched x length");
    Vector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        Code acc = 0;
        for (std::size_t c = 0; c < cols_; ++c)
            if (x[c] != 0) acc = field_.add(acc, field_.mul((*this)(r, c), x[c]));
        out[r] = acc;
    }
    return out;
}

Vector Matrix::apply_left(std::span<const Code> x) const {
    if (x.size() != rows_) fail(ErrorKind::DimensionMismatch, "x*A with mismatched x length");
    Vector out(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (x[r] == 0) continue;
        for (std::size_t c = 0; c < cols_; ++c) out[c] = field_.add(out[c], field_.mul(x[r], (*this)(r, c)));
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_);
    if (a.cols_ != b.rows_) fail(ErrorKind::DimensionMismatch, "matrix product shapes");
    const Field& f = a.field_;
    Matrix out(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Code aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
        }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
}

RowEchelon rref(const Matrix& a) {
    Matrix m = a;
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
        std::size_t pr = next_row;
        while (pr < m.rows() && m(pr, c) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != next_row) std::swap_ranges(m.row(pr).begin(), m.row(pr).end(), m.row(next_row).begin());
        const Code scale = f.inv(m(next_row, c));
        for (auto& x : m.row(next_row)) x = f.mul(x, scale);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == next_row) continue;
            const Code factor = m(r, c);
            if (factor == 0) continue;
            auto dst = m.row(r);
            auto src = m.row(next_row);
            for (std::size_t j = c; j < m.cols(); ++j) dst[j] = f.sub(dst[j], f.mul(factor, src[j]));
        }
        pivots.push_back(c);
        ++next_row;
    }
    const std::size_t rk = pivots.size();
    return {std::move(m), std::move(pivots), rk};
}

std::size_t rank(const Matrix& a) { return rref(a).rank; }

std::optional<Vector> solve_particular(const Matrix& a, std::span<const Code> b) {
    if (b.size() != a.rows()) fail(ErrorKind::DimensionMismatch, "right-hand side length differs from row count");
    // Row-reduce the augmented matrix [A | b].
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::copy(a.row(r).begin(), a.row(r).end(), aug.row(r).begin());
        aug(r, a.cols()) = b[r];
    }
    const RowEchelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    Vector x(a.cols(), 0);
    for (std::size_t i = 0; i < e.rank; ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
    return x;
}

std::vector<Vector> kernel_basis(const Matrix& a) {
    const RowEchelon e = rref(a);
    const Field& f = a.field();
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(a.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < e.rank; ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix restrict_columns(const Matrix& g, const Labeling& labeling, std::span<const std::size_t> labels) {
    if (labeling.length() != g.cols()) fail(ErrorKind::DimensionMismatch, "labeling length differs from column count");
    std::vector<bool> keep_label(labeling.servers(), false);
    for (auto l : labels) {
        if (l >= labeling.servers()) fail(ErrorKind::ParameterOutOfRange, "label outside [0, s)");
        keep_label[l] = true;
    }
    std::vector<std::size_t> cols;
    for (std::size_t r = 0; r < g.cols(); ++r)
        if (keep_label[labeling[r]]) cols.push_back(r);
    Matrix out(g.field(), g.rows(), cols.size());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = g(i, cols[j]);
    return out;
}

}  // namespace lwhss
