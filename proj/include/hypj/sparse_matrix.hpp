/* Copyright 2026 The hypj Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Sparse exact matrices over Q: rank, kernels, row-space membership.

#ifndef HYPJ_SPARSE_MATRIX_HPP
#define HYPJ_SPARSE_MATRIX_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hypj/rational.hpp"

namespace hypj {

/// A sparse vector: entries sorted by index, no stored zeros.
class SparseVector {
public:
    using Entry = std::pair<std::size_t, Rational>;

    SparseVector() = default;
    /// Entries may be unsorted and contain duplicates or zeros; they are merged.
    explicit SparseVector(std::vector<Entry> entries);
    static SparseVector from_dense(const std::vector<Rational>& dense);

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t nonzeros() const { return entries_.size(); }
    Rational at(std::size_t index) const;
    std::size_t leading_index() const { return entries_.front().first; }
    const Rational& leading_value() const { return entries_.front().second; }

    std::vector<Rational> to_dense(std::size_t size) const;

    /// this += factor * other
    void add_scaled(const Rational& factor, const SparseVector& other);
    void scale(const Rational& factor);

    friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
    std::vector<Entry> entries_;
};

class SparseMatrix {
public:
    class Builder {
    public:
        Builder(std::size_t rows, std::size_t cols);
        /// Accumulates into (row, col).
        Builder& add(std::size_t row, std::size_t col, const Rational& value);
        Builder& set_row(std::size_t row, SparseVector values);
        SparseMatrix build() &&;

    private:
        std::size_t rows_;
        std::size_t cols_;
        std::vector<std::map<std::size_t, Rational>> data_;
    };

    SparseMatrix(std::size_t rows, std::size_t cols);
    /// Throws std::invalid_argument if any row has an index >= cols.
    static SparseMatrix from_rows(std::size_t cols, std::vector<SparseVector> rows);
    static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& dense);
    static SparseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const SparseVector& row(std::size_t r) const { return rows_.at(r); }
    Rational at(std::size_t r, std::size_t c) const { return rows_.at(r).at(c); }
    std::size_t nonzeros() const;

    SparseMatrix transposed() const;
    /// Matrix-vector product m * v.
    SparseVector apply(const SparseVector& v) const;

    /// Dense rows, one per line, comma separated "p/q" fractions.
    std::string to_csv() const;

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<SparseVector> rows_;
};

/// Row echelon form of a matrix.
///
/// Columns are eliminated left to right; within a column the pivot row is the
/// one with the smallest-magnitude entry (ties: fewest nonzeros, then lowest
/// index). The resulting pivot columns are the leading columns of the row
/// space and do not depend on the pivot choice. With `reduced` set, pivot rows
/// are normalised to 1 and cleared above, which makes the form unique.
class RowEchelon {
public:
    static RowEchelon compute(const SparseMatrix& m, bool reduced = true);

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool reduced() const { return reduced_; }
    const std::vector<std::size_t>& pivot_cols() const { return pivot_cols_; }
    const std::vector<SparseVector>& rows() const { return rows_; }
    std::vector<std::size_t> free_cols() const;

    /// Remainder of v modulo the row space: zero on every pivot column.
    /// Requires a reduced form.
    SparseVector reduce(SparseVector v) const;
    bool contains(const SparseVector& v) const { return reduce(v).empty(); }

private:
    std::size_t cols_ = 0;
    bool reduced_ = true;
    std::vector<SparseVector> rows_;
    std::vector<std::size_t> pivot_cols_;
    std::vector<std::ptrdiff_t> pivot_of_col_;
};

std::size_t rank(const SparseMatrix& m);

/// Basis of the right null space {k : m k = 0}; one vector per free column.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

/// True iff v is a Q-combination of the rows of m, decided by comparing
/// rank(m) with the rank of m with v appended.
bool in_row_space(const SparseMatrix& m, const SparseVector& v);
/// Dense form; throws std::invalid_argument unless v.size() == m.cols().
bool in_row_space(const SparseMatrix& m, const std::vector<Rational>& v);

/// Vertical concatenation; column counts must agree.
SparseMatrix stack(const SparseMatrix& top, const SparseMatrix& bottom);

}  // namespace hypj

#endif  // HYPJ_SPARSE_MATRIX_HPP
