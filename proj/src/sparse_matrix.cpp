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

#include "hypj/sparse_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hypj {

SparseVector::SparseVector(std::vector<Entry> entries) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& x, const Entry& y) { return x.first < y.first; });
    for (auto& [index, value] : entries) {
        if (!entries_.empty() && entries_.back().first == index) {
            entries_.back().second += value;
            if (hypj::is_zero(entries_.back().second)) entries_.pop_back();
        } else if (!hypj::is_zero(value)) {
            entries_.emplace_back(index, std::move(value));
        }
    }
}

SparseVector SparseVector::from_dense(const std::vector<Rational>& dense) {
    SparseVector v;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (!hypj::is_zero(dense[i])) v.entries_.emplace_back(i, dense[i]);
    return v;
}

Rational SparseVector::at(std::size_t index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, std::size_t i) { return e.first < i; });
    if (it != entries_.end() && it->first == index) return it->second;
    return 0;
}

std::vector<Rational> SparseVector::to_dense(std::size_t size) const {
    std::vector<Rational> out(size);
    for (const auto& [i, v] : entries_) {
        if (i >= size) throw std::out_of_range("SparseVector::to_dense: index beyond size");
        out[i] = v;
    }
    return out;
}

void SparseVector::add_scaled(const Rational& factor, const SparseVector& other) {
    if (hypj::is_zero(factor) || other.empty()) return;
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == entries_.end() || b->first < a->first) {
            merged.emplace_back(b->first, factor * b->second);
            ++b;
        } else {
            Rational sum = a->second + factor * b->second;
            if (!hypj::is_zero(sum)) merged.emplace_back(a->first, std::move(sum));
            ++a;
            ++b;
        }
    }
    entries_ = std::move(merged);
}

void SparseVector::scale(const Rational& factor) {
    if (hypj::is_zero(factor)) {
        entries_.clear();
        return;
    }
    for (auto& e : entries_) e.second *= factor;
}

SparseMatrix::Builder::Builder(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

SparseMatrix::Builder& SparseMatrix::Builder::add(std::size_t row, std::size_t col,
                                                  const Rational& value) {
    if (row >= rows_ || col >= cols_) throw std::out_of_range("SparseMatrix::Builder::add");
    if (hypj::is_zero(value)) return *this;
    auto& cell = data_[row][col];
    cell += value;
    if (hypj::is_zero(cell)) data_[row].erase(col);
    return *this;
}

SparseMatrix::Builder& SparseMatrix::Builder::set_row(std::size_t row, SparseVector values) {
    if (row >= rows_) throw std::out_of_range("SparseMatrix::Builder::set_row");
    data_[row].clear();
    for (auto& [c, v] : values.entries()) add(row, c, v);
    return *this;
}

SparseMatrix SparseMatrix::Builder::build() && {
    std::vector<SparseVector> rows;
    rows.reserve(rows_);
    for (auto& r : data_) {
        std::vector<SparseVector::Entry> entries(r.begin(), r.end());
        rows.emplace_back(std::move(entries));
    }
    return SparseMatrix::from_rows(cols_, std::move(rows));
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

SparseMatrix SparseMatrix::from_rows(std::size_t cols, std::vector<SparseVector> rows) {
    for (const auto& r : rows)
        if (!r.empty() && r.entries().back().first >= cols)
            throw std::invalid_argument("SparseMatrix::from_rows: column index out of range");
    SparseMatrix m(0, cols);
    m.rows_ = std::move(rows);
    return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& dense) {
    std::size_t cols = dense.empty() ? 0 : dense.front().size();
    std::vector<SparseVector> rows;
    for (const auto& r : dense) {
        if (r.size() != cols) throw std::invalid_argument("SparseMatrix::from_dense: ragged rows");
        rows.push_back(SparseVector::from_dense(r));
    }
    return from_rows(cols, std::move(rows));
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    std::vector<SparseVector> rows;
    for (std::size_t i = 0; i < n; ++i) rows.emplace_back(std::vector<SparseVector::Entry>{{i, 1}});
    return from_rows(n, std::move(rows));
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.nonzeros();
    return n;
}

SparseMatrix SparseMatrix::transposed() const {
    std::vector<std::vector<SparseVector::Entry>> cols(cols_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, v] : rows_[r].entries()) cols[c].emplace_back(r, v);
    std::vector<SparseVector> out;
    out.reserve(cols_);
    for (auto& c : cols) out.emplace_back(std::move(c));
    return from_rows(rows_.size(), std::move(out));
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
    std::vector<SparseVector::Entry> out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Rational acc = 0;
        // Merge walk over two sorted index lists.
        auto a = rows_[r].entries().begin();
        auto b = v.entries().begin();
        while (a != rows_[r].entries().end() && b != v.entries().end()) {
            if (a->first < b->first) ++a;
            else if (b->first < a->first) ++b;
            else acc += (a++)->second * (b++)->second;
        }
        if (!hypj::is_zero(acc)) out.emplace_back(r, std::move(acc));
    }
    return SparseVector(std::move(out));
}

std::string SparseMatrix::to_csv() const {
    std::ostringstream os;
    for (const auto& r : rows_) {
        auto dense = r.to_dense(cols_);
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ',';
            os << to_fraction_string(dense[c]);
        }
        os << '\n';
    }
    return os.str();
}

namespace {

// Pivot preference: smaller magnitude, then sparser row, then lower index.
bool better_pivot(const SparseVector& x, std::size_t xi, const SparseVector& y, std::size_t yi) {
    int c = cmp(abs(x.leading_value()), abs(y.leading_value()));
    if (c != 0) return c < 0;
    if (x.nonzeros() != y.nonzeros()) return x.nonzeros() < y.nonzeros();
    return xi < yi;
}

}  // namespace

RowEchelon RowEchelon::compute(const SparseMatrix& m, bool reduced) {
    RowEchelon e;
    e.cols_ = m.cols();
    e.reduced_ = reduced;

    std::vector<SparseVector> work;
    work.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) work.push_back(m.row(r));

    // Rows bucketed by leading column; buckets are drained left to right.
    std::map<std::size_t, std::vector<std::size_t>> buckets;
    for (std::size_t r = 0; r < work.size(); ++r)
        if (!work[r].empty()) buckets[work[r].leading_index()].push_back(r);

    while (!buckets.empty()) {
        auto node = buckets.extract(buckets.begin());
        std::size_t col = node.key();
        auto& members = node.mapped();
        std::size_t best = members.front();
        for (std::size_t r : members)
            if (better_pivot(work[r], r, work[best], best)) best = r;
        SparseVector pivot = std::move(work[best]);
        for (std::size_t r : members) {
            if (r == best) continue;
            Rational factor = -work[r].leading_value() / pivot.leading_value();
            work[r].add_scaled(factor, pivot);
            if (!work[r].empty()) buckets[work[r].leading_index()].push_back(r);
        }
        if (reduced) pivot.scale(1 / Rational(pivot.leading_value()));
        e.pivot_cols_.push_back(col);
        e.rows_.push_back(std::move(pivot));
    }

    e.pivot_of_col_.assign(e.cols_, -1);
    for (std::size_t i = 0; i < e.pivot_cols_.size(); ++i)
        e.pivot_of_col_[e.pivot_cols_[i]] = static_cast<std::ptrdiff_t>(i);

    if (reduced) {
        // Back substitution: clear each pivot column in the rows above it.
        for (std::size_t j = e.rows_.size(); j-- > 0;) {
            std::size_t col = e.pivot_cols_[j];
            for (std::size_t i = 0; i < j; ++i) {
                Rational c = e.rows_[i].at(col);
                if (!hypj::is_zero(c)) e.rows_[i].add_scaled(-c, e.rows_[j]);
            }
        }
    }
    return e;
}

std::vector<std::size_t> RowEchelon::free_cols() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cols_; ++c)
        if (pivot_of_col_[c] < 0) out.push_back(c);
    return out;
}

SparseVector RowEchelon::reduce(SparseVector v) const {
    if (!reduced_) throw std::logic_error("RowEchelon::reduce requires a reduced form");
    // Collect the pivot coefficients first: reduced rows vanish on every other
    // pivot column, so the subtractions do not interact.
    std::vector<std::pair<std::size_t, Rational>> hits;
    for (const auto& [c, value] : v.entries()) {
        if (c >= cols_) throw std::invalid_argument("RowEchelon::reduce: dimension mismatch");
        if (pivot_of_col_[c] >= 0) hits.emplace_back(static_cast<std::size_t>(pivot_of_col_[c]), value);
    }
    for (const auto& [row, value] : hits) v.add_scaled(-value, rows_[row]);
    return v;
}

std::size_t rank(const SparseMatrix& m) { return RowEchelon::compute(m, false).rank(); }

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
    auto e = RowEchelon::compute(m, true);
    std::vector<SparseVector> basis;
    for (std::size_t f : e.free_cols()) {
        std::vector<SparseVector::Entry> entries{{f, 1}};
        for (std::size_t i = 0; i < e.rank(); ++i) {
            Rational c = e.rows()[i].at(f);
            if (!hypj::is_zero(c)) entries.emplace_back(e.pivot_cols()[i], -c);
        }
        basis.emplace_back(std::move(entries));
    }
    return basis;
}

SparseMatrix stack(const SparseMatrix& top, const SparseMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw std::invalid_argument("stack: column count mismatch");
    std::vector<SparseVector> rows;
    rows.reserve(top.rows() + bottom.rows());
    for (std::size_t r = 0; r < top.rows(); ++r) rows.push_back(top.row(r));
    for (std::size_t r = 0; r < bottom.rows(); ++r) rows.push_back(bottom.row(r));
    return SparseMatrix::from_rows(top.cols(), std::move(rows));
}

bool in_row_space(const SparseMatrix& m, const SparseVector& v) {
    if (!v.empty() && v.entries().back().first >= m.cols())
        throw std::invalid_argument("in_row_space: dimension mismatch");
    auto extended = stack(m, SparseMatrix::from_rows(m.cols(), {v}));
    return rank(extended) == rank(m);
}

bool in_row_space(const SparseMatrix& m, const std::vector<Rational>& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("in_row_space: dimension mismatch");
    return in_row_space(m, SparseVector::from_dense(v));
}

}  // namespace hypj
