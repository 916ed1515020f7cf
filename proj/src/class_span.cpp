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

#include "hypj/class_span.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hypj {

std::string to_string(FamilyKind kind) {
    return kind == FamilyKind::Consecutive ? "consecutive" : "augmented";
}

FamilyKind parse_family_kind(const std::string& name) {
    if (name == "consecutive") return FamilyKind::Consecutive;
    if (name == "augmented") return FamilyKind::Augmented;
    throw std::invalid_argument("unknown family '" + name + "' (expected consecutive|augmented)");
}

TwistFamily::TwistFamily(Genus g, std::vector<TwistDescriptor> descriptors, std::string name)
    : g_(g), descriptors_(std::move(descriptors)), name_(std::move(name)) {
    if (descriptors_.empty()) throw std::invalid_argument("twist family must be nonempty");
    std::set<TwistDescriptor> seen;
    for (const auto& d : descriptors_) {
        if (d.genus() != g) throw std::invalid_argument("twist family: descriptor genus mismatch");
        if (!seen.insert(d).second) throw std::invalid_argument("twist family: duplicate descriptor " + d.label());
    }
}

namespace {

// All k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> current(k);
    for (int i = 0; i < k; ++i) current[i] = i + 1;
    if (k > n) return out;
    while (true) {
        out.push_back(current);
        int i = k - 1;
        while (i >= 0 && current[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++current[i];
        for (int j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
    }
    return out;
}

}  // namespace

TwistFamily canonical_family(Genus g, FamilyKind kind) {
    const int n = g.point_count();
    std::vector<TwistDescriptor> out;
    for (int i = 1; i <= g.value() - 1; ++i) {
        if (kind == FamilyKind::Consecutive) {
            std::vector<int> handles;
            for (int h = 1; h <= i; ++h) handles.push_back(h);
            for (int r = 1; r <= n; ++r) {
                std::vector<int> arc;
                for (int k = 0; k < 2 * i + 1; ++k) arc.push_back((r - 1 + k) % n + 1);
                out.push_back(TwistDescriptor::make(g, i, arc, handles));
            }
        } else {
            auto handle_sets = subsets(g.value(), i);
            for (const auto& points : subsets(n, 2 * i + 1))
                for (const auto& handles : handle_sets) out.push_back(TwistDescriptor::make(g, i, points, handles));
        }
    }
    return TwistFamily(g, std::move(out), to_string(kind));
}

ClassMatrix::ClassMatrix(TwistFamily family, SparseMatrix values)
    : family_(std::move(family)), values_(std::move(values)) {
    const Genus g = family_.genus();
    if (values_.rows() != static_cast<std::size_t>(g.point_count()))
        throw std::invalid_argument("class matrix must have 2g+2 rows");
    if (values_.cols() != family_.size() * static_cast<std::size_t>(g.v_dim()))
        throw std::invalid_argument("class matrix column count does not match the family");
}

std::size_t ClassMatrix::descriptor_of_col(std::size_t col) const {
    return col / static_cast<std::size_t>(genus().v_dim());
}

std::size_t ClassMatrix::coord_of_col(std::size_t col) const {
    return col % static_cast<std::size_t>(genus().v_dim());
}

bool ClassMatrix::column_sums_zero() const {
    SparseVector sum;
    for (std::size_t r = 0; r < values_.rows(); ++r) sum.add_scaled(1, values_.row(r));
    return sum.empty();
}

std::string ClassMatrix::to_csv() const {
    std::ostringstream os;
    os << "point,descriptor,coord,value\n";
    const Genus g = genus();
    for (std::size_t r = 0; r < values_.rows(); ++r) {
        for (const auto& [col, v] : values_.row(r).entries()) {
            os << (r + 1) << ',' << family_.descriptors()[descriptor_of_col(col)].label() << ','
               << v_coordinate_label(g, static_cast<int>(coord_of_col(col))) << ',' << to_fraction_string(v)
               << '\n';
        }
    }
    return os.str();
}

ClassMatrix class_matrix(const TwistFamily& family) {
    const Genus g = family.genus();
    const std::size_t vdim = static_cast<std::size_t>(g.v_dim());
    // tau_tilde depends only on the handles of the far side; memoise on them.
    std::map<HandleSet, std::vector<Rational>> by_far_handles;
    SparseMatrix::Builder builder(g.point_count(), family.size() * vdim);
    for (std::size_t di = 0; di < family.size(); ++di) {
        const auto& d = family.descriptors()[di];
        for (int q = 1; q <= g.point_count(); ++q) {
            HandleSet far = d.on_a_side(q) ? complement(g, d.handles()) : d.handles();
            auto it = by_far_handles.find(far);
            if (it == by_far_handles.end())
                it = by_far_handles.emplace(far, tau_tilde(d, q).coordinates()).first;
            for (std::size_t c = 0; c < vdim; ++c)
                if (!hypj::is_zero(it->second[c])) builder.add(q - 1, di * vdim + c, it->second[c]);
        }
    }
    return ClassMatrix(family, std::move(builder).build());
}

std::size_t weierstrass_rank(const ClassMatrix& m) { return rank(m.values()); }

SparseMatrix collino_matrix(const ClassMatrix& m, int base) {
    const int n = m.genus().point_count();
    if (base < 1 || base > n) throw std::out_of_range("collino base point outside W");
    std::vector<SparseVector> rows;
    for (int q = 1; q <= n; ++q) {
        if (q == base) continue;
        SparseVector diff = m.values().row(q - 1);
        diff.add_scaled(-1, m.values().row(base - 1));
        rows.push_back(std::move(diff));
    }
    return SparseMatrix::from_rows(m.values().cols(), std::move(rows));
}

std::size_t collino_rank(const ClassMatrix& m, int base) { return rank(collino_matrix(m, base)); }

bool row_spaces_equal(const ClassMatrix& m, int base) {
    const SparseMatrix& w = m.values();
    SparseMatrix c = collino_matrix(m, base);
    for (std::size_t r = 0; r < c.rows(); ++r)
        if (!in_row_space(w, c.row(r))) return false;
    for (std::size_t r = 0; r < w.rows(); ++r)
        if (!in_row_space(c, w.row(r))) return false;
    return true;
}

bool remark_check(const ClassMatrix& m) {
    const SparseMatrix& w = m.values();
    const std::size_t n = w.rows();
    for (std::size_t i = 0; i < n; ++i) {
        SparseVector lhs = w.row(i);
        lhs.scale(Rational(static_cast<long>(n)));
        SparseVector rhs;
        for (std::size_t j = 0; j < n; ++j) {
            rhs.add_scaled(1, w.row(i));
            rhs.add_scaled(-1, w.row(j));
        }
        if (!(lhs == rhs)) return false;
    }
    return true;
}

SpanReport span_report(const ClassMatrix& m, int base) {
    SpanReport r{m.genus(),
                 m.family().name(),
                 m.family().size(),
                 weierstrass_rank(m),
                 collino_rank(m, base),
                 row_spaces_equal(m, base),
                 m.column_sums_zero(),
                 remark_check(m),
                 ""};
    if (r.weierstrass_rank == r.target_rank()) r.bound_achieved_by = r.family;
    return r;
}

SpanReport span_report_with_fallback(Genus g) {
    const int base = g.point_count();
    SpanReport consecutive = span_report(class_matrix(canonical_family(g, FamilyKind::Consecutive)), base);
    if (consecutive.passed()) return consecutive;
    return span_report(class_matrix(canonical_family(g, FamilyKind::Augmented)), base);
}

}  // namespace hypj
