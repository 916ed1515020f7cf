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

#include "hypj/f2_model.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hypj {

namespace {

PointMask full_mask(Genus g) { return (PointMask{1} << g.point_count()) - 1; }

// Reduced echelon basis over F_2 with the pivot (lowest set bit) of each row.
struct F2Echelon {
    std::vector<std::uint32_t> rows;

    // Reduce v; returns the remainder.
    std::uint32_t reduce(std::uint32_t v) const {
        for (auto r : rows)
            if (v & (r & -r)) v ^= r;
        return v;
    }
    bool insert(std::uint32_t v) {
        v = reduce(v);
        if (v == 0) return false;
        std::uint32_t pivot = v & -v;
        for (auto& r : rows)
            if (r & pivot) r ^= v;
        rows.push_back(v);
        return true;
    }
};

}  // namespace

PointMask point_mask(const std::vector<int>& points) {
    PointMask m = 0;
    for (int p : points) {
        if (p < 1 || p > 32) throw std::out_of_range("point label out of range");
        m |= PointMask{1} << (p - 1);
    }
    return m;
}

F2SubsetClass::F2SubsetClass(Genus g, PointMask mask, int) : g_(g), mask_(mask) {
    if (g.value() > kF2MaxGenus) throw std::invalid_argument("F_2 model supports g <= 10");
    if (mask & ~full_mask(g)) throw std::invalid_argument("subset contains a point outside W");
    if (std::popcount(mask) % 2 != 0) throw std::invalid_argument("subset must have even size");
}

F2SubsetClass::F2SubsetClass(Genus g, const std::vector<int>& points)
    : F2SubsetClass(g, point_mask(points), 0) {
    if (static_cast<int>(points.size()) != std::popcount(mask_))
        throw std::invalid_argument("subset has repeated points");
}

F2SubsetClass F2SubsetClass::from_mask(Genus g, PointMask mask) { return F2SubsetClass(g, mask, 0); }

F2SubsetClass F2SubsetClass::complement() const {
    return F2SubsetClass(g_, full_mask(g_) & ~mask_, 0);
}

int f2_rank(std::vector<std::uint32_t> vectors) {
    F2Echelon e;
    int r = 0;
    for (auto v : vectors) r += e.insert(v) ? 1 : 0;
    return r;
}

F2Matrix f2_multiply(const F2Matrix& x, const F2Matrix& y) {
    if (x.cols != static_cast<int>(y.rows.size())) throw std::invalid_argument("f2_multiply: shape");
    F2Matrix out{y.cols, std::vector<std::uint32_t>(x.rows.size(), 0)};
    for (std::size_t r = 0; r < x.rows.size(); ++r)
        for (int k = 0; k < x.cols; ++k)
            if (x.at(static_cast<int>(r), k)) out.rows[r] ^= y.rows[k];
    return out;
}

F2Matrix f2_transpose(const F2Matrix& m) {
    F2Matrix out{static_cast<int>(m.rows.size()), std::vector<std::uint32_t>(m.cols, 0)};
    for (std::size_t r = 0; r < m.rows.size(); ++r)
        for (int c = 0; c < m.cols; ++c)
            if (m.at(static_cast<int>(r), c)) out.rows[c] |= std::uint32_t{1} << r;
    return out;
}

int f2_pairing(const F2SubsetClass& s, const F2SubsetClass& t) {
    if (s.genus() != t.genus()) throw std::invalid_argument("f2_pairing: genus mismatch");
    return std::popcount(s.mask() & t.mask()) % 2;
}

F2ClassSpace f2_class_space(Genus g) {
    if (g.value() > kF2MaxGenus) throw std::invalid_argument("F_2 model supports g <= 10");
    const int n = g.point_count();
    const PointMask last = PointMask{1} << (n - 1);

    // Relations e_T + e_{T^c} all equal the all-ones vector; collect them anyway.
    F2Echelon relations;
    for (PointMask t = 0; t <= full_mask(g); ++t)
        if (std::popcount(t) % 2 == 0) relations.insert(t ^ (full_mask(g) & ~t));

    // Candidates {i, n}: keep those independent modulo relations and earlier picks.
    F2Echelon span = relations;
    F2ClassSpace space{g, 0, {}, {}};
    for (int i = 1; i < n; ++i) {
        PointMask candidate = (PointMask{1} << (i - 1)) | last;
        if (span.insert(candidate)) space.basis.push_back(candidate);
    }
    space.dimension = static_cast<int>(space.basis.size());

    space.gram.cols = space.dimension;
    space.gram.rows.assign(space.dimension, 0);
    for (int r = 0; r < space.dimension; ++r)
        for (int c = 0; c < space.dimension; ++c)
            if (std::popcount(space.basis[r] & space.basis[c]) % 2)
                space.gram.rows[r] |= std::uint32_t{1} << c;
    return space;
}

std::uint32_t F2ClassSpace::coordinates(const F2SubsetClass& t) const {
    if (t.genus() != genus) throw std::invalid_argument("F2ClassSpace: genus mismatch");
    // Solve t = sum c_j basis_j + (relation) by augmenting each basis vector
    // with a tag bit above the point bits.
    const int n = genus.point_count();
    const PointMask all = (PointMask{1} << n) - 1;
    std::vector<std::uint64_t> rows;
    rows.push_back(all);  // the relation e_T + e_{T^c}, untagged
    for (int j = 0; j < dimension; ++j)
        rows.push_back(static_cast<std::uint64_t>(basis[j]) | (std::uint64_t{1} << (32 + j)));

    std::uint64_t target = t.mask();
    // Gaussian elimination on the point bits.
    std::vector<std::uint64_t> echelon;
    for (auto r : rows) {
        for (auto e : echelon) {
            std::uint64_t pivot = (e & 0xffffffffu) & -(e & 0xffffffffu);
            if (r & pivot) r ^= e;
        }
        if ((r & 0xffffffffu) == 0) continue;
        std::uint64_t pivot = (r & 0xffffffffu) & -(r & 0xffffffffu);
        for (auto& e : echelon)
            if (e & pivot) e ^= r;
        echelon.push_back(r);
    }
    for (auto e : echelon) {
        std::uint64_t pivot = (e & 0xffffffffu) & -(e & 0xffffffffu);
        if (target & pivot) target ^= e;
    }
    if (target & 0xffffffffu) throw std::logic_error("F2ClassSpace: subset outside the even span");
    return static_cast<std::uint32_t>(target >> 32);
}

F2Matrix perm_to_sp_f2(const F2ClassSpace& space, const Permutation& perm) {
    const int n = space.genus.point_count();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation has wrong size");
    PointMask seen = 0;
    for (int p : perm) {
        if (p < 1 || p > n) throw std::invalid_argument("permutation image outside W");
        seen |= PointMask{1} << (p - 1);
    }
    if (std::popcount(seen) != n) throw std::invalid_argument("permutation is not a bijection");

    F2Matrix m{space.dimension, std::vector<std::uint32_t>(space.dimension, 0)};
    for (int j = 0; j < space.dimension; ++j) {
        PointMask image = 0;
        for (int p = 1; p <= n; ++p)
            if (space.basis[j] & (PointMask{1} << (p - 1))) image |= PointMask{1} << (perm[p - 1] - 1);
        std::uint32_t col = space.coordinates(F2SubsetClass::from_mask(space.genus, image));
        for (int r = 0; r < space.dimension; ++r)
            if (col & (std::uint32_t{1} << r)) m.rows[r] |= std::uint32_t{1} << j;
    }
    return m;
}

bool preserves_pairing(const F2ClassSpace& space, const F2Matrix& m) {
    return f2_multiply(f2_multiply(f2_transpose(m), space.gram), m) == space.gram;
}

}  // namespace hypj
