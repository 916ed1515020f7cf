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
// Weierstrass and Collino classes evaluated on a family of symmetric
// separating twists, and the rank computations over those value matrices.

#ifndef HYPJ_CLASS_SPAN_HPP
#define HYPJ_CLASS_SPAN_HPP

#include <string>
#include <utility>
#include <vector>

#include "hypj/monodromy.hpp"
#include "hypj/sparse_matrix.hpp"

namespace hypj {

enum class FamilyKind {
    /// Cyclic arcs A = {r, ..., r+2i} with I = {1..i}.
    Consecutive,
    /// Every odd subset |A| = 2i+1 paired with every handle subset |I| = i.
    Augmented,
};

std::string to_string(FamilyKind kind);
/// "consecutive" or "augmented"; throws std::invalid_argument otherwise.
FamilyKind parse_family_kind(const std::string& name);

class TwistFamily {
public:
    /// Throws std::invalid_argument for an empty family, duplicate descriptors,
    /// or a genus mismatch.
    TwistFamily(Genus g, std::vector<TwistDescriptor> descriptors, std::string name = "custom");

    Genus genus() const { return g_; }
    const std::vector<TwistDescriptor>& descriptors() const& { return descriptors_; }
    std::vector<TwistDescriptor> descriptors() && { return std::move(descriptors_); }
    std::size_t size() const { return descriptors_.size(); }
    const std::string& name() const { return name_; }

private:
    Genus g_;
    std::vector<TwistDescriptor> descriptors_;
    std::string name_;
};

TwistFamily canonical_family(Genus g, FamilyKind kind = FamilyKind::Consecutive);

/// Rows: Weierstrass points 1..2g+2. Columns: (descriptor, canonical V
/// coordinate) pairs, descriptor-major. Entry = coordinate of tau_tilde(D, q).
class ClassMatrix {
public:
    ClassMatrix(TwistFamily family, SparseMatrix values);

    Genus genus() const { return family_.genus(); }
    const TwistFamily& family() const { return family_; }
    const SparseMatrix& values() const { return values_; }
    std::size_t descriptor_of_col(std::size_t col) const;
    std::size_t coord_of_col(std::size_t col) const;

    /// Every column sums to zero over the 2g+2 rows.
    bool column_sums_zero() const;

    /// Long format: header "point,descriptor,coord,value", one line per
    /// nonzero entry, value as "p/q".
    std::string to_csv() const;

private:
    TwistFamily family_;
    SparseMatrix values_;
};

ClassMatrix class_matrix(const TwistFamily& family);

std::size_t weierstrass_rank(const ClassMatrix& m);

/// Rank of the differences row(q) - row(base), q != base. Throws
/// std::out_of_range for a base outside W.
std::size_t collino_rank(const ClassMatrix& m, int base);

/// Difference rows row(q) - row(base), q != base, in increasing q.
SparseMatrix collino_matrix(const ClassMatrix& m, int base);

/// Mutual row-space containment of the Weierstrass and Collino matrices.
bool row_spaces_equal(const ClassMatrix& m, int base);

/// (2g+2) row(q_i) == sum_j (row(q_i) - row(q_j)) for every i.
bool remark_check(const ClassMatrix& m);

struct SpanReport {
    Genus genus;
    std::string family;
    std::size_t descriptors;
    std::size_t weierstrass_rank;
    std::size_t collino_rank;
    bool row_spaces_equal;
    bool relation_holds;  // column sums vanish
    bool remark_holds;
    /// Family that reached 2g+1, or empty if none did.
    std::string bound_achieved_by;

    std::size_t target_rank() const { return static_cast<std::size_t>(2 * genus.value() + 1); }
    bool passed() const {
        return weierstrass_rank == target_rank() && collino_rank == target_rank() && row_spaces_equal &&
               relation_holds && remark_holds;
    }
};

SpanReport span_report(const ClassMatrix& m, int base);

/// Consecutive family first; if it falls short of 2g+1, the augmented one.
/// The report names the family that reached the bound.
SpanReport span_report_with_fallback(Genus g);

}  // namespace hypj

#endif  // HYPJ_CLASS_SPAN_HPP
