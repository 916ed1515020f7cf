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
// The even-subset model of H_1(S; F_2): even subsets of the 2g+2 Weierstrass
// points modulo complementation, with the intersection-count pairing.

#ifndef HYPJ_F2_MODEL_HPP
#define HYPJ_F2_MODEL_HPP

#include <cstdint>
#include <vector>

#include "hypj/symplectic.hpp"

namespace hypj {

/// The quotient space is built from all 2^(2g+2) subsets.
inline constexpr int kF2MaxGenus = 10;

/// Subsets of W = {1..2g+2} as bit masks (bit p-1 for point p).
using PointMask = std::uint32_t;

PointMask point_mask(const std::vector<int>& points);

/// An even subset T of W; T and its complement are the same class.
class F2SubsetClass {
public:
    /// Throws std::invalid_argument for an odd subset or a point outside W.
    F2SubsetClass(Genus g, const std::vector<int>& points);
    static F2SubsetClass from_mask(Genus g, PointMask mask);

    Genus genus() const { return g_; }
    PointMask mask() const { return mask_; }
    F2SubsetClass complement() const;

private:
    F2SubsetClass(Genus g, PointMask mask, int);
    Genus g_;
    PointMask mask_;
};

/// F_2 matrix stored as row bit masks; rows.size() x cols.
struct F2Matrix {
    int cols = 0;
    std::vector<std::uint32_t> rows;

    bool at(int r, int c) const { return (rows.at(r) >> c) & 1u; }
    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;
};

int f2_rank(std::vector<std::uint32_t> vectors);
F2Matrix f2_multiply(const F2Matrix& x, const F2Matrix& y);
F2Matrix f2_transpose(const F2Matrix& m);

/// The quotient of the even-subset space by {e_T + e_{T^c}}.
struct F2ClassSpace {
    Genus genus;
    int dimension;
    /// Representative even subsets of the basis classes.
    std::vector<PointMask> basis;
    /// Gram matrix of f2_pairing on the basis.
    F2Matrix gram;

    /// Coordinates of a class in the basis, as a bit mask over basis indices.
    std::uint32_t coordinates(const F2SubsetClass& t) const;
    bool is_zero_class(const F2SubsetClass& t) const { return coordinates(t) == 0; }
};

/// Builds the quotient by elimination over F_2. Basis candidates are the
/// classes of {i, 2g+2} for i = 1..2g+1, and the one made dependent by the
/// complementation relation is dropped.
F2ClassSpace f2_class_space(Genus g);

/// #(S n T) mod 2.
int f2_pairing(const F2SubsetClass& s, const F2SubsetClass& t);

/// A permutation of W as the images perm[p-1] of points p = 1..2g+2.
using Permutation = std::vector<int>;

/// Matrix of the induced map on the quotient: column j holds the coordinates
/// of the image of basis class j. Throws std::invalid_argument unless perm is
/// a bijection of W.
F2Matrix perm_to_sp_f2(const F2ClassSpace& space, const Permutation& perm);

/// M^T G M == G over F_2.
bool preserves_pairing(const F2ClassSpace& space, const F2Matrix& m);

}  // namespace hypj

#endif  // HYPJ_F2_MODEL_HPP
