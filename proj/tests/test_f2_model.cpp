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

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "hypj/f2_model.hpp"
#include "oracles.hpp"

namespace hypj {
namespace {

Permutation identity_perm(Genus g) {
    Permutation p(g.point_count());
    std::iota(p.begin(), p.end(), 1);
    return p;
}

TEST(F2Subset, RejectsOddAndForeignPoints) {
    Genus g(2);
    EXPECT_THROW(F2SubsetClass(g, {1, 2, 3}), std::invalid_argument);
    EXPECT_THROW(F2SubsetClass(g, {1, 7}), std::invalid_argument);
    EXPECT_THROW(F2SubsetClass(g, {1, 1}), std::invalid_argument);
    EXPECT_NO_THROW(F2SubsetClass(g, {1, 6}));
    EXPECT_THROW(f2_class_space(Genus(kF2MaxGenus + 1)), std::invalid_argument);
}

TEST(F2Space, DimensionIsTwiceGenus) {
    for (int gv = 2; gv <= 5; ++gv) {
        Genus g(gv);
        F2ClassSpace s = f2_class_space(g);
        EXPECT_EQ(s.dimension, 2 * gv);
        EXPECT_EQ(s.basis.size(), static_cast<std::size_t>(2 * gv));
    }
}

// Counts classes {T, T^c} of even subsets by brute force and checks the
// coordinate map is a bijection onto F_2^{2g} that identifies T with T^c.
TEST(F2Space, CoordinatesBijectOnBruteForceClasses) {
    for (int gv = 2; gv <= 4; ++gv) {
        Genus g(gv);
        F2ClassSpace s = f2_class_space(g);
        const int n = g.point_count();
        const PointMask full = (PointMask{1} << n) - 1;
        std::set<PointMask> classes;
        std::set<std::uint32_t> coords;
        for (PointMask m = 0; m <= full; ++m) {
            if (std::popcount(m) % 2) continue;
            classes.insert(std::min(m, full ^ m));
            auto t = F2SubsetClass::from_mask(g, m);
            EXPECT_EQ(s.coordinates(t), s.coordinates(t.complement()));
            coords.insert(s.coordinates(t));
        }
        EXPECT_EQ(classes.size(), std::size_t{1} << (2 * gv));
        EXPECT_EQ(coords.size(), classes.size());
    }
}

TEST(F2Space, CoordinatesAreLinear) {
    Genus g(3);
    F2ClassSpace s = f2_class_space(g);
    auto rng = oracle::rng(21);
    std::uniform_int_distribution<PointMask> pick(0, (PointMask{1} << g.point_count()) - 1);
    for (int t = 0; t < 200; ++t) {
        PointMask x = pick(rng), y = pick(rng);
        if (std::popcount(x) % 2) x ^= 1;
        if (std::popcount(y) % 2) y ^= 1;
        EXPECT_EQ(s.coordinates(F2SubsetClass::from_mask(g, x ^ y)),
                  s.coordinates(F2SubsetClass::from_mask(g, x)) ^ s.coordinates(F2SubsetClass::from_mask(g, y)));
    }
}

TEST(F2Pairing, GramIsNondegenerateAndMatchesBruteForce) {
    for (int gv = 2; gv <= 6; ++gv) {
        Genus g(gv);
        F2ClassSpace s = f2_class_space(g);
        EXPECT_EQ(f2_rank(s.gram.rows), 2 * gv);
        for (int i = 0; i < s.dimension; ++i)
            for (int j = 0; j < s.dimension; ++j)
                EXPECT_EQ(s.gram.at(i, j), std::popcount(s.basis[i] & s.basis[j]) % 2 == 1);
    }
}

TEST(F2Pairing, WellDefinedOnClasses) {
    Genus g(2);
    F2SubsetClass s(g, {1, 2}), t(g, {2, 3});
    EXPECT_EQ(f2_pairing(s, t), 1);
    EXPECT_EQ(f2_pairing(s, t.complement()), 1);
    EXPECT_EQ(f2_pairing(s, s), 0);
}

TEST(F2Perm, RejectsNonBijection) {
    Genus g(2);
    F2ClassSpace s = f2_class_space(g);
    EXPECT_THROW(perm_to_sp_f2(s, {1, 1, 2, 3, 4, 5}), std::invalid_argument);
    EXPECT_THROW(perm_to_sp_f2(s, {1, 2, 3}), std::invalid_argument);
}

TEST(F2Perm, IdentityMapsToIdentity) {
    Genus g(3);
    F2ClassSpace s = f2_class_space(g);
    F2Matrix m = perm_to_sp_f2(s, identity_perm(g));
    for (int i = 0; i < s.dimension; ++i)
        for (int j = 0; j < s.dimension; ++j) EXPECT_EQ(m.at(i, j), i == j);
}

TEST(F2Perm, ExhaustiveGenusTwoIsFaithfulSymplecticHomomorphism) {
    Genus g(2);
    F2ClassSpace s = f2_class_space(g);
    std::map<std::vector<std::uint32_t>, Permutation> seen;
    Permutation p = identity_perm(g);
    do {
        F2Matrix m = perm_to_sp_f2(s, p);
        EXPECT_TRUE(preserves_pairing(s, m));
        EXPECT_TRUE(seen.emplace(m.rows, p).second);
    } while (std::next_permutation(p.begin(), p.end()));
    EXPECT_EQ(seen.size(), 720u);
    // |Sp(4, F_2)| = 720, so the representation is onto as well.
}

TEST(F2Perm, SampledHomomorphismAtHigherGenus) {
    for (int gv = 3; gv <= 4; ++gv) {
        Genus g(gv);
        F2ClassSpace s = f2_class_space(g);
        auto rng = oracle::rng(22 + gv);
        Permutation a = identity_perm(g), b = identity_perm(g);
        for (int t = 0; t < 50; ++t) {
            std::shuffle(a.begin(), a.end(), rng);
            std::shuffle(b.begin(), b.end(), rng);
            Permutation ab(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) ab[i] = a[b[i] - 1];
            F2Matrix ma = perm_to_sp_f2(s, a), mb = perm_to_sp_f2(s, b);
            EXPECT_TRUE(preserves_pairing(s, ma));
            EXPECT_EQ(perm_to_sp_f2(s, ab), f2_multiply(ma, mb));
        }
        // A transposition acts nontrivially.
        Permutation tr = identity_perm(g);
        std::swap(tr[0], tr[1]);
        EXPECT_FALSE(perm_to_sp_f2(s, tr) == perm_to_sp_f2(s, identity_perm(g)));
    }
}

TEST(F2Matrix, TransposeAndMultiply) {
    F2Matrix x{3, {0b011, 0b101}};
    F2Matrix t = f2_transpose(x);
    ASSERT_EQ(t.rows.size(), 3u);
    EXPECT_EQ(t.cols, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_EQ(x.at(i, j), t.at(j, i));
    F2Matrix xxt = f2_multiply(x, t);
    // rows 011, 101: self products 0, cross product 1
    EXPECT_EQ(xxt.rows, (std::vector<std::uint32_t>{0b10, 0b01}));
}

}  // namespace
}  // namespace hypj
