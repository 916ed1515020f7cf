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

#include <set>

#include "hypj/symplectic.hpp"
#include "hypj/tensor.hpp"
#include "oracles.hpp"

namespace hypj {
namespace {

BiVector random_bivector(Genus g, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> v(-3, 3);
    BiVector x(g);
    for (int i = 0; i < g.wedge_dim(); ++i) x[i] = v(rng);
    return x;
}

TEST(Genus, RejectsOutOfRange) {
    EXPECT_THROW(Genus(1), std::invalid_argument);
    EXPECT_THROW(Genus(Genus::kMax + 1), std::invalid_argument);
    Genus g(3);
    EXPECT_EQ(g.h_dim(), 6);
    EXPECT_EQ(g.wedge_dim(), 15);
    EXPECT_EQ(g.v_dim(), 14);
    EXPECT_EQ(g.point_count(), 8);
}

TEST(Letter, OrdersRoundTrip) {
    for (int gv = 2; gv <= 5; ++gv) {
        Genus g(gv);
        std::set<int> codes;
        for (int i = 0; i < g.h_dim(); ++i) {
            Letter x = Letter::from_h_index(g, i);
            EXPECT_EQ(x.h_index(g), i);
            EXPECT_EQ(Letter::from_lie_code(x.lie_code()), x);
            codes.insert(x.lie_code());
        }
        EXPECT_EQ(codes.size(), static_cast<std::size_t>(g.h_dim()));
    }
    EXPECT_EQ(Letter::a(2).dual(), Letter::b(2));
    EXPECT_EQ(Letter::b(1).name(), "b1");
}

TEST(Pairing, StandardSymplecticTable) {
    Genus g(3);
    for (Letter x : letters(g))
        for (Letter y : letters(g)) {
            int expected = 0;
            if (x.handle() == y.handle() && x.kind() != y.kind()) expected = x.kind() == Letter::Kind::A ? 1 : -1;
            EXPECT_EQ(pairing(x, y), expected) << x.name() << "," << y.name();
        }
}

TEST(HandleSet, SortsAndValidates) {
    Genus g(4);
    EXPECT_EQ(make_handle_set(g, {3, 1}), (HandleSet{1, 3}));
    EXPECT_THROW(make_handle_set(g, {5}), std::out_of_range);
    EXPECT_EQ(complement(g, {1, 3}), (HandleSet{2, 4}));
}

TEST(Wedge, IndexIsABijection) {
    for (int gv = 2; gv <= 5; ++gv) {
        Genus g(gv);
        std::set<int> seen;
        for (int s = 0; s < g.h_dim(); ++s)
            for (int t = s + 1; t < g.h_dim(); ++t) {
                const int idx = wedge_index(g, s, t);
                EXPECT_EQ(wedge_pair(g, idx), std::make_pair(s, t));
                seen.insert(idx);
            }
        EXPECT_EQ(seen.size(), oracle::binomial(g.h_dim(), 2));
        EXPECT_EQ(*seen.rbegin(), g.wedge_dim() - 1);
    }
}

TEST(BiVector, MonomialAntisymmetry) {
    Genus g(2);
    EXPECT_EQ(BiVector::monomial(g, 2, 0), -BiVector::monomial(g, 0, 2));
    EXPECT_TRUE(BiVector::monomial(g, 1, 1).is_zero());
}

TEST(Theta, ContractionIsGenus) {
    for (int gv = 2; gv <= 6; ++gv) {
        Genus g(gv);
        EXPECT_EQ(theta(g).contraction(), gv);
        EXPECT_EQ(theta_I(g, {1}).contraction(), 1);
        EXPECT_EQ(theta_I(g, {1}) + theta_I(g, complement(g, {1})), theta(g));
    }
}

TEST(ProjectHatTheta, KillsThetaAndIsIdempotent) {
    auto rng = oracle::rng(11);
    for (int gv = 2; gv <= 4; ++gv) {
        Genus g(gv);
        EXPECT_TRUE(project_hat_theta(theta(g)).is_zero());
        for (int t = 0; t < 20; ++t) {
            BiVector x = random_bivector(g, rng);
            BiVector p = project_hat_theta(x);
            EXPECT_EQ(p.contraction(), 0);
            EXPECT_EQ(project_hat_theta(p), p);
            EXPECT_EQ(project_mod_theta(p), project_mod_theta(x));
        }
    }
}

TEST(VClass, CanonicalRepresentative) {
    Genus g(3);
    const int omitted = v_omitted_index(g);
    EXPECT_EQ(wedge_label(g, omitted), "a3^b3");
    EXPECT_THROW(VClass::from_canonical(theta(g)), std::invalid_argument);
    EXPECT_TRUE(project_mod_theta(theta(g)).is_zero());
    // a3^b3 = theta - a1^b1 - a2^b2 mod theta
    VClass v = project_mod_theta(BiVector::wedge(g, Letter::a(3), Letter::b(3)));
    VClass expected = -1 * project_mod_theta(BiVector::wedge(g, Letter::a(1), Letter::b(1))) -
                      project_mod_theta(BiVector::wedge(g, Letter::a(2), Letter::b(2)));
    EXPECT_EQ(v, expected);
    for (int j = 0; j < g.v_dim(); ++j) {
        auto c = VClass::basis(g, j).coordinates();
        ASSERT_EQ(c.size(), static_cast<std::size_t>(g.v_dim()));
        for (int k = 0; k < g.v_dim(); ++k) EXPECT_EQ(c[k], j == k ? 1 : 0);
    }
}

TEST(SymSq, MonomialKeysCountIsDimension) {
    for (int gv = 2; gv <= 4; ++gv) {
        Genus g(gv);
        const auto n = static_cast<int>(g.wedge_dim());
        EXPECT_EQ(SymSqBiVector::monomial_keys(g).size(), oracle::binomial(n + 1, 2));
    }
}

TEST(SymSq, SquareDoublesCrossTerms) {
    Genus g(2);
    BiVector x = BiVector::monomial(g, 0, 1) + 3 * BiVector::monomial(g, 0, 2);
    SymSqBiVector s = SymSqBiVector::square(x);
    const int mu = wedge_index(g, 0, 1), nu = wedge_index(g, 0, 2);
    SymSqBiVector expected = SymSqBiVector::monomial(g, mu, mu) + 6 * SymSqBiVector::monomial(g, mu, nu) +
                             9 * SymSqBiVector::monomial(g, nu, nu);
    EXPECT_EQ(s, expected);
    EXPECT_EQ(SymSqBiVector::monomial(g, nu, mu), SymSqBiVector::monomial(g, mu, nu));
}

TEST(SymSq, ProductIsBilinearAndSymmetric) {
    auto rng = oracle::rng(12);
    Genus g(2);
    for (int t = 0; t < 20; ++t) {
        BiVector x = random_bivector(g, rng), y = random_bivector(g, rng), z = random_bivector(g, rng);
        EXPECT_EQ(SymSqBiVector::product(x, y), SymSqBiVector::product(y, x));
        EXPECT_EQ(SymSqBiVector::product(x + z, y), SymSqBiVector::product(x, y) + SymSqBiVector::product(z, y));
    }
}

TEST(Word, PacksLetters) {
    Word w = Word::from_letters({Letter::a(1), Letter::b(2), Letter::a(1)});
    EXPECT_EQ(w.length(), 3);
    EXPECT_EQ(w.codes(), (std::vector<int>{0, 3, 0}));
    EXPECT_EQ(w.concat(Word::letter(Letter::b(1))).codes(), (std::vector<int>{0, 3, 0, 1}));
    EXPECT_LT(Word::from_codes({0, 1}), Word::from_codes({0, 2}));
}

TEST(Tensor, CommutatorOfLetters) {
    Genus g(2);
    Tensor c = commutator(Tensor::letter(g, Letter::a(1)), Tensor::letter(g, Letter::b(1)));
    EXPECT_EQ(c.coefficient(Word::from_letters({Letter::a(1), Letter::b(1)})), 1);
    EXPECT_EQ(c.coefficient(Word::from_letters({Letter::b(1), Letter::a(1)})), -1);
    EXPECT_EQ(c.terms().size(), 2u);
}

TEST(Tensor, WedgeRoundTrip) {
    auto rng = oracle::rng(13);
    for (int gv = 2; gv <= 4; ++gv) {
        Genus g(gv);
        for (int t = 0; t < 10; ++t) {
            BiVector x = random_bivector(g, rng);
            EXPECT_EQ(tensor_to_wedge(wedge_to_tensor(x)), x);
        }
    }
}

TEST(Tensor, ContractionPH) {
    Genus g(2);
    // a1 b1 a2 |-> <a1, b1> a2 = a2
    Tensor t = Tensor::word(g, Word::from_letters({Letter::a(1), Letter::b(1), Letter::a(2)}));
    EXPECT_EQ(p_H(t), HVector::basis(g, Letter::a(2)));
    Tensor u = Tensor::word(g, Word::from_letters({Letter::b(1), Letter::a(1), Letter::a(2)}));
    EXPECT_EQ(p_H(u), -1 * HVector::basis(g, Letter::a(2)));
}

TEST(Tensor, ProductIsAssociative) {
    Genus g(2);
    Tensor x = Tensor::letter(g, Letter::a(1)) + 2 * Tensor::letter(g, Letter::b(2));
    Tensor y = Tensor::letter(g, Letter::b(1));
    Tensor z = Tensor::letter(g, Letter::a(2)) - Tensor::letter(g, Letter::a(1));
    EXPECT_EQ(tensor_product(tensor_product(x, y), z), tensor_product(x, tensor_product(y, z)));
    EXPECT_EQ(tensor_product(x, y).degree(), 2);
}

}  // namespace
}  // namespace hypj
