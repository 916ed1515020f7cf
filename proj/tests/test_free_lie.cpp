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

#include <cmath>
#include <functional>

#include "hypj/free_lie.hpp"
#include "oracles.hpp"

namespace hypj {
namespace {

// Tensor of the standard bracketing of a Lyndon word, factored by the longest
// proper Lyndon suffix found with the brute-force test.
Tensor bracket_tree(Genus g, const std::vector<int>& w) {
    if (w.size() == 1) return Tensor::letter(g, Letter::from_lie_code(w[0]));
    for (std::size_t split = 1; split < w.size(); ++split) {
        std::vector<int> v(w.begin() + split, w.end());
        if (oracle::brute_lyndon(v)) {
            std::vector<int> u(w.begin(), w.begin() + split);
            Tensor a = bracket_tree(g, u), b = bracket_tree(g, v);
            return tensor_product(a, b) - tensor_product(b, a);
        }
    }
    throw std::logic_error("no Lyndon suffix");
}

LieElement random_lie(Genus g, int degree, std::mt19937_64& rng) {
    const auto& table = lyndon_basis_table(g, degree);
    std::uniform_int_distribution<std::size_t> pick(0, table.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    LieElement x(g, degree);
    for (int t = 0; t < 4; ++t) x += Rational(coeff(rng)) * LieElement::basis_element(g, degree, pick(rng));
    return x;
}

TEST(Witt, MatchesNecklaceCounts) {
    EXPECT_EQ(witt_dim(4, 1), 4u);
    EXPECT_EQ(witt_dim(4, 2), 6u);
    EXPECT_EQ(witt_dim(4, 3), 20u);
    EXPECT_EQ(witt_dim(4, 4), 60u);
    EXPECT_EQ(witt_dim(6, 4), 315u);
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= 5; ++k) {
            if (std::pow(n, k) > 2e5) continue;
            EXPECT_EQ(witt_dim(n, k), oracle::brute_lyndon_count(n, k)) << n << " " << k;
        }
}

TEST(Lyndon, PredicateMatchesBruteForce) {
    auto rng = oracle::rng(31);
    std::uniform_int_distribution<int> len(1, 7), letter(0, 3);
    for (int t = 0; t < 2000; ++t) {
        std::vector<int> w(len(rng));
        for (auto& c : w) c = letter(rng);
        EXPECT_EQ(is_lyndon(Word::from_codes(w)), oracle::brute_lyndon(w));
    }
}

TEST(Lyndon, DuvalEnumerationIsSortedAndComplete) {
    for (int n = 2; n <= 6; n += 2)
        for (int k = 1; k <= 4; ++k) {
            auto words = lyndon_words(n, k);
            EXPECT_EQ(words.size(), witt_dim(n, k));
            EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
            for (const auto& w : words) EXPECT_TRUE(oracle::brute_lyndon(w.codes()));
        }
}

TEST(Lyndon, StandardFactorizationConcatenates) {
    LyndonWord w(Word::from_codes({0, 0, 1, 0, 1, 1}));
    auto [u, v] = w.standard_factorization();
    EXPECT_EQ(u.word().concat(v.word()), w.word());
    EXPECT_LT(u, v);
    EXPECT_THROW(LyndonWord(Word::from_codes({1, 0})), std::invalid_argument);
}

TEST(LyndonBasis, ExpansionsMatchBracketTreeOracle) {
    for (int gv = 2; gv <= 3; ++gv) {
        Genus g(gv);
        for (int k = 1; k <= 4; ++k) {
            const auto& table = lyndon_basis_table(g, k);
            ASSERT_EQ(table.size(), witt_dim(g.h_dim(), k));
            for (std::size_t i = 0; i < table.size(); ++i) {
                const Word& w = table.words()[i];
                const Tensor& e = table.expansion(i);
                EXPECT_EQ(e, bracket_tree(g, w.codes())) << w.to_string();
                // Leading word is w itself with coefficient 1, all others larger.
                EXPECT_EQ(e.coefficient(w), 1);
                for (const auto& [code, c] : e.terms()) EXPECT_GE(code, w.code());
                EXPECT_EQ(table.index_of(w), i);
            }
        }
    }
}

TEST(LieElement, FromTensorInvertsToTensor) {
    auto rng = oracle::rng(32);
    for (int gv = 2; gv <= 3; ++gv) {
        Genus g(gv);
        for (int k = 1; k <= 4; ++k)
            for (int t = 0; t < 10; ++t) {
                LieElement x = random_lie(g, k, rng);
                EXPECT_EQ(LieElement::from_tensor(x.to_tensor()), x);
            }
    }
}

TEST(LieElement, FromTensorRejectsNonLie) {
    Genus g(2);
    Tensor t = Tensor::word(g, Word::from_codes({0, 1}));
    EXPECT_THROW(LieElement::from_tensor(t), std::invalid_argument);
}

TEST(Bracket, LieAlgebraAxioms) {
    auto rng = oracle::rng(33);
    Genus g(2);
    for (int t = 0; t < 30; ++t) {
        LieElement x = random_lie(g, 1, rng), y = random_lie(g, 1, rng), z = random_lie(g, 2, rng);
        EXPECT_TRUE((bracket(x, z) + bracket(z, x)).is_zero());
        EXPECT_TRUE(bracket(x, x).is_zero());
        LieElement jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
        EXPECT_TRUE(jac.is_zero());
        EXPECT_EQ(lie_to_tensor(bracket(x, z)), commutator(lie_to_tensor(x), lie_to_tensor(z)));
    }
}

TEST(Bracket, DegreesAdd) {
    Genus g(3);
    LieElement x = LieElement::letter(g, Letter::a(1)), y = LieElement::letter(g, Letter::b(2));
    EXPECT_EQ(bracket(x, bracket(x, y)).degree(), 3);
}

TEST(Theta, LieThetaMatchesTensorWedge) {
    for (int gv = 2; gv <= 4; ++gv) {
        Genus g(gv);
        EXPECT_EQ(theta_lie(g).to_tensor(), wedge_to_tensor(theta(g)));
        EXPECT_EQ(theta_lie(g, {1, 2}).to_tensor(), wedge_to_tensor(theta_I(g, {1, 2})));
    }
}

TEST(Ideal, LowDegreeDimensions) {
    for (int gv = 2; gv <= 4; ++gv) {
        Genus g(gv);
        EXPECT_EQ(ideal_component(2, g).dim(), 1u);
        // [theta, x] for the 2g letters are independent.
        EXPECT_EQ(ideal_component(3, g).dim(), static_cast<std::size_t>(2 * gv));
        EXPECT_TRUE(ideal_component(3, g).contains(bracket(theta_lie(g), LieElement::letter(g, Letter::b(1)))));
        EXPECT_FALSE(ideal_component(2, g).contains(theta_lie(g, {1})));
    }
    EXPECT_THROW(ideal_component(1, Genus(2)), std::invalid_argument);
}

TEST(Ideal, DegreeFourSpannedByDoubleBrackets) {
    Genus g(2);
    const auto& j4 = ideal_component(4, g);
    for (Letter x : letters(g))
        for (Letter y : letters(g)) {
            LieElement e = bracket(bracket(theta_lie(g), LieElement::letter(g, x)), LieElement::letter(g, y));
            EXPECT_TRUE(j4.contains(e));
        }
    // [[theta, x], y] generate J_4; compare against the dense oracle on Lyndon coordinates.
    oracle::Dense rows;
    const std::size_t n = lyndon_basis_table(g, 4).size();
    for (Letter x : letters(g))
        for (Letter y : letters(g)) {
            LieElement e = bracket(bracket(theta_lie(g), LieElement::letter(g, x)), LieElement::letter(g, y));
            auto d = e.coords().to_dense(n);
            rows.push_back(d);
        }
    EXPECT_EQ(j4.dim(), oracle::dense_rank(rows));
}

TEST(Quotient, DimensionsAtGenusTwoAndThree) {
    Genus g2(2), g3(3);
    EXPECT_EQ(p_dim(1, g2), 4u);
    EXPECT_EQ(p_dim(2, g2), 5u);
    EXPECT_EQ(p_dim(3, g2), 16u);
    EXPECT_EQ(p_dim(4, g2), 45u);
    EXPECT_EQ(p_dim(2, g3), 14u);
    EXPECT_EQ(p_dim(3, g3), 64u);
    for (int gv = 2; gv <= 4; ++gv) {
        Genus g(gv);
        for (int m = 2; m <= 4; ++m)
            EXPECT_EQ(p_dim(m, g) + ideal_component(m, g).dim(), witt_dim(g.h_dim(), m));
    }
}

TEST(Quotient, ReductionIsCanonicalAndLinear) {
    auto rng = oracle::rng(34);
    Genus g(2);
    for (int m = 2; m <= 4; ++m) {
        const auto basis = ideal_component(m, g).basis();
        for (int t = 0; t < 10; ++t) {
            LieElement x = random_lie(g, m, rng);
            LieElement shifted = x + Rational(t - 5) * basis[t % basis.size()];
            EXPECT_EQ(reduce_mod_ideal(x), reduce_mod_ideal(shifted));
            EXPECT_EQ(reduce_mod_ideal(x).coordinates().size(), p_dim(m, g));
            EXPECT_TRUE(ideal_component(m, g).contains(x - reduce_mod_ideal(x).lift()));
        }
    }
    EXPECT_TRUE(reduce_mod_ideal(theta_lie(g)).is_zero());
}

TEST(Quotient, BasisIndicesAreFreeColumns) {
    Genus g(2);
    auto q = quotient_basis(3, g);
    EXPECT_EQ(q.size(), 16u);
    EXPECT_EQ(q, ideal_component(3, g).echelon().free_cols());
    EXPECT_EQ(quotient_basis(1, g).size(), 4u);
}

}  // namespace
}  // namespace hypj
