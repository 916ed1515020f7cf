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

#include <functional>

#include "hypj/class_span.hpp"
#include "hypj/monodromy.hpp"
#include "oracles.hpp"

namespace hypj {
namespace {

// tau_tilde(D, q) from the image law of phi on theta_J^2: with J the handles
// on the far side of q, pi_{Lambda^2}(phi(theta_J^2)) = -4(2|J|+1) theta_J.
VClass tau_oracle(const TwistDescriptor& d, int q) {
    const Genus g = d.genus();
    HandleSet far = d.on_a_side(q) ? complement(g, d.handles()) : d.handles();
    const long j = static_cast<long>(far.size());
    return project_mod_theta(Rational(-2 * (2 * j + 1)) * theta_I(g, far));
}

void expect_message(const std::function<void()>& f, const std::string& text) {
    try {
        f();
        ADD_FAILURE() << "no exception, expected: " << text;
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find(text), std::string::npos) << e.what();
    }
}

TEST(Descriptor, ValidationNamesTheInvariant) {
    Genus g(2);
    expect_message([&] { TwistDescriptor::make(g, 1, {1, 2}, {1}); }, "|A| must be 2i+1");
    expect_message([&] { TwistDescriptor::make(g, 1, {1, 2, 3}, {1, 2}); }, "|I| must be i");
    expect_message([&] { TwistDescriptor::make(g, 2, {1, 2, 3, 4, 5}, {1, 2}); }, "1 <= i <= g-1");
    expect_message([&] { TwistDescriptor::make(g, 1, {1, 2, 9}, {1}); }, "not in W");
    expect_message([&] { TwistDescriptor::make(g, 1, {1, 1, 2}, {1}); }, "repeated");
}

TEST(Descriptor, SidesAndLabel) {
    Genus g(3);
    auto d = TwistDescriptor::make(g, 1, {3, 1, 2}, {2});
    EXPECT_EQ(d.label(), "i=1;A={1 2 3};I={2}");
    EXPECT_TRUE(d.on_a_side(2));
    EXPECT_FALSE(d.on_a_side(7));
    EXPECT_THROW(d.on_a_side(9), std::out_of_range);
    EXPECT_TRUE(d.separates(1, 5));
    EXPECT_FALSE(d.separates(4, 5));
    EXPECT_EQ(d.theta_prime(), theta_I(g, {2}));
    EXPECT_EQ(d.theta_double_prime(), theta_I(g, {1, 3}));
    EXPECT_EQ(d.side_theta(1), d.theta_prime());
    EXPECT_EQ(d.side_theta(8), d.theta_double_prime());
}

TEST(Tau, GenusTwoHandValues) {
    Genus g(2);
    auto d = TwistDescriptor::make(g, 1, {1, 2, 3}, {1});
    const VClass a1b1 = project_mod_theta(BiVector::wedge(g, Letter::a(1), Letter::b(1)));
    EXPECT_EQ(tau_tilde(d, 1), 6 * a1b1);
    EXPECT_EQ(tau_tilde(d, 4), -6 * a1b1);
    EXPECT_EQ(pi_Z(d, 1, 4), -4 * a1b1);
    EXPECT_EQ(pi_E(d, 1, 4), -20 * a1b1);
    EXPECT_EQ(tau_tilde(d, 4) - tau_tilde(d, 1), 3 * pi_Z(d, 1, 4));
}

TEST(Tau, MatchesImageLawOracleOnCanonicalFamilies) {
    for (int gv = 2; gv <= 4; ++gv) {
        Genus g(gv);
        const TwistFamily family = canonical_family(g);
        for (const auto& d : family.descriptors())
            for (int q = 1; q <= g.point_count(); ++q) EXPECT_EQ(tau_tilde(d, q), tau_oracle(d, q)) << d.label();
    }
}

TEST(Tau, SumsToZeroOverW) {
    for (int gv = 2; gv <= 4; ++gv) {
        Genus g(gv);
        const TwistFamily family = canonical_family(g);
        for (const auto& d : family.descriptors()) {
            VClass sum(g);
            for (int q = 1; q <= g.point_count(); ++q) sum += tau_tilde(d, q);
            EXPECT_TRUE(sum.is_zero()) << d.label();
        }
    }
}

TEST(Tau, HypDerivationKillsTheta) {
    Genus g(3);
    auto d = TwistDescriptor::make(g, 2, {1, 2, 3, 4, 5}, {1, 3});
    for (int q : {1, 8}) EXPECT_TRUE(annihilation_residue(tau_hyp(d, q).candidate()).is_zero());
}

TEST(PiZ, ZeroUnlessSeparatedAndAntisymmetric) {
    Genus g(3);
    auto d = TwistDescriptor::make(g, 1, {1, 2, 3}, {1});
    EXPECT_TRUE(pi_Z(d, 1, 2).is_zero());
    EXPECT_TRUE(pi_Z(d, 5, 8).is_zero());
    EXPECT_EQ(pi_Z(d, 1, 5), -1 * pi_Z(d, 5, 1));
    EXPECT_EQ(pi_Z(d, 1, 5), 4 * project_mod_theta(d.theta_double_prime()));
    EXPECT_THROW(pi_Z(d, 3, 3), std::invalid_argument);
    EXPECT_EQ(pi_E(d, 1, 5), 7 * pi_Z(d, 1, 5));
}

TEST(TauDifference, HoldsOnCanonicalFamilies) {
    for (int gv = 2; gv <= 4; ++gv) {
        Genus g(gv);
        TwistFamily fam = canonical_family(g);
        TheoremAReport r = verify_theorem_A(g, fam.descriptors());
        EXPECT_TRUE(r.passed());
        EXPECT_EQ(r.failures(), 0u);
        const std::size_t n = g.point_count();
        EXPECT_EQ(r.checks.size(), fam.size() * n * (n - 1));
    }
}

TEST(TauDifference, HoldsOnAugmentedFamilyGenusThree) {
    Genus g(3);
    EXPECT_TRUE(verify_theorem_A(g, canonical_family(g, FamilyKind::Augmented).descriptors()).passed());
}

TEST(Zeta, ProjectionIsMultipleOfThetaDoublePrime) {
    for (int gv = 2; gv <= 4; ++gv) {
        Genus g(gv);
        const TwistFamily family = canonical_family(g);
        for (const auto& d : family.descriptors())
            EXPECT_EQ(zeta_projection(d), Rational(2 * (2 * gv + 2)) * project_mod_theta(d.theta_double_prime()));
    }
}

TEST(VPrimeChain, SymmetricIdentityForAllHandleSets) {
    for (int gv = 2; gv <= 4; ++gv) {
        Genus g(gv);
        for (unsigned mask = 0; mask < (1u << gv); ++mask) {
            HandleSet h;
            for (int i = 0; i < gv; ++i)
                if (mask >> i & 1u) h.push_back(i + 1);
            EXPECT_TRUE(key_lemma_identity(g, h));
        }
        EXPECT_TRUE(phi_theta_squared_trivial(g));
    }
}

TEST(VPrimeChain, ChainHoldsOnEveryCanonicalDescriptor) {
    for (int gv = 2; gv <= 4; ++gv) {
        Genus g(gv);
        const TwistFamily family = canonical_family(g);
        for (const auto& d : family.descriptors()) {
            KeyLemmaReport r = key_lemma_check(g, d);
            EXPECT_TRUE(r.symmetric_identity);
            EXPECT_TRUE(r.phi_theta_squared_trivial);
            EXPECT_TRUE(r.residual_pi_hat_zero);
            EXPECT_TRUE(r.residual_closed_form);
            EXPECT_TRUE(r.v_prime_part_trivial);
        }
    }
}

TEST(VPrimeChain, PhiOfThetaSquaredLiesInJ3) {
    // phi(theta^2)(x) = -2[theta, x], which is in J_3 and nonzero in L_3.
    Genus g(2);
    DerivationCandidate d = phi(SymSqBiVector::square(theta(g)));
    EXPECT_FALSE(d.image(Letter::a(1)).is_zero());
    for (Letter x : letters(g)) EXPECT_TRUE(ideal_component(3, g).contains(d.image(x)));
}

}  // namespace
}  // namespace hypj
