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

#include "hypj/free_lie.hpp"
#include "hypj/rep_dims.hpp"
#include "oracles.hpp"

namespace hypj {
namespace {

TEST(Partition, Validation) {
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
    EXPECT_EQ(Partition({2, 1}).to_string(), "[2,1]");
    EXPECT_EQ(Partition({}).length(), 0u);
}

TEST(Weyl, KnownValues) {
    Genus g2(2), g3(3);
    EXPECT_EQ(weyl_dim(Partition({}), g2), 1u);
    EXPECT_EQ(weyl_dim(Partition({1}), g2), 4u);
    EXPECT_EQ(weyl_dim(Partition({1, 1}), g2), 5u);
    EXPECT_EQ(weyl_dim(Partition({2}), g2), 10u);
    EXPECT_EQ(weyl_dim(Partition({2, 1}), g2), 16u);
    EXPECT_EQ(weyl_dim(Partition({2, 2}), g2), 14u);
    EXPECT_EQ(weyl_dim(Partition({1, 1, 1}), g3), 14u);
    EXPECT_EQ(weyl_dim(Partition({2, 2}), g3), 90u);
    EXPECT_EQ(weyl_dim(Partition({2, 1}), g3), 64u);
}

TEST(Weyl, RejectsTooManyParts) {
    EXPECT_THROW(weyl_dim(Partition({1, 1, 1}), Genus(2)), std::invalid_argument);
    EXPECT_NO_THROW(weyl_dim(Partition({1, 1}), Genus(2)));
}

TEST(Weyl, ColumnsAreTracelessExteriorPowers) {
    for (int gv = 2; gv <= 7; ++gv)
        for (int k = 1; k <= gv; ++k) {
            std::vector<int> parts(k, 1);
            EXPECT_EQ(weyl_dim(Partition(parts), Genus(gv)),
                      oracle::binomial(2 * gv, k) - oracle::binomial(2 * gv, k - 2))
                << gv << " " << k;
        }
}

TEST(Weyl, RowsAreSymmetricPowers) {
    for (int gv = 2; gv <= 7; ++gv)
        for (int k = 1; k <= 6; ++k)
            EXPECT_EQ(weyl_dim(Partition({k}), Genus(gv)), oracle::binomial(2 * gv + k - 1, k));
}

TEST(Weyl, SquareOfHDecomposes) {
    // H (x) H = S^2 H + Lambda^2 H = V[2] + V[1,1] + V[]
    for (int gv = 2; gv <= 8; ++gv) {
        Genus g(gv);
        EXPECT_EQ(weyl_dim(Partition({2}), g) + weyl_dim(Partition({1, 1}), g) + 1,
                  static_cast<std::size_t>(4 * gv * gv));
    }
}

TEST(PDecomposition, GenusTwoToFive) {
    for (int gv = 2; gv <= 5; ++gv) {
        DimReport r = check_p_decomposition(Genus(gv));
        EXPECT_TRUE(r.passed()) << gv;
        ASSERT_EQ(r.checks.size(), 3u);
        EXPECT_EQ(r.checks[2].name, "p(-3)");
        EXPECT_EQ(r.checks[2].computed, p_dim(3, Genus(gv)));
        EXPECT_EQ(r.checks[1].full_length, gv == 2);
    }
    EXPECT_EQ(check_p_decomposition(Genus(2)).checks[2].expected, 16u);
}

TEST(DerDecomposition, GenusTwoAndThree) {
    for (int gv = 2; gv <= 3; ++gv) {
        DimReport r = check_der_decomposition(Genus(gv));
        EXPECT_TRUE(r.passed());
        EXPECT_EQ(r.checks[0].full_length, gv == 2);
    }
    EXPECT_EQ(check_der_decomposition(Genus(3)).checks[0].computed, 104u);
}

TEST(RepRing, IdentityAndSurjectivity) {
    for (int gv = 2; gv <= 3; ++gv)
        for (int m = 1; m <= 2; ++m) {
            Genus g(gv);
            RepRingReport r = check_rep_ring_dims(g, m);
            EXPECT_TRUE(r.surjective());
            EXPECT_TRUE(r.passed());
            EXPECT_EQ(r.domain_dim, static_cast<std::size_t>(2 * gv) * p_dim(1 + m, g));
            EXPECT_EQ(r.target_dim, p_dim(2 + m, g));
        }
    EXPECT_THROW(check_rep_ring_dims(Genus(2), 3), std::invalid_argument);
}

}  // namespace
}  // namespace hypj
