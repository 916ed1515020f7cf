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

// Weyl dimensions of irreducible Sp(2g)-representations and dimension-level
// checks of the decompositions of p(-m) and of the derivation spaces.

#ifndef HYPJ_REP_DIMS_HPP
#define HYPJ_REP_DIMS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hypj/symplectic.hpp"

namespace hypj {

class Partition {
public:
    /// Throws std::invalid_argument unless the parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    /// e.g. "[2,1]"
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// dim V_lambda for Sp(2g). Throws std::invalid_argument if the partition has
/// more than g parts.
std::size_t weyl_dim(const Partition& lambda, Genus g);

struct DimCheck {
    std::string name;      // e.g. "p(-3)"
    std::string partition; // the representations compared against
    std::size_t computed;
    std::size_t expected;
    bool full_length;      // some partition has exactly g parts
    bool holds() const { return computed == expected; }
};

struct DimReport {
    Genus genus;
    std::vector<DimCheck> checks;
    bool passed() const;
};

/// dim p(-m) against V_[1], V_[1,1], V_[2,1] for m = 1, 2, 3.
DimReport check_p_decomposition(Genus g);

/// |der2_basis(g)| against dim V_[2,2] + dim V_[1,1].
DimReport check_der_decomposition(Genus g);

struct RepRingReport {
    Genus genus;
    int shift;
    std::size_t kernel_dim;     // dim Der_{-m} p
    std::size_t domain_dim;     // 2g dim p(-1-m)
    std::size_t target_dim;     // dim p(-2-m)
    std::size_t residue_rank;
    bool surjective() const { return residue_rank == target_dim; }
    bool passed() const { return surjective() && kernel_dim + target_dim == domain_dim; }
};

/// Throws std::invalid_argument unless m is 1 or 2.
RepRingReport check_rep_ring_dims(Genus g, int m);

}  // namespace hypj

#endif  // HYPJ_REP_DIMS_HPP
