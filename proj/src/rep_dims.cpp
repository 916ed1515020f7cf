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

#include "hypj/rep_dims.hpp"

#include <stdexcept>

#include "hypj/derivations.hpp"
#include "hypj/free_lie.hpp"
#include "hypj/rational.hpp"
#include "hypj/sparse_matrix.hpp"

namespace hypj {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition must be weakly decreasing");
    }
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

std::size_t weyl_dim(const Partition& lambda, Genus g) {
    const int n = g.value();
    if (lambda.length() > static_cast<std::size_t>(n))
        throw std::invalid_argument("partition " + lambda.to_string() + " has more than g parts");
    // In the epsilon basis rho = (n, n-1, ..., 1); positive roots of C_n are
    // e_i - e_j, e_i + e_j (i < j) and 2 e_i.
    std::vector<long> l(n), rho(n);
    for (int i = 0; i < n; ++i) {
        rho[i] = n - i;
        l[i] = rho[i] + (static_cast<std::size_t>(i) < lambda.length() ? lambda.parts()[i] : 0);
    }
    Rational dim = 1;
    for (int i = 0; i < n; ++i) {
        dim *= make_rational(l[i], rho[i]);
        for (int j = i + 1; j < n; ++j) {
            dim *= make_rational(l[i] - l[j], rho[i] - rho[j]);
            dim *= make_rational(l[i] + l[j], rho[i] + rho[j]);
        }
    }
    if (dim.get_den() != 1) throw std::logic_error("Weyl dimension is not an integer");
    return dim.get_num().get_ui();
}

bool DimReport::passed() const {
    for (const auto& c : checks)
        if (!c.holds()) return false;
    return !checks.empty();
}

namespace {

DimCheck make_check(std::string name, const std::vector<Partition>& parts, std::size_t computed, Genus g) {
    DimCheck c{std::move(name), "", computed, 0, false};
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) c.partition += "+";
        c.partition += "V" + parts[k].to_string();
        c.expected += weyl_dim(parts[k], g);
        if (parts[k].length() == static_cast<std::size_t>(g.value())) c.full_length = true;
    }
    return c;
}

}  // namespace

DimReport check_p_decomposition(Genus g) {
    DimReport r{g, {}};
    const std::vector<Partition> lambdas = {Partition({1}), Partition({1, 1}), Partition({2, 1})};
    for (int m = 1; m <= 3; ++m)
        r.checks.push_back(make_check("p(-" + std::to_string(m) + ")", {lambdas[m - 1]}, p_dim(m, g), g));
    return r;
}

DimReport check_der_decomposition(Genus g) {
    DimReport r{g, {}};
    r.checks.push_back(make_check("Der_-2", {Partition({2, 2}), Partition({1, 1})}, der2_basis(g).size(), g));
    return r;
}

RepRingReport check_rep_ring_dims(Genus g, int m) {
    if (m != 1 && m != 2) throw std::invalid_argument("rep-ring check needs m in {1, 2}");
    ResidueMap map = residue_map(m, g);
    RepRingReport r{g, m, 0, map.domain_dim(), map.target_dim(), rank(map.matrix)};
    r.kernel_dim = kernel_basis(map.matrix).size();
    return r;
}

}  // namespace hypj
