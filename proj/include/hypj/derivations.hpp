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
// Degree -m derivations of L(H) and of p = L(H)/<theta>; the map
// phi: S^2 Lambda^2 H -> Hom(H, L_3(H)) and its projections onto Lambda^2 H
// and onto V.

#ifndef HYPJ_DERIVATIONS_HPP
#define HYPJ_DERIVATIONS_HPP

#include <cstddef>
#include <vector>

#include "hypj/free_lie.hpp"
#include "hypj/sparse_matrix.hpp"
#include "hypj/symplectic.hpp"
#include "hypj/tensor.hpp"

namespace hypj {

/// A linear map H -> L_{m+1}(H), extended to a derivation by the Leibniz rule.
class DerivationCandidate {
public:
    /// Images indexed by h_index. With `reduced`, images are canonical
    /// representatives modulo J_{m+1}, i.e. the map targets p(-m-1).
    DerivationCandidate(Genus g, int shift, std::vector<LieElement> images, bool reduced = false);
    static DerivationCandidate zero(Genus g, int shift);

    Genus genus() const { return g_; }
    int shift() const { return shift_; }
    bool reduced() const { return reduced_; }
    const LieElement& image(Letter x) const { return images_.at(x.h_index(g_)); }
    const std::vector<LieElement>& images() const { return images_; }

    DerivationCandidate& operator+=(const DerivationCandidate& other);
    DerivationCandidate& operator*=(const Rational& c);
    friend DerivationCandidate operator+(DerivationCandidate x, const DerivationCandidate& y) { return x += y; }
    friend DerivationCandidate operator-(DerivationCandidate x, const DerivationCandidate& y) {
        return x += DerivationCandidate(y) *= -1;
    }
    friend DerivationCandidate operator*(const Rational& c, DerivationCandidate x) { return x *= c; }
    friend bool operator==(const DerivationCandidate&, const DerivationCandidate&) = default;

private:
    Genus g_;
    int shift_;
    std::vector<LieElement> images_;
    bool reduced_;
};

/// d(theta) = sum_i [d(a_i), b_i] + [a_i, d(b_i)], computed in the free Lie algebra.
LieElement annihilation_residue(const DerivationCandidate& d);

/// A degree -2 derivation that kills theta. Unreduced candidates must have
/// a residue that vanishes in L_4(H); reduced ones only modulo J_4.
class Der2Element {
public:
    /// Throws std::invalid_argument if the residue test fails or shift != 2.
    explicit Der2Element(DerivationCandidate d);
    const DerivationCandidate& candidate() const { return d_; }
    friend bool operator==(const Der2Element&, const Der2Element&) = default;

private:
    DerivationCandidate d_;
};

/// phi((u1^v1)(u2^v2))(x) = <u1,x>[v1,[u2,v2]] + <v1,x>[[u2,v2],u1]
///                        + <u2,x>[v2,[u1,v1]] + <v2,x>[[u1,v1],u2]
DerivationCandidate phi(const SymSqBiVector& s);

/// gamma |-> sum_i a_i ^ p_H gamma(b_i) - b_i ^ p_H gamma(a_i), with gamma
/// given by its values on the letters (indexed by h_index) in T^3(H).
BiVector p_lambda2(Genus g, const std::vector<Tensor>& gamma);

/// p_lambda2 of the letterwise tensor expansion of d; d must have shift 2
/// and unreduced images.
BiVector pi_lambda2(const DerivationCandidate& d);

/// Closed form of pi_lambda2 . phi on monomials:
///   4[<u1,v1> v2^u2 + <v2,u2> u1^v1]
/// + 2[<u1,v2> v1^u2 + <v1,u2> u1^v2 + <u1,u2> v2^v1 + <v2,v1> u1^u2].
BiVector pi_phi_closed_form(const SymSqBiVector& s);

/// Multiplication by theta on the theta-hat lift of v.
SymSqBiVector j_theta(const VClass& v);
/// Same, for any bivector: theta * theta_hat(x).
SymSqBiVector j_theta(const BiVector& x);

/// theta_hat . pi_lambda2 . phi
BiVector pi_hat(const SymSqBiVector& s);

/// s - (1/(-4(g+1))) j_theta(pi_hat(s)); pi_hat of the result vanishes.
SymSqBiVector v_prime_residual(const SymSqBiVector& s);

/// The residue map Hom(H, p(-m-1)) -> p(-m-2), d |-> d(theta) mod J_{m+2},
/// in the bases (letter, quotient_basis(m+1)) and quotient_basis(m+2).
struct ResidueMap {
    Genus genus;
    int shift;
    /// Column j is the derivation sending letter j / q to basis element j % q
    /// (letters in h_index order, q = dim p(-m-1)).
    SparseMatrix matrix;
    std::size_t domain_dim() const { return matrix.cols(); }
    std::size_t target_dim() const { return matrix.rows(); }
};

ResidueMap residue_map(int shift, Genus g);

/// Derivation with the given coordinate vector in the ResidueMap domain.
DerivationCandidate derivation_from_coords(int shift, Genus g, const SparseVector& coords);
/// Coordinates of a derivation (images reduced modulo J_{m+1} first).
SparseVector derivation_coords(const DerivationCandidate& d);

/// Kernel of the residue map: an exact basis of Der_{-m} p.
std::vector<DerivationCandidate> der_basis(int shift, Genus g);
std::vector<Der2Element> der2_basis(Genus g);

}  // namespace hypj

#endif  // HYPJ_DERIVATIONS_HPP
