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

#include "hypj/derivations.hpp"

#include <stdexcept>

namespace hypj {

DerivationCandidate::DerivationCandidate(Genus g, int shift, std::vector<LieElement> images, bool reduced)
    : g_(g), shift_(shift), images_(std::move(images)), reduced_(reduced) {
    if (shift < 1) throw std::invalid_argument("derivation shift must be >= 1");
    if (static_cast<int>(images_.size()) != g.h_dim())
        throw std::invalid_argument("derivation needs one image per letter");
    for (const auto& img : images_)
        if (img.genus() != g || img.degree() != shift + 1)
            throw std::invalid_argument("derivation image has wrong genus or degree");
}

DerivationCandidate DerivationCandidate::zero(Genus g, int shift) {
    return DerivationCandidate(g, shift, std::vector<LieElement>(g.h_dim(), LieElement(g, shift + 1)));
}

DerivationCandidate& DerivationCandidate::operator+=(const DerivationCandidate& other) {
    if (g_ != other.g_ || shift_ != other.shift_ || reduced_ != other.reduced_)
        throw std::invalid_argument("DerivationCandidate: incompatible operands");
    for (std::size_t i = 0; i < images_.size(); ++i) images_[i] += other.images_[i];
    return *this;
}

DerivationCandidate& DerivationCandidate::operator*=(const Rational& c) {
    for (auto& img : images_) img *= c;
    return *this;
}

LieElement annihilation_residue(const DerivationCandidate& d) {
    Genus g = d.genus();
    Tensor acc(g, d.shift() + 2);
    for (int i = 1; i <= g.value(); ++i) {
        Tensor a = Tensor::letter(g, Letter::a(i));
        Tensor b = Tensor::letter(g, Letter::b(i));
        acc += commutator(d.image(Letter::a(i)).to_tensor(), b);
        acc += commutator(a, d.image(Letter::b(i)).to_tensor());
    }
    return LieElement::from_tensor(acc);
}

Der2Element::Der2Element(DerivationCandidate d) : d_(std::move(d)) {
    if (d_.shift() != 2) throw std::invalid_argument("Der2Element requires shift 2");
    LieElement residue = annihilation_residue(d_);
    bool ok = d_.reduced() ? reduce_mod_ideal(residue).is_zero() : residue.is_zero();
    if (!ok) throw std::invalid_argument("derivation does not annihilate theta");
}

DerivationCandidate phi(const SymSqBiVector& s) {
    Genus g = s.genus();
    std::vector<Tensor> images(g.h_dim(), Tensor(g, 3));
    for (const auto& [key, c] : s.terms()) {
        auto [p1, q1] = wedge_pair(g, key.first);
        auto [p2, q2] = wedge_pair(g, key.second);
        Letter u1 = Letter::from_h_index(g, p1), v1 = Letter::from_h_index(g, q1);
        Letter u2 = Letter::from_h_index(g, p2), v2 = Letter::from_h_index(g, q2);
        Tensor tu1 = Tensor::letter(g, u1), tv1 = Tensor::letter(g, v1);
        Tensor tu2 = Tensor::letter(g, u2), tv2 = Tensor::letter(g, v2);
        Tensor b1 = commutator(tu1, tv1);
        Tensor b2 = commutator(tu2, tv2);
        // <y, x> is nonzero only for x = dual(y).
        auto contribute = [&](Letter y, const Tensor& term) {
            Letter x = y.dual();
            images[x.h_index(g)] += (c * pairing(y, x)) * term;
        };
        contribute(u1, commutator(tv1, b2));
        contribute(v1, commutator(b2, tu1));
        contribute(u2, commutator(tv2, b1));
        contribute(v2, commutator(b1, tu2));
    }
    std::vector<LieElement> lie;
    lie.reserve(images.size());
    for (const auto& t : images) lie.push_back(LieElement::from_tensor(t));
    return DerivationCandidate(g, 2, std::move(lie));
}

BiVector p_lambda2(Genus g, const std::vector<Tensor>& gamma) {
    if (static_cast<int>(gamma.size()) != g.h_dim())
        throw std::invalid_argument("p_lambda2 needs one tensor per letter");
    BiVector out(g);
    for (int i = 1; i <= g.value(); ++i) {
        Letter a = Letter::a(i), b = Letter::b(i);
        out += BiVector::wedge(HVector::basis(g, a), p_H(gamma[b.h_index(g)]));
        out -= BiVector::wedge(HVector::basis(g, b), p_H(gamma[a.h_index(g)]));
    }
    return out;
}

BiVector pi_lambda2(const DerivationCandidate& d) {
    if (d.shift() != 2) throw std::invalid_argument("pi_lambda2 requires shift 2");
    if (d.reduced()) throw std::invalid_argument("pi_lambda2 requires unreduced images in L_3");
    std::vector<Tensor> gamma;
    for (const auto& img : d.images()) gamma.push_back(lie_to_tensor(img));
    return p_lambda2(d.genus(), gamma);
}

BiVector pi_phi_closed_form(const SymSqBiVector& s) {
    Genus g = s.genus();
    BiVector out(g);
    for (const auto& [key, c] : s.terms()) {
        auto [p1, q1] = wedge_pair(g, key.first);
        auto [p2, q2] = wedge_pair(g, key.second);
        Letter u1 = Letter::from_h_index(g, p1), v1 = Letter::from_h_index(g, q1);
        Letter u2 = Letter::from_h_index(g, p2), v2 = Letter::from_h_index(g, q2);
        auto w = [&](Letter x, Letter y) { return BiVector::wedge(g, x, y); };
        BiVector term(g);
        term += Rational(4 * pairing(u1, v1)) * w(v2, u2);
        term += Rational(4 * pairing(v2, u2)) * w(u1, v1);
        term += Rational(2 * pairing(u1, v2)) * w(v1, u2);
        term += Rational(2 * pairing(v1, u2)) * w(u1, v2);
        term += Rational(2 * pairing(u1, u2)) * w(v2, v1);
        term += Rational(2 * pairing(v2, v1)) * w(u1, u2);
        out += c * term;
    }
    return out;
}

SymSqBiVector j_theta(const BiVector& x) {
    return SymSqBiVector::product(theta(x.genus()), project_hat_theta(x));
}

SymSqBiVector j_theta(const VClass& v) { return j_theta(v.representative()); }

BiVector pi_hat(const SymSqBiVector& s) { return project_hat_theta(pi_lambda2(phi(s))); }

SymSqBiVector v_prime_residual(const SymSqBiVector& s) {
    const int g = s.genus().value();
    Rational factor(1, -4 * (g + 1));
    factor.canonicalize();
    SymSqBiVector out = s;
    out -= factor * j_theta(pi_hat(s));
    return out;
}

// ---------------------------------------------------------------------------
// Der_{-m} p as a kernel

ResidueMap residue_map(int shift, Genus g) {
    if (shift < 1) throw std::invalid_argument("residue_map: shift must be >= 1");
    const auto source = quotient_basis(shift + 1, g);
    const std::size_t q = source.size();
    const std::size_t target = p_dim(shift + 2, g);
    const auto& basis = lyndon_basis_table(g, shift + 1);

    SparseMatrix::Builder builder(target, static_cast<std::size_t>(g.h_dim()) * q);
    for (int li = 0; li < g.h_dim(); ++li) {
        Letter x = Letter::from_h_index(g, li);
        Tensor partner = Tensor::letter(g, x.dual());
        for (std::size_t e = 0; e < q; ++e) {
            const Tensor& image = basis.expansion(source[e]);
            // d(a_i) enters as [d(a_i), b_i], d(b_i) as [a_i, d(b_i)].
            Tensor t = x.kind() == Letter::Kind::A ? commutator(image, partner) : commutator(partner, image);
            auto coords = reduce_mod_ideal(LieElement::from_tensor(t)).coordinates();
            const std::size_t col = static_cast<std::size_t>(li) * q + e;
            for (std::size_t r = 0; r < coords.size(); ++r)
                if (!hypj::is_zero(coords[r])) builder.add(r, col, coords[r]);
        }
    }
    return ResidueMap{g, shift, std::move(builder).build()};
}

DerivationCandidate derivation_from_coords(int shift, Genus g, const SparseVector& coords) {
    const auto source = quotient_basis(shift + 1, g);
    const std::size_t q = source.size();
    std::vector<std::vector<SparseVector::Entry>> per_letter(g.h_dim());
    for (const auto& [idx, c] : coords.entries()) {
        if (idx >= q * g.h_dim()) throw std::out_of_range("derivation coordinate out of range");
        per_letter[idx / q].emplace_back(source[idx % q], c);
    }
    std::vector<LieElement> images;
    for (auto& entries : per_letter)
        images.push_back(LieElement::from_coords(g, shift + 1, SparseVector(std::move(entries))));
    return DerivationCandidate(g, shift, std::move(images), true);
}

SparseVector derivation_coords(const DerivationCandidate& d) {
    const std::size_t q = p_dim(d.shift() + 1, d.genus());
    std::vector<SparseVector::Entry> entries;
    for (int li = 0; li < d.genus().h_dim(); ++li) {
        auto coords = reduce_mod_ideal(d.images()[li]).coordinates();
        for (std::size_t e = 0; e < coords.size(); ++e)
            if (!hypj::is_zero(coords[e])) entries.emplace_back(static_cast<std::size_t>(li) * q + e, coords[e]);
    }
    return SparseVector(std::move(entries));
}

std::vector<DerivationCandidate> der_basis(int shift, Genus g) {
    auto map = residue_map(shift, g);
    std::vector<DerivationCandidate> out;
    for (const auto& k : kernel_basis(map.matrix)) out.push_back(derivation_from_coords(shift, g, k));
    return out;
}

std::vector<Der2Element> der2_basis(Genus g) {
    std::vector<Der2Element> out;
    for (auto& d : der_basis(2, g)) out.emplace_back(std::move(d));
    return out;
}

}  // namespace hypj
