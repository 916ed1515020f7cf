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
// The free Lie algebra L(H) in Lyndon coordinates, the graded ideal
// generated by theta, and the quotients p(-m) = L_m(H) / J_m.

#ifndef HYPJ_FREE_LIE_HPP
#define HYPJ_FREE_LIE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hypj/sparse_matrix.hpp"
#include "hypj/symplectic.hpp"
#include "hypj/tensor.hpp"

namespace hypj {

/// Dimension of the degree-k component of the free Lie algebra on n letters:
/// (1/k) sum_{d | k} mu(d) n^(k/d).
std::uint64_t witt_dim(int n, int k);

/// True iff w is strictly smaller than each of its proper rotations.
bool is_lyndon(const Word& w);

/// A Lyndon word over a_1 < b_1 < a_2 < b_2 < ...
class LyndonWord {
public:
    /// Throws std::invalid_argument if w is not Lyndon.
    explicit LyndonWord(Word w);

    const Word& word() const { return word_; }
    int degree() const { return word_.length(); }
    std::vector<Letter> letters() const;
    std::string to_string() const { return word_.to_string(); }

    /// w = u v with v the longest proper Lyndon suffix; degree must be >= 2.
    std::pair<LyndonWord, LyndonWord> standard_factorization() const;

    friend auto operator<=>(const LyndonWord&, const LyndonWord&) = default;

private:
    Word word_;
};

/// Lyndon words of length k over n letters in lexicographic order (Duval).
std::vector<Word> lyndon_words(int n, int k);

/// The Lyndon basis of L_k(H) with the tensor expansions of the standard
/// bracketings. Each expansion is w + (larger words of the same length),
/// which makes Lyndon coordinates readable off a tensor by peeling the
/// smallest word.
class LyndonBasis {
public:
    LyndonBasis(Genus g, int degree);

    Genus genus() const { return g_; }
    int degree() const { return degree_; }
    std::size_t size() const { return words_.size(); }
    const std::vector<Word>& words() const { return words_; }
    std::optional<std::size_t> index_of(const Word& w) const;
    const Tensor& expansion(std::size_t index) const { return expansions_.at(index); }

private:
    Genus g_;
    int degree_;
    std::vector<Word> words_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::vector<Tensor> expansions_;
};

/// Shared read-only basis table for (g, k), built on first use.
const LyndonBasis& lyndon_basis_table(Genus g, int k);

/// The Lyndon basis of L_k(H) as words; size witt_dim(2g, k).
std::vector<LyndonWord> lyndon_basis(int k, Genus g);

/// Homogeneous element of L_k(H) in Lyndon-basis coordinates.
class LieElement {
public:
    LieElement(Genus g, int degree);
    static LieElement letter(Genus g, Letter x);
    static LieElement basis_element(Genus g, int degree, std::size_t index);
    /// Rewrites a Lie polynomial given in the tensor algebra; throws
    /// std::invalid_argument if t is not in the image of L(H).
    static LieElement from_tensor(const Tensor& t);
    static LieElement from_coords(Genus g, int degree, const SparseVector& coords);

    Genus genus() const { return g_; }
    int degree() const { return degree_; }
    const SparseVector& coords() const { return coords_; }
    Rational coefficient(std::size_t index) const { return coords_.at(index); }
    bool is_zero() const { return coords_.empty(); }

    Tensor to_tensor() const;

    LieElement& operator+=(const LieElement& other);
    LieElement& operator-=(const LieElement& other);
    LieElement& operator*=(const Rational& c);
    friend LieElement operator+(LieElement x, const LieElement& y) { return x += y; }
    friend LieElement operator-(LieElement x, const LieElement& y) { return x -= y; }
    friend LieElement operator-(LieElement x) { return x *= -1; }
    friend LieElement operator*(const Rational& c, LieElement x) { return x *= c; }
    friend bool operator==(const LieElement&, const LieElement&) = default;

    /// e.g. "2 [a1,b1]a2" style listing of Lyndon words with coefficients.
    std::string to_string() const;

private:
    void check_compatible(const LieElement& other) const;
    Genus g_;
    int degree_;
    SparseVector coords_;
};

LieElement bracket(const LieElement& x, const LieElement& y);

/// The embedding L_k(H) -> T^k(H), [u, v] |-> u v - v u.
Tensor lie_to_tensor(const LieElement& x);

/// sum_i [a_i, b_i]
LieElement theta_lie(Genus g);
/// sum_{i in I} [a_i, b_i]
LieElement theta_lie(Genus g, const HandleSet& handles);

/// The degree-k piece J_k of the ideal generated by theta:
/// J_2 = span{theta}, J_{k+1} = [J_k, L_1].
class IdealComponent {
public:
    IdealComponent(Genus g, int degree);

    Genus genus() const { return g_; }
    int degree() const { return degree_; }
    std::size_t dim() const { return echelon_.rank(); }
    /// Linearly independent basis (the reduced echelon rows).
    std::vector<LieElement> basis() const;
    /// Reduced echelon form in Lyndon coordinates; its free columns index the
    /// fixed complement used for p(-k) coordinates.
    const RowEchelon& echelon() const { return echelon_; }
    bool contains(const LieElement& x) const;

private:
    Genus g_;
    int degree_;
    RowEchelon echelon_;
};

/// Shared read-only J_k for k >= 2; throws std::invalid_argument for k < 2.
const IdealComponent& ideal_component(int k, Genus g);

/// An element of p(-m) = L_m / J_m, held as the coset representative that
/// vanishes on the pivot columns of J_m.
class PElement {
public:
    PElement(Genus g, int degree, SparseVector coords);

    Genus genus() const { return g_; }
    int degree() const { return degree_; }
    /// Lyndon coordinates of the canonical representative.
    const SparseVector& lyndon_coords() const { return coords_; }
    /// Coordinates over the complement basis (see quotient_basis), dense.
    std::vector<Rational> coordinates() const;
    bool is_zero() const { return coords_.empty(); }
    LieElement lift() const { return LieElement::from_coords(g_, degree_, coords_); }

    friend bool operator==(const PElement&, const PElement&) = default;

private:
    Genus g_;
    int degree_;
    SparseVector coords_;
};

/// Lyndon indices spanning the fixed complement of J_m in L_m (all of L_1 for m = 1).
std::vector<std::size_t> quotient_basis(int m, Genus g);

/// dim p(-m)
std::size_t p_dim(int m, Genus g);

/// Canonical coset representative modulo J_k; degree 1 passes through.
PElement reduce_mod_ideal(const LieElement& x);

}  // namespace hypj

#endif  // HYPJ_FREE_LIE_HPP
