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
// The symplectic space H = H_1(S; Q) with basis a_1..a_g, b_1..b_g, its
// second exterior and symmetric powers, theta, and the quotient
// V = Lambda^2 H / <theta>.

#ifndef HYPJ_SYMPLECTIC_HPP
#define HYPJ_SYMPLECTIC_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hypj/rational.hpp"

namespace hypj {

class Genus {
public:
    // Words in the tensor algebra pack letters in 5 bits.
    static constexpr int kMax = 16;

    /// Throws std::invalid_argument unless 2 <= g <= kMax.
    explicit Genus(int g);

    int value() const { return g_; }
    int h_dim() const { return 2 * g_; }
    int wedge_dim() const { return g_ * (2 * g_ - 1); }
    int v_dim() const { return wedge_dim() - 1; }
    int point_count() const { return 2 * g_ + 2; }

    friend auto operator<=>(const Genus&, const Genus&) = default;

private:
    int g_;
};

/// A basis letter a_i or b_i (handles are 1-based).
///
/// Two orders are in use. HVector and BiVector coordinates follow
/// a_1..a_g, b_1..b_g (h_index). Words of the tensor and free Lie algebras
/// use a_1 < b_1 < a_2 < b_2 < ... (lie_code), which keeps handle pairs
/// adjacent in the Lyndon basis.
class Letter {
public:
    enum class Kind { A, B };

    static Letter a(int handle) { return Letter(Kind::A, handle); }
    static Letter b(int handle) { return Letter(Kind::B, handle); }
    static Letter from_h_index(Genus g, int index);
    static Letter from_lie_code(int code);

    Kind kind() const { return kind_; }
    int handle() const { return handle_; }
    int h_index(Genus g) const;
    int lie_code() const { return 2 * (handle_ - 1) + (kind_ == Kind::B ? 1 : 0); }
    /// The symplectic partner: a_i <-> b_i.
    Letter dual() const { return Letter(kind_ == Kind::A ? Kind::B : Kind::A, handle_); }
    std::string name() const;

    friend bool operator==(const Letter&, const Letter&) = default;

private:
    Letter(Kind kind, int handle);
    Kind kind_;
    int handle_;
};

/// All 2g letters in h_index order.
std::vector<Letter> letters(Genus g);

/// <x, y> on basis letters: <a_i, b_j> = delta_ij, <b_i, a_j> = -delta_ij.
int pairing(Letter x, Letter y);

/// Handle subsets I of {1..g}, kept sorted and duplicate free.
using HandleSet = std::vector<int>;

/// Sorts and validates; throws std::out_of_range for a handle outside 1..g.
HandleSet make_handle_set(Genus g, std::vector<int> handles);
HandleSet complement(Genus g, const HandleSet& handles);

class HVector {
public:
    explicit HVector(Genus g);
    static HVector basis(Genus g, Letter x);

    Genus genus() const { return g_; }
    const std::vector<Rational>& coords() const { return coords_; }
    Rational& operator[](int h_index) { return coords_.at(h_index); }
    const Rational& operator[](int h_index) const { return coords_.at(h_index); }
    bool is_zero() const;

    HVector& operator+=(const HVector& other);
    HVector& operator-=(const HVector& other);
    HVector& operator*=(const Rational& c);
    friend HVector operator+(HVector x, const HVector& y) { return x += y; }
    friend HVector operator-(HVector x, const HVector& y) { return x -= y; }
    friend HVector operator*(const Rational& c, HVector x) { return x *= c; }
    friend bool operator==(const HVector&, const HVector&) = default;

private:
    Genus g_;
    std::vector<Rational> coords_;
};

/// Bilinear extension of the letter pairing. Throws std::invalid_argument on
/// a genus mismatch.
Rational pairing(const HVector& u, const HVector& v);

/// Index of e_s ^ e_t (s < t in h_index order) among the g(2g-1) wedge monomials.
int wedge_index(Genus g, int s, int t);
std::pair<int, int> wedge_pair(Genus g, int index);

class BiVector {
public:
    explicit BiVector(Genus g);
    /// e_s ^ e_t for arbitrary h indices; antisymmetry applied, e_s ^ e_s = 0.
    static BiVector monomial(Genus g, int s, int t);
    static BiVector wedge(Genus g, Letter x, Letter y);
    static BiVector wedge(const HVector& u, const HVector& v);

    Genus genus() const { return g_; }
    const std::vector<Rational>& coords() const { return coords_; }
    const Rational& operator[](int index) const { return coords_.at(index); }
    Rational& operator[](int index) { return coords_.at(index); }
    bool is_zero() const;

    /// Full pairing contraction sum_{s<t} x_st <e_s, e_t>.
    Rational contraction() const;

    BiVector& operator+=(const BiVector& other);
    BiVector& operator-=(const BiVector& other);
    BiVector& operator*=(const Rational& c);
    friend BiVector operator+(BiVector x, const BiVector& y) { return x += y; }
    friend BiVector operator-(BiVector x, const BiVector& y) { return x -= y; }
    friend BiVector operator-(BiVector x) { return x *= -1; }
    friend BiVector operator*(const Rational& c, BiVector x) { return x *= c; }
    friend bool operator==(const BiVector&, const BiVector&) = default;

    /// e.g. "-6 a2^b2 + a1^a2"
    std::string to_string() const;

private:
    Genus g_;
    std::vector<Rational> coords_;
};

/// sum_i a_i ^ b_i
BiVector theta(Genus g);
/// sum_{i in I} a_i ^ b_i
BiVector theta_I(Genus g, const HandleSet& handles);

/// A coset of <theta> in Lambda^2 H, stored as the unique representative
/// whose a_g ^ b_g coefficient is zero.
class VClass {
public:
    explicit VClass(Genus g) : rep_(g) {}
    /// Throws std::invalid_argument if the a_g ^ b_g coefficient is nonzero.
    static VClass from_canonical(BiVector rep);
    /// The j-th vector of the canonical basis (wedge monomials other than a_g ^ b_g).
    static VClass basis(Genus g, int j);

    Genus genus() const { return rep_.genus(); }
    const BiVector& representative() const { return rep_; }
    /// Coordinates over the canonical basis, length 2g^2 - g - 1.
    std::vector<Rational> coordinates() const;
    bool is_zero() const { return rep_.is_zero(); }

    VClass& operator+=(const VClass& other);
    VClass& operator-=(const VClass& other);
    VClass& operator*=(const Rational& c);
    friend VClass operator+(VClass x, const VClass& y) { return x += y; }
    friend VClass operator-(VClass x, const VClass& y) { return x -= y; }
    friend VClass operator*(const Rational& c, VClass x) { return x *= c; }
    friend bool operator==(const VClass&, const VClass&) = default;

    std::string to_string() const { return rep_.to_string(); }

private:
    explicit VClass(BiVector rep) : rep_(std::move(rep)) {}
    BiVector rep_;
};

/// Wedge index of a_g ^ b_g, the coordinate VClass representatives omit.
int v_omitted_index(Genus g);
/// Label of the j-th canonical V coordinate, e.g. "a1^b2".
std::string v_coordinate_label(Genus g, int j);
std::string wedge_label(Genus g, int index);

/// The quotient map Lambda^2 H -> V (theta-tilde).
VClass project_mod_theta(const BiVector& x);

/// The equivariant projection u^v |-> u^v - (<u,v>/g) theta onto the
/// complement of theta (theta-hat).
BiVector project_hat_theta(const BiVector& x);

/// Element of S^2 Lambda^2 H over the monomials mu*nu, mu <= nu wedge indices.
///
/// The product of x = sum c_i mu_i and y = sum d_j mu_j is
/// sum_{i,j} c_i d_j (mu_i mu_j), accumulated on unordered pairs; so
/// x*x = sum c_i^2 mu_i mu_i + sum_{i<j} 2 c_i c_j mu_i mu_j.
class SymSqBiVector {
public:
    using Key = std::pair<int, int>;

    explicit SymSqBiVector(Genus g) : g_(g) {}
    static SymSqBiVector monomial(Genus g, int mu, int nu);
    static SymSqBiVector product(const BiVector& x, const BiVector& y);
    static SymSqBiVector square(const BiVector& x) { return product(x, x); }
    /// All N(N+1)/2 monomials in (mu, nu) lexicographic order.
    static std::vector<Key> monomial_keys(Genus g);

    Genus genus() const { return g_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SymSqBiVector& operator+=(const SymSqBiVector& other);
    SymSqBiVector& operator-=(const SymSqBiVector& other);
    SymSqBiVector& operator*=(const Rational& c);
    friend SymSqBiVector operator+(SymSqBiVector x, const SymSqBiVector& y) { return x += y; }
    friend SymSqBiVector operator-(SymSqBiVector x, const SymSqBiVector& y) { return x -= y; }
    friend SymSqBiVector operator*(const Rational& c, SymSqBiVector x) { return x *= c; }
    friend bool operator==(const SymSqBiVector&, const SymSqBiVector&) = default;

    std::string to_string() const;

private:
    void add_term(int mu, int nu, const Rational& c);
    Genus g_;
    std::map<Key, Rational> terms_;
};

}  // namespace hypj

#endif  // HYPJ_SYMPLECTIC_HPP
