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
// Homogeneous elements of the tensor algebra T(H) on the basis letters.

#ifndef HYPJ_TENSOR_HPP
#define HYPJ_TENSOR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hypj/rational.hpp"
#include "hypj/symplectic.hpp"

namespace hypj {

/// A word of letter codes (Letter::lie_code), packed 5 bits per letter with
/// the first letter most significant. For a fixed length, numeric order of
/// the code is lexicographic order of the word.
class Word {
public:
    static constexpr int kBits = 5;
    static constexpr int kMaxLength = 12;

    Word() = default;
    static Word from_codes(const std::vector<int>& codes);
    static Word from_letters(const std::vector<Letter>& letters);
    static Word letter(Letter x) { return from_codes({x.lie_code()}); }

    std::uint64_t code() const { return code_; }
    int length() const { return length_; }
    int at(int position) const;
    std::vector<int> codes() const;
    Word concat(const Word& other) const;
    /// e.g. "a1b1a2"
    std::string to_string() const;

    friend auto operator<=>(const Word&, const Word&) = default;

private:
    Word(std::uint64_t code, int length) : code_(code), length_(length) {}
    std::uint64_t code_ = 0;
    int length_ = 0;
};

/// Homogeneous element of the degree-k component of T(H).
class Tensor {
public:
    Tensor(Genus g, int degree) : g_(g), degree_(degree) {}
    static Tensor word(Genus g, const Word& w, const Rational& c = 1);
    static Tensor letter(Genus g, Letter x) { return word(g, Word::letter(x)); }

    Genus genus() const { return g_; }
    int degree() const { return degree_; }
    /// Keyed by Word::code().
    const std::map<std::uint64_t, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Word& w) const;

    void add(std::uint64_t code, const Rational& c);
    Tensor& operator+=(const Tensor& other);
    Tensor& operator-=(const Tensor& other);
    Tensor& operator*=(const Rational& c);
    friend Tensor operator+(Tensor x, const Tensor& y) { return x += y; }
    friend Tensor operator-(Tensor x, const Tensor& y) { return x -= y; }
    friend Tensor operator*(const Rational& c, Tensor x) { return x *= c; }
    friend bool operator==(const Tensor&, const Tensor&) = default;

    std::string to_string() const;

private:
    void check_compatible(const Tensor& other) const;
    Genus g_;
    int degree_;
    std::map<std::uint64_t, Rational> terms_;
};

/// Concatenation product x (x) y.
Tensor tensor_product(const Tensor& x, const Tensor& y);
/// x (x) y - y (x) x.
Tensor commutator(const Tensor& x, const Tensor& y);

/// u ^ v |-> u (x) v - v (x) u.
Tensor wedge_to_tensor(const BiVector& x);

/// Antisymmetrisation of a degree-2 tensor, halved: the left inverse of
/// wedge_to_tensor.
BiVector tensor_to_wedge(const Tensor& t);

/// u (x) v (x) w |-> <u, v> w.
HVector p_H(const Tensor& t);

}  // namespace hypj

#endif  // HYPJ_TENSOR_HPP
