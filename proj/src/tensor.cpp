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

#include "hypj/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace hypj {

Word Word::from_codes(const std::vector<int>& codes) {
    if (static_cast<int>(codes.size()) > kMaxLength) throw std::length_error("Word too long");
    std::uint64_t code = 0;
    for (int c : codes) {
        if (c < 0 || c >= (1 << kBits)) throw std::out_of_range("letter code out of range");
        code = (code << kBits) | static_cast<std::uint64_t>(c);
    }
    return Word(code, static_cast<int>(codes.size()));
}

Word Word::from_letters(const std::vector<Letter>& letters) {
    std::vector<int> codes;
    codes.reserve(letters.size());
    for (const auto& x : letters) codes.push_back(x.lie_code());
    return from_codes(codes);
}

int Word::at(int position) const {
    if (position < 0 || position >= length_) throw std::out_of_range("Word::at");
    int shift = kBits * (length_ - 1 - position);
    return static_cast<int>((code_ >> shift) & ((1u << kBits) - 1));
}

std::vector<int> Word::codes() const {
    std::vector<int> out;
    out.reserve(length_);
    for (int i = 0; i < length_; ++i) out.push_back(at(i));
    return out;
}

Word Word::concat(const Word& other) const {
    if (length_ + other.length_ > kMaxLength) throw std::length_error("Word too long");
    return Word((code_ << (kBits * other.length_)) | other.code_, length_ + other.length_);
}

std::string Word::to_string() const {
    std::string s;
    for (int c : codes()) s += Letter::from_lie_code(c).name();
    return s;
}

// ---------------------------------------------------------------------------

Tensor Tensor::word(Genus g, const Word& w, const Rational& c) {
    Tensor t(g, w.length());
    t.add(w.code(), c);
    return t;
}

Rational Tensor::coefficient(const Word& w) const {
    if (w.length() != degree_) return 0;
    auto it = terms_.find(w.code());
    return it == terms_.end() ? Rational(0) : it->second;
}

void Tensor::add(std::uint64_t code, const Rational& c) {
    if (hypj::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(code, c);
    if (!inserted) {
        it->second += c;
        if (hypj::is_zero(it->second)) terms_.erase(it);
    }
}

void Tensor::check_compatible(const Tensor& other) const {
    if (g_ != other.g_) throw std::invalid_argument("Tensor: genus mismatch");
    if (degree_ != other.degree_) throw std::invalid_argument("Tensor: degree mismatch");
}

Tensor& Tensor::operator+=(const Tensor& other) {
    check_compatible(other);
    for (const auto& [w, c] : other.terms_) add(w, c);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
    check_compatible(other);
    for (const auto& [w, c] : other.terms_) add(w, -c);
    return *this;
}

Tensor& Tensor::operator*=(const Rational& c) {
    if (hypj::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

std::string Tensor::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [code, c] : terms_) {
        std::vector<int> letters;
        std::uint64_t rest = code;
        for (int i = 0; i < degree_; ++i) {
            letters.insert(letters.begin(), static_cast<int>(rest & ((1u << Word::kBits) - 1)));
            rest >>= Word::kBits;
        }
        std::string word;
        for (std::size_t i = 0; i < letters.size(); ++i)
            word += (i ? "*" : "") + Letter::from_lie_code(letters[i]).name();
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        Rational mag = abs(c);
        if (mag != 1) os << mag.get_str() << " ";
        os << word;
        first = false;
    }
    return os.str();
}

Tensor tensor_product(const Tensor& x, const Tensor& y) {
    if (x.genus() != y.genus()) throw std::invalid_argument("tensor_product: genus mismatch");
    if (x.degree() + y.degree() > Word::kMaxLength) throw std::length_error("tensor degree too large");
    Tensor out(x.genus(), x.degree() + y.degree());
    const int shift = Word::kBits * y.degree();
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms()) out.add((wx << shift) | wy, cx * cy);
    return out;
}

Tensor commutator(const Tensor& x, const Tensor& y) {
    return tensor_product(x, y) - tensor_product(y, x);
}

Tensor wedge_to_tensor(const BiVector& x) {
    Genus g = x.genus();
    Tensor out(g, 2);
    for (int idx = 0; idx < g.wedge_dim(); ++idx) {
        if (hypj::is_zero(x[idx])) continue;
        auto [s, t] = wedge_pair(g, idx);
        Word u = Word::letter(Letter::from_h_index(g, s));
        Word v = Word::letter(Letter::from_h_index(g, t));
        out.add(u.concat(v).code(), x[idx]);
        out.add(v.concat(u).code(), -x[idx]);
    }
    return out;
}

BiVector tensor_to_wedge(const Tensor& t) {
    if (t.degree() != 2) throw std::invalid_argument("tensor_to_wedge: degree must be 2");
    Genus g = t.genus();
    BiVector out(g);
    for (const auto& [code, c] : t.terms()) {
        Word w = Word::from_codes({static_cast<int>(code >> Word::kBits),
                                   static_cast<int>(code & ((1u << Word::kBits) - 1))});
        int s = Letter::from_lie_code(w.at(0)).h_index(g);
        int u = Letter::from_lie_code(w.at(1)).h_index(g);
        // (x(x)y - y(x)x)/2 contributes c/2 to x^y.
        out += (c / 2) * BiVector::monomial(g, s, u);
    }
    return out;
}

HVector p_H(const Tensor& t) {
    if (t.degree() != 3) throw std::invalid_argument("p_H: degree must be 3");
    Genus g = t.genus();
    HVector out(g);
    constexpr std::uint64_t mask = (1u << Word::kBits) - 1;
    for (const auto& [code, c] : t.terms()) {
        Letter u = Letter::from_lie_code(static_cast<int>((code >> (2 * Word::kBits)) & mask));
        Letter v = Letter::from_lie_code(static_cast<int>((code >> Word::kBits) & mask));
        Letter w = Letter::from_lie_code(static_cast<int>(code & mask));
        int p = pairing(u, v);
        if (p != 0) out[w.h_index(g)] += p * c;
    }
    return out;
}

}  // namespace hypj
