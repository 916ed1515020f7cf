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

#include "hypj/free_lie.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cache.hpp"

namespace hypj {

namespace {

int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

Tensor standard_bracketing(Genus g, const Word& w) {
    if (w.length() == 1) return Tensor::word(g, w);
    auto [u, v] = LyndonWord(w).standard_factorization();
    return commutator(standard_bracketing(g, u.word()), standard_bracketing(g, v.word()));
}

using GenusDegree = std::pair<int, int>;

detail::MemoTable<GenusDegree, LyndonBasis>& basis_tables() {
    static detail::MemoTable<GenusDegree, LyndonBasis> t;
    return t;
}

detail::MemoTable<GenusDegree, IdealComponent>& ideal_tables() {
    static detail::MemoTable<GenusDegree, IdealComponent> t;
    return t;
}

struct QuotientIndex {
    std::vector<std::size_t> basis;
    std::unordered_map<std::size_t, std::size_t> position;
};

detail::MemoTable<GenusDegree, QuotientIndex>& quotient_tables() {
    static detail::MemoTable<GenusDegree, QuotientIndex> t;
    return t;
}

const QuotientIndex& quotient_index(int m, Genus g) {
    if (m < 1) throw std::invalid_argument("quotient degree must be >= 1");
    return quotient_tables().get({g.value(), m}, [&] {
        QuotientIndex q;
        if (m == 1) {
            for (std::size_t i = 0; i < lyndon_basis_table(g, 1).size(); ++i) q.basis.push_back(i);
        } else {
            q.basis = ideal_component(m, g).echelon().free_cols();
        }
        for (std::size_t i = 0; i < q.basis.size(); ++i) q.position[q.basis[i]] = i;
        return q;
    });
}

}  // namespace

std::uint64_t witt_dim(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("witt_dim requires n >= 1 and k >= 1");
    std::int64_t sum = 0;
    for (int d = 1; d <= k; ++d)
        if (k % d == 0) sum += mobius(d) * static_cast<std::int64_t>(ipow(n, k / d));
    return static_cast<std::uint64_t>(sum / k);
}

bool is_lyndon(const Word& w) {
    auto c = w.codes();
    const int n = static_cast<int>(c.size());
    if (n == 0) return false;
    for (int r = 1; r < n; ++r) {
        // Compare w with its rotation starting at r.
        int cmp = 0;
        for (int i = 0; i < n && cmp == 0; ++i) {
            int x = c[i];
            int y = c[(i + r) % n];
            cmp = (x < y) ? -1 : (x > y ? 1 : 0);
        }
        if (cmp >= 0) return false;
    }
    return true;
}

LyndonWord::LyndonWord(Word w) : word_(w) {
    if (!is_lyndon(w)) throw std::invalid_argument("not a Lyndon word: " + w.to_string());
}

std::vector<Letter> LyndonWord::letters() const {
    std::vector<Letter> out;
    for (int c : word_.codes()) out.push_back(Letter::from_lie_code(c));
    return out;
}

std::pair<LyndonWord, LyndonWord> LyndonWord::standard_factorization() const {
    auto c = word_.codes();
    if (c.size() < 2) throw std::invalid_argument("standard factorization needs degree >= 2");
    for (std::size_t split = 1; split < c.size(); ++split) {
        Word suffix = Word::from_codes({c.begin() + static_cast<std::ptrdiff_t>(split), c.end()});
        if (is_lyndon(suffix)) {
            Word prefix = Word::from_codes({c.begin(), c.begin() + static_cast<std::ptrdiff_t>(split)});
            return {LyndonWord(prefix), LyndonWord(suffix)};
        }
    }
    // The last letter is always Lyndon.
    throw std::logic_error("unreachable: no Lyndon suffix");
}

std::vector<Word> lyndon_words(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("lyndon_words requires n >= 1 and k >= 1");
    std::vector<Word> out;
    std::vector<int> w{-1};
    while (!w.empty()) {
        ++w.back();
        if (static_cast<int>(w.size()) == k) out.push_back(Word::from_codes(w));
        const std::size_t m = w.size();
        while (static_cast<int>(w.size()) < k) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == n - 1) w.pop_back();
    }
    return out;
}

LyndonBasis::LyndonBasis(Genus g, int degree) : g_(g), degree_(degree) {
    words_ = lyndon_words(g.h_dim(), degree);
    expansions_.reserve(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
        index_.emplace(words_[i].code(), i);
        expansions_.push_back(standard_bracketing(g, words_[i]));
    }
}

std::optional<std::size_t> LyndonBasis::index_of(const Word& w) const {
    if (w.length() != degree_) return std::nullopt;
    auto it = index_.find(w.code());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const LyndonBasis& lyndon_basis_table(Genus g, int k) {
    if (k < 1) throw std::invalid_argument("Lie degree must be >= 1");
    return basis_tables().get({g.value(), k}, [&] { return LyndonBasis(g, k); });
}

std::vector<LyndonWord> lyndon_basis(int k, Genus g) {
    std::vector<LyndonWord> out;
    for (const auto& w : lyndon_basis_table(g, k).words()) out.emplace_back(w);
    return out;
}

// ---------------------------------------------------------------------------
// LieElement

LieElement::LieElement(Genus g, int degree) : g_(g), degree_(degree) {
    if (degree < 1) throw std::invalid_argument("Lie degree must be >= 1");
}

LieElement LieElement::letter(Genus g, Letter x) {
    LieElement e(g, 1);
    auto idx = lyndon_basis_table(g, 1).index_of(Word::letter(x));
    if (!idx) throw std::out_of_range("letter beyond genus");
    e.coords_ = SparseVector({{*idx, 1}});
    return e;
}

LieElement LieElement::basis_element(Genus g, int degree, std::size_t index) {
    if (index >= lyndon_basis_table(g, degree).size()) throw std::out_of_range("Lyndon index");
    LieElement e(g, degree);
    e.coords_ = SparseVector({{index, 1}});
    return e;
}

LieElement LieElement::from_coords(Genus g, int degree, const SparseVector& coords) {
    if (!coords.empty() && coords.entries().back().first >= lyndon_basis_table(g, degree).size())
        throw std::out_of_range("Lyndon index");
    LieElement e(g, degree);
    e.coords_ = coords;
    return e;
}

LieElement LieElement::from_tensor(const Tensor& t) {
    const auto& basis = lyndon_basis_table(t.genus(), t.degree());
    Tensor rest = t;
    std::vector<SparseVector::Entry> coords;
    while (!rest.is_zero()) {
        // The smallest surviving word leads exactly one standard bracketing.
        auto [code, c] = *rest.terms().begin();
        Word w = Word::from_codes([&] {
            std::vector<int> letters(t.degree());
            std::uint64_t x = code;
            for (int i = t.degree() - 1; i >= 0; --i) {
                letters[i] = static_cast<int>(x & ((1u << Word::kBits) - 1));
                x >>= Word::kBits;
            }
            return letters;
        }());
        auto idx = basis.index_of(w);
        if (!idx) throw std::invalid_argument("tensor is not a Lie polynomial (leading word " + w.to_string() + ")");
        Rational coeff = c;
        rest -= coeff * basis.expansion(*idx);
        coords.emplace_back(*idx, std::move(coeff));
    }
    LieElement e(t.genus(), t.degree());
    e.coords_ = SparseVector(std::move(coords));
    return e;
}

Tensor LieElement::to_tensor() const {
    const auto& basis = lyndon_basis_table(g_, degree_);
    Tensor out(g_, degree_);
    for (const auto& [i, c] : coords_.entries()) out += c * basis.expansion(i);
    return out;
}

void LieElement::check_compatible(const LieElement& other) const {
    if (g_ != other.g_) throw std::invalid_argument("LieElement: genus mismatch");
    if (degree_ != other.degree_) throw std::invalid_argument("LieElement: degree mismatch");
}

LieElement& LieElement::operator+=(const LieElement& other) {
    check_compatible(other);
    coords_.add_scaled(1, other.coords_);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
    check_compatible(other);
    coords_.add_scaled(-1, other.coords_);
    return *this;
}

LieElement& LieElement::operator*=(const Rational& c) {
    coords_.scale(c);
    return *this;
}

std::string LieElement::to_string() const {
    if (coords_.empty()) return "0";
    const auto& basis = lyndon_basis_table(g_, degree_);
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : coords_.entries()) {
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        Rational mag = abs(c);
        if (mag != 1) os << mag.get_str() << " ";
        os << "P(" << basis.words()[i].to_string() << ")";
        first = false;
    }
    return os.str();
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    if (x.genus() != y.genus()) throw std::invalid_argument("bracket: genus mismatch");
    return LieElement::from_tensor(commutator(x.to_tensor(), y.to_tensor()));
}

Tensor lie_to_tensor(const LieElement& x) { return x.to_tensor(); }

LieElement theta_lie(Genus g, const HandleSet& handles) {
    LieElement out(g, 2);
    for (int i : make_handle_set(g, handles))
        out += bracket(LieElement::letter(g, Letter::a(i)), LieElement::letter(g, Letter::b(i)));
    return out;
}

LieElement theta_lie(Genus g) {
    HandleSet all;
    for (int i = 1; i <= g.value(); ++i) all.push_back(i);
    return theta_lie(g, all);
}

// ---------------------------------------------------------------------------
// Ideal and quotients

IdealComponent::IdealComponent(Genus g, int degree) : g_(g), degree_(degree) {
    if (degree < 2) throw std::invalid_argument("ideal components start in degree 2");
    const std::size_t cols = lyndon_basis_table(g, degree).size();
    std::vector<SparseVector> generators;
    if (degree == 2) {
        generators.push_back(theta_lie(g).coords());
    } else {
        const auto& lower = ideal_component(degree - 1, g);
        std::vector<Tensor> letter_tensors;
        for (const auto& x : letters(g)) letter_tensors.push_back(Tensor::letter(g, x));
        for (const auto& j : lower.basis()) {
            Tensor jt = j.to_tensor();
            for (const auto& lt : letter_tensors)
                generators.push_back(LieElement::from_tensor(commutator(jt, lt)).coords());
        }
    }
    echelon_ = RowEchelon::compute(SparseMatrix::from_rows(cols, std::move(generators)), true);
}

std::vector<LieElement> IdealComponent::basis() const {
    std::vector<LieElement> out;
    for (const auto& row : echelon_.rows()) out.push_back(LieElement::from_coords(g_, degree_, row));
    return out;
}

bool IdealComponent::contains(const LieElement& x) const {
    if (x.genus() != g_ || x.degree() != degree_)
        throw std::invalid_argument("IdealComponent::contains: genus or degree mismatch");
    return echelon_.contains(x.coords());
}

const IdealComponent& ideal_component(int k, Genus g) {
    if (k < 2) throw std::invalid_argument("ideal components start in degree 2");
    return ideal_tables().get({g.value(), k}, [&] { return IdealComponent(g, k); });
}

PElement::PElement(Genus g, int degree, SparseVector coords)
    : g_(g), degree_(degree), coords_(std::move(coords)) {}

std::vector<Rational> PElement::coordinates() const {
    const auto& q = quotient_index(degree_, g_);
    std::vector<Rational> out(q.basis.size());
    for (const auto& [i, c] : coords_.entries()) {
        auto it = q.position.find(i);
        if (it == q.position.end()) throw std::logic_error("PElement not in canonical form");
        out[it->second] = c;
    }
    return out;
}

std::vector<std::size_t> quotient_basis(int m, Genus g) { return quotient_index(m, g).basis; }

std::size_t p_dim(int m, Genus g) { return quotient_index(m, g).basis.size(); }

PElement reduce_mod_ideal(const LieElement& x) {
    if (x.degree() == 1) return PElement(x.genus(), 1, x.coords());
    const auto& ideal = ideal_component(x.degree(), x.genus());
    return PElement(x.genus(), x.degree(), ideal.echelon().reduce(x.coords()));
}

}  // namespace hypj
