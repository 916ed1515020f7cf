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

#include "hypj/symplectic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hypj {

Genus::Genus(int g) : g_(g) {
    if (g < 2 || g > kMax)
        throw std::invalid_argument("genus must satisfy 2 <= g <= " + std::to_string(kMax) +
                                    ", got " + std::to_string(g));
}

Letter::Letter(Kind kind, int handle) : kind_(kind), handle_(handle) {
    if (handle < 1) throw std::out_of_range("letter handle must be >= 1");
}

Letter Letter::from_h_index(Genus g, int index) {
    if (index < 0 || index >= g.h_dim()) throw std::out_of_range("h_index out of range");
    return index < g.value() ? a(index + 1) : b(index - g.value() + 1);
}

Letter Letter::from_lie_code(int code) {
    if (code < 0) throw std::out_of_range("negative letter code");
    return code % 2 == 0 ? a(code / 2 + 1) : b(code / 2 + 1);
}

int Letter::h_index(Genus g) const {
    if (handle_ > g.value()) throw std::out_of_range("letter " + name() + " beyond genus");
    return (kind_ == Kind::A ? 0 : g.value()) + handle_ - 1;
}

std::string Letter::name() const {
    return (kind_ == Kind::A ? "a" : "b") + std::to_string(handle_);
}

std::vector<Letter> letters(Genus g) {
    std::vector<Letter> out;
    for (int i = 0; i < g.h_dim(); ++i) out.push_back(Letter::from_h_index(g, i));
    return out;
}

int pairing(Letter x, Letter y) {
    if (x.handle() != y.handle() || x.kind() == y.kind()) return 0;
    return x.kind() == Letter::Kind::A ? 1 : -1;
}

HandleSet make_handle_set(Genus g, std::vector<int> handles) {
    std::sort(handles.begin(), handles.end());
    handles.erase(std::unique(handles.begin(), handles.end()), handles.end());
    for (int h : handles)
        if (h < 1 || h > g.value())
            throw std::out_of_range("handle " + std::to_string(h) + " outside 1.." +
                                    std::to_string(g.value()));
    return handles;
}

HandleSet complement(Genus g, const HandleSet& handles) {
    HandleSet out;
    for (int h = 1; h <= g.value(); ++h)
        if (!std::binary_search(handles.begin(), handles.end(), h)) out.push_back(h);
    return out;
}

// ---------------------------------------------------------------------------
// HVector

HVector::HVector(Genus g) : g_(g), coords_(g.h_dim()) {}

HVector HVector::basis(Genus g, Letter x) {
    HVector v(g);
    v[x.h_index(g)] = 1;
    return v;
}

bool HVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return hypj::is_zero(c); });
}

HVector& HVector::operator+=(const HVector& other) {
    if (g_ != other.g_) throw std::invalid_argument("HVector: genus mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

HVector& HVector::operator-=(const HVector& other) {
    if (g_ != other.g_) throw std::invalid_argument("HVector: genus mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

HVector& HVector::operator*=(const Rational& c) {
    for (auto& x : coords_) x *= c;
    return *this;
}

Rational pairing(const HVector& u, const HVector& v) {
    if (u.genus() != v.genus()) throw std::invalid_argument("pairing: genus mismatch");
    const int g = u.genus().value();
    Rational r = 0;
    for (int i = 0; i < g; ++i) r += u[i] * v[g + i] - u[g + i] * v[i];
    return r;
}

// ---------------------------------------------------------------------------
// BiVector

int wedge_index(Genus g, int s, int t) {
    const int n = g.h_dim();
    if (s < 0 || t >= n || s >= t) throw std::out_of_range("wedge_index requires 0 <= s < t < 2g");
    // Rows s = 0..s-1 contribute (n-1) + (n-2) + ... entries.
    return s * (2 * n - s - 1) / 2 + (t - s - 1);
}

std::pair<int, int> wedge_pair(Genus g, int index) {
    const int n = g.h_dim();
    if (index < 0 || index >= g.wedge_dim()) throw std::out_of_range("wedge index out of range");
    int s = 0;
    while (index >= n - 1 - s) {
        index -= n - 1 - s;
        ++s;
    }
    return {s, s + 1 + index};
}

BiVector::BiVector(Genus g) : g_(g), coords_(g.wedge_dim()) {}

BiVector BiVector::monomial(Genus g, int s, int t) {
    BiVector x(g);
    if (s == t) return x;
    if (s < t) x.coords_[wedge_index(g, s, t)] = 1;
    else x.coords_[wedge_index(g, t, s)] = -1;
    return x;
}

BiVector BiVector::wedge(Genus g, Letter x, Letter y) {
    return monomial(g, x.h_index(g), y.h_index(g));
}

BiVector BiVector::wedge(const HVector& u, const HVector& v) {
    if (u.genus() != v.genus()) throw std::invalid_argument("wedge: genus mismatch");
    Genus g = u.genus();
    BiVector x(g);
    for (int idx = 0; idx < g.wedge_dim(); ++idx) {
        auto [s, t] = wedge_pair(g, idx);
        x.coords_[idx] = u[s] * v[t] - u[t] * v[s];
    }
    return x;
}

bool BiVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return hypj::is_zero(c); });
}

Rational BiVector::contraction() const {
    const int g = g_.value();
    Rational r = 0;
    for (int i = 0; i < g; ++i) r += coords_[wedge_index(g_, i, g + i)];
    return r;
}

BiVector& BiVector::operator+=(const BiVector& other) {
    if (g_ != other.g_) throw std::invalid_argument("BiVector: genus mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

BiVector& BiVector::operator-=(const BiVector& other) {
    if (g_ != other.g_) throw std::invalid_argument("BiVector: genus mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

BiVector& BiVector::operator*=(const Rational& c) {
    for (auto& x : coords_) x *= c;
    return *this;
}

std::string wedge_label(Genus g, int index) {
    auto [s, t] = wedge_pair(g, index);
    return Letter::from_h_index(g, s).name() + "^" + Letter::from_h_index(g, t).name();
}

namespace {

void append_term(std::ostringstream& os, bool& first, const Rational& c, const std::string& label) {
    if (hypj::is_zero(c)) return;
    Rational mag = abs(c);
    if (first) {
        if (sgn(c) < 0) os << "-";
    } else {
        os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag.get_str() << " ";
    os << label;
    first = false;
}

}  // namespace

std::string BiVector::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < g_.wedge_dim(); ++i) append_term(os, first, coords_[i], wedge_label(g_, i));
    return first ? "0" : os.str();
}

BiVector theta(Genus g) {
    BiVector x(g);
    for (int i = 1; i <= g.value(); ++i) x += BiVector::wedge(g, Letter::a(i), Letter::b(i));
    return x;
}

BiVector theta_I(Genus g, const HandleSet& handles) {
    BiVector x(g);
    for (int i : make_handle_set(g, handles)) x += BiVector::wedge(g, Letter::a(i), Letter::b(i));
    return x;
}

// ---------------------------------------------------------------------------
// V = Lambda^2 H / <theta>

int v_omitted_index(Genus g) { return wedge_index(g, g.value() - 1, g.h_dim() - 1); }

std::string v_coordinate_label(Genus g, int j) {
    int omitted = v_omitted_index(g);
    return wedge_label(g, j < omitted ? j : j + 1);
}

VClass VClass::from_canonical(BiVector rep) {
    if (!hypj::is_zero(rep[v_omitted_index(rep.genus())]))
        throw std::invalid_argument("VClass representative must have zero a_g^b_g coefficient");
    return VClass(std::move(rep));
}

VClass VClass::basis(Genus g, int j) {
    if (j < 0 || j >= g.v_dim()) throw std::out_of_range("VClass::basis index");
    int omitted = v_omitted_index(g);
    BiVector x(g);
    x[j < omitted ? j : j + 1] = 1;
    return VClass(std::move(x));
}

std::vector<Rational> VClass::coordinates() const {
    int omitted = v_omitted_index(genus());
    std::vector<Rational> out;
    out.reserve(genus().v_dim());
    for (int i = 0; i < genus().wedge_dim(); ++i)
        if (i != omitted) out.push_back(rep_[i]);
    return out;
}

VClass& VClass::operator+=(const VClass& other) {
    rep_ += other.rep_;
    return *this;
}

VClass& VClass::operator-=(const VClass& other) {
    rep_ -= other.rep_;
    return *this;
}

VClass& VClass::operator*=(const Rational& c) {
    rep_ *= c;
    return *this;
}

VClass project_mod_theta(const BiVector& x) {
    Genus g = x.genus();
    // Subtract the multiple of theta that clears a_g ^ b_g.
    Rational c = x[v_omitted_index(g)];
    BiVector rep = x;
    if (!hypj::is_zero(c)) rep -= c * theta(g);
    return VClass::from_canonical(std::move(rep));
}

BiVector project_hat_theta(const BiVector& x) {
    Genus g = x.genus();
    Rational c = x.contraction() / g.value();
    BiVector out = x;
    if (!hypj::is_zero(c)) out -= c * theta(g);
    return out;
}

// ---------------------------------------------------------------------------
// S^2 Lambda^2 H

void SymSqBiVector::add_term(int mu, int nu, const Rational& c) {
    if (hypj::is_zero(c)) return;
    if (mu > nu) std::swap(mu, nu);
    auto [it, inserted] = terms_.try_emplace({mu, nu}, c);
    if (!inserted) {
        it->second += c;
        if (hypj::is_zero(it->second)) terms_.erase(it);
    }
}

SymSqBiVector SymSqBiVector::monomial(Genus g, int mu, int nu) {
    if (mu < 0 || nu < 0 || mu >= g.wedge_dim() || nu >= g.wedge_dim())
        throw std::out_of_range("SymSqBiVector::monomial index");
    SymSqBiVector s(g);
    s.add_term(mu, nu, 1);
    return s;
}

SymSqBiVector SymSqBiVector::product(const BiVector& x, const BiVector& y) {
    if (x.genus() != y.genus()) throw std::invalid_argument("SymSqBiVector::product: genus mismatch");
    Genus g = x.genus();
    SymSqBiVector s(g);
    for (int i = 0; i < g.wedge_dim(); ++i) {
        if (hypj::is_zero(x[i])) continue;
        for (int j = 0; j < g.wedge_dim(); ++j)
            if (!hypj::is_zero(y[j])) s.add_term(i, j, x[i] * y[j]);
    }
    return s;
}

std::vector<SymSqBiVector::Key> SymSqBiVector::monomial_keys(Genus g) {
    std::vector<Key> keys;
    for (int mu = 0; mu < g.wedge_dim(); ++mu)
        for (int nu = mu; nu < g.wedge_dim(); ++nu) keys.emplace_back(mu, nu);
    return keys;
}

SymSqBiVector& SymSqBiVector::operator+=(const SymSqBiVector& other) {
    if (g_ != other.g_) throw std::invalid_argument("SymSqBiVector: genus mismatch");
    for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, c);
    return *this;
}

SymSqBiVector& SymSqBiVector::operator-=(const SymSqBiVector& other) {
    if (g_ != other.g_) throw std::invalid_argument("SymSqBiVector: genus mismatch");
    for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, -c);
    return *this;
}

SymSqBiVector& SymSqBiVector::operator*=(const Rational& c) {
    if (hypj::is_zero(c)) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

std::string SymSqBiVector::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_)
        append_term(os, first, c, "(" + wedge_label(g_, k.first) + ")(" + wedge_label(g_, k.second) + ")");
    return first ? "0" : os.str();
}

}  // namespace hypj
