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

#include "hypj/monodromy.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hypj {

std::vector<int> WeierstrassConfig::points() const {
    std::vector<int> out(size());
    for (int i = 0; i < size(); ++i) out[i] = i + 1;
    return out;
}

TwistDescriptor TwistDescriptor::make(Genus g, int side_genus, std::vector<int> points,
                                      std::vector<int> handles) {
    const WeierstrassConfig w(g);
    if (side_genus < 1 || side_genus > g.value() - 1)
        throw std::invalid_argument("side genus i must satisfy 1 <= i <= g-1");
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end())
        throw std::invalid_argument("point subset A has repeated labels");
    for (int p : points)
        if (!w.contains(p))
            throw std::invalid_argument("point " + std::to_string(p) + " is not in W = {1.." +
                                        std::to_string(w.size()) + "}");
    if (static_cast<int>(points.size()) != 2 * side_genus + 1)
        throw std::invalid_argument("|A| must be 2i+1");
    std::sort(handles.begin(), handles.end());
    if (std::adjacent_find(handles.begin(), handles.end()) != handles.end())
        throw std::invalid_argument("handle subset I has repeated entries");
    for (int h : handles)
        if (h < 1 || h > g.value())
            throw std::invalid_argument("handle " + std::to_string(h) + " is not in {1.." +
                                        std::to_string(g.value()) + "}");
    if (static_cast<int>(handles.size()) != side_genus) throw std::invalid_argument("|I| must be i");
    return TwistDescriptor(g, side_genus, std::move(points), std::move(handles));
}

bool TwistDescriptor::on_a_side(int q) const {
    if (!WeierstrassConfig(g_).contains(q))
        throw std::out_of_range("unknown Weierstrass point " + std::to_string(q));
    return std::binary_search(points_.begin(), points_.end(), q);
}

BiVector TwistDescriptor::side_theta(int q) const {
    return on_a_side(q) ? theta_prime() : theta_double_prime();
}

std::string TwistDescriptor::label() const {
    std::ostringstream os;
    os << "i=" << side_genus_ << ";A={";
    for (std::size_t k = 0; k < points_.size(); ++k) os << (k ? " " : "") << points_[k];
    os << "};I={";
    for (std::size_t k = 0; k < handles_.size(); ++k) os << (k ? " " : "") << handles_[k];
    os << "}";
    return os.str();
}

namespace {

// The theta on the side opposite to q.
BiVector far_theta(const TwistDescriptor& d, int q) {
    return d.on_a_side(q) ? d.theta_double_prime() : d.theta_prime();
}

}  // namespace

Der2Element tau_hyp(const TwistDescriptor& d, int q) {
    return Der2Element(Rational(1, 2) * phi(SymSqBiVector::square(far_theta(d, q))));
}

MonodromyValue tau_tilde(const TwistDescriptor& d, int q) {
    return project_mod_theta(pi_lambda2(tau_hyp(d, q).candidate()));
}

MonodromyValue pi_Z(const TwistDescriptor& d, int q1, int q2) {
    if (q1 == q2) throw std::invalid_argument("pi_Z requires distinct points q1 != q2");
    if (!d.separates(q1, q2)) return VClass(d.genus());
    return project_mod_theta(Rational(4) * d.side_theta(q2));
}

MonodromyValue pi_E(const TwistDescriptor& d, int q1, int q2) {
    return Rational(2 * d.genus().value() + 1) * pi_Z(d, q1, q2);
}

MonodromyValue zeta_projection(const TwistDescriptor& d) {
    SymSqBiVector x = SymSqBiVector::square(d.theta_prime()) - SymSqBiVector::square(d.theta_double_prime());
    return project_mod_theta(pi_lambda2(Rational(1, 2) * phi(x)));
}

bool TheoremAReport::passed() const { return failures() == 0; }

std::size_t TheoremAReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const TheoremACheck& c) { return !c.holds; }));
}

TheoremAReport verify_theorem_A(Genus g, const std::vector<TwistDescriptor>& family) {
    TheoremAReport report;
    const Rational factor(g.value() + 1);
    for (const auto& d : family) {
        if (d.genus() != g) throw std::invalid_argument("verify_theorem_A: descriptor genus mismatch");
        // tau_tilde only depends on the side; evaluate both sides once.
        std::vector<MonodromyValue> values;
        for (int q = 1; q <= g.point_count(); ++q) values.push_back(tau_tilde(d, q));
        for (int q1 = 1; q1 <= g.point_count(); ++q1) {
            for (int q2 = 1; q2 <= g.point_count(); ++q2) {
                if (q1 == q2) continue;
                MonodromyValue diff = values[q2 - 1] - values[q1 - 1];
                MonodromyValue expected = factor * pi_Z(d, q1, q2);
                bool holds = diff == expected;
                report.checks.push_back({d.label(), q1, q2, d.separates(q1, q2), std::move(diff),
                                         std::move(expected), holds});
            }
        }
    }
    return report;
}

bool key_lemma_identity(Genus g, const HandleSet& handles) {
    BiVector t1 = theta_I(g, handles);
    BiVector t2 = theta_I(g, complement(g, handles));
    BiVector t = theta(g);
    const Rational half(1, 2);
    SymSqBiVector lhs = half * SymSqBiVector::square(t1) - half * SymSqBiVector::square(t2) +
                        SymSqBiVector::product(t2, t);
    return lhs == half * SymSqBiVector::square(t);
}

bool phi_theta_squared_trivial(Genus g) {
    DerivationCandidate d = phi(SymSqBiVector::square(theta(g)));
    return std::all_of(d.images().begin(), d.images().end(),
                       [](const LieElement& img) { return reduce_mod_ideal(img).is_zero(); });
}

KeyLemmaReport key_lemma_check(Genus g, const TwistDescriptor& d) {
    if (d.genus() != g) throw std::invalid_argument("key_lemma_check: descriptor genus mismatch");
    KeyLemmaReport report;
    report.symmetric_identity = key_lemma_identity(g, d.handles());
    report.phi_theta_squared_trivial = phi_theta_squared_trivial(g);

    const Rational half(1, 2);
    BiVector t1 = d.theta_prime();
    BiVector t2 = d.theta_double_prime();
    BiVector t = theta(g);
    SymSqBiVector x = half * SymSqBiVector::square(t1) - half * SymSqBiVector::square(t2);
    SymSqBiVector residual = v_prime_residual(x);
    report.residual_pi_hat_zero = pi_hat(residual).is_zero();

    Rational share = make_rational(g.value() - d.side_genus(), g.value());
    SymSqBiVector expected = x + SymSqBiVector::product(t2, t) - share * SymSqBiVector::square(t);
    report.residual_closed_form = residual == expected;

    DerivationCandidate v_prime = phi(residual);
    report.v_prime_part_trivial =
        std::all_of(v_prime.images().begin(), v_prime.images().end(),
                    [](const LieElement& img) { return reduce_mod_ideal(img).is_zero(); });
    return report;
}

}  // namespace hypj
