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
// Dehn twists about symmetric separating curves: their images under the
// hyperelliptic Johnson homomorphisms at each Weierstrass point, the
// projections to V, and the Collino monodromy.

#ifndef HYPJ_MONODROMY_HPP
#define HYPJ_MONODROMY_HPP

#include <string>
#include <vector>

#include "hypj/derivations.hpp"
#include "hypj/symplectic.hpp"

namespace hypj {

/// The 2g+2 Weierstrass points, labelled 1..2g+2.
class WeierstrassConfig {
public:
    explicit WeierstrassConfig(Genus g) : g_(g) {}
    Genus genus() const { return g_; }
    int size() const { return g_.point_count(); }
    bool contains(int q) const { return q >= 1 && q <= size(); }
    std::vector<int> points() const;

private:
    Genus g_;
};

/// A symmetric separating curve cutting off a genus-i side that contains the
/// 2i+1 points A and carries the handles I (so theta' = theta_I and
/// theta'' = theta_{I^c}).
class TwistDescriptor {
public:
    /// Throws std::invalid_argument naming the violated invariant.
    static TwistDescriptor make(Genus g, int side_genus, std::vector<int> points, std::vector<int> handles);

    Genus genus() const { return g_; }
    int side_genus() const { return side_genus_; }
    const std::vector<int>& points() const { return points_; }
    const HandleSet& handles() const { return handles_; }

    /// Whether q lies on the A side; throws std::out_of_range for a label outside W.
    bool on_a_side(int q) const;
    bool separates(int q1, int q2) const { return on_a_side(q1) != on_a_side(q2); }
    /// theta restricted to the handles on the side of q.
    BiVector side_theta(int q) const;
    BiVector theta_prime() const { return theta_I(g_, handles_); }
    BiVector theta_double_prime() const { return theta_I(g_, complement(g_, handles_)); }

    /// e.g. "i=1;A={1 2 3};I={1}"
    std::string label() const;

    friend auto operator<=>(const TwistDescriptor&, const TwistDescriptor&) = default;

private:
    TwistDescriptor(Genus g, int side_genus, std::vector<int> points, HandleSet handles)
        : g_(g), side_genus_(side_genus), points_(std::move(points)), handles_(std::move(handles)) {}
    Genus g_;
    int side_genus_;
    std::vector<int> points_;
    HandleSet handles_;
};

using MonodromyValue = VClass;

/// tau_q of the twist: (1/2) phi(theta''^2) for q on the A side and
/// (1/2) phi(theta'^2) otherwise (the square of theta on the far side).
Der2Element tau_hyp(const TwistDescriptor& d, int q);

/// theta_tilde(pi_lambda2(tau_hyp(d, q))).
MonodromyValue tau_tilde(const TwistDescriptor& d, int q);

/// 0 if d does not separate q1 and q2, else 4 theta_tilde(theta on the side of q2).
/// Throws std::invalid_argument if q1 == q2.
MonodromyValue pi_Z(const TwistDescriptor& d, int q1, int q2);

/// (2g+1) pi_Z
MonodromyValue pi_E(const TwistDescriptor& d, int q1, int q2);

/// theta_tilde(pi_lambda2(zeta_D)) with zeta_D = (1/2) phi(theta'^2 - theta''^2).
MonodromyValue zeta_projection(const TwistDescriptor& d);

struct TheoremACheck {
    std::string descriptor;
    int q1;
    int q2;
    bool separated;
    MonodromyValue difference;  // tau_tilde(q2) - tau_tilde(q1)
    MonodromyValue expected;    // (g+1) pi_Z(q1, q2)
    bool holds;
};

struct TheoremAReport {
    std::vector<TheoremACheck> checks;
    bool passed() const;
    std::size_t failures() const;
};

/// tau_tilde(q2) - tau_tilde(q1) = (g+1) pi_Z(q1, q2) for every descriptor and
/// every ordered pair of distinct points.
TheoremAReport verify_theorem_A(Genus g, const std::vector<TwistDescriptor>& family);

/// (1/2) theta'^2 - (1/2) theta''^2 + theta'' theta == (1/2) theta^2 in S^2 Lambda^2 H.
bool key_lemma_identity(Genus g, const HandleSet& handles);

/// True iff every image of phi(theta^2) lies in J_3.
bool phi_theta_squared_trivial(Genus g);

struct KeyLemmaReport {
    bool symmetric_identity = false;     // the S^2 Lambda^2 H identity above
    bool phi_theta_squared_trivial = false;
    bool residual_pi_hat_zero = false;   // pi_hat(v_prime_residual(x)) == 0
    bool residual_closed_form = false;   // residual == x + theta''theta - ((g-i)/g) theta^2
    bool v_prime_part_trivial = false;   // phi(residual) reduces to 0 in Hom(H, p(-3))
    bool passed() const {
        return symmetric_identity && phi_theta_squared_trivial && residual_pi_hat_zero &&
               residual_closed_form && v_prime_part_trivial;
    }
};

/// The chain showing tau_{q2} - tau_{q1} has no V' = V_{[2^2]} component on d,
/// with x = (1/2)(theta'^2 - theta''^2).
KeyLemmaReport key_lemma_check(Genus g, const TwistDescriptor& d);

}  // namespace hypj

#endif  // HYPJ_MONODROMY_HPP
