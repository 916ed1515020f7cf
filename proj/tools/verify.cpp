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

#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "hypj/class_span.hpp"
#include "hypj/derivations.hpp"
#include "hypj/f2_model.hpp"
#include "hypj/free_lie.hpp"
#include "hypj/monodromy.hpp"
#include "hypj/rep_dims.hpp"

namespace hypj::cli {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "fail";
}

const std::vector<std::string>& module_names() {
    static const std::vector<std::string> names = {"symplectic", "free_lie", "derivations",
                                                   "monodromy",  "span",     "rep_dims"};
    return names;
}

namespace {

struct Outcome {
    CheckStatus status;
    std::string details;
};

Outcome verdict(bool ok, std::string details) {
    return {ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(details)};
}

struct Check {
    std::string module;
    std::string name;
    std::string anchor;
    std::function<Outcome(Genus, const VerifyConfig&)> run;
};

constexpr std::uint64_t kSeed = 20260417;

// Handle subsets: all of them for g <= 4, otherwise a fixed sample.
std::vector<HandleSet> handle_subsets(Genus g) {
    const int n = g.value();
    std::vector<HandleSet> out;
    if (n <= 4) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            HandleSet s;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1u) s.push_back(i + 1);
            out.push_back(s);
        }
        return out;
    }
    std::mt19937_64 rng(kSeed);
    std::set<HandleSet> seen;
    while (seen.size() < 16) {
        HandleSet s;
        for (int i = 1; i <= n; ++i)
            if (rng() & 1u) s.push_back(i);
        seen.insert(s);
    }
    return {seen.begin(), seen.end()};
}

// Every monomial of S^2 Lambda^2 H for g <= 3, else `samples` random
// combinations of three monomials with small integer coefficients.
std::vector<SymSqBiVector> sym_sq_samples(Genus g, std::size_t samples) {
    const auto keys = SymSqBiVector::monomial_keys(g);
    std::vector<SymSqBiVector> out;
    if (g.value() <= 3) {
        for (const auto& [mu, nu] : keys) out.push_back(SymSqBiVector::monomial(g, mu, nu));
        return out;
    }
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    while (out.size() < samples) {
        SymSqBiVector s(g);
        for (int t = 0; t < 3; ++t) {
            const auto& [mu, nu] = keys[pick(rng)];
            s += Rational(coeff(rng)) * SymSqBiVector::monomial(g, mu, nu);
        }
        if (!s.is_zero()) out.push_back(std::move(s));
    }
    return out;
}

Outcome j_theta_constant(Genus g, const VerifyConfig&) {
    const Rational c = -4 * (g.value() + 1);
    for (int j = 0; j < g.v_dim(); ++j) {
        VClass v = VClass::basis(g, j);
        if (!(project_mod_theta(pi_hat(j_theta(v))) == c * v))
            return verdict(false, "fails on basis vector " + v_coordinate_label(g, j));
    }
    return verdict(true, std::to_string(g.v_dim()) + " basis vectors, constant " + c.get_str());
}

Outcome theta_I_law(Genus g, const VerifyConfig&) {
    const auto subsets = handle_subsets(g);
    for (const auto& handles : subsets) {
        DerivationCandidate d = phi(SymSqBiVector::square(theta_I(g, handles)));
        LieElement t = theta_lie(g, handles);
        for (Letter x : letters(g)) {
            const bool inside = std::find(handles.begin(), handles.end(), x.handle()) != handles.end();
            LieElement expected = inside ? -2 * bracket(t, LieElement::letter(g, x)) : LieElement(g, 3);
            if (!(d.image(x) == expected)) return verdict(false, "fails at letter " + x.name());
        }
    }
    return verdict(true, std::to_string(subsets.size()) + " handle subsets");
}

Outcome phi_in_der2(Genus g, const VerifyConfig&) {
    const auto samples = sym_sq_samples(g, 100);
    for (const auto& s : samples)
        if (!annihilation_residue(phi(s)).is_zero()) return verdict(false, "nonzero residue for " + s.to_string());
    return verdict(true, std::to_string(samples.size()) + " elements of S^2 Lambda^2 H");
}

Outcome closed_form(Genus g, const VerifyConfig&) {
    const auto samples = sym_sq_samples(g, 100);
    for (const auto& s : samples)
        if (!(pi_phi_closed_form(s) == pi_lambda2(phi(s))))
            return verdict(false, "mismatch on " + s.to_string());
    return verdict(true, std::to_string(samples.size()) + " elements of S^2 Lambda^2 H");
}

Outcome tau_difference(Genus g, const VerifyConfig&) {
    TwistFamily family = canonical_family(g);
    TheoremAReport r = verify_theorem_A(g, family.descriptors());
    std::ostringstream os;
    os << r.checks.size() << " (descriptor, q1, q2) triples, " << r.failures() << " failures";
    return verdict(r.passed(), os.str());
}

Outcome zeta_check(Genus g, const VerifyConfig&) {
    TwistFamily family = canonical_family(g);
    const Rational c = 2 * (2 * g.value() + 2);
    for (const auto& d : family.descriptors())
        if (!(zeta_projection(d) == c * project_mod_theta(d.theta_double_prime())))
            return verdict(false, "fails on " + d.label());
    return verdict(true, std::to_string(family.size()) + " descriptors");
}

Outcome v_prime_chain(Genus g, const VerifyConfig&) {
    for (const auto& handles : handle_subsets(g))
        if (!key_lemma_identity(g, handles)) return verdict(false, "symmetric identity fails");
    if (!phi_theta_squared_trivial(g)) return verdict(false, "phi(theta^2) is not trivial on p");
    TwistFamily family = canonical_family(g);
    for (const auto& d : family.descriptors())
        if (!key_lemma_check(g, d).passed()) return verdict(false, "chain fails on " + d.label());
    return verdict(true, std::to_string(family.size()) + " descriptors");
}

Outcome class_rank(Genus g, const VerifyConfig&) {
    SpanReport r = span_report_with_fallback(g);
    std::ostringstream os;
    os << "family " << r.family << " (" << r.descriptors << " descriptors): weierstrass_rank "
       << r.weierstrass_rank << ", collino_rank " << r.collino_rank << ", target " << r.target_rank()
       << ", row spaces " << (r.row_spaces_equal ? "equal" : "differ") << ", column sums "
       << (r.relation_holds ? "zero" : "nonzero");
    return verdict(r.passed(), os.str());
}

Outcome integral_relation(Genus g, const VerifyConfig&) {
    ClassMatrix m = class_matrix(canonical_family(g));
    return verdict(remark_check(m), std::to_string(g.point_count()) + " rows");
}

Outcome witt(Genus g, const VerifyConfig&) {
    std::ostringstream os;
    for (int k = 1; k <= 4; ++k) {
        const auto n = lyndon_basis(k, g).size();
        if (n != witt_dim(g.h_dim(), k)) return verdict(false, "degree " + std::to_string(k));
        os << (k > 1 ? ", " : "") << "L_" << k << "=" << n;
    }
    return verdict(true, os.str());
}

Outcome ideal_dims(Genus g, const VerifyConfig&) {
    const int n = g.value();
    const std::size_t j2 = ideal_component(2, g).dim(), j3 = ideal_component(3, g).dim();
    const std::size_t p2 = p_dim(2, g);
    std::ostringstream os;
    os << "J_2=" << j2 << ", J_3=" << j3 << ", p(-2)=" << p2;
    return verdict(j2 == 1 && j3 == static_cast<std::size_t>(2 * n) &&
                       p2 == static_cast<std::size_t>(2 * n * n - n - 1),
                   os.str());
}

LieElement random_lie(Genus g, int degree, std::mt19937_64& rng) {
    const auto& words = lyndon_basis_table(g, degree).words();
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    LieElement x(g, degree);
    for (int t = 0; t < 3; ++t) x += Rational(coeff(rng)) * LieElement::basis_element(g, degree, pick(rng));
    return x;
}

Outcome jacobi(Genus g, const VerifyConfig&) {
    std::mt19937_64 rng(kSeed);
    for (int trial = 0; trial < 25; ++trial) {
        LieElement x = random_lie(g, 1, rng), y = random_lie(g, 1, rng), z = random_lie(g, 2, rng);
        LieElement j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
        if (!j.is_zero()) return verdict(false, "Jacobi fails at trial " + std::to_string(trial));
        if (!(bracket(x, z) + bracket(z, x)).is_zero()) return verdict(false, "antisymmetry fails");
        if (!(lie_to_tensor(bracket(x, z)) == commutator(lie_to_tensor(x), lie_to_tensor(z))))
            return verdict(false, "tensor embedding is not a Lie map");
    }
    return verdict(true, "25 random triples");
}

Outcome pairing_check(Genus g, const VerifyConfig&) {
    const auto ls = letters(g);
    std::vector<SparseVector> rows;
    for (Letter x : ls) {
        std::vector<Rational> row;
        for (Letter y : ls) {
            if (pairing(x, y) != -pairing(y, x)) return verdict(false, "pairing not antisymmetric");
            row.emplace_back(pairing(x, y));
        }
        rows.push_back(SparseVector::from_dense(row));
    }
    const std::size_t r = rank(SparseMatrix::from_rows(ls.size(), rows));
    const bool ok = r == ls.size() && theta(g).contraction() == g.value() &&
                    project_hat_theta(theta(g)).is_zero();
    return verdict(ok, "Gram rank " + std::to_string(r));
}

Outcome f2_check(Genus g, const VerifyConfig&) {
    if (g.value() > kF2MaxGenus) return {CheckStatus::Skipped, "genus beyond the F_2 model range"};
    F2ClassSpace space = f2_class_space(g);
    if (space.dimension != g.h_dim()) return verdict(false, "quotient dimension " + std::to_string(space.dimension));
    if (f2_rank(space.gram.rows) != g.h_dim()) return verdict(false, "pairing degenerate");
    const int n = g.point_count();
    Permutation id(n);
    std::iota(id.begin(), id.end(), 1);
    const F2Matrix identity = perm_to_sp_f2(space, id);
    auto compose = [&](const Permutation& s, const Permutation& t) {
        Permutation out(n);
        for (int p = 0; p < n; ++p) out[p] = s[t[p] - 1];
        return out;
    };
    if (g.value() == 2) {
        std::set<std::vector<std::uint32_t>> images;
        Permutation p = id;
        std::size_t count = 0;
        do {
            F2Matrix m = perm_to_sp_f2(space, p);
            if (!preserves_pairing(space, m)) return verdict(false, "permutation not symplectic");
            images.insert(m.rows);
            ++count;
        } while (std::next_permutation(p.begin(), p.end()));
        return verdict(images.size() == count, std::to_string(count) + " permutations, " +
                                                   std::to_string(images.size()) + " distinct images");
    }
    std::mt19937_64 rng(kSeed);
    Permutation s = id, t = id;
    const int trials = 200;
    for (int trial = 0; trial < trials; ++trial) {
        std::shuffle(s.begin(), s.end(), rng);
        std::shuffle(t.begin(), t.end(), rng);
        F2Matrix ms = perm_to_sp_f2(space, s), mt = perm_to_sp_f2(space, t);
        if (!preserves_pairing(space, ms)) return verdict(false, "permutation not symplectic");
        if (s != id && ms == identity) return verdict(false, "nontrivial permutation acts trivially");
        if (!(perm_to_sp_f2(space, compose(s, t)) == f2_multiply(ms, mt)))
            return verdict(false, "not a homomorphism");
    }
    return verdict(true, std::to_string(trials) + " sampled permutation pairs");
}

Outcome p_decomp(Genus g, const VerifyConfig&) {
    DimReport r = check_p_decomposition(g);
    std::ostringstream os;
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
        const auto& c = r.checks[i];
        os << (i ? ", " : "") << c.name << "=" << c.computed << " vs " << c.partition << "=" << c.expected;
    }
    return verdict(r.passed(), os.str());
}

bool gated(Genus g, const VerifyConfig& config) { return g.value() >= 4 && !config.slow; }

Outcome der_decomp(Genus g, const VerifyConfig& config) {
    if (gated(g, config)) return {CheckStatus::Skipped, "requires --slow at g >= 4"};
    DimReport r = check_der_decomposition(g);
    const auto& c = r.checks.front();
    return verdict(r.passed(), "Der_-2=" + std::to_string(c.computed) + " vs " + c.partition + "=" +
                                   std::to_string(c.expected));
}

Outcome rep_ring(Genus g, const VerifyConfig& config) {
    if (gated(g, config)) return {CheckStatus::Skipped, "requires --slow at g >= 4"};
    std::ostringstream os;
    bool ok = true;
    for (int m = 1; m <= 2; ++m) {
        RepRingReport r = check_rep_ring_dims(g, m);
        ok = ok && r.passed() && r.domain_dim == static_cast<std::size_t>(g.h_dim()) * p_dim(1 + m, g);
        os << (m > 1 ? "; " : "") << "m=" << m << ": Der=" << r.kernel_dim << ", 2g p(-" << 1 + m
           << ")=" << r.domain_dim << ", p(-" << 2 + m << ")=" << r.target_dim << ", residue rank "
           << r.residue_rank;
    }
    return verdict(ok, os.str());
}

const std::vector<Check>& all_checks() {
    static const std::vector<Check> checks = {
        {"symplectic", "symplectic.pairing", "<a_i,b_j> = delta_ij is nondegenerate and theta is its dual",
         pairing_check},
        {"symplectic", "symplectic.f2_model",
         "even subsets of W modulo complements give a symplectic F_2-space of dimension 2g with a faithful "
         "Aut W action",
         f2_check},
        {"free_lie", "free_lie.witt_dims", "dim L_k(H) is given by the necklace formula", witt},
        {"free_lie", "free_lie.ideal_dims", "dim p(-2) = dim Lambda^2 H - 1", ideal_dims},
        {"free_lie", "free_lie.jacobi", "L(H) is a Lie subalgebra of T(H)", jacobi},
        {"derivations", "derivations.j_theta_constant", "pi_hat . j_theta = -4(g+1) id on V", j_theta_constant},
        {"derivations", "derivations.theta_I_law",
         "phi(theta_I^2)(x) = -2[theta_I, x] on H_I and 0 on its complement", theta_I_law},
        {"derivations", "derivations.phi_in_der2", "the image of phi lies in Der_-2 p", phi_in_der2},
        {"derivations", "derivations.closed_form", "closed form of pi_{Lambda^2 H} . phi", closed_form},
        {"monodromy", "monodromy.tau_difference", "tau_{q2} - tau_{q1} = (g+1) pi_Z(q1, q2) in V", tau_difference},
        {"monodromy", "monodromy.zeta_projection", "theta_tilde pi_{Lambda^2 H}(zeta_D) = 2(2g+2) theta''",
         zeta_check},
        {"monodromy", "monodromy.v_prime_chain", "1/2 theta'^2 - 1/2 theta''^2 + theta'' theta = 1/2 theta^2",
         v_prime_chain},
        {"span", "span.class_rank", "X_zeta = X_omega and dim X_zeta = 2g+1", class_rank},
        {"span", "span.integral_relation", "(2g+2)[q_i] = sum_j ([q_i] - [q_j])", integral_relation},
        {"rep_dims", "rep_dims.p_decomposition", "p(-1) = V[1], p(-2) = V[1,1], p(-3) = V[2,1]", p_decomp},
        {"rep_dims", "rep_dims.der2_decomposition", "Der_-2 p = V[2,2] + V[1,1]", der_decomp},
        {"rep_dims", "rep_dims.rep_ring", "Der_-m p = p(-1) p(-1-m) - p(-2-m)", rep_ring},
    };
    return checks;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyConfig& config) {
    const Genus g(config.genus);
    std::vector<const Check*> selected;
    for (const auto& c : all_checks())
        if (config.modules.empty() ||
            std::find(config.modules.begin(), config.modules.end(), c.module) != config.modules.end())
            selected.push_back(&c);

    std::vector<CheckResult> results(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < selected.size();) {
            const Check& c = *selected[i];
            CheckResult& r = results[i];
            r.name = c.name;
            r.anchor = c.anchor;
            const auto start = std::chrono::steady_clock::now();
            try {
                Outcome o = c.run(g, config);
                r.status = o.status;
                r.details = std::move(o.details);
            } catch (const std::exception& e) {
                r.status = CheckStatus::Fail;
                r.details = std::string("exception: ") + e.what();
            }
            r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(config.threads, selected.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::none_of(results.begin(), results.end(),
                        [](const CheckResult& r) { return r.status == CheckStatus::Fail; });
}

nlohmann::ordered_json report_json(const VerifyConfig& config, const std::vector<CheckResult>& results) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["tool_version"] = kToolVersion;
    j["genus"] = config.genus;
    nlohmann::ordered_json modules = nlohmann::ordered_json::array();
    for (const auto& m : config.modules.empty() ? module_names() : config.modules) modules.push_back(m);
    j["config"] = {{"modules", modules}, {"slow", config.slow}};
    std::size_t passed = 0, failed = 0, skipped = 0;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        checks.push_back({{"name", r.name},
                          {"anchor", r.anchor},
                          {"status", to_string(r.status)},
                          {"details", r.details},
                          {"elapsed_ms", r.elapsed_ms}});
        (r.status == CheckStatus::Pass ? passed : r.status == CheckStatus::Fail ? failed : skipped)++;
    }
    j["checks"] = checks;
    j["summary"] = {{"passed", passed}, {"failed", failed}, {"skipped", skipped}};
    return j;
}

unsigned threads_from_environment() {
    if (const char* v = std::getenv("HYPJ_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(v, &end, 10);
        if (end != v && *end == '\0' && n > 0) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace hypj::cli
