/*
   Copyright 2026 The enda-lab authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ENDA_BIJECTION_HPP
#define ENDA_BIJECTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "endo.hpp"
#include "ncpoly.hpp"
#include "sampling.hpp"

namespace enda {

// ---------------------------------------------------------------------------
// Twisted addition
// ---------------------------------------------------------------------------

namespace detail {

// g(u, v) in the algebra of u; g must use only x1, x2 (possibly carrying a
// different descriptor with the same ring and nilpotency).
inline NcPoly apply_two_arg(const NcPoly& g, const NcPoly& u, const NcPoly& v) {
    const AlgebraPtr& a = u.algebra();
    NcPoly lifted(a);
    if (same_algebra(g.algebra(), a)) {
        lifted = g;
    } else {
        for (const auto& [w, c] : g.terms()) lifted.add_term(w, c);
    }
    std::vector<NcPoly> images{u, v};
    for (int i = 3; i <= a->gens(); ++i) images.push_back(NcPoly::generator(a, i));
    images.resize(a->gens(), NcPoly::zero(a));
    return substitute(lifted, images);
}

// canonical-term-order fold through u # v = u + v + gamma*g(u, v)
inline NcPoly twist_fold(const NcPoly& a, const NcPoly& g, const RingElement& gamma) {
    if (a.is_zero() || gamma.is_zero()) return a;
    NcPoly acc(a.algebra());
    bool first = true;
    for (const auto& [w, c] : a.terms()) {
        NcPoly term = NcPoly::monomial(a.algebra(), w, c);
        if (first) {
            acc = std::move(term);
            first = false;
        } else {
            acc = acc + term + gamma * apply_two_arg(g, acc, term);
        }
    }
    return acc;
}

}  // namespace detail

/*
 * Degree-(m-1) symmetric twist polynomial with its coefficient. Validated at
 * construction: homogeneous of degree m-1 in x1, x2, swap-symmetric, and a
 * solution of the cocycle system (checked symbolically with a fresh third
 * generator, plus the scalar instantiations over small finite K).
 */
class TwistData {
   public:
    TwistData(NcPoly g, RingElement gamma) : g_(std::move(g)), gamma_(std::move(gamma)) { validate(); }

    const NcPoly& g() const { return g_; }
    const RingElement& gamma() const { return gamma_; }

   private:
    void validate() const {
        const AlgebraPtr& a = g_.algebra();
        if (a->variety() != Variety::Nilpotent)
            fail(Errc::IllFormedTwist, "twists require a nilpotent algebra");
        if (!same_ring(gamma_.ring(), a->ring())) fail(Errc::WrongRing, "gamma from a foreign ring");
        int m = a->nilpotency();
        if (g_.is_zero()) fail(Errc::NotHomogeneous, "twist polynomial must be nonzero; drop the twist instead");
        if (!g_.is_homogeneous() || g_.degree() != m - 1)
            fail(Errc::NotHomogeneous, "twist polynomial must be homogeneous of degree m-1");
        if (g_.max_generator() > 2) fail(Errc::GeneratorOutOfRange, "twist polynomial must use only x1 and x2");

        AlgebraPtr a3 = Algebra::nilpotent(a->ring(), 3, m);
        NcPoly g3(a3);
        for (const auto& [w, c] : g_.terms()) g3.add_term(w, c);
        NcPoly x1 = NcPoly::generator(a3, 1), x2 = NcPoly::generator(a3, 2), x3 = NcPoly::generator(a3, 3);
        if (detail::apply_two_arg(g3, x2, x1) != g3) fail(Errc::NotSymmetric, "g(x1,x2) != g(x2,x1)");
        NcPoly lhs = detail::apply_two_arg(g3, x1, x2) + detail::apply_two_arg(g3, x1 + x2, x3);
        NcPoly rhs = detail::apply_two_arg(g3, x2, x3) + detail::apply_two_arg(g3, x1, x2 + x3);
        if (lhs != rhs) fail(Errc::CocycleViolated, "cocycle identity fails on symbolic generators");
        if (!detail::apply_two_arg(g3, x1, -x1).is_zero()) fail(Errc::CocycleViolated, "g(x1,-x1) != 0");
        if (a->ring()->is_finite() && a->ring()->cardinality() <= 64) {
            for (const auto& c1 : all_elements(a->ring()))
                for (const auto& c2 : all_elements(a->ring()))
                    if (!detail::apply_two_arg(g3, c1 * x1, c2 * x1).is_zero())
                        fail(Errc::CocycleViolated, "scalar instantiation g(c*x, c'*x) != 0 at c=" + c1.str() +
                                                        ", c'=" + c2.str());
        }
    }

    NcPoly g_;
    RingElement gamma_;
};

// ---------------------------------------------------------------------------
// Closed-form adjoint bijections
// ---------------------------------------------------------------------------

/*
 * s = xi_alpha o twist o mirror? o (phi-semilinear extension of baseAuto);
 * every stage is a bijection. With no twist and no mirror this is the
 * semi-isomorphism shape: additive, multiplicative up to alpha, semilinear
 * over phi.
 */
class BijectionRecipe {
   public:
    BijectionRecipe(AlgebraPtr alg, RingElement scalar, RingAutomorphism ring_auto, Endo base_auto, bool mirror,
                    std::optional<TwistData> twist)
        : alg_(std::move(alg)),
          scalar_(std::move(scalar)),
          phi_(std::move(ring_auto)),
          base_(std::move(base_auto)),
          base_inv_(base_),
          mirror_(mirror),
          twist_(std::move(twist)) {
        if (!same_ring(scalar_.ring(), alg_->ring())) fail(Errc::WrongRing, "scalar from a foreign ring");
        if (!is_unit(scalar_)) fail(Errc::NotAUnit, "recipe scalar must be a unit of K");
        if (!same_ring(phi_.ring(), alg_->ring())) fail(Errc::WrongRing, "ring automorphism over a foreign ring");
        if (!same_algebra(base_.algebra(), alg_)) fail(Errc::AlgebraMismatch, "base automorphism over a foreign algebra");
        if (twist_ && !same_algebra(twist_->g().algebra(), alg_))
            fail(Errc::AlgebraMismatch, "twist polynomial over a foreign algebra");
        if (base_ == Endo::identity(alg_)) {
            base_inv_ = base_;
        } else {
            auto inv = inverse_endo(base_);  // UnsupportedVariety for the free case is deliberate
            if (!inv) fail(Errc::NotAUnit, "base endomorphism is not an automorphism");
            base_inv_ = *inv;
        }
    }

    static BijectionRecipe identity(const AlgebraPtr& a) {
        return BijectionRecipe(a, RingElement::one(a->ring()), RingAutomorphism::identity(a->ring()),
                               Endo::identity(a), false, std::nullopt);
    }

    const AlgebraPtr& algebra() const { return alg_; }
    const RingElement& scalar() const { return scalar_; }
    const RingAutomorphism& ring_auto() const { return phi_; }
    const Endo& base_auto() const { return base_; }
    bool mirror_flag() const { return mirror_; }
    const std::optional<TwistData>& twist() const { return twist_; }

    bool has_effective_twist() const { return twist_ && !twist_->gamma().is_zero(); }

    bool is_normalized() const { return scalar_.is_one() && base_ == Endo::identity(alg_); }

    const Endo& base_auto_inverse() const { return base_inv_; }

   private:
    AlgebraPtr alg_;
    RingElement scalar_;
    RingAutomorphism phi_;
    Endo base_, base_inv_;
    bool mirror_;
    std::optional<TwistData> twist_;
};

inline NcPoly evaluate(const BijectionRecipe& s, const NcPoly& a) {
    if (!same_algebra(a.algebra(), s.algebra())) fail(Errc::AlgebraMismatch, "evaluate across algebras");
    NcPoly b = a;
    if (!s.ring_auto().is_identity())
        b = b.map_coefficients([&](const RingElement& c) { return s.ring_auto()(c); });
    if (!(s.base_auto() == Endo::identity(s.algebra()))) b = apply(s.base_auto(), b);
    if (s.mirror_flag()) b = b.mirror();
    if (s.has_effective_twist()) b = detail::twist_fold(b, s.twist()->g(), s.twist()->gamma());
    if (!s.scalar().is_one()) b = s.scalar() * b;
    return b;
}

inline NcPoly evaluate_inverse(const BijectionRecipe& s, const NcPoly& a) {
    if (!same_algebra(a.algebra(), s.algebra())) fail(Errc::AlgebraMismatch, "evaluate across algebras");
    NcPoly b = a;
    if (!s.scalar().is_one()) b = inverse_of_unit(s.scalar()) * b;
    if (s.has_effective_twist()) b = detail::twist_fold(b, s.twist()->g(), -s.twist()->gamma());
    if (s.mirror_flag()) b = b.mirror();
    if (!(s.base_auto() == Endo::identity(s.algebra()))) b = apply(s.base_auto_inverse(), b);
    if (!s.ring_auto().is_identity()) {
        RingAutomorphism inv = s.ring_auto().inverse();
        b = b.map_coefficients([&](const RingElement& c) { return inv(c); });
    }
    return b;
}

// ---------------------------------------------------------------------------
// Derivative-algebra operations: the value of s on a generator expression,
// with the arguments substituted for the generators.
// ---------------------------------------------------------------------------

namespace detail {

inline NcPoly theta_substitute(const NcPoly& value, const std::vector<NcPoly>& args) {
    const AlgebraPtr& a = value.algebra();
    std::vector<NcPoly> images = args;
    for (int i = static_cast<int>(args.size()) + 1; i <= a->gens(); ++i)
        images.push_back(NcPoly::generator(a, i));
    return substitute(value, images);
}

}  // namespace detail

// a * b = theta_{a,b} s(x1 x2)
inline NcPoly derivative_star(const BijectionRecipe& s, const NcPoly& a, const NcPoly& b) {
    if (s.algebra()->gens() < 2) fail(Errc::AlgebraMismatch, "derivative * needs two generators");
    NcPoly x1x2 = NcPoly::generator(s.algebra(), 1) * NcPoly::generator(s.algebra(), 2);
    return detail::theta_substitute(evaluate(s, x1x2), {a, b});
}

// a _|_ b = theta_{a,b} s(x1 + x2)
inline NcPoly derivative_bot(const BijectionRecipe& s, const NcPoly& a, const NcPoly& b) {
    if (s.algebra()->gens() < 2) fail(Errc::AlgebraMismatch, "derivative _|_ needs two generators");
    NcPoly x1px2 = NcPoly::generator(s.algebra(), 1) + NcPoly::generator(s.algebra(), 2);
    return detail::theta_substitute(evaluate(s, x1px2), {a, b});
}

// xi o a = theta_a s(xi x1)
inline NcPoly derivative_circ(const BijectionRecipe& s, const RingElement& xi, const NcPoly& a) {
    NcPoly xix1 = xi * NcPoly::generator(s.algebra(), 1);
    return detail::theta_substitute(evaluate(s, xix1), {a});
}

struct DerivativeReport {
    int samples = 0;
    bool ok = true;
    std::vector<std::string> counterexamples;
};

/*
 * Sampled check that s is an isomorphism onto its derivative algebra:
 * s(a*b) = s(a) * s(b), s(a+b) = s(a) _|_ s(b), s(xi a) = xi o s(a).
 * The evaluator can be overridden (test hook for negative controls).
 */
inline DerivativeReport verify_derivative_isomorphism(
    const BijectionRecipe& s, int samples, unsigned long seed = 0,
    const std::function<NcPoly(const NcPoly&)>& eval_override = {}) {
    DerivativeReport rep;
    rep.samples = samples;
    Rng rng(seed);
    auto ev = eval_override ? eval_override : [&](const NcPoly& x) { return evaluate(s, x); };
    const AlgebraPtr& alg = s.algebra();
    for (int t = 0; t < samples; ++t) {
        NcPoly a = random_poly(alg, rng), b = random_poly(alg, rng);
        RingElement xi = random_element(alg->ring(), rng);
        if (ev(a * b) != derivative_star(s, ev(a), ev(b))) {
            rep.ok = false;
            rep.counterexamples.push_back("s(a*b) != s(a)*s(b) at a=" + print_poly(a) + ", b=" + print_poly(b));
        }
        if (ev(a + b) != derivative_bot(s, ev(a), ev(b))) {
            rep.ok = false;
            rep.counterexamples.push_back("s(a+b) != s(a)_|_s(b) at a=" + print_poly(a) + ", b=" + print_poly(b));
        }
        if (ev(xi * a) != derivative_circ(s, xi, ev(a))) {
            rep.ok = false;
            rep.counterexamples.push_back("s(xi*a) != xi o s(a) at xi=" + xi.str() + ", a=" + print_poly(a));
        }
        if (!rep.ok && rep.counterexamples.size() >= 5) break;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

enum class Verdict { Inner, SemiInner, Mirror, PSemiInner, PMirror, Other };

struct Classification {
    Verdict verdict = Verdict::Other;
    RingAutomorphism phi = RingAutomorphism::identity(Ring::integers());
    long p = 0;  // the p of PSemiInner/PMirror
    std::string detail;

    std::string str() const {
        switch (verdict) {
            case Verdict::Inner: return "Inner";
            case Verdict::SemiInner: return "SemiInner(" + phi.str() + ")";
            case Verdict::Mirror: return "Mirror";
            case Verdict::PSemiInner: return "PSemiInner(" + std::to_string(p) + ")";
            case Verdict::PMirror: return "PMirror(" + std::to_string(p) + ")";
            case Verdict::Other: return "Other";
        }
        return "Other";
    }
};

// s^r applied to a (negative r iterates the inverse)
inline NcPoly evaluate_power(const BijectionRecipe& s, const NcPoly& a, long r) {
    NcPoly b = a;
    for (long t = 0; t < r; ++t) b = evaluate(s, b);
    for (long t = 0; t < -r; ++t) b = evaluate_inverse(s, b);
    return b;
}

namespace detail {

inline bool power_additive_on_symbolic_pair(const BijectionRecipe& s, long r) {
    const AlgebraPtr& a = s.algebra();
    NcPoly x1 = NcPoly::generator(a, 1), x2 = NcPoly::generator(a, 2);
    return evaluate_power(s, x1 + x2, r) == evaluate_power(s, x1, r) + evaluate_power(s, x2, r);
}

}  // namespace detail

/*
 * SemiInner/Mirror when no effective twist (Inner when additionally phi is
 * the identity and no mirror); with an effective twist in characteristic
 * p > 0, decide PSemiInner/PMirror by the exact symbolic test: s^p additive
 * on fresh generators while s^(p-1) is not.
 */
inline Classification classify(const BijectionRecipe& s) {
    Classification out;
    out.phi = s.ring_auto();
    if (!s.has_effective_twist()) {
        if (s.mirror_flag()) {
            out.verdict = Verdict::Mirror;
            out.detail = "word-reversal anti-automorphism" + std::string(s.ring_auto().is_identity() ? "" : " with " + s.ring_auto().str());
        } else if (s.ring_auto().is_identity()) {
            out.verdict = Verdict::Inner;
            out.detail = "adjoint bijection is a ring automorphism of F";
        } else {
            out.verdict = Verdict::SemiInner;
            out.detail = "semilinear over " + s.ring_auto().str();
        }
        return out;
    }
    Int charK = s.algebra()->ring()->characteristic();
    if (charK == 0)
        fail(Errc::TwistInCharZero, "twisted addition over a characteristic-zero ring never collapses");
    long p = static_cast<long>(charK);
    if (s.algebra()->gens() < 2) fail(Errc::GeneratorOutOfRange, "classification probe needs two generators");
    bool p_additive = detail::power_additive_on_symbolic_pair(s, p);
    bool pm1_additive = (p == 1) ? true : detail::power_additive_on_symbolic_pair(s, p - 1);
    if (p_additive && !pm1_additive) {
        out.verdict = s.mirror_flag() ? Verdict::PMirror : Verdict::PSemiInner;
        out.p = p;
        out.detail = "s^" + std::to_string(p) + " additive on x1, x2; s^" + std::to_string(p - 1) + " is not";
        return out;
    }
    out.verdict = Verdict::Other;
    out.detail = "twisted recipe failed the p-power additivity pattern";
    return out;
}

// ---------------------------------------------------------------------------
// Twist construction and its power laws
// ---------------------------------------------------------------------------

/*
 * The bijection that fixes every monomial, applies phi to scalars, and folds
 * sums through addition twisted by gamma*g. Degenerates to the phi-semilinear
 * recipe when g = 0.
 */
inline BijectionRecipe build_twist(const NcPoly& g, const RingElement& gamma, const RingAutomorphism& phi,
                                   const AlgebraPtr& alg) {
    if (alg->variety() != Variety::Nilpotent) fail(Errc::IllFormedTwist, "twists require a nilpotent algebra");
    std::optional<TwistData> twist;
    if (!g.is_zero()) {
        NcPoly lifted(alg);
        if (same_algebra(g.algebra(), alg)) {
            lifted = g;
        } else {
            if (!same_ring(g.algebra()->ring(), alg->ring()) || g.algebra()->nilpotency() != alg->nilpotency())
                fail(Errc::AlgebraMismatch, "twist polynomial from an incompatible algebra");
            for (const auto& [w, c] : g.terms()) lifted.add_term(w, c);
        }
        twist.emplace(lifted, gamma);
    }
    return BijectionRecipe(alg, RingElement::one(alg->ring()), phi, Endo::identity(alg), false, std::move(twist));
}

struct TwistPowerReport {
    long p = 0;
    bool power_law_ok = true;    // s^r(a+b) = s^r(a) + s^r(b) + r*gamma*g(s^r(a), s^r(b)) for r = 1..p
    bool p_collapses = true;     // p * gamma = 0 in K
    bool inverse_law_ok = true;  // s^-1(a+b) = s^-1(a) + s^-1(b) + (p-1)*gamma*g(...)
    std::vector<std::string> failures;
    bool ok() const { return power_law_ok && p_collapses && inverse_law_ok; }
};

/*
 * Exact verification of the power and inverse laws of a twisted recipe on
 * symbolic pairs, for r = 1..p.
 */
inline TwistPowerReport twist_power_identity(const BijectionRecipe& s) {
    if (!s.has_effective_twist()) fail(Errc::PrerequisiteFailed, "recipe carries no effective twist");
    Int charK = s.algebra()->ring()->characteristic();
    if (charK == 0) fail(Errc::TwistInCharZero, "power law needs characteristic p > 0");
    TwistPowerReport rep;
    rep.p = static_cast<long>(charK);
    const AlgebraPtr& a = s.algebra();
    const NcPoly& g = s.twist()->g();
    const RingElement& gamma = s.twist()->gamma();

    std::vector<std::pair<NcPoly, NcPoly>> pairs;
    NcPoly x1 = NcPoly::generator(a, 1), x2 = NcPoly::generator(a, 2);
    pairs.emplace_back(x1, x2);
    if (a->max_word_len() >= 2) {
        pairs.emplace_back(x1 + x1 * x2, x2);
        pairs.emplace_back(x1 * x2, x2 * x1);
    }

    for (long r = 1; r <= rep.p; ++r) {
        RingElement rg = RingElement::from_int(a->ring(), r) * gamma;
        for (const auto& [u, v] : pairs) {
            NcPoly lhs = evaluate_power(s, u + v, r);
            NcPoly su = evaluate_power(s, u, r), sv = evaluate_power(s, v, r);
            NcPoly rhs = su + sv + rg * detail::apply_two_arg(g, su, sv);
            if (lhs != rhs) {
                rep.power_law_ok = false;
                rep.failures.push_back("power law fails at r=" + std::to_string(r) + ", a=" + print_poly(u) +
                                       ", b=" + print_poly(v));
            }
        }
    }
    rep.p_collapses = (RingElement::from_int(a->ring(), rep.p) * gamma).is_zero();
    if (!rep.p_collapses) rep.failures.push_back("p*gamma != 0");

    RingElement pm1g = RingElement::from_int(a->ring(), rep.p - 1) * gamma;
    for (const auto& [u, v] : pairs) {
        NcPoly lhs = evaluate_inverse(s, u + v);
        NcPoly su = evaluate_inverse(s, u), sv = evaluate_inverse(s, v);
        NcPoly rhs = su + sv + pm1g * detail::apply_two_arg(g, su, sv);
        if (lhs != rhs) {
            rep.inverse_law_ok = false;
            rep.failures.push_back("inverse law fails at a=" + print_poly(u) + ", b=" + print_poly(v));
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Conjugation
// ---------------------------------------------------------------------------

// Phi(nu) = s nu s^-1
inline Endo conjugation_action(const BijectionRecipe& s, const Endo& nu) {
    if (!same_algebra(s.algebra(), nu.algebra())) fail(Errc::AlgebraMismatch, "conjugation across algebras");
    const AlgebraPtr& a = s.algebra();
    std::vector<NcPoly> im;
    for (int i = 1; i <= a->gens(); ++i)
        im.push_back(evaluate(s, apply(nu, evaluate_inverse(s, NcPoly::generator(a, i)))));
    return Endo(a, std::move(im));
}

// The family Phi(e_ij), carrying the recipe backing that gluing needs.
inline EndoFamily conjugated_standard_family(const BijectionRecipe& s) {
    EndoFamily std_family = standard_endos(s.algebra());
    std::vector<Endo> members;
    for (const auto& e : std_family.members()) members.push_back(conjugation_action(s, e));
    EndoFamily out(s.algebra(), std::move(members));
    BijectionRecipe copy = s;
    out.set_recipe([copy](const NcPoly& x) { return evaluate(copy, x); },
                   [copy](const NcPoly& x) { return evaluate_inverse(copy, x); });
    return out;
}

/*
 * The gluing construction: given the images t_ij = family(i,j) x_sigma(j) and
 * endomorphisms alpha_1..alpha_n, produce the alpha with
 * alpha(t_ij) = alpha_i(t_ij), via beta_i = Phi^-1(alpha_i), beta(x_i) =
 * beta_i(x_i), alpha = Phi(beta). Requires the family's bijection backing.
 */
inline Endo glue_endomorphism(const EndoFamily& family, const std::vector<Endo>& alphas,
                              const std::vector<int>& sigma) {
    const AlgebraPtr& a = family.algebra();
    int n = family.n();
    if (static_cast<int>(alphas.size()) != n) fail(Errc::AlgebraMismatch, "need n gluing endomorphisms");
    const auto& fwd = family.forward();   // NotFromRecipe when absent
    const auto& inv = family.inverse();

    std::vector<NcPoly> beta_images;
    for (int i = 1; i <= n; ++i)
        beta_images.push_back(inv(apply(alphas[i - 1], fwd(NcPoly::generator(a, i)))));
    Endo beta(a, std::move(beta_images));
    std::vector<NcPoly> alpha_images;
    for (int i = 1; i <= n; ++i)
        alpha_images.push_back(fwd(apply(beta, inv(NcPoly::generator(a, i)))));
    Endo alpha(a, std::move(alpha_images));

    SigmaMatrix t = sigma_matrix(family, sigma);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const NcPoly& tij = t.at(i, j, n);
            if (apply(alpha, tij) != apply(alphas[i - 1], tij))
                fail(Errc::PrerequisiteFailed, "gluing identity failed; family is not the recipe's standard image");
        }
    return alpha;
}

}  // namespace enda

#endif  // ENDA_BIJECTION_HPP
