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

#ifndef ENDA_SELFTEST_HPP
#define ENDA_SELFTEST_HPP

#include <functional>
#include <string>
#include <vector>

#include "bijection.hpp"
#include "endo.hpp"
#include "gsolve.hpp"
#include "matrix.hpp"
#include "ncpoly.hpp"
#include "ring.hpp"
#include "sampling.hpp"

namespace enda {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

namespace detail {

class Checker {
   public:
    explicit Checker(std::vector<CheckResult>& out) : out_(out) {}

    void run(const std::string& name, const std::function<std::string()>& body) {
        CheckResult r;
        r.name = name;
        try {
            std::string failure = body();
            r.passed = failure.empty();
            r.detail = failure;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        out_.push_back(std::move(r));
    }

   private:
    std::vector<CheckResult>& out_;
};

inline std::vector<RingPtr> standard_rings() {
    return {Ring::integers(),
            Ring::rationals(),
            Ring::prime_field(2),
            Ring::prime_field(5),
            parse_ring("F9=F3[t]/(t^2+1)"),
            Ring::quadratic_minus5()};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Recipe sampling across the classification classes
// ---------------------------------------------------------------------------

// First solution of the g-system re-tagged into the target algebra, if any.
inline std::optional<NcPoly> twist_poly_for(const AlgebraPtr& a) {
    if (a->variety() != Variety::Nilpotent || !a->ring()->is_field()) return std::nullopt;
    GSolutionSpace space = solve_g_system(a->ring(), a->nilpotency());
    if (space.dimension == 0) return std::nullopt;
    NcPoly g(a);
    for (const auto& [w, c] : space.basis.front().terms()) g.add_term(w, c);
    return g;
}

/*
 * Normalized recipes (scalar 1, base identity): the shapes on which the
 * derivative-algebra laws act. cls: 0 inner, 1 semi-inner over a random
 * ring automorphism, 2 mirror, 3 twisted, 4 twisted mirror. Twisted classes
 * fall back to mirror/inner when the algebra admits no twist.
 */
inline BijectionRecipe sample_normalized_recipe(const AlgebraPtr& a, int cls, Rng& rng) {
    const RingPtr& ring = a->ring();
    RingAutomorphism phi = RingAutomorphism::identity(ring);
    if (cls == 1) {
        auto all = RingAutomorphism::all(ring);
        phi = all[rand_range(rng, 0, static_cast<long>(all.size()) - 1)];
    }
    bool mirror = (cls == 2 || cls == 4);
    std::optional<TwistData> twist;
    if (cls == 3 || cls == 4) {
        auto g = twist_poly_for(a);
        if (g) twist.emplace(*g, random_nonzero_element(ring, rng));
    }
    return BijectionRecipe(a, RingElement::one(ring), phi, Endo::identity(a), mirror, std::move(twist));
}

// Recipes with nontrivial scalar and base automorphism, twist-free.
inline BijectionRecipe sample_full_recipe(const AlgebraPtr& a, Rng& rng, bool mirror_allowed = true) {
    const RingPtr& ring = a->ring();
    auto all = RingAutomorphism::all(ring);
    RingAutomorphism phi = all[rand_range(rng, 0, static_cast<long>(all.size()) - 1)];
    RingElement alpha = random_unit(ring, rng);
    Endo base = random_base_automorphism(a, rng);
    bool mirror = mirror_allowed && rand_range(rng, 0, 1) == 1;
    return BijectionRecipe(a, alpha, phi, base, mirror, std::nullopt);
}

// ---------------------------------------------------------------------------
// ring suite
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> selftest_ring(unsigned long seed = 0, int samples = 500) {
    std::vector<CheckResult> out;
    detail::Checker ck(out);
    for (const RingPtr& r : detail::standard_rings()) {
        ck.run("ring axioms over " + r->name(), [&]() -> std::string {
            Rng rng(seed + 1);
            RingElement zero = RingElement::zero(r), one = RingElement::one(r);
            for (int t = 0; t < samples; ++t) {
                RingElement a = random_element(r, rng), b = random_element(r, rng), c = random_element(r, rng);
                if ((a + b) + c != a + (b + c)) return "add associativity at " + a.str();
                if ((a * b) * c != a * (b * c)) return "mul associativity at " + a.str();
                if (a + b != b + a) return "add commutativity at " + a.str();
                if (a * b != b * a) return "mul commutativity at " + a.str();
                if (a * (b + c) != a * b + a * c) return "distributivity at " + a.str();
                if (a + zero != a || a * one != a) return "identity laws at " + a.str();
                if (a + (-a) != zero) return "additive inverse at " + a.str();
            }
            return "";
        });
        ck.run("integral domain over " + r->name(), [&]() -> std::string {
            Rng rng(seed + 2);
            for (int t = 0; t < samples; ++t) {
                RingElement a = random_nonzero_element(r, rng), b = random_nonzero_element(r, rng);
                if ((a * b).is_zero()) return "zero divisors: " + a.str() + " * " + b.str();
            }
            return "";
        });
        ck.run("automorphisms respect the operations over " + r->name(), [&]() -> std::string {
            Rng rng(seed + 3);
            for (const auto& phi : RingAutomorphism::all(r)) {
                if (!phi(RingElement::zero(r)).is_zero() || !phi(RingElement::one(r)).is_one())
                    return phi.str() + " moves 0 or 1";
                for (int t = 0; t < samples; ++t) {
                    RingElement a = random_element(r, rng), b = random_element(r, rng);
                    if (phi(a + b) != phi(a) + phi(b)) return phi.str() + " breaks addition at " + a.str();
                    if (phi(a * b) != phi(a) * phi(b)) return phi.str() + " breaks multiplication at " + a.str();
                }
                if (r->is_finite() && r->cardinality() <= 1024) {
                    auto all = all_elements(r);
                    std::set<std::string> image;
                    for (const auto& x : all) image.insert(phi(x).str());
                    if (image.size() != all.size()) return phi.str() + " is not a bijection";
                } else {
                    Rng rng2(seed + 4);
                    for (int t = 0; t < samples; ++t) {
                        RingElement a = random_element(r, rng2), b = random_element(r, rng2);
                        if (a != b && phi(a) == phi(b)) return phi.str() + " is not injective";
                    }
                }
            }
            return "";
        });
    }
    ck.run("norm multiplicativity over Z[sqrt(-5)]", [&]() -> std::string {
        RingPtr r = Ring::quadratic_minus5();
        Rng rng(seed + 5);
        for (int t = 0; t < samples; ++t) {
            RingElement a = random_element(r, rng), b = random_element(r, rng);
            if (norm(a * b) != norm(a) * norm(b)) return "at " + a.str() + ", " + b.str();
        }
        return "";
    });
    return out;
}

// ---------------------------------------------------------------------------
// matrix suite
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> selftest_matrix(unsigned long seed = 0, int samples = 500) {
    std::vector<CheckResult> out;
    detail::Checker ck(out);
    ck.run("rank is invariant under invertible factors", [&]() -> std::string {
        Rng rng(seed + 10);
        RingPtr q = Ring::rationals();
        for (int t = 0; t < 100; ++t) {
            int n = static_cast<int>(rand_range(rng, 2, 4));
            int m = static_cast<int>(rand_range(rng, 2, 4));
            int target = static_cast<int>(rand_range(rng, 0, std::min(n, m)));
            ExactMatrix a(q, n, m);
            if (target > 0) a = random_matrix_of_rank(q, n, m, target, rng);
            ExactMatrix p(q, n, n), qq(q, m, m);
            do {
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) p.at(i, j) = random_element(q, rng, 3);
            } while (det(p).is_zero());
            do {
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j) qq.at(i, j) = random_element(q, rng, 3);
            } while (det(qq).is_zero());
            if (rank(p * a * qq) != rank(a)) return "trial " + std::to_string(t);
        }
        return "";
    });
    ck.run("rank-1 factorizations reconstruct exactly", [&]() -> std::string {
        Rng rng(seed + 11);
        for (const RingPtr& r : detail::standard_rings()) {
            for (int t = 0; t < samples / 5; ++t) {
                int n = static_cast<int>(rand_range(rng, 1, 4));
                int m = static_cast<int>(rand_range(rng, 1, 4));
                ExactMatrix a = random_rank1_matrix(r, n, m, rng);
                auto res = r1mf_factorize(a);
                auto* f = std::get_if<Rank1Factorization>(&res);
                if (!f) return "no factorization over " + r->name();
                if (f->column * f->row != a) return "reconstruction failed over " + r->name();
            }
        }
        return "";
    });
    ck.run("matrix-unit conjugation postcondition", [&]() -> std::string {
        Rng rng(seed + 12);
        RingPtr z = Ring::integers();
        for (int t = 0; t < 25; ++t) {
            int n = static_cast<int>(rand_range(rng, 2, 3));
            ExactMatrix q = random_unimodular(z, n, rng);
            auto qi = inverse(q);
            std::vector<ExactMatrix> family;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) family.push_back(q * ExactMatrix::elementary(z, n, i, j) * *qi);
            ExactMatrix rho = conjugate_matrix_units(family);
            auto ri = inverse(rho);
            if (!ri) return "rho not invertible";
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (rho * family[static_cast<size_t>(i) * n + j] * *ri != ExactMatrix::elementary(z, n, i, j))
                        return "conjugation identity failed";
        }
        return "";
    });
    ck.run("Dedekind counterexample report", [&]() -> std::string {
        DedekindReport rep = dedekind_report();
        for (const auto& it : rep.items)
            if (!it.passed) return it.name;
        return "";
    });
    return out;
}

// ---------------------------------------------------------------------------
// ncpoly suite
// ---------------------------------------------------------------------------

namespace detail {

// the space of distributive polynomials of degree <= maxdeg in x1, x2, as a
// kernel over the word basis
inline std::vector<NcPoly> distributive_space(const RingPtr& ring, int maxdeg) {
    AlgebraPtr a3 = Algebra::nilpotent(ring, 3, maxdeg + 1);
    auto unknowns = words_up_to(2, maxdeg);
    auto rows_words = words_up_to(3, maxdeg);
    std::map<Word, int, WordOrder> row_of;
    for (size_t i = 0; i < rows_words.size(); ++i) row_of[rows_words[i]] = static_cast<int>(i);
    ExactMatrix sys(ring, 2 * static_cast<int>(rows_words.size()), static_cast<int>(unknowns.size()));
    NcPoly x1 = NcPoly::generator(a3, 1), x2 = NcPoly::generator(a3, 2), x3 = NcPoly::generator(a3, 3);
    for (size_t u = 0; u < unknowns.size(); ++u) {
        NcPoly mono = NcPoly::monomial(a3, unknowns[u], RingElement::one(ring));
        NcPoly d1 = apply_two_arg(mono, x1 + x3, x2) - apply_two_arg(mono, x1, x2) - apply_two_arg(mono, x3, x2);
        NcPoly d2 = apply_two_arg(mono, x1, x2 + x3) - apply_two_arg(mono, x1, x2) - apply_two_arg(mono, x1, x3);
        for (const auto& [w, c] : d1.terms()) sys.at(row_of.at(w), static_cast<int>(u)) = c;
        for (const auto& [w, c] : d2.terms())
            sys.at(static_cast<int>(rows_words.size()) + row_of.at(w), static_cast<int>(u)) = c;
    }
    auto kernel = kernel_basis(sys);
    AlgebraPtr a = Algebra::nilpotent(ring, 2, maxdeg + 1);
    std::vector<NcPoly> basis;
    for (const auto& v : kernel) {
        NcPoly p(a);
        for (size_t u = 0; u < unknowns.size(); ++u)
            if (!v[u].is_zero()) p.add_term(unknowns[u], v[u]);
        basis.push_back(std::move(p));
    }
    return basis;
}

inline bool spans_exactly_x1x2_x2x1(const std::vector<NcPoly>& basis) {
    if (basis.size() != 2) return false;
    for (const auto& p : basis) {
        NcPoly rest = p;
        NcPoly probe(p.algebra());
        probe.add_term(Word{1, 2}, p.coefficient(Word{1, 2}));
        probe.add_term(Word{2, 1}, p.coefficient(Word{2, 1}));
        if (rest != probe) return false;
    }
    // the two kernel vectors must be independent on the (x1x2, x2x1) plane
    RingElement a = basis[0].coefficient(Word{1, 2}), b = basis[0].coefficient(Word{2, 1});
    RingElement c = basis[1].coefficient(Word{1, 2}), d = basis[1].coefficient(Word{2, 1});
    return !(a * d - b * c).is_zero();
}

}  // namespace detail

inline std::vector<CheckResult> selftest_ncpoly(unsigned long seed = 0, int samples = 500) {
    std::vector<CheckResult> out;
    detail::Checker ck(out);
    std::vector<AlgebraPtr> algebras = {
        Algebra::nilpotent(Ring::prime_field(2), 2, 3),
        Algebra::nilpotent(Ring::prime_field(3), 3, 4),
        Algebra::nilpotent(Ring::integers(), 2, 4),
        Algebra::free_associative(Ring::rationals(), 2),
        Algebra::zero_multiplication(Ring::prime_field(5), 2),
    };
    for (const auto& a : algebras) {
        ck.run("mul associativity: " + a->str(), [&]() -> std::string {
            Rng rng(seed + 20);
            for (int t = 0; t < samples; ++t) {
                NcPoly f = random_poly(a, rng, 3, std::min(3, std::max(1, a->max_word_len())));
                NcPoly g = random_poly(a, rng, 3, std::min(3, std::max(1, a->max_word_len())));
                NcPoly h = random_poly(a, rng, 3, std::min(3, std::max(1, a->max_word_len())));
                if ((f * g) * h != f * (g * h)) return "at " + print_poly(f);
            }
            return "";
        });
    }
    ck.run("graded product law", [&]() -> std::string {
        Rng rng(seed + 21);
        AlgebraPtr a = Algebra::free_associative(Ring::integers(), 3);
        for (int t = 0; t < samples; ++t) {
            int k = static_cast<int>(rand_range(rng, 1, 3)), l = static_cast<int>(rand_range(rng, 1, 3));
            NcPoly f(a), g(a);
            for (int j = 0, terms = static_cast<int>(rand_range(rng, 1, 3)); j < terms; ++j)
                f.add_term(random_word(3, k, rng), random_element(a->ring(), rng));
            for (int j = 0, terms = static_cast<int>(rand_range(rng, 1, 3)); j < terms; ++j)
                g.add_term(random_word(3, l, rng), random_element(a->ring(), rng));
            NcPoly p = f * g;
            if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != k + l))
                return "degrees " + std::to_string(k) + "+" + std::to_string(l);
        }
        return "";
    });
    ck.run("endomorphisms preserve the higher-degree ideal", [&]() -> std::string {
        Rng rng(seed + 22);
        AlgebraPtr a = Algebra::nilpotent(Ring::prime_field(3), 3, 4);
        for (int t = 0; t < samples; ++t) {
            Endo f = random_endo(a, rng);
            NcPoly h = random_poly(a, rng, 4, 3).higher_part();
            if (!apply(f, h).linear_part().is_zero()) return "at " + print_poly(h);
        }
        return "";
    });
    ck.run("shifted supports of distinct monomials are disjoint", [&]() -> std::string {
        Rng rng(seed + 23);
        AlgebraPtr a = Algebra::free_associative(Ring::integers(), 3);
        int done = 0;
        while (done < samples) {
            int len1 = static_cast<int>(rand_range(rng, 1, 6)), len2 = static_cast<int>(rand_range(rng, 1, 6));
            Word w1 = random_word(2, len1, rng), w2 = random_word(2, len2, rng);
            if (w1 == w2) continue;
            ++done;
            for (int variant = 1; variant <= 2; ++variant) {
                NcPoly f = NcPoly::monomial(a, w1, RingElement::one(a->ring()));
                NcPoly g = NcPoly::monomial(a, w2, RingElement::one(a->ring()));
                Support sf = support_after_shift(f, variant), sg = support_after_shift(g, variant);
                for (const auto& w : sf)
                    if (sg.count(w)) return "overlap at " + word_str(w1) + " / " + word_str(w2);
            }
        }
        return "";
    });
    ck.run("distributive space is the (x1x2, x2x1) plane over F2 and Z", [&]() -> std::string {
        for (const RingPtr& r : {Ring::prime_field(2), Ring::integers()}) {
            auto basis = detail::distributive_space(r, 4);
            if (!detail::spans_exactly_x1x2_x2x1(basis))
                return "kernel over " + r->name() + " has dimension " + std::to_string(basis.size());
        }
        return "";
    });
    ck.run("mirror is an involutive anti-automorphism", [&]() -> std::string {
        Rng rng(seed + 24);
        AlgebraPtr a = Algebra::free_associative(Ring::integers(), 3);
        for (int t = 0; t < 100; ++t) {
            NcPoly f = random_poly(a, rng, 4, 4), g = random_poly(a, rng, 4, 4);
            if (f.mirror().mirror() != f) return "not involutive at " + print_poly(f);
            if ((f * g).mirror() != g.mirror() * f.mirror()) return "not anti-multiplicative";
        }
        return "";
    });
    return out;
}

// ---------------------------------------------------------------------------
// endo suite
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> selftest_endo(unsigned long seed = 0, int samples = 200) {
    std::vector<CheckResult> out;
    detail::Checker ck(out);
    std::vector<AlgebraPtr> algebras = {
        Algebra::nilpotent(Ring::prime_field(2), 2, 3),
        Algebra::nilpotent(Ring::prime_field(3), 2, 4),
        Algebra::nilpotent(Ring::prime_field(5), 3, 3),
    };
    ck.run("conjugated families keep the matrix-unit relations", [&]() -> std::string {
        Rng rng(seed + 30);
        for (int t = 0; t < samples; ++t) {
            const AlgebraPtr& a = algebras[t % algebras.size()];
            BijectionRecipe s = sample_full_recipe(a, rng);
            if (!conjugated_standard_family(s).matrix_unit_relations_hold())
                return "relations broken at trial " + std::to_string(t);
        }
        return "";
    });
    ck.run("linear part is a semigroup homomorphism", [&]() -> std::string {
        Rng rng(seed + 31);
        for (int t = 0; t < samples; ++t) {
            const AlgebraPtr& a = algebras[t % algebras.size()];
            Endo f = random_endo(a, rng), g = random_endo(a, rng);
            if (linear_part_matrix(compose(f, g)) != linear_part_matrix(f) * linear_part_matrix(g))
                return "at trial " + std::to_string(t);
        }
        return "";
    });
    ck.run("constructed inverses compose to the identity", [&]() -> std::string {
        Rng rng(seed + 32);
        for (int t = 0; t < samples; ++t) {
            const AlgebraPtr& a = algebras[t % algebras.size()];
            Endo f = random_base_automorphism(a, rng);
            if (!is_automorphism(f)) return "sampled base automorphism rejected at trial " + std::to_string(t);
            auto inv = inverse_endo(f);
            if (!inv || compose(f, *inv) != Endo::identity(a) || compose(*inv, f) != Endo::identity(a))
                return "inverse failed at trial " + std::to_string(t);
        }
        return "";
    });
    ck.run("standard-base recovery on conjugated families", [&]() -> std::string {
        Rng rng(seed + 33);
        for (int t = 0; t < samples / 4; ++t) {
            const AlgebraPtr& a = algebras[t % algebras.size()];
            BijectionRecipe s = sample_full_recipe(a, rng, /*mirror_allowed=*/false);
            EndoFamily family = conjugated_standard_family(s);
            auto base = find_standard_base(family);
            if (!base) return "no base at trial " + std::to_string(t);
            int n = a->gens();
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    for (int k = 1; k <= n; ++k) {
                        NcPoly got = apply(family.at(i, j), (*base)[k - 1]);
                        if (j == k ? got != (*base)[i - 1] : !got.is_zero())
                            return "standardness identity failed at trial " + std::to_string(t);
                    }
        }
        return "";
    });
    return out;
}

// ---------------------------------------------------------------------------
// bijection suite
// ---------------------------------------------------------------------------

inline std::vector<CheckResult> selftest_bijection(unsigned long seed = 0, int samples = 500) {
    std::vector<CheckResult> out;
    detail::Checker ck(out);
    AlgebraPtr f2 = Algebra::nilpotent(Ring::prime_field(2), 2, 3);
    AlgebraPtr f3 = Algebra::nilpotent(Ring::prime_field(3), 2, 4);
    AlgebraPtr f9 = Algebra::nilpotent(parse_ring("F9=F3[t]/(t^2+1)"), 2, 3);
    std::vector<AlgebraPtr> algebras = {f2, f3, f9};

    ck.run("evaluate_inverse inverts evaluate in every class", [&]() -> std::string {
        Rng rng(seed + 40);
        for (int cls = 0; cls <= 4; ++cls)
            for (int t = 0; t < samples / 5; ++t) {
                const AlgebraPtr& a = algebras[t % algebras.size()];
                BijectionRecipe s = (cls <= 2 && t % 2 == 0) ? sample_full_recipe(a, rng)
                                                             : sample_normalized_recipe(a, cls, rng);
                NcPoly x = random_poly(a, rng, 5);
                if (evaluate_inverse(s, evaluate(s, x)) != x)
                    return "class " + std::to_string(cls) + " at " + print_poly(x);
                if (evaluate(s, evaluate_inverse(s, x)) != x)
                    return "class " + std::to_string(cls) + " (other side) at " + print_poly(x);
            }
        return "";
    });
    ck.run("semi-isomorphism laws for normalized semi-inner recipes", [&]() -> std::string {
        Rng rng(seed + 41);
        for (int t = 0; t < samples; ++t) {
            const AlgebraPtr& a = algebras[t % algebras.size()];
            BijectionRecipe s = sample_normalized_recipe(a, 1, rng);
            NcPoly x = random_poly(a, rng), y = random_poly(a, rng);
            RingElement xi = random_element(a->ring(), rng);
            if (evaluate(s, x + y) != evaluate(s, x) + evaluate(s, y)) return "additivity";
            if (evaluate(s, x * y) != evaluate(s, x) * evaluate(s, y)) return "multiplicativity";
            if (evaluate(s, xi * x) != s.ring_auto()(xi) * evaluate(s, x)) return "semilinearity";
        }
        return "";
    });
    ck.run("mirror recipes reverse products", [&]() -> std::string {
        Rng rng(seed + 42);
        for (int t = 0; t < samples; ++t) {
            const AlgebraPtr& a = algebras[t % algebras.size()];
            BijectionRecipe s = sample_normalized_recipe(a, 2, rng);
            NcPoly x = random_poly(a, rng), y = random_poly(a, rng);
            if (evaluate(s, x * y) != evaluate(s, y) * evaluate(s, x)) return "at " + print_poly(x);
        }
        return "";
    });
    ck.run("conjugation preserves composition", [&]() -> std::string {
        Rng rng(seed + 43);
        for (int t = 0; t < samples / 2; ++t) {
            const AlgebraPtr& a = algebras[t % algebras.size()];
            BijectionRecipe s = (t % 2 == 0) ? sample_full_recipe(a, rng)
                                             : sample_normalized_recipe(a, static_cast<int>(rand_range(rng, 0, 4)), rng);
            Endo nu = random_endo(a, rng), mu = random_endo(a, rng);
            if (conjugation_action(s, compose(nu, mu)) !=
                compose(conjugation_action(s, nu), conjugation_action(s, mu)))
                return "at trial " + std::to_string(t);
        }
        return "";
    });
    ck.run("plain and twisted addition shapes of _|_", [&]() -> std::string {
        Rng rng(seed + 44);
        for (int t = 0; t < samples; ++t) {
            const AlgebraPtr& a = algebras[t % algebras.size()];
            int cls = static_cast<int>(rand_range(rng, 0, 4));
            BijectionRecipe s = sample_normalized_recipe(a, cls, rng);
            NcPoly x = random_poly(a, rng), y = random_poly(a, rng);
            NcPoly bot = derivative_bot(s, x, y);
            if (!s.has_effective_twist()) {
                if (bot != x + y) return "untwisted _|_ is not plain addition";
            } else {
                NcPoly expected = x + y + s.twist()->gamma() * detail::apply_two_arg(s.twist()->g(), x, y);
                if (bot != expected) return "twisted _|_ misses the gamma*g correction";
            }
        }
        return "";
    });
    ck.run("scalar action of the derivative algebra is semilinear", [&]() -> std::string {
        Rng rng(seed + 45);
        for (int t = 0; t < samples; ++t) {
            const AlgebraPtr& a = algebras[t % algebras.size()];
            BijectionRecipe s = sample_normalized_recipe(a, static_cast<int>(rand_range(rng, 0, 4)), rng);
            NcPoly x = random_poly(a, rng);
            RingElement xi = random_element(a->ring(), rng);
            if (derivative_circ(s, xi, x) != s.ring_auto()(xi) * x) return "at xi=" + xi.str();
        }
        return "";
    });
    return out;
}

// ---------------------------------------------------------------------------
// gsolve suite
// ---------------------------------------------------------------------------

namespace detail {

// all coefficient vectors over the degree-(m-1) two-generator words
inline std::vector<NcPoly> brute_force_g_solutions(const RingPtr& ring, int m) {
    AlgebraPtr a = Algebra::nilpotent(ring, 2, m);
    auto words = words_of_length(2, m - 1);
    auto elems = all_elements(ring);
    std::vector<NcPoly> solutions;
    std::vector<size_t> digits(words.size(), 0);
    while (true) {
        NcPoly g(a);
        for (size_t i = 0; i < words.size(); ++i)
            if (digits[i] != 0) g.add_term(words[i], elems[digits[i]]);
        if (verify_candidate(g, ring, m).ok) solutions.push_back(g);
        size_t i = 0;
        while (i < digits.size() && digits[i] == elems.size() - 1) digits[i++] = 0;
        if (i == digits.size()) break;
        ++digits[i];
    }
    return solutions;
}

// every K-linear combination of the basis (small finite fields only)
inline std::vector<NcPoly> enumerate_span(const std::vector<NcPoly>& basis, const AlgebraPtr& a) {
    auto elems = all_elements(a->ring());
    std::vector<NcPoly> span{NcPoly::zero(a)};
    for (const auto& b : basis) {
        std::vector<NcPoly> next;
        for (const auto& s : span)
            for (const auto& c : elems) next.push_back(s + c * b);
        span = std::move(next);
    }
    std::sort(span.begin(), span.end(), [](const NcPoly& x, const NcPoly& y) { return print_poly(x) < print_poly(y); });
    span.erase(std::unique(span.begin(), span.end()), span.end());
    return span;
}

}  // namespace detail

inline std::vector<CheckResult> selftest_gsolve(unsigned long seed = 0, int /*samples*/ = 0) {
    (void)seed;
    std::vector<CheckResult> out;
    detail::Checker ck(out);
    ck.run("solver agrees with brute force at desk scale", [&]() -> std::string {
        struct Case {
            long p;
            int m;
        };
        for (Case c : {Case{2, 3}, Case{2, 4}, Case{3, 3}}) {
            RingPtr r = Ring::prime_field(c.p);
            auto brute = detail::brute_force_g_solutions(r, c.m);
            GSolutionSpace space = solve_g_system(r, c.m);
            AlgebraPtr a = Algebra::nilpotent(r, 2, c.m);
            auto span = detail::enumerate_span(space.basis, a);
            if (span.size() != brute.size())
                return "F" + std::to_string(c.p) + ", m=" + std::to_string(c.m) + ": " +
                       std::to_string(span.size()) + " vs " + std::to_string(brute.size());
            for (const auto& g : brute)
                if (!std::binary_search(span.begin(), span.end(), g,
                                        [](const NcPoly& x, const NcPoly& y) { return print_poly(x) < print_poly(y); }))
                    return "missing brute-force solution " + print_poly(g);
        }
        return "";
    });
    ck.run("solution dimension is nonzero iff m even or char 2", [&]() -> std::string {
        for (long p : {2L, 3L, 5L}) {
            for (int m = 3; m <= 6; ++m) {
                GSolutionSpace space = solve_g_system(Ring::prime_field(p), m);
                bool expect_nonzero = (m % 2 == 0) || p == 2;
                if ((space.dimension > 0) != expect_nonzero)
                    return "F" + std::to_string(p) + ", m=" + std::to_string(m) + " has dimension " +
                           std::to_string(space.dimension);
            }
        }
        return "";
    });
    ck.run("every solver output passes the candidate and reflection checks", [&]() -> std::string {
        for (long p : {2L, 3L, 5L})
            for (int m = 3; m <= 6; ++m) {
                GSolutionSpace space = solve_g_system(Ring::prime_field(p), m);
                for (const auto& g : space.basis) {
                    if (!verify_candidate(g, space.instance.ring, m).ok) return print_poly(g);
                    if (!reflection_check(g, space.instance.ring, m)) return print_poly(g);
                }
            }
        return "";
    });
    return out;
}

inline std::vector<CheckResult> run_selftest(unsigned long seed = 0, int samples = 500) {
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> v) { out.insert(out.end(), v.begin(), v.end()); };
    append(selftest_ring(seed, samples));
    append(selftest_matrix(seed, samples));
    append(selftest_ncpoly(seed, samples));
    append(selftest_endo(seed, std::max(1, samples * 2 / 5)));
    append(selftest_bijection(seed, samples));
    append(selftest_gsolve(seed, samples));
    return out;
}

}  // namespace enda

#endif  // ENDA_SELFTEST_HPP
