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

#ifndef ENDA_GSOLVE_HPP
#define ENDA_GSOLVE_HPP

#include <string>
#include <utility>
#include <vector>

#include "bijection.hpp"
#include "matrix.hpp"
#include "ncpoly.hpp"

namespace enda {

/*
 * The functional system on homogeneous symmetric two-variable polynomials g
 * of degree m-1:
 *     g(x1,x2) + g(x1+x2,x3) = g(x2,x3) + g(x1,x2+x3)
 *     g(x1,-x1) = 0
 * solved as exact linear algebra over the swap-symmetrized word basis.
 */
struct GSystemInstance {
    RingPtr ring;
    int m = 0;
    // each unknown is an orbit {w, swap(w)} of degree-(m-1) words over x1, x2
    std::vector<std::pair<Word, Word>> unknown_basis;
};

struct GSolutionSpace {
    GSystemInstance instance;
    std::vector<NcPoly> basis;
    int dimension = 0;
};

namespace detail {

inline Word swap_word(const Word& w) {
    Word out = w;
    for (int& g : out) g = (g == 1) ? 2 : 1;
    return out;
}

inline GSystemInstance make_g_instance(const RingPtr& ring, int m) {
    GSystemInstance inst;
    inst.ring = ring;
    inst.m = m;
    for (const auto& w : words_of_length(2, m - 1)) {
        Word s = swap_word(w);
        if (WordOrder{}(s, w)) continue;  // keep the orbit representative only
        inst.unknown_basis.emplace_back(w, s);
    }
    return inst;
}

// orbit sum as a polynomial in the given algebra
inline NcPoly orbit_poly(const AlgebraPtr& a, const std::pair<Word, Word>& orbit) {
    NcPoly f(a);
    f.add_term(orbit.first, RingElement::one(a->ring()));
    f.add_term(orbit.second, RingElement::one(a->ring()));
    return f;
}

}  // namespace detail

struct GVerifyResult {
    bool ok = true;
    std::string failure;        // which identity failed
    std::optional<Word> witness;  // word whose coefficient differs
};

/*
 * Exact check that g is swap-symmetric and satisfies both equations of the
 * system; reports the first offending word otherwise.
 */
inline GVerifyResult verify_candidate(const NcPoly& g, const RingPtr& ring, int m) {
    if (!same_ring(g.algebra()->ring(), ring)) fail(Errc::WrongRing, "candidate over a foreign ring");
    if (!g.is_zero() && (!g.is_homogeneous() || g.degree() != m - 1))
        fail(Errc::WrongDegree, "candidate must be homogeneous of degree m-1");
    if (g.max_generator() > 2) fail(Errc::GeneratorOutOfRange, "candidate must use only x1 and x2");

    GVerifyResult res;
    AlgebraPtr a3 = Algebra::nilpotent(ring, 3, m);
    NcPoly g3(a3);
    for (const auto& [w, c] : g.terms()) g3.add_term(w, c);
    NcPoly x1 = NcPoly::generator(a3, 1), x2 = NcPoly::generator(a3, 2), x3 = NcPoly::generator(a3, 3);

    NcPoly sym_diff = detail::apply_two_arg(g3, x2, x1) - g3;
    if (!sym_diff.is_zero()) {
        res.ok = false;
        res.failure = "not swap-symmetric";
        res.witness = sym_diff.terms().begin()->first;
        return res;
    }
    NcPoly cocycle = detail::apply_two_arg(g3, x1, x2) + detail::apply_two_arg(g3, x1 + x2, x3) -
                     detail::apply_two_arg(g3, x2, x3) - detail::apply_two_arg(g3, x1, x2 + x3);
    if (!cocycle.is_zero()) {
        res.ok = false;
        res.failure = "cocycle identity fails";
        res.witness = cocycle.terms().begin()->first;
        return res;
    }
    NcPoly diag = detail::apply_two_arg(g3, x1, -x1);
    if (!diag.is_zero()) {
        res.ok = false;
        res.failure = "g(x1,-x1) != 0";
        res.witness = diag.terms().begin()->first;
        return res;
    }
    return res;
}

/*
 * The reflection identities derived from the system: S(g) = g for the
 * substitution operator S(f)(x1,x2) = -f(x1+x2, -x1) (whose matrix cubes to
 * -I), and the parity consequence g = (-1)^m g.
 */
inline bool reflection_check(const NcPoly& g, const RingPtr& ring, int m) {
    if (!verify_candidate(g, ring, m).ok)
        fail(Errc::PrerequisiteFailed, "reflection_check needs a solution of the system");
    AlgebraPtr a2 = Algebra::nilpotent(ring, 2, m);
    NcPoly g2(a2);
    for (const auto& [w, c] : g.terms()) g2.add_term(w, c);
    NcPoly x1 = NcPoly::generator(a2, 1), x2 = NcPoly::generator(a2, 2);
    NcPoly sg = -detail::apply_two_arg(g2, x1 + x2, -x1);
    if (sg != g2) return false;
    NcPoly parity = (m % 2 == 0) ? g2 : -g2;
    return parity == g2;
}

// Lambda = [[1,1],[-1,0]] realizes (x1,x2) -> (x1+x2,-x1); the engine of the
// reflection identity. Checked once as a sanity assertion.
inline bool reflection_matrix_cubes_to_minus_identity() {
    RingPtr z = Ring::integers();
    ExactMatrix lambda(z, 2, 2);
    lambda.at(0, 0) = RingElement::from_int(z, 1);
    lambda.at(0, 1) = RingElement::from_int(z, 1);
    lambda.at(1, 0) = RingElement::from_int(z, -1);
    lambda.at(1, 1) = RingElement::from_int(z, 0);
    ExactMatrix cube = lambda * lambda * lambda;
    return cube == RingElement::from_int(z, -1) * ExactMatrix::identity(z, 2);
}

/*
 * Kernel of the linear system over the swap-symmetric orbit basis; every
 * returned polynomial is re-verified against the system by substitution.
 * Rings: any supported field, or Z (kernel over Q scaled to primitive
 * integer vectors).
 */
inline GSolutionSpace solve_g_system(const RingPtr& ring, int m) {
    if (m < 2) fail(Errc::WrongDegree, "nilpotency class must be >= 2");
    if (!ring->is_field() && ring->kind() != RingKind::Integers)
        fail(Errc::UnsupportedRing, "g-system is solved over fields and Z");
    if (!reflection_matrix_cubes_to_minus_identity())
        fail(Errc::PrerequisiteFailed, "internal: reflection matrix sanity assertion failed");

    GSolutionSpace out;
    out.instance = detail::make_g_instance(ring, m);
    const auto& unknowns = out.instance.unknown_basis;
    if (unknowns.empty()) return out;

    AlgebraPtr a3 = Algebra::nilpotent(ring, 3, m);
    NcPoly x1 = NcPoly::generator(a3, 1), x2 = NcPoly::generator(a3, 2), x3 = NcPoly::generator(a3, 3);

    // rows: degree-(m-1) words over three generators (cocycle) plus the
    // single-generator diagonal row family g(x1,-x1) = 0
    std::vector<Word> row_words = words_of_length(3, m - 1);
    std::map<Word, int, WordOrder> row_of;
    for (size_t r = 0; r < row_words.size(); ++r) row_of[row_words[r]] = static_cast<int>(r);
    int diag_rows = 1;  // g(x1,-x1) collapses onto the single word x1^(m-1)

    ExactMatrix sys(ring, static_cast<int>(row_words.size()) + diag_rows, static_cast<int>(unknowns.size()));
    for (size_t u = 0; u < unknowns.size(); ++u) {
        NcPoly o = detail::orbit_poly(a3, unknowns[u]);
        NcPoly cocycle = detail::apply_two_arg(o, x1, x2) + detail::apply_two_arg(o, x1 + x2, x3) -
                         detail::apply_two_arg(o, x2, x3) - detail::apply_two_arg(o, x1, x2 + x3);
        for (const auto& [w, c] : cocycle.terms()) sys.at(row_of.at(w), static_cast<int>(u)) = c;
        NcPoly diag = detail::apply_two_arg(o, x1, -x1);
        for (const auto& [w, c] : diag.terms())
            sys.at(static_cast<int>(row_words.size()), static_cast<int>(u)) = c;
    }

    auto kernel = kernel_basis(sys);
    AlgebraPtr a2 = Algebra::nilpotent(ring, 2, m);
    for (const auto& v : kernel) {
        NcPoly g(a2);
        for (size_t u = 0; u < unknowns.size(); ++u) {
            if (v[u].is_zero()) continue;
            g.add_term(unknowns[u].first, v[u]);
            g.add_term(unknowns[u].second, v[u]);
        }
        if (!verify_candidate(g, ring, m).ok)
            fail(Errc::FactorizationFailed, "internal: solver output fails re-verification");
        if (!reflection_check(g, ring, m))
            fail(Errc::FactorizationFailed, "internal: solver output fails the reflection identities");
        out.basis.push_back(std::move(g));
    }
    out.dimension = static_cast<int>(out.basis.size());
    return out;
}

// (x1+x2)^(m-1) - x1^(m-1) - x2^(m-1), the explicit particular solution.
inline NcPoly binomial_defect_poly(const RingPtr& ring, int m, const AlgebraPtr& alg = nullptr) {
    AlgebraPtr a = alg ? alg : Algebra::nilpotent(ring, 2, m);
    NcPoly x1 = NcPoly::generator(a, 1), x2 = NcPoly::generator(a, 2);
    NcPoly s = x1 + x2;
    NcPoly sum = s, p1 = x1, p2 = x2;
    for (int i = 1; i < m - 1; ++i) {
        sum = sum * s;
        p1 = p1 * x1;
        p2 = p2 * x2;
    }
    return sum - p1 - p2;
}

// membership of f in the span of the solution basis (exact linear algebra)
inline bool space_contains(const GSolutionSpace& space, const NcPoly& f) {
    if (f.is_zero()) return true;
    if (space.basis.empty()) return false;
    const RingPtr& ring = space.instance.ring;
    std::vector<Word> words = words_of_length(2, space.instance.m - 1);
    std::map<Word, int, WordOrder> row_of;
    for (size_t r = 0; r < words.size(); ++r) row_of[words[r]] = static_cast<int>(r);
    ExactMatrix a(ring, static_cast<int>(words.size()), static_cast<int>(space.basis.size()));
    for (size_t j = 0; j < space.basis.size(); ++j)
        for (const auto& [w, c] : space.basis[j].terms()) a.at(row_of.at(w), static_cast<int>(j)) = c;
    std::vector<RingElement> b(words.size(), RingElement::zero(ring));
    for (const auto& [w, c] : f.terms()) b[row_of.at(w)] = c;
    if (ring->kind() == RingKind::Integers) {
        // solve over Q: span membership over the fraction field is what the
        // primitive integer basis spans after scaling
        RingPtr q = Ring::rationals();
        ExactMatrix aq = a.map_ring(q, [&](const RingElement& x) { return RingElement::from_int(q, x.as_integer()); });
        std::vector<RingElement> bq;
        for (auto& x : b) bq.push_back(RingElement::from_int(q, x.as_integer()));
        return linear_solve(aq, bq).has_value();
    }
    return linear_solve(a, b).has_value();
}

}  // namespace enda

#endif  // ENDA_GSOLVE_HPP
