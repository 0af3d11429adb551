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

#ifndef ENDA_ENDO_HPP
#define ENDA_ENDO_HPP

#include <functional>
#include <optional>
#include <vector>

#include "matrix.hpp"
#include "ncpoly.hpp"

namespace enda {

/*
 * Endomorphism of a free algebra, stored as the generator images. Application
 * is substitution; composition compose(f, g) acts as "g then f".
 */
class Endo {
   public:
    Endo(AlgebraPtr alg, std::vector<NcPoly> images) : alg_(std::move(alg)), images_(std::move(images)) {
        if (static_cast<int>(images_.size()) != alg_->gens())
            fail(Errc::AlgebraMismatch, "endomorphism needs one image per generator");
        for (const auto& f : images_)
            if (!same_algebra(f.algebra(), alg_)) fail(Errc::AlgebraMismatch, "image from a foreign algebra");
    }

    static Endo identity(const AlgebraPtr& a) {
        std::vector<NcPoly> im;
        for (int i = 1; i <= a->gens(); ++i) im.push_back(NcPoly::generator(a, i));
        return Endo(a, std::move(im));
    }

    static Endo zero(const AlgebraPtr& a) {
        return Endo(a, std::vector<NcPoly>(a->gens(), NcPoly::zero(a)));
    }

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<NcPoly>& images() const { return images_; }
    const NcPoly& image(int i) const { return images_[i - 1]; }  // 1-based

    friend bool operator==(const Endo& x, const Endo& y) {
        return same_algebra(x.alg_, y.alg_) && x.images_ == y.images_;
    }
    friend bool operator!=(const Endo& x, const Endo& y) { return !(x == y); }

   private:
    AlgebraPtr alg_;
    std::vector<NcPoly> images_;
};

inline NcPoly apply(const Endo& f, const NcPoly& a) {
    if (!same_algebra(f.algebra(), a.algebra())) fail(Errc::AlgebraMismatch, "apply across algebras");
    return substitute(a, f.images());
}

// apply(compose(f, g), a) = apply(f, apply(g, a))
inline Endo compose(const Endo& f, const Endo& g) {
    if (!same_algebra(f.algebra(), g.algebra())) fail(Errc::AlgebraMismatch, "compose across algebras");
    std::vector<NcPoly> im;
    for (const auto& gi : g.images()) im.push_back(apply(f, gi));
    return Endo(f.algebra(), std::move(im));
}

/*
 * An (i, j)-indexed family of n^2 endomorphisms, optionally backed by the
 * bijection that produced it (forward and inverse evaluators); the backing is
 * what makes gluing constructions possible.
 */
class EndoFamily {
   public:
    using Evaluator = std::function<NcPoly(const NcPoly&)>;

    EndoFamily(AlgebraPtr alg, std::vector<Endo> members) : alg_(std::move(alg)), members_(std::move(members)) {
        int n = alg_->gens();
        if (static_cast<int>(members_.size()) != n * n)
            fail(Errc::AlgebraMismatch, "family needs n^2 members");
    }

    const AlgebraPtr& algebra() const { return alg_; }
    int n() const { return alg_->gens(); }
    const Endo& at(int i, int j) const { return members_[static_cast<size_t>(i - 1) * n() + (j - 1)]; }
    const std::vector<Endo>& members() const { return members_; }

    bool has_recipe() const { return static_cast<bool>(forward_); }
    void set_recipe(Evaluator forward, Evaluator inverse) {
        forward_ = std::move(forward);
        inverse_ = std::move(inverse);
    }
    const Evaluator& forward() const {
        if (!forward_) fail(Errc::NotFromRecipe, "family carries no adjoint-bijection backing");
        return forward_;
    }
    const Evaluator& inverse() const {
        if (!inverse_) fail(Errc::NotFromRecipe, "family carries no adjoint-bijection backing");
        return inverse_;
    }

    // e_ij o e_mk = delta_jm e_ik with every member nonzero somewhere
    bool matrix_unit_relations_hold() const {
        int nn = n();
        Endo z = Endo::zero(alg_);
        for (int i = 1; i <= nn; ++i)
            for (int j = 1; j <= nn; ++j) {
                if (at(i, j) == z) return false;
                for (int m = 1; m <= nn; ++m)
                    for (int k = 1; k <= nn; ++k) {
                        Endo prod = compose(at(i, j), at(m, k));
                        if (j == m) {
                            if (prod != at(i, k)) return false;
                        } else if (prod != z) {
                            return false;
                        }
                    }
            }
        return true;
    }

   private:
    AlgebraPtr alg_;
    std::vector<Endo> members_;
    Evaluator forward_, inverse_;
};

// e_ij(x_k) = delta_jk x_i
inline EndoFamily standard_endos(const AlgebraPtr& a) {
    int n = a->gens();
    std::vector<Endo> members;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            std::vector<NcPoly> im(n, NcPoly::zero(a));
            im[j - 1] = NcPoly::generator(a, i);
            members.emplace_back(a, std::move(im));
        }
    return EndoFamily(a, std::move(members));
}

// ---------------------------------------------------------------------------
// Probing matrices
// ---------------------------------------------------------------------------

struct SigmaMatrix {
    std::vector<int> sigma;       // permutation of 1..n (sigma[j-1] = image of j)
    std::vector<NcPoly> entries;  // row-major, t_ij = family(i,j) applied to x_sigma(j)

    const NcPoly& at(int i, int j, int n) const { return entries[static_cast<size_t>(i - 1) * n + (j - 1)]; }
};

inline SigmaMatrix sigma_matrix(const EndoFamily& family, const std::vector<int>& sigma) {
    int n = family.n();
    if (static_cast<int>(sigma.size()) != n) fail(Errc::AlgebraMismatch, "permutation size mismatch");
    SigmaMatrix out;
    out.sigma = sigma;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            out.entries.push_back(apply(family.at(i, j), NcPoly::generator(family.algebra(), sigma[j - 1])));
    return out;
}

// Matrix of the induced map on F/F' (columns are image coordinates), so that
// linear_part_matrix(f o g) = linear_part_matrix(f) * linear_part_matrix(g).
inline ExactMatrix linear_part_matrix(const Endo& f) {
    const AlgebraPtr& a = f.algebra();
    int n = a->gens();
    ExactMatrix m(a->ring(), n, n);
    for (int i = 1; i <= n; ++i) {
        NcPoly lin = f.image(i).linear_part();
        for (const auto& [w, c] : lin.terms()) m.at(w[0] - 1, i - 1) = c;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Automorphism detection and inversion (nilpotent varieties)
// ---------------------------------------------------------------------------

namespace detail {

inline void require_nilpotent_variety(const AlgebraPtr& a, const char* what) {
    if (a->variety() == Variety::FreeAssociative)
        fail(Errc::UnsupportedVariety, std::string(what) + " is decided only for nilpotent varieties");
}

inline Endo linear_endo_from_matrix(const AlgebraPtr& a, const ExactMatrix& m) {
    int n = a->gens();
    std::vector<NcPoly> im;
    for (int j = 0; j < n; ++j) {
        NcPoly f(a);
        for (int i = 0; i < n; ++i) f.add_term(Word{i + 1}, m.at(i, j));
        im.push_back(std::move(f));
    }
    return Endo(a, std::move(im));
}

}  // namespace detail

/*
 * Two-sided inverse of an endomorphism with unit-determinant linear part,
 * built by inverting the linear part and correcting degree by degree; absent
 * when the linear part is not invertible over K.
 */
inline std::optional<Endo> inverse_endo(const Endo& f) {
    const AlgebraPtr& a = f.algebra();
    detail::require_nilpotent_variety(a, "endomorphism inversion");
    auto linv = inverse(linear_part_matrix(f));
    if (!linv) return std::nullopt;
    Endo linv_endo = detail::linear_endo_from_matrix(a, *linv);
    Endo g = linv_endo;
    int m = a->nilpotency();
    for (int d = 2; d <= m - 1; ++d) {
        Endo h = compose(f, g);
        std::vector<NcPoly> corrected;
        for (int i = 1; i <= a->gens(); ++i) {
            NcPoly err = (h.image(i) - NcPoly::generator(a, i)).homogeneous_component(d);
            corrected.push_back(g.image(i) - apply(linv_endo, err));
        }
        g = Endo(a, std::move(corrected));
    }
    if (compose(f, g) != Endo::identity(a) || compose(g, f) != Endo::identity(a)) return std::nullopt;
    return g;
}

// True iff the induced linear map on F/F' is invertible over K; verified by
// actually constructing the inverse and composing to the identity.
inline bool is_automorphism(const Endo& f) {
    const AlgebraPtr& a = f.algebra();
    detail::require_nilpotent_variety(a, "automorphism detection");
    RingElement d = det(linear_part_matrix(f));
    if (d.is_zero() || !is_unit(d)) return false;
    return inverse_endo(f).has_value();
}

// ---------------------------------------------------------------------------
// Standard-base recovery
// ---------------------------------------------------------------------------

namespace detail {

inline ExactMatrix relabel(const ExactMatrix& m, const std::vector<int>& sigma) {
    int n = m.rows();
    ExactMatrix out(m.ring(), n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out.at(a, b) = m.at(sigma[a] - 1, sigma[b] - 1);
    return out;
}

}  // namespace detail

/*
 * Given a family satisfying the matrix-unit relations over a nilpotent
 * variety, recover a base Z = {z_i} on which the family acts as standard
 * endomorphisms: probe permutations for a nonzero linear part, conjugate the
 * linear-part matrices to the elementary ones, set z_i = family(i,1) applied
 * to the first recovered base element, and verify all n^2 Kronecker
 * identities exactly. Absent when every probe is zero or verification fails.
 */
inline std::optional<std::vector<NcPoly>> find_standard_base(const EndoFamily& family) {
    const AlgebraPtr& a = family.algebra();
    detail::require_nilpotent_variety(a, "standard-base recovery");
    if (!family.matrix_unit_relations_hold()) fail(Errc::NotMatrixUnits, "family violates matrix-unit relations");
    int n = family.n();

    std::vector<ExactMatrix> lin;
    bool any_nonzero = false;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            lin.push_back(linear_part_matrix(family.at(i, j)));
            if (!lin.back().is_zero()) any_nonzero = true;
        }
    if (!any_nonzero) return std::nullopt;  // every sigma-probe has zero linear part

    std::vector<int> sigma;
    std::vector<ExactMatrix> probed;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    do {
        probed.clear();
        bool nonzero = false;
        for (const auto& m : lin) {
            probed.push_back(detail::relabel(m, perm));
            if (!probed.back().is_zero()) nonzero = true;
        }
        if (nonzero) {
            sigma = perm;
            break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (sigma.empty()) return std::nullopt;

    ExactMatrix rho(a->ring(), n, n);
    try {
        rho = conjugate_matrix_units(probed);
    } catch (const Error&) {
        return std::nullopt;
    }
    auto c = inverse(rho);
    if (!c) return std::nullopt;

    // y_1 = sum_k C(k,1) x_sigma(k); z_i = family(i,1) y_1
    NcPoly y1(a);
    for (int k = 0; k < n; ++k) y1.add_term(Word{sigma[k]}, c->at(k, 0));
    std::vector<NcPoly> z;
    for (int i = 1; i <= n; ++i) z.push_back(apply(family.at(i, 1), y1));

    if (!is_automorphism(Endo(a, z))) return std::nullopt;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                NcPoly got = apply(family.at(i, j), z[k - 1]);
                if (j == k ? (got != z[i - 1]) : !got.is_zero()) return std::nullopt;
            }
    return z;
}

}  // namespace enda

#endif  // ENDA_ENDO_HPP
