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

#ifndef ENDA_SAMPLING_HPP
#define ENDA_SAMPLING_HPP

#include <random>
#include <vector>

#include "endo.hpp"
#include "matrix.hpp"
#include "ncpoly.hpp"

namespace enda {

using Rng = std::mt19937_64;

// uniform in [lo, hi]; explicit modulo scheme for cross-platform determinism
inline long rand_range(Rng& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline RingElement random_element(const RingPtr& r, Rng& rng, long height = 9) {
    switch (r->kind()) {
        case RingKind::Integers: return RingElement::from_int(r, rand_range(rng, -height, height));
        case RingKind::Rationals: {
            Int num = rand_range(rng, -height, height);
            Int den = rand_range(rng, 1, height);
            return RingElement::rational(r, num, den);
        }
        case RingKind::PrimeField: return RingElement::from_int(r, rand_range(rng, 0, r->p() - 1));
        case RingKind::GaloisField: {
            std::vector<long> c(r->extension_degree());
            for (auto& x : c) x = rand_range(rng, 0, r->p() - 1);
            return RingElement::galois(r, c);
        }
        case RingKind::QuadraticRing:
            return RingElement::quadratic(r, rand_range(rng, -height, height), rand_range(rng, -height, height));
    }
    fail(Errc::WrongRing, "random_element");
}

inline RingElement random_nonzero_element(const RingPtr& r, Rng& rng, long height = 9) {
    for (int tries = 0; tries < 1000; ++tries) {
        RingElement x = random_element(r, rng, height);
        if (!x.is_zero()) return x;
    }
    fail(Errc::WrongRing, "could not sample a nonzero element");
}

inline RingElement random_unit(const RingPtr& r, Rng& rng, long height = 9) {
    if (r->kind() == RingKind::Integers || r->kind() == RingKind::QuadraticRing)
        return RingElement::from_int(r, rand_range(rng, 0, 1) == 0 ? 1 : -1);
    return random_nonzero_element(r, rng, height);
}

inline Word random_word(int gens, int len, Rng& rng) {
    Word w(len);
    for (auto& g : w) g = static_cast<int>(rand_range(rng, 1, gens));
    return w;
}

inline NcPoly random_poly(const AlgebraPtr& a, Rng& rng, int max_terms = 4, int max_len = 0, long height = 5) {
    if (max_len == 0) max_len = std::min(a->max_word_len(), 4);
    NcPoly f(a);
    int terms = static_cast<int>(rand_range(rng, 0, max_terms));
    for (int t = 0; t < terms; ++t) {
        int len = static_cast<int>(rand_range(rng, 1, max_len));
        f.add_term(random_word(a->gens(), len, rng), random_element(a->ring(), rng, height));
    }
    return f;
}

inline NcPoly random_nonzero_poly(const AlgebraPtr& a, Rng& rng, int max_terms = 4, int max_len = 0,
                                  long height = 5) {
    for (int tries = 0; tries < 1000; ++tries) {
        NcPoly f = random_poly(a, rng, max_terms, max_len, height);
        if (!f.is_zero()) return f;
    }
    fail(Errc::WrongRing, "could not sample a nonzero polynomial");
}

inline Endo random_endo(const AlgebraPtr& a, Rng& rng, int max_terms = 3) {
    std::vector<NcPoly> im;
    for (int i = 0; i < a->gens(); ++i) im.push_back(random_poly(a, rng, max_terms));
    return Endo(a, std::move(im));
}

inline std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[static_cast<int>(rand_range(rng, 0, i))]);
    return p;
}

// Invertible linear part (unit determinant) plus random higher-degree tails:
// an automorphism of a nilpotent free algebra.
inline Endo random_base_automorphism(const AlgebraPtr& a, Rng& rng, int max_higher_terms = 2) {
    int n = a->gens();
    const RingPtr& r = a->ring();
    ExactMatrix lin(r, n, n);
    if (r->is_field()) {
        for (int tries = 0;; ++tries) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) lin.at(i, j) = random_element(r, rng, 5);
            if (!det(lin).is_zero()) break;
            if (tries > 1000) fail(Errc::WrongRing, "could not sample an invertible matrix");
        }
    } else {
        // product of random elementary operations keeps the determinant +-1
        lin = ExactMatrix::identity(r, n);
        int ops = static_cast<int>(rand_range(rng, n, 3 * n));
        for (int t = 0; t < ops; ++t) {
            int i = static_cast<int>(rand_range(rng, 0, n - 1));
            int j = static_cast<int>(rand_range(rng, 0, n - 1));
            if (i == j) continue;
            RingElement c = RingElement::from_int(r, rand_range(rng, -2, 2));
            for (int k = 0; k < n; ++k) lin.at(i, k) = lin.at(i, k) + c * lin.at(j, k);
        }
    }
    std::vector<NcPoly> im;
    for (int j = 0; j < n; ++j) {
        NcPoly f(a);
        for (int i = 0; i < n; ++i) f.add_term(Word{i + 1}, lin.at(i, j));
        int extra = static_cast<int>(rand_range(rng, 0, max_higher_terms));
        for (int t = 0; t < extra; ++t) {
            if (a->max_word_len() < 2) break;
            int len = static_cast<int>(rand_range(rng, 2, a->max_word_len()));
            f.add_term(random_word(a->gens(), len, rng), random_element(r, rng, 2));
        }
        im.push_back(std::move(f));
    }
    return Endo(a, std::move(im));
}

// Unimodular integer matrix via random elementary row operations.
inline ExactMatrix random_unimodular(const RingPtr& r, int n, Rng& rng, int ops = 0, long height = 2) {
    ExactMatrix m = ExactMatrix::identity(r, n);
    if (ops == 0) ops = 3 * n;
    for (int t = 0; t < ops; ++t) {
        int i = static_cast<int>(rand_range(rng, 0, n - 1));
        int j = static_cast<int>(rand_range(rng, 0, n - 1));
        if (i == j) continue;
        RingElement c = RingElement::from_int(r, rand_range(rng, -height, height));
        for (int k = 0; k < n; ++k) m.at(i, k) = m.at(i, k) + c * m.at(j, k);
    }
    return m;
}

// Outer product of nonzero vectors: rank exactly 1 over a domain.
inline ExactMatrix random_rank1_matrix(const RingPtr& r, int rows, int cols, Rng& rng, long height = 4) {
    while (true) {
        std::vector<RingElement> c, d;
        bool cz = true, dz = true;
        for (int i = 0; i < rows; ++i) {
            c.push_back(random_element(r, rng, height));
            cz = cz && c.back().is_zero();
        }
        for (int j = 0; j < cols; ++j) {
            d.push_back(random_element(r, rng, height));
            dz = dz && d.back().is_zero();
        }
        if (cz || dz) continue;
        ExactMatrix m(r, rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = c[i] * d[j];
        return m;
    }
}

inline ExactMatrix random_matrix_of_rank(const RingPtr& r, int rows, int cols, int target_rank, Rng& rng,
                                         long height = 4) {
    while (true) {
        ExactMatrix m(r, rows, cols);
        for (int t = 0; t < target_rank; ++t) m = m + random_rank1_matrix(r, rows, cols, rng, height);
        if (rank(m) == target_rank) return m;
    }
}

}  // namespace enda

#endif  // ENDA_SAMPLING_HPP
