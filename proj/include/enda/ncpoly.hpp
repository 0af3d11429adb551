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

#ifndef ENDA_NCPOLY_HPP
#define ENDA_NCPOLY_HPP

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "ring.hpp"

namespace enda {

enum class Variety { FreeAssociative, Nilpotent, ZeroMultiplication };

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/*
 * Descriptor of a free algebra without 1 over K in n generators: the free
 * associative algebra, its m-nilpotent quotient (words of length >= m vanish)
 * or the zero-multiplication degenerate case. The unital flag (empty word
 * admitted) exists for the free associative case and defaults off.
 */
class Algebra {
   public:
    static AlgebraPtr free_associative(RingPtr ring, int gens, bool unital = false) {
        return AlgebraPtr(new Algebra(std::move(ring), gens, Variety::FreeAssociative, 0, unital));
    }
    static AlgebraPtr nilpotent(RingPtr ring, int gens, int m) {
        if (m < 2) fail(Errc::SyntaxError, "nilpotency class must be >= 2");
        return AlgebraPtr(new Algebra(std::move(ring), gens, Variety::Nilpotent, m, false));
    }
    static AlgebraPtr zero_multiplication(RingPtr ring, int gens) {
        return AlgebraPtr(new Algebra(std::move(ring), gens, Variety::ZeroMultiplication, 2, false));
    }

    const RingPtr& ring() const { return ring_; }
    int gens() const { return gens_; }
    Variety variety() const { return variety_; }
    int nilpotency() const { return m_; }
    bool unital() const { return unital_; }

    // longest surviving word (INT_MAX for the free algebra)
    int max_word_len() const {
        return variety_ == Variety::FreeAssociative ? std::numeric_limits<int>::max() : m_ - 1;
    }

    bool operator==(const Algebra& o) const {
        return same_ring(ring_, o.ring_) && gens_ == o.gens_ && variety_ == o.variety_ && m_ == o.m_ &&
               unital_ == o.unital_;
    }

    std::string str() const {
        std::string v = variety_ == Variety::FreeAssociative ? "free"
                        : variety_ == Variety::Nilpotent     ? "nilpotent(" + std::to_string(m_) + ")"
                                                             : "zero-multiplication";
        return ring_->name() + ", " + std::to_string(gens_) + " generators, " + v;
    }

   private:
    Algebra(RingPtr ring, int gens, Variety v, int m, bool unital)
        : ring_(std::move(ring)), gens_(gens), variety_(v), m_(m), unital_(unital) {
        if (gens_ < 1) fail(Errc::SyntaxError, "generator count must be positive");
    }

    RingPtr ring_;
    int gens_;
    Variety variety_;
    int m_;
    bool unital_;
};

inline bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) { return a == b || (a && b && *a == *b); }

// A word over generator indices 1..n; the empty word is the algebra unit and
// only appears when the unital flag is on.
using Word = std::vector<int>;

struct WordOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

using Support = std::set<Word, WordOrder>;

inline std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += "*";
        out += "x" + std::to_string(w[i]);
    }
    return out;
}

/*
 * Finitely supported map from words to nonzero coefficients, canonical at all
 * times: no zero coefficients, no words killed by the variety's truncation.
 */
class NcPoly {
   public:
    using TermMap = std::map<Word, RingElement, WordOrder>;

    explicit NcPoly(AlgebraPtr alg) : alg_(std::move(alg)) {}

    static NcPoly zero(const AlgebraPtr& a) { return NcPoly(a); }

    static NcPoly generator(const AlgebraPtr& a, int i) {
        if (i < 1 || i > a->gens())
            fail(Errc::GeneratorOutOfRange, "x" + std::to_string(i) + " in an algebra with " +
                                                std::to_string(a->gens()) + " generators");
        NcPoly f(a);
        f.add_term(Word{i}, RingElement::one(a->ring()));
        return f;
    }

    static NcPoly monomial(const AlgebraPtr& a, Word w, RingElement c) {
        NcPoly f(a);
        f.add_term(std::move(w), std::move(c));
        return f;
    }

    const AlgebraPtr& algebra() const { return alg_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        if (terms_.empty()) return 0;
        return static_cast<int>(terms_.rbegin()->first.size());
    }

    int min_degree() const {
        if (terms_.empty()) return 0;
        return static_cast<int>(terms_.begin()->first.size());
    }

    bool is_homogeneous() const { return terms_.empty() || degree() == min_degree(); }

    RingElement coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? RingElement::zero(alg_->ring()) : it->second;
    }

    Support support() const {
        Support s;
        for (const auto& [w, c] : terms_) s.insert(w);
        return s;
    }

    int max_generator() const {
        int g = 0;
        for (const auto& [w, c] : terms_)
            for (int i : w) g = std::max(g, i);
        return g;
    }

    void add_term(Word w, RingElement c) {
        if (!same_ring(c.ring(), alg_->ring())) fail(Errc::WrongRing, "coefficient from a foreign ring");
        if (static_cast<int>(w.size()) > alg_->max_word_len()) return;  // truncated by the variety
        if (w.empty() && !alg_->unital()) {
            if (c.is_zero()) return;
            fail(Errc::SyntaxError, "constant terms do not exist in a free algebra without 1");
        }
        for (int i : w)
            if (i < 1 || i > alg_->gens())
                fail(Errc::GeneratorOutOfRange, "x" + std::to_string(i) + " out of range");
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(std::move(w), std::move(c));
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend NcPoly operator+(const NcPoly& x, const NcPoly& y) {
        x.check_same(y);
        NcPoly out = x;
        for (const auto& [w, c] : y.terms_) out.add_term(w, c);
        return out;
    }

    friend NcPoly operator-(const NcPoly& x, const NcPoly& y) { return x + (-y); }

    NcPoly operator-() const {
        NcPoly out(alg_);
        for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
        return out;
    }

    friend NcPoly operator*(const NcPoly& x, const NcPoly& y) {
        x.check_same(y);
        NcPoly out(x.alg_);
        int maxlen = x.alg_->max_word_len();
        for (const auto& [w1, c1] : x.terms_)
            for (const auto& [w2, c2] : y.terms_) {
                if (static_cast<int>(w1.size() + w2.size()) > maxlen) continue;
                Word w = w1;
                w.insert(w.end(), w2.begin(), w2.end());
                out.add_term(std::move(w), c1 * c2);
            }
        return out;
    }

    friend NcPoly operator*(const RingElement& c, const NcPoly& y) {
        NcPoly out(y.alg_);
        for (const auto& [w, k] : y.terms_) out.add_term(w, c * k);
        return out;
    }

    friend bool operator==(const NcPoly& x, const NcPoly& y) {
        return same_algebra(x.alg_, y.alg_) && x.terms_ == y.terms_;
    }
    friend bool operator!=(const NcPoly& x, const NcPoly& y) { return !(x == y); }

    NcPoly homogeneous_component(int k) const {
        NcPoly out(alg_);
        for (const auto& [w, c] : terms_)
            if (static_cast<int>(w.size()) == k) out.terms_.emplace(w, c);
        return out;
    }

    NcPoly linear_part() const { return homogeneous_component(1); }

    NcPoly higher_part() const {
        NcPoly out(alg_);
        for (const auto& [w, c] : terms_)
            if (w.size() >= 2) out.terms_.emplace(w, c);
        return out;
    }

    // word-reversal anti-automorphism
    NcPoly mirror() const {
        NcPoly out(alg_);
        for (const auto& [w, c] : terms_) {
            Word rw(w.rbegin(), w.rend());
            out.add_term(std::move(rw), c);
        }
        return out;
    }

    NcPoly map_coefficients(const std::function<RingElement(const RingElement&)>& f) const {
        NcPoly out(alg_);
        for (const auto& [w, c] : terms_) out.add_term(w, f(c));
        return out;
    }

   private:
    void check_same(const NcPoly& o) const {
        if (!same_algebra(alg_, o.alg_)) fail(Errc::AlgebraMismatch, "operands live in different algebras");
    }

    AlgebraPtr alg_;
    TermMap terms_;
};

inline NcPoly commutator(const NcPoly& a, const NcPoly& b) { return a * b - b * a; }

/*
 * The K-linear multiplicative extension of x_i -> images[i], word by word,
 * with truncation in the images' algebra. Requires one image per generator,
 * the same coefficient ring, and a target truncating at least as hard as the
 * source.
 */
inline NcPoly substitute(const NcPoly& f, const std::vector<NcPoly>& images) {
    const AlgebraPtr& src = f.algebra();
    if (static_cast<int>(images.size()) != src->gens())
        fail(Errc::AlgebraMismatch, "substitution needs one image per generator");
    const AlgebraPtr& dst = images.front().algebra();
    for (const auto& g : images)
        if (!same_algebra(g.algebra(), dst)) fail(Errc::AlgebraMismatch, "images live in different algebras");
    if (!same_ring(src->ring(), dst->ring())) fail(Errc::AlgebraMismatch, "substitution across coefficient rings");
    if (dst->max_word_len() > src->max_word_len())
        fail(Errc::AlgebraMismatch, "substitution into a less truncated algebra is ill-defined");
    NcPoly out(dst);
    for (const auto& [w, c] : f.terms()) {
        if (w.empty()) {
            fail(Errc::AlgebraMismatch, "cannot substitute into the algebra unit");
        }
        NcPoly prod = images[w[0] - 1];
        for (size_t i = 1; i < w.size(); ++i) {
            if (prod.is_zero()) break;
            prod = prod * images[w[i] - 1];
        }
        out = out + c * prod;
    }
    return out;
}

namespace detail {

// images (x1+x3, x2, x3, ...) or (x1, x2+x3, x3, ...) within f's algebra
inline std::vector<NcPoly> shift_images(const AlgebraPtr& a, int shifted_gen) {
    std::vector<NcPoly> images;
    for (int i = 1; i <= a->gens(); ++i) {
        NcPoly xi = NcPoly::generator(a, i);
        if (i == shifted_gen) xi = xi + NcPoly::generator(a, 3);
        images.push_back(std::move(xi));
    }
    return images;
}

inline void require_two_generator_input(const NcPoly& f) {
    if (f.algebra()->gens() < 3)
        fail(Errc::GeneratorOutOfRange, "ambient algebra needs a third generator for the shift");
    if (f.max_generator() > 2) fail(Errc::GeneratorOutOfRange, "input must use only x1 and x2");
}

}  // namespace detail

// Support of f(x1+x3, x2)  (or of f(x1, x2+x3) with the second variant).
inline Support support_after_shift(const NcPoly& f, int shifted_gen = 1) {
    detail::require_two_generator_input(f);
    if (shifted_gen != 1 && shifted_gen != 2) fail(Errc::GeneratorOutOfRange, "shift variant must be 1 or 2");
    return substitute(f, detail::shift_images(f.algebra(), shifted_gen)).support();
}

/*
 * Symbolic distributivity in both arguments, tested with a fresh generator:
 * P(x1+x3,x2) = P(x1,x2) + P(x3,x2) and P(x1,x2+x3) = P(x1,x2) + P(x1,x3).
 * Freeness makes the generic instance decide the universally quantified
 * definition.
 */
inline bool is_distributive(const NcPoly& p) {
    detail::require_two_generator_input(p);
    const AlgebraPtr& a = p.algebra();
    NcPoly x1 = NcPoly::generator(a, 1), x2 = NcPoly::generator(a, 2), x3 = NcPoly::generator(a, 3);
    auto apply = [&](const NcPoly& u, const NcPoly& v) {
        std::vector<NcPoly> images;
        images.push_back(u);
        images.push_back(v);
        for (int i = 3; i <= a->gens(); ++i) images.push_back(NcPoly::generator(a, i));
        return substitute(p, images);
    };
    if (apply(x1 + x3, x2) != apply(x1, x2) + apply(x3, x2)) return false;
    if (apply(x1, x2 + x3) != apply(x1, x2) + apply(x1, x3)) return false;
    return true;
}

// (alpha, beta) iff P = alpha*x1*x2 + beta*x2*x1 exactly.
inline std::optional<std::pair<RingElement, RingElement>> classify_distributive(const NcPoly& p) {
    detail::require_two_generator_input(p);
    RingElement alpha = p.coefficient(Word{1, 2});
    RingElement beta = p.coefficient(Word{2, 1});
    NcPoly expect(p.algebra());
    expect.add_term(Word{1, 2}, alpha);
    expect.add_term(Word{2, 1}, beta);
    if (p != expect) return std::nullopt;
    return std::make_pair(alpha, beta);
}

// ---------------------------------------------------------------------------
// Text grammar
//   poly := term (('+'|'-') term)*
//   term := [coeff '*'] word | coeff
//   word := gen ('*' gen)*           gen := 'x' index
// Coefficients use the ring-element literal grammar, parenthesized when
// composite. A bare coefficient term must be zero (no constant terms).
// ---------------------------------------------------------------------------

inline std::string print_poly(const NcPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : f.terms()) {
        RingElement pc = c;
        std::string cs = c.str();
        bool negated = !cs.empty() && cs[0] == '-';
        if (negated) {
            pc = -c;
            cs = pc.str();
        }
        std::string sep = first ? (negated ? "-" : "") : (negated ? " - " : " + ");
        std::string body;
        if (pc.is_one()) {
            body = word_str(w);
        } else {
            bool composite = cs.find_first_not_of("0123456789") != std::string::npos;
            body = (composite ? "(" + cs + ")" : cs) + "*" + word_str(w);
        }
        out += sep + body;
        first = false;
    }
    return out;
}

namespace detail {

struct PolyParser {
    const std::string& s;
    size_t i = 0;
    const AlgebraPtr& alg;

    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }

    NcPoly parse() {
        NcPoly acc(alg);
        bool first = true;
        while (!done()) {
            int sign = 1;
            if (peek() == '+') {
                ++i;
            } else if (peek() == '-') {
                sign = -1;
                ++i;
            } else if (!first) {
                fail(Errc::SyntaxError, "expected '+' or '-' at offset " + std::to_string(i));
            }
            NcPoly t = term();
            acc = (sign == 1) ? acc + t : acc - t;
            first = false;
        }
        if (first) fail(Errc::SyntaxError, "empty polynomial literal");
        return acc;
    }

    NcPoly term() {
        RingElement coeff = RingElement::one(alg->ring());
        bool have_coeff = false;
        if (peek() == '(') {
            size_t depth = 0, start = i;
            do {
                if (s[i] == '(') ++depth;
                if (s[i] == ')') --depth;
                ++i;
                if (i > s.size()) fail(Errc::SyntaxError, "unbalanced parentheses");
            } while (depth > 0 && i < s.size());
            if (depth > 0) fail(Errc::SyntaxError, "unbalanced parentheses");
            coeff = parse_element(alg->ring(), s.substr(start + 1, i - start - 2));
            have_coeff = true;
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            size_t start = i;
            while (!done() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++i;
            coeff = parse_element(alg->ring(), s.substr(start, i - start));
            have_coeff = true;
        }
        if (have_coeff) {
            if (peek() == '*') {
                ++i;
                Word w = word();
                return NcPoly::monomial(alg, std::move(w), std::move(coeff));
            }
            if (!coeff.is_zero())
                fail(Errc::SyntaxError, "constant terms do not exist in a free algebra without 1");
            return NcPoly::zero(alg);
        }
        Word w = word();
        return NcPoly::monomial(alg, std::move(w), std::move(coeff));
    }

    Word word() {
        Word w;
        while (true) {
            if (peek() != 'x') fail(Errc::SyntaxError, "expected generator at offset " + std::to_string(i));
            ++i;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail(Errc::SyntaxError, "expected generator index at offset " + std::to_string(i));
            long idx = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                idx = idx * 10 + (s[i] - '0');
                if (idx > 1000000) fail(Errc::GeneratorOutOfRange, "generator index out of range");
                ++i;
            }
            if (idx < 1 || idx > alg->gens())
                fail(Errc::GeneratorOutOfRange,
                     "x" + std::to_string(idx) + " in an algebra with " + std::to_string(alg->gens()) + " generators");
            w.push_back(static_cast<int>(idx));
            if (peek() == '*' && i + 1 < s.size() && s[i + 1] == 'x') {
                ++i;
                continue;
            }
            break;
        }
        return w;
    }
};

}  // namespace detail

inline NcPoly parse_poly(const std::string& text, const AlgebraPtr& alg) {
    std::string s = detail::strip_ws(text);
    detail::PolyParser p{s, 0, alg};
    NcPoly f = p.parse();
    if (!p.done()) fail(Errc::SyntaxError, "trailing input in polynomial literal");
    return f;
}

// All words of the given exact length over generators 1..gens, in the
// canonical order.
inline std::vector<Word> words_of_length(int gens, int len) {
    std::vector<Word> out;
    if (len == 0) {
        out.push_back(Word{});
        return out;
    }
    Word w(len, 1);
    while (true) {
        out.push_back(w);
        int i = len - 1;
        while (i >= 0 && w[i] == gens) w[i--] = 1;
        if (i < 0) break;
        ++w[i];
    }
    return out;
}

inline std::vector<Word> words_up_to(int gens, int maxlen, int minlen = 1) {
    std::vector<Word> out;
    for (int l = minlen; l <= maxlen; ++l) {
        auto ws = words_of_length(gens, l);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
}

}  // namespace enda

#endif  // ENDA_NCPOLY_HPP
