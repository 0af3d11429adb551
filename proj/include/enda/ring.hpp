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

#ifndef ENDA_RING_HPP
#define ENDA_RING_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"

namespace enda {

using Int = boost::multiprecision::cpp_int;

inline Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

enum class RingKind { Integers, Rationals, PrimeField, GaloisField, QuadraticRing };

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/*
 * Descriptor of a coefficient domain K. Immutable; elements hold a shared
 * pointer to their descriptor. Supported: Z, Q, F_p, F_{p^k} = F_p[t]/(f),
 * and the quadratic ring Z[sqrt(-5)].
 */
class Ring {
   public:
    static RingPtr integers() { return RingPtr(new Ring(RingKind::Integers)); }
    static RingPtr rationals() { return RingPtr(new Ring(RingKind::Rationals)); }

    static RingPtr prime_field(long p) {
        if (p < 2 || !is_prime(p)) fail(Errc::NotPrime, "F" + std::to_string(p) + ": characteristic must be prime");
        Ring* r = new Ring(RingKind::PrimeField);
        r->p_ = p;
        return RingPtr(r);
    }

    // modulus: coefficients c0..ck (ascending), monic of degree k, entries reduced mod p.
    static RingPtr galois_field(long p, int k, std::vector<long> modulus) {
        if (p < 2 || !is_prime(p)) fail(Errc::NotPrime, "F_{p^k}: p must be prime");
        if (k < 1 || static_cast<int>(modulus.size()) != k + 1)
            fail(Errc::SyntaxError, "Galois modulus must have degree k >= 1");
        for (auto& c : modulus) c = ((c % p) + p) % p;
        if (modulus[k] != 1) fail(Errc::SyntaxError, "Galois modulus must be monic");
        if (!poly_irreducible(modulus, p))
            fail(Errc::NotIrreducible, "Galois modulus factors over F_" + std::to_string(p));
        Ring* r = new Ring(RingKind::GaloisField);
        r->p_ = p;
        r->k_ = k;
        r->modulus_ = std::move(modulus);
        return RingPtr(r);
    }

    static RingPtr quadratic_minus5() { return RingPtr(new Ring(RingKind::QuadraticRing)); }

    RingKind kind() const { return kind_; }
    long p() const { return p_; }
    int extension_degree() const { return k_; }
    const std::vector<long>& modulus() const { return modulus_; }

    Int characteristic() const {
        if (kind_ == RingKind::PrimeField || kind_ == RingKind::GaloisField) return Int(p_);
        return Int(0);
    }

    bool is_field() const {
        return kind_ == RingKind::Rationals || kind_ == RingKind::PrimeField || kind_ == RingKind::GaloisField;
    }

    bool is_finite() const { return kind_ == RingKind::PrimeField || kind_ == RingKind::GaloisField; }

    // Finite rings only.
    Int cardinality() const {
        if (kind_ == RingKind::PrimeField) return Int(p_);
        if (kind_ == RingKind::GaloisField) {
            Int c = 1;
            for (int i = 0; i < k_; ++i) c *= p_;
            return c;
        }
        fail(Errc::WrongRing, "cardinality of an infinite ring");
    }

    std::string name() const {
        switch (kind_) {
            case RingKind::Integers: return "Z";
            case RingKind::Rationals: return "Q";
            case RingKind::PrimeField: return "F" + std::to_string(p_);
            case RingKind::GaloisField: {
                Int q = cardinality();
                return "F" + q.str() + "=F" + std::to_string(p_) + "[t]/(" + poly_in_t_to_string(modulus_) + ")";
            }
            case RingKind::QuadraticRing: return "Z[sqrt(-5)]";
        }
        return "?";
    }

    bool operator==(const Ring& o) const {
        return kind_ == o.kind_ && p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    static bool is_prime(long n) {
        if (n < 2) return false;
        for (long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    static std::string poly_in_t_to_string(const std::vector<long>& c) {
        std::string out;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
            if (c[i] == 0) continue;
            if (!out.empty()) out += "+";
            if (i == 0) {
                out += std::to_string(c[i]);
            } else {
                if (c[i] != 1) out += std::to_string(c[i]) + "*";
                out += (i == 1) ? "t" : "t^" + std::to_string(i);
            }
        }
        if (out.empty()) out = "0";
        return out;
    }

   private:
    explicit Ring(RingKind k) : kind_(k) {}

    // Trial division by every monic polynomial of degree 1..deg/2; fine for the
    // small p, k this library targets.
    static bool poly_irreducible(const std::vector<long>& m, long p) {
        int deg = static_cast<int>(m.size()) - 1;
        if (deg == 1) return true;
        for (int d = 1; 2 * d <= deg; ++d) {
            std::vector<long> trial(d + 1, 0);
            trial[d] = 1;
            while (true) {
                if (poly_divides(trial, m, p)) return false;
                int i = 0;
                while (i < d && trial[i] == p - 1) trial[i++] = 0;
                if (i == d) break;
                ++trial[i];
            }
        }
        return true;
    }

    static bool poly_divides(const std::vector<long>& div, const std::vector<long>& m, long p) {
        std::vector<long> rem = m;
        int dd = static_cast<int>(div.size()) - 1;
        while (static_cast<int>(rem.size()) - 1 >= dd) {
            int rd = static_cast<int>(rem.size()) - 1;
            long lead = rem[rd] % p;
            if (lead != 0) {
                // divisor is monic, so subtract lead * t^(rd-dd) * div
                for (int i = 0; i <= dd; ++i) {
                    long& x = rem[rd - dd + i];
                    x = ((x - lead * div[i]) % p + p) % p;
                }
            }
            rem.pop_back();
            while (!rem.empty() && rem.back() % p == 0) rem.pop_back();
            if (rem.empty()) return true;
        }
        return false;
    }

    RingKind kind_;
    long p_ = 0;
    int k_ = 1;
    std::vector<long> modulus_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

namespace detail {

struct Rat {
    Int num = 0, den = 1;
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
};

struct Gf {
    std::vector<long> c;  // residues mod p, size k, ascending powers of t
    bool operator==(const Gf& o) const { return c == o.c; }
};

struct Quad {
    Int a = 0, b = 0;  // a + b*sqrt(-5)
    bool operator==(const Quad& o) const { return a == o.a && b == o.b; }
};

using Payload = std::variant<Int, Rat, Gf, Quad>;

}  // namespace detail

/*
 * Exact element of a ring descriptor. Canonical at construction: fractions
 * reduced with positive denominator, residues in [0,p), Galois payloads
 * reduced mod the modulus, quadratic pairs raw integer pairs.
 */
class RingElement {
   public:
    RingElement() : ring_(Ring::integers()), v_(Int(0)) {}

    static RingElement zero(const RingPtr& r) { return from_int(r, 0); }
    static RingElement one(const RingPtr& r) { return from_int(r, 1); }

    static RingElement from_int(const RingPtr& r, Int n) {
        switch (r->kind()) {
            case RingKind::Integers: return RingElement(r, std::move(n));
            case RingKind::Rationals: return RingElement(r, detail::Rat{std::move(n), 1});
            case RingKind::PrimeField: {
                Int m = n % r->p();
                if (m < 0) m += r->p();
                return RingElement(r, m);
            }
            case RingKind::GaloisField: {
                detail::Gf g;
                g.c.assign(r->extension_degree(), 0);
                Int m = n % r->p();
                if (m < 0) m += r->p();
                g.c[0] = static_cast<long>(m);
                return RingElement(r, std::move(g));
            }
            case RingKind::QuadraticRing: return RingElement(r, detail::Quad{std::move(n), 0});
        }
        fail(Errc::WrongRing, "from_int");
    }

    static RingElement rational(const RingPtr& r, Int num, Int den) {
        if (r->kind() != RingKind::Rationals) fail(Errc::WrongRing, "rational payload in non-rational ring");
        if (den == 0) fail(Errc::NonCanonicalCoefficient, "zero denominator");
        return RingElement(r, reduce_rat(std::move(num), std::move(den)));
    }

    static RingElement galois(const RingPtr& r, std::vector<long> coeffs) {
        if (r->kind() != RingKind::GaloisField) fail(Errc::WrongRing, "galois payload in non-Galois ring");
        detail::Gf g;
        g.c = reduce_gf(std::move(coeffs), *r);
        return RingElement(r, std::move(g));
    }

    static RingElement quadratic(const RingPtr& r, Int a, Int b) {
        if (r->kind() != RingKind::QuadraticRing) fail(Errc::WrongRing, "quadratic payload in non-quadratic ring");
        return RingElement(r, detail::Quad{std::move(a), std::move(b)});
    }

    const RingPtr& ring() const { return ring_; }

    bool is_zero() const {
        switch (ring_->kind()) {
            case RingKind::Integers:
            case RingKind::PrimeField: return std::get<Int>(v_) == 0;
            case RingKind::Rationals: return std::get<detail::Rat>(v_).num == 0;
            case RingKind::GaloisField: {
                for (long c : std::get<detail::Gf>(v_).c)
                    if (c != 0) return false;
                return true;
            }
            case RingKind::QuadraticRing: {
                const auto& q = std::get<detail::Quad>(v_);
                return q.a == 0 && q.b == 0;
            }
        }
        return false;
    }

    bool is_one() const { return *this == one(ring_); }

    RingElement operator-() const {
        switch (ring_->kind()) {
            case RingKind::Integers: return RingElement(ring_, -std::get<Int>(v_));
            case RingKind::Rationals: {
                const auto& r = std::get<detail::Rat>(v_);
                return RingElement(ring_, detail::Rat{-r.num, r.den});
            }
            case RingKind::PrimeField: {
                Int m = (ring_->p() - std::get<Int>(v_)) % ring_->p();
                return RingElement(ring_, m);
            }
            case RingKind::GaloisField: {
                detail::Gf g = std::get<detail::Gf>(v_);
                for (long& c : g.c) c = (ring_->p() - c) % ring_->p();
                return RingElement(ring_, std::move(g));
            }
            case RingKind::QuadraticRing: {
                const auto& q = std::get<detail::Quad>(v_);
                return RingElement(ring_, detail::Quad{-q.a, -q.b});
            }
        }
        fail(Errc::WrongRing, "neg");
    }

    friend RingElement operator+(const RingElement& x, const RingElement& y) {
        x.check_same(y);
        switch (x.ring_->kind()) {
            case RingKind::Integers: return RingElement(x.ring_, std::get<Int>(x.v_) + std::get<Int>(y.v_));
            case RingKind::PrimeField:
                return RingElement(x.ring_, (std::get<Int>(x.v_) + std::get<Int>(y.v_)) % x.ring_->p());
            case RingKind::Rationals: {
                const auto& a = std::get<detail::Rat>(x.v_);
                const auto& b = std::get<detail::Rat>(y.v_);
                return RingElement(x.ring_, reduce_rat(a.num * b.den + b.num * a.den, a.den * b.den));
            }
            case RingKind::GaloisField: {
                detail::Gf g = std::get<detail::Gf>(x.v_);
                const auto& h = std::get<detail::Gf>(y.v_);
                for (size_t i = 0; i < g.c.size(); ++i) g.c[i] = (g.c[i] + h.c[i]) % x.ring_->p();
                return RingElement(x.ring_, std::move(g));
            }
            case RingKind::QuadraticRing: {
                const auto& a = std::get<detail::Quad>(x.v_);
                const auto& b = std::get<detail::Quad>(y.v_);
                return RingElement(x.ring_, detail::Quad{a.a + b.a, a.b + b.b});
            }
        }
        fail(Errc::WrongRing, "add");
    }

    friend RingElement operator-(const RingElement& x, const RingElement& y) { return x + (-y); }

    friend RingElement operator*(const RingElement& x, const RingElement& y) {
        x.check_same(y);
        switch (x.ring_->kind()) {
            case RingKind::Integers: return RingElement(x.ring_, std::get<Int>(x.v_) * std::get<Int>(y.v_));
            case RingKind::PrimeField:
                return RingElement(x.ring_, (std::get<Int>(x.v_) * std::get<Int>(y.v_)) % x.ring_->p());
            case RingKind::Rationals: {
                const auto& a = std::get<detail::Rat>(x.v_);
                const auto& b = std::get<detail::Rat>(y.v_);
                return RingElement(x.ring_, reduce_rat(a.num * b.num, a.den * b.den));
            }
            case RingKind::GaloisField: {
                const auto& a = std::get<detail::Gf>(x.v_);
                const auto& b = std::get<detail::Gf>(y.v_);
                std::vector<long> prod(a.c.size() + b.c.size() - 1, 0);
                long p = x.ring_->p();
                for (size_t i = 0; i < a.c.size(); ++i)
                    for (size_t j = 0; j < b.c.size(); ++j)
                        prod[i + j] = (prod[i + j] + a.c[i] * b.c[j]) % p;
                detail::Gf g;
                g.c = reduce_gf(std::move(prod), *x.ring_);
                return RingElement(x.ring_, std::move(g));
            }
            case RingKind::QuadraticRing: {
                const auto& a = std::get<detail::Quad>(x.v_);
                const auto& b = std::get<detail::Quad>(y.v_);
                // (a1 + b1 w)(a2 + b2 w) with w^2 = -5
                return RingElement(x.ring_, detail::Quad{a.a * b.a - 5 * a.b * b.b, a.a * b.b + a.b * b.a});
            }
        }
        fail(Errc::WrongRing, "mul");
    }

    friend bool operator==(const RingElement& x, const RingElement& y) {
        if (!same_ring(x.ring_, y.ring_)) return false;
        return x.v_ == y.v_;
    }
    friend bool operator!=(const RingElement& x, const RingElement& y) { return !(x == y); }

    // Total order used only for deterministic enumeration/printing.
    friend bool element_less(const RingElement& x, const RingElement& y) {
        return x.sort_key() < y.sort_key();
    }

    // -- accessors for specific payloads (throw WrongRing on mismatch) --

    const Int& as_integer() const {
        if (ring_->kind() != RingKind::Integers && ring_->kind() != RingKind::PrimeField)
            fail(Errc::WrongRing, "not an integer/residue payload");
        return std::get<Int>(v_);
    }
    const detail::Rat& as_rational() const {
        if (ring_->kind() != RingKind::Rationals) fail(Errc::WrongRing, "not a rational payload");
        return std::get<detail::Rat>(v_);
    }
    const detail::Gf& as_galois() const {
        if (ring_->kind() != RingKind::GaloisField) fail(Errc::WrongRing, "not a Galois payload");
        return std::get<detail::Gf>(v_);
    }
    const detail::Quad& as_quadratic() const {
        if (ring_->kind() != RingKind::QuadraticRing) fail(Errc::WrongRing, "not a quadratic payload");
        return std::get<detail::Quad>(v_);
    }

    std::string str() const {
        switch (ring_->kind()) {
            case RingKind::Integers:
            case RingKind::PrimeField: return std::get<Int>(v_).str();
            case RingKind::Rationals: {
                const auto& r = std::get<detail::Rat>(v_);
                if (r.den == 1) return r.num.str();
                return r.num.str() + "/" + r.den.str();
            }
            case RingKind::GaloisField: return Ring::poly_in_t_to_string(std::get<detail::Gf>(v_).c);
            case RingKind::QuadraticRing: {
                const auto& q = std::get<detail::Quad>(v_);
                if (q.b == 0) return q.a.str();
                std::string bw = q.b.str() + "*w";
                if (q.a == 0) return bw;
                if (q.b > 0) return q.a.str() + "+" + bw;
                return q.a.str() + "-" + Int(-q.b).str() + "*w";
            }
        }
        return "?";
    }

   private:
    RingElement(RingPtr r, detail::Payload v) : ring_(std::move(r)), v_(std::move(v)) {}

    void check_same(const RingElement& o) const {
        if (!same_ring(ring_, o.ring_)) fail(Errc::WrongRing, "mixed-ring arithmetic");
    }

    static detail::Rat reduce_rat(Int num, Int den) {
        if (den == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
        if (den < 0) {
            den = -den;
            num = -num;
        }
        Int g = int_gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
        return detail::Rat{std::move(num), std::move(den)};
    }

    static std::vector<long> reduce_gf(std::vector<long> c, const Ring& r) {
        long p = r.p();
        int k = r.extension_degree();
        const auto& m = r.modulus();
        for (auto& x : c) x = ((x % p) + p) % p;
        // reduce modulo the monic modulus
        for (int d = static_cast<int>(c.size()) - 1; d >= k; --d) {
            long lead = c[d];
            if (lead != 0) {
                for (int i = 0; i <= k; ++i) {
                    long& x = c[d - k + i];
                    x = ((x - lead * m[i]) % p + p) % p;
                }
            }
        }
        c.resize(k, 0);
        return c;
    }

    std::vector<Int> sort_key() const {
        switch (ring_->kind()) {
            case RingKind::Integers:
            case RingKind::PrimeField: return {std::get<Int>(v_)};
            case RingKind::Rationals: {
                const auto& r = std::get<detail::Rat>(v_);
                return {r.num, r.den};
            }
            case RingKind::GaloisField: {
                std::vector<Int> k;
                for (long c : std::get<detail::Gf>(v_).c) k.emplace_back(c);
                return k;
            }
            case RingKind::QuadraticRing: {
                const auto& q = std::get<detail::Quad>(v_);
                return {q.a, q.b};
            }
        }
        return {};
    }

    RingPtr ring_;
    detail::Payload v_;
};

// ---------------------------------------------------------------------------
// Ring operations
// ---------------------------------------------------------------------------

inline bool is_unit(const RingElement& x) {
    switch (x.ring()->kind()) {
        case RingKind::Integers: {
            const Int& n = x.as_integer();
            return n == 1 || n == -1;
        }
        case RingKind::Rationals:
        case RingKind::PrimeField:
        case RingKind::GaloisField: return !x.is_zero();
        case RingKind::QuadraticRing: {
            const auto& q = x.as_quadratic();
            return q.a * q.a + 5 * q.b * q.b == 1;
        }
    }
    return false;
}

// N(a + b*sqrt(-5)) = a^2 + 5 b^2, as an element of Z. Multiplicative.
inline RingElement norm(const RingElement& x) {
    if (x.ring()->kind() != RingKind::QuadraticRing) fail(Errc::WrongRing, "norm is defined on Z[sqrt(-5)]");
    const auto& q = x.as_quadratic();
    return RingElement::from_int(Ring::integers(), q.a * q.a + 5 * q.b * q.b);
}

inline RingElement quad_conjugate(const RingElement& x) {
    const auto& q = x.as_quadratic();
    return RingElement::quadratic(x.ring(), q.a, -q.b);
}

// gcd over Z (nonnegative, gcd(0,0)=0) and over fields (1 unless both zero).
// Deliberately partial: Z[sqrt(-5)] is not a gcd domain here.
inline RingElement gcd(const RingElement& x, const RingElement& y) {
    const RingPtr& r = x.ring();
    if (!same_ring(r, y.ring())) fail(Errc::WrongRing, "gcd of mixed rings");
    if (r->kind() == RingKind::Integers)
        return RingElement::from_int(r, int_gcd(x.as_integer(), y.as_integer()));
    if (r->is_field()) {
        if (x.is_zero() && y.is_zero()) return RingElement::zero(r);
        return RingElement::one(r);
    }
    fail(Errc::UnsupportedDomain, "gcd is not available over " + r->name());
}

inline RingElement inverse_of_unit(const RingElement& x);

// q with x = q*y when y exactly divides x in K; absent otherwise.
inline std::optional<RingElement> exact_div(const RingElement& x, const RingElement& y) {
    const RingPtr& r = x.ring();
    if (!same_ring(r, y.ring())) fail(Errc::WrongRing, "exact_div of mixed rings");
    if (y.is_zero()) fail(Errc::DivisionByZero, "exact_div by zero");
    if (r->is_field()) return x * inverse_of_unit(y);
    if (r->kind() == RingKind::Integers) {
        const Int& a = x.as_integer();
        const Int& b = y.as_integer();
        if (a % b != 0) return std::nullopt;
        return RingElement::from_int(r, a / b);
    }
    // Z[sqrt(-5)]: x/y = x*conj(y)/N(y), integral iff both components divide.
    RingElement num = x * quad_conjugate(y);
    Int n = y.as_quadratic().a * y.as_quadratic().a + 5 * y.as_quadratic().b * y.as_quadratic().b;
    const auto& q = num.as_quadratic();
    if (q.a % n != 0 || q.b % n != 0) return std::nullopt;
    return RingElement::quadratic(r, q.a / n, q.b / n);
}

inline RingElement inverse_of_unit(const RingElement& x) {
    const RingPtr& r = x.ring();
    switch (r->kind()) {
        case RingKind::Integers: {
            if (!is_unit(x)) fail(Errc::NotAUnit, x.str() + " is not a unit in Z");
            return x;  // +-1 are self-inverse
        }
        case RingKind::Rationals: {
            const auto& q = x.as_rational();
            if (q.num == 0) fail(Errc::NotAUnit, "0 has no inverse");
            return RingElement::rational(r, q.den, q.num);
        }
        case RingKind::PrimeField: {
            const Int& a = x.as_integer();
            if (a == 0) fail(Errc::NotAUnit, "0 has no inverse");
            // extended Euclid on (a, p)
            Int t = 0, newt = 1, rr = r->p(), newr = a;
            while (newr != 0) {
                Int qq = rr / newr;
                Int tmp = t - qq * newt;
                t = newt;
                newt = tmp;
                tmp = rr - qq * newr;
                rr = newr;
                newr = tmp;
            }
            t %= r->p();
            if (t < 0) t += r->p();
            return RingElement::from_int(r, t);
        }
        case RingKind::GaloisField: {
            if (x.is_zero()) fail(Errc::NotAUnit, "0 has no inverse");
            // x^(q-2) via square-and-multiply
            Int e = r->cardinality() - 2;
            RingElement acc = RingElement::one(r);
            RingElement base = x;
            while (e > 0) {
                if ((e & 1) != 0) acc = acc * base;
                base = base * base;
                e >>= 1;
            }
            return acc;
        }
        case RingKind::QuadraticRing: {
            if (!is_unit(x)) fail(Errc::NotAUnit, x.str() + " is not a unit in Z[sqrt(-5)]");
            return quad_conjugate(x);  // N(x)=1, so x^-1 = conj(x)
        }
    }
    fail(Errc::WrongRing, "inverse_of_unit");
}

inline RingElement pow(const RingElement& x, Int e) {
    RingElement acc = RingElement::one(x.ring());
    RingElement base = x;
    while (e > 0) {
        if ((e & 1) != 0) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// All elements of a finite ring, in a fixed deterministic order.
inline std::vector<RingElement> all_elements(const RingPtr& r) {
    if (!r->is_finite()) fail(Errc::WrongRing, "all_elements of an infinite ring");
    std::vector<RingElement> out;
    if (r->kind() == RingKind::PrimeField) {
        for (long i = 0; i < r->p(); ++i) out.push_back(RingElement::from_int(r, i));
        return out;
    }
    int k = r->extension_degree();
    std::vector<long> c(k, 0);
    while (true) {
        out.push_back(RingElement::galois(r, c));
        int i = 0;
        while (i < k && c[i] == r->p() - 1) c[i++] = 0;
        if (i == k) break;
        ++c[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Ring automorphisms
// ---------------------------------------------------------------------------

/*
 * Aut K for the supported descriptors: identity everywhere; Frobenius powers
 * x -> x^(p^j) for F_{p^k}; conjugation a+bw -> a-bw for Z[sqrt(-5)].
 */
class RingAutomorphism {
   public:
    enum class Kind { Identity, Frobenius, Conjugation };

    static RingAutomorphism identity(const RingPtr& r) { return RingAutomorphism(r, Kind::Identity, 0); }

    static RingAutomorphism frobenius(const RingPtr& r, int j) {
        if (r->kind() != RingKind::GaloisField && r->kind() != RingKind::PrimeField)
            fail(Errc::WrongRing, "Frobenius needs a finite field");
        int k = (r->kind() == RingKind::GaloisField) ? r->extension_degree() : 1;
        j = ((j % k) + k) % k;
        if (j == 0) return identity(r);
        return RingAutomorphism(r, Kind::Frobenius, j);
    }

    static RingAutomorphism conjugation(const RingPtr& r) {
        if (r->kind() != RingKind::QuadraticRing) fail(Errc::WrongRing, "conjugation needs Z[sqrt(-5)]");
        return RingAutomorphism(r, Kind::Conjugation, 0);
    }

    static std::vector<RingAutomorphism> all(const RingPtr& r) {
        std::vector<RingAutomorphism> out{identity(r)};
        if (r->kind() == RingKind::GaloisField)
            for (int j = 1; j < r->extension_degree(); ++j) out.push_back(frobenius(r, j));
        if (r->kind() == RingKind::QuadraticRing) out.push_back(conjugation(r));
        return out;
    }

    const RingPtr& ring() const { return ring_; }
    Kind kind() const { return kind_; }
    int frobenius_power() const { return power_; }
    bool is_identity() const { return kind_ == Kind::Identity; }

    RingElement operator()(const RingElement& x) const {
        if (!same_ring(x.ring(), ring_)) fail(Errc::WrongRing, "automorphism applied to foreign element");
        switch (kind_) {
            case Kind::Identity: return x;
            case Kind::Frobenius: {
                Int e = 1;
                for (int i = 0; i < power_; ++i) e *= ring_->p();
                return pow(x, e);
            }
            case Kind::Conjugation: return quad_conjugate(x);
        }
        return x;
    }

    RingAutomorphism inverse() const {
        if (kind_ == Kind::Frobenius) {
            int k = ring_->extension_degree();
            return frobenius(ring_, (k - power_) % k);
        }
        return *this;  // identity and conjugation are involutive
    }

    std::string str() const {
        switch (kind_) {
            case Kind::Identity: return "identity";
            case Kind::Frobenius: return "frobenius^" + std::to_string(power_);
            case Kind::Conjugation: return "conjugation";
        }
        return "?";
    }

    bool operator==(const RingAutomorphism& o) const {
        return same_ring(ring_, o.ring_) && kind_ == o.kind_ && power_ == o.power_;
    }

   private:
    RingAutomorphism(RingPtr r, Kind k, int power) : ring_(std::move(r)), kind_(k), power_(power) {}

    RingPtr ring_;
    Kind kind_;
    int power_;
};

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

inline std::string strip_ws(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

// Lightweight cursor over a whitespace-free string.
struct Cursor {
    const std::string& s;
    size_t i = 0;
    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(Errc::SyntaxError, std::string("expected '") + c + "' at offset " + std::to_string(i));
    }
    Int integer() {
        bool neg = eat('-');
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(Errc::SyntaxError, "expected digits");
        Int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        return neg ? -v : v;
    }
};

// polynomial in t over the integers: terms c, t, t^j, c*t^j joined by +/-
inline std::vector<long> parse_poly_in_t(const std::string& text) {
    Cursor c{text};
    std::vector<long> coeffs;
    auto add = [&](int deg, long v) {
        if (static_cast<int>(coeffs.size()) <= deg) coeffs.resize(deg + 1, 0);
        coeffs[deg] += v;
    };
    bool first = true;
    while (!c.done()) {
        long sign = 1;
        if (c.eat('+')) {
        } else if (c.eat('-')) {
            sign = -1;
        } else if (!first) {
            fail(Errc::SyntaxError, "expected '+' or '-' in modulus polynomial");
        }
        first = false;
        long coef = 1;
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coef = static_cast<long>(c.integer());
            have_coef = true;
        }
        auto degree = [&]() -> int {
            if (!c.eat('^')) return 1;
            Int d = c.integer();
            if (d < 0 || d > 64) fail(Errc::SyntaxError, "exponent out of range in polynomial over t");
            return static_cast<int>(d);
        };
        if (c.eat('t')) {
            add(degree(), sign * coef);
        } else if (c.eat('*')) {
            c.expect('t');
            add(degree(), sign * coef);
        } else {
            if (!have_coef) fail(Errc::SyntaxError, "expected term in modulus polynomial");
            add(0, sign * coef);
        }
    }
    if (coeffs.empty()) coeffs.push_back(0);
    return coeffs;
}

}  // namespace detail

/*
 * Ring literal grammar:
 *   Z | Q | F<p> | F<p^k>=F<p>[t]/(<poly in t>) | Z[sqrt(-5)]
 */
inline RingPtr parse_ring(const std::string& spec) {
    std::string s = detail::strip_ws(spec);
    if (s == "Z") return Ring::integers();
    if (s == "Q") return Ring::rationals();
    if (s == "Z[sqrt(-5)]") return Ring::quadratic_minus5();
    if (!s.empty() && s[0] == 'F') {
        size_t eq = s.find('=');
        if (eq == std::string::npos) {
            detail::Cursor c{s};
            c.expect('F');
            Int p = c.integer();
            if (!c.done()) fail(Errc::SyntaxError, "trailing input in ring literal: " + spec);
            if (p < 2 || p > 1000000) fail(Errc::SyntaxError, "field characteristic out of range");
            if (!Ring::is_prime(static_cast<long>(p)))
                fail(Errc::SyntaxError, "F" + p.str() + ": not prime; use F" + p.str() + "=F<p>[t]/(...)");
            return Ring::prime_field(static_cast<long>(p));
        }
        // F<q>=F<p>[t]/(<poly>)
        std::string head = s.substr(0, eq), tail = s.substr(eq + 1);
        detail::Cursor ch{head};
        ch.expect('F');
        Int q = ch.integer();
        if (!ch.done()) fail(Errc::SyntaxError, "bad Galois field literal: " + spec);
        detail::Cursor ct{tail};
        ct.expect('F');
        Int p = ct.integer();
        ct.expect('[');
        ct.expect('t');
        ct.expect(']');
        ct.expect('/');
        ct.expect('(');
        size_t close = tail.rfind(')');
        if (close == std::string::npos || close + 1 != tail.size())
            fail(Errc::SyntaxError, "bad Galois field literal: " + spec);
        std::string polytext = tail.substr(ct.i, close - ct.i);
        auto coeffs = detail::parse_poly_in_t(polytext);
        int k = static_cast<int>(coeffs.size()) - 1;
        if (p < 2 || p > 100000) fail(Errc::SyntaxError, "field characteristic out of range");
        Int expect_q = 1;
        for (int i = 0; i < k; ++i) expect_q *= p;
        if (q != expect_q) fail(Errc::SyntaxError, "F" + q.str() + " does not match p^deg = " + expect_q.str());
        return Ring::galois_field(static_cast<long>(p), k, coeffs);
    }
    fail(Errc::SyntaxError, "unrecognized ring literal: " + spec);
}

/*
 * Element literals: integers -?[0-9]+ everywhere; a/b over Q; polynomials in
 * t over F_{p^k}; a+b*w over Z[sqrt(-5)] with w = sqrt(-5).
 */
inline RingElement parse_element(const RingPtr& r, const std::string& text) {
    std::string s = detail::strip_ws(text);
    if (s.empty()) fail(Errc::SyntaxError, "empty element literal");
    switch (r->kind()) {
        case RingKind::Integers:
        case RingKind::PrimeField: {
            detail::Cursor c{s};
            Int v = c.integer();
            if (!c.done()) {
                if (c.peek() == '/') fail(Errc::NonCanonicalCoefficient, "fraction in " + r->name() + ": " + text);
                fail(Errc::SyntaxError, "trailing input in element literal: " + text);
            }
            return RingElement::from_int(r, v);
        }
        case RingKind::Rationals: {
            detail::Cursor c{s};
            Int num = c.integer();
            if (c.done()) return RingElement::from_int(r, num);
            c.expect('/');
            Int den = c.integer();
            if (!c.done()) fail(Errc::SyntaxError, "trailing input in element literal: " + text);
            if (den == 0) fail(Errc::NonCanonicalCoefficient, "zero denominator: " + text);
            return RingElement::rational(r, num, den);
        }
        case RingKind::GaloisField: {
            auto coeffs = detail::parse_poly_in_t(s);
            return RingElement::galois(r, coeffs);
        }
        case RingKind::QuadraticRing: {
            detail::Cursor c{s};
            Int a = 0, b = 0;
            bool first = true;
            while (!c.done()) {
                int sign = 1;
                if (c.eat('+')) {
                } else if (c.eat('-')) {
                    sign = -1;
                } else if (!first) {
                    fail(Errc::SyntaxError, "expected '+' or '-' in quadratic literal: " + text);
                }
                first = false;
                if (c.eat('w')) {
                    b += sign;
                    continue;
                }
                Int v = c.integer();
                if (c.eat('*')) {
                    c.expect('w');
                    b += sign * v;
                } else {
                    a += sign * v;
                }
            }
            if (first) fail(Errc::SyntaxError, "empty quadratic literal");
            return RingElement::quadratic(r, a, b);
        }
    }
    fail(Errc::WrongRing, "parse_element");
}

}  // namespace enda

#endif  // ENDA_RING_HPP
