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

#include <catch2/catch_amalgamated.hpp>
#include <enda/ring.hpp>
#include <enda/sampling.hpp>

using namespace enda;

TEST_CASE("ring literals parse to canonical descriptors") {
    CHECK(parse_ring("Z")->kind() == RingKind::Integers);
    CHECK(parse_ring("Q")->kind() == RingKind::Rationals);
    CHECK(parse_ring("F5")->kind() == RingKind::PrimeField);
    CHECK(parse_ring("Z[sqrt(-5)]")->kind() == RingKind::QuadraticRing);
    CHECK(parse_ring(" Z [ sqrt(-5) ] ")->kind() == RingKind::QuadraticRing);

    // oracle for the Galois modulus: t^2+1 has no root mod 3
    for (long t = 0; t < 3; ++t) CHECK((t * t + 1) % 3 != 0);
    RingPtr f9 = parse_ring("F9=F3[t]/(t^2+1)");
    CHECK(f9->kind() == RingKind::GaloisField);
    CHECK(f9->p() == 3);
    CHECK(f9->extension_degree() == 2);
    CHECK(f9->cardinality() == 9);
}

TEST_CASE("ring literal rejections") {
    CHECK_THROWS_MATCHES(parse_ring("Zp"), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == Errc::SyntaxError; }));
    CHECK_THROWS_MATCHES(parse_ring("F4"), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == Errc::SyntaxError; }));
    // t^2+2 has the root t=1 mod 3; t^2+1 has the root t=1 mod 2
    CHECK_THROWS_MATCHES(parse_ring("F9=F3[t]/(t^2+2)"), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::NotIrreducible;
                         }));
    CHECK_THROWS_MATCHES(parse_ring("F4=F2[t]/(t^2+1)"), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::NotIrreducible;
                         }));
    CHECK_THROWS_MATCHES(parse_ring("F8=F2[t]/(t^2+t+1)"), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::SyntaxError;  // 8 != 2^2
                         }));
}

TEST_CASE("units in the supported domains") {
    RingPtr k = Ring::quadratic_minus5();
    CHECK(is_unit(RingElement::quadratic(k, 1, 0)));
    CHECK(is_unit(RingElement::quadratic(k, -1, 0)));
    CHECK_FALSE(is_unit(RingElement::quadratic(k, 2, 0)));
    // norm(1 + w) = 1 + 5 = 6 != 1
    CHECK(norm(RingElement::quadratic(k, 1, 1)) == RingElement::from_int(Ring::integers(), 6));
    CHECK_FALSE(is_unit(RingElement::quadratic(k, 1, 1)));

    RingPtr z = Ring::integers();
    CHECK(is_unit(RingElement::from_int(z, -1)));
    CHECK_FALSE(is_unit(RingElement::from_int(z, 2)));
    CHECK(is_unit(RingElement::rational(Ring::rationals(), 2, 3)));
}

TEST_CASE("norm on Z[sqrt(-5)]") {
    RingPtr k = Ring::quadratic_minus5();
    RingPtr z = Ring::integers();
    RingElement u = RingElement::quadratic(k, 1, 1);   // 1 + w
    RingElement v = RingElement::quadratic(k, 1, -1);  // 1 - w
    CHECK(norm(u) == RingElement::from_int(z, 6));
    CHECK(norm(RingElement::zero(k)) == RingElement::zero(z));
    CHECK(u * v == RingElement::from_int(k, 6));
    CHECK(norm(u * v) == RingElement::from_int(z, 36));
    CHECK(norm(u * v) == norm(u) * norm(v));
    CHECK_THROWS_AS(norm(RingElement::from_int(z, 3)), Error);
}

TEST_CASE("gcd on Z and fields, deliberately partial elsewhere") {
    RingPtr z = Ring::integers();
    auto zi = [&](long n) { return RingElement::from_int(z, n); };
    CHECK(gcd(zi(12), zi(18)) == zi(6));
    CHECK(gcd(zi(0), zi(7)) == zi(7));
    CHECK(gcd(zi(-4), zi(6)) == zi(2));
    CHECK(gcd(zi(0), zi(0)) == zi(0));

    RingPtr f5 = Ring::prime_field(5);
    CHECK(gcd(RingElement::from_int(f5, 2), RingElement::from_int(f5, 3)).is_one());
    CHECK(gcd(RingElement::zero(f5), RingElement::zero(f5)).is_zero());

    RingPtr k = Ring::quadratic_minus5();
    CHECK_THROWS_MATCHES(gcd(RingElement::from_int(k, 2), RingElement::from_int(k, 3)), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::UnsupportedDomain; }));
}

TEST_CASE("exact division") {
    RingPtr z = Ring::integers();
    auto zi = [&](long n) { return RingElement::from_int(z, n); };
    CHECK(*exact_div(zi(6), zi(2)) == zi(3));
    CHECK_FALSE(exact_div(zi(3), zi(2)).has_value());
    CHECK_THROWS_MATCHES(exact_div(zi(3), zi(0)), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == Errc::DivisionByZero;
                         }));

    RingPtr k = Ring::quadratic_minus5();
    RingElement six = RingElement::from_int(k, 6);
    RingElement u = RingElement::quadratic(k, 1, 1);
    // oracle: (1+w)(1-w) = 1 + 5 = 6
    CHECK(u * RingElement::quadratic(k, 1, -1) == six);
    auto q = exact_div(six, u);
    REQUIRE(q.has_value());
    CHECK(*q == RingElement::quadratic(k, 1, -1));
    CHECK_FALSE(exact_div(RingElement::from_int(k, 3), u).has_value());

    RingPtr f9 = parse_ring("F9=F3[t]/(t^2+1)");
    RingElement t = parse_element(f9, "t");
    auto tq = exact_div(RingElement::one(f9), t);
    REQUIRE(tq.has_value());
    CHECK(*tq * t == RingElement::one(f9));
}

TEST_CASE("automorphism groups are exactly the listed kinds") {
    CHECK(RingAutomorphism::all(Ring::integers()).size() == 1);
    CHECK(RingAutomorphism::all(Ring::rationals()).size() == 1);
    CHECK(RingAutomorphism::all(Ring::prime_field(7)).size() == 1);
    CHECK(RingAutomorphism::all(Ring::quadratic_minus5()).size() == 2);

    RingPtr f9 = parse_ring("F9=F3[t]/(t^2+1)");
    auto auts = RingAutomorphism::all(f9);
    REQUIRE(auts.size() == 2);
    RingAutomorphism frob = auts[1];
    RingElement t = parse_element(f9, "t");
    CHECK(frob(t) == pow(t, 3));
    CHECK(frob(frob(t)) == t);  // Frobenius order 2 on F9
    CHECK(frob.inverse()(frob(t)) == t);

    RingPtr k = Ring::quadratic_minus5();
    RingAutomorphism conj = RingAutomorphism::conjugation(k);
    RingElement w = RingElement::quadratic(k, 0, 1);
    CHECK(conj(w) == -w);
    CHECK(conj(conj(w)) == w);
}

TEST_CASE("element canonical forms") {
    RingPtr q = Ring::rationals();
    CHECK(RingElement::rational(q, 2, 4) == RingElement::rational(q, 1, 2));
    CHECK(RingElement::rational(q, 1, -2) == RingElement::rational(q, -1, 2));
    CHECK(RingElement::rational(q, 0, 5) == RingElement::zero(q));

    RingPtr f5 = Ring::prime_field(5);
    CHECK(RingElement::from_int(f5, 7) == RingElement::from_int(f5, 2));
    CHECK(RingElement::from_int(f5, -1) == RingElement::from_int(f5, 4));

    RingPtr f9 = parse_ring("F9=F3[t]/(t^2+1)");
    // t^2 = -1 = 2 under the modulus
    CHECK(parse_element(f9, "t^2") == RingElement::from_int(f9, 2));
    CHECK(parse_element(f9, "t^2+1") == RingElement::zero(f9));
}

TEST_CASE("element literal round-trips per ring") {
    Rng rng(0);
    for (const RingPtr& r : {Ring::integers(), Ring::rationals(), Ring::prime_field(5),
                             parse_ring("F9=F3[t]/(t^2+1)"), Ring::quadratic_minus5()}) {
        for (int t = 0; t < 300; ++t) {
            RingElement x = random_element(r, rng, 30);
            CHECK(parse_element(r, x.str()) == x);
        }
        CHECK(*parse_ring(r->name()) == *r);
    }
}

TEST_CASE("literal rejections per ring") {
    CHECK_THROWS_MATCHES(parse_element(Ring::integers(), "1/2"), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::NonCanonicalCoefficient; }));
    CHECK_THROWS_MATCHES(parse_element(Ring::rationals(), "1/0"), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::NonCanonicalCoefficient; }));
    CHECK_THROWS_AS(parse_element(Ring::integers(), "abc"), Error);
    CHECK_THROWS_AS(parse_element(Ring::quadratic_minus5(), "1+*w"), Error);
}

TEST_CASE("quadratic literal shapes") {
    RingPtr k = Ring::quadratic_minus5();
    CHECK(parse_element(k, "1+1*w") == RingElement::quadratic(k, 1, 1));
    CHECK(parse_element(k, "1-1*w") == RingElement::quadratic(k, 1, -1));
    CHECK(parse_element(k, "w") == RingElement::quadratic(k, 0, 1));
    CHECK(parse_element(k, "-w") == RingElement::quadratic(k, 0, -1));
    CHECK(parse_element(k, "3*w") == RingElement::quadratic(k, 0, 3));
    CHECK(parse_element(k, "-2") == RingElement::quadratic(k, -2, 0));
}
