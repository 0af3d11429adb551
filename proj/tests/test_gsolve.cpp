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
#include <enda/gsolve.hpp>
#include <enda/selftest.hpp>

using namespace enda;

TEST_CASE("the reflection substitution matrix cubes to minus the identity") {
    CHECK(reflection_matrix_cubes_to_minus_identity());
}

TEST_CASE("F2, m=3: the one-dimensional solution line") {
    RingPtr f2 = Ring::prime_field(2);
    GSolutionSpace space = solve_g_system(f2, 3);
    REQUIRE(space.dimension == 1);
    AlgebraPtr a = Algebra::nilpotent(f2, 2, 3);
    CHECK(space.basis[0] == parse_poly("x1*x2 + x2*x1", a));

    // brute-force oracle over all 16 degree-2 coefficient vectors
    auto brute = detail::brute_force_g_solutions(f2, 3);
    CHECK(brute.size() == 2);  // zero and the line's nonzero point
    bool found = false;
    for (const auto& g : brute)
        if (g == space.basis[0]) found = true;
    CHECK(found);
}

TEST_CASE("F3, m=3: only the trivial solution") {
    GSolutionSpace space = solve_g_system(Ring::prime_field(3), 3);
    CHECK(space.dimension == 0);
}

TEST_CASE("F3, m=4: the space contains the binomial defect") {
    RingPtr f3 = Ring::prime_field(3);
    GSolutionSpace space = solve_g_system(f3, 4);
    REQUIRE(space.dimension > 0);
    NcPoly eee = binomial_defect_poly(f3, 4);
    CHECK(verify_candidate(eee, f3, 4).ok);
    CHECK(space_contains(space, eee));
}

TEST_CASE("the binomial defect solves the system whenever it should") {
    // (x1+x2)^(m-1) - x1^(m-1) - x2^(m-1) over F2 for every m, and for even m
    // elsewhere
    for (int m : {3, 4, 5, 6}) {
        RingPtr f2 = Ring::prime_field(2);
        NcPoly g = binomial_defect_poly(f2, m);
        CHECK(verify_candidate(g, f2, m).ok);
    }
    RingPtr f5 = Ring::prime_field(5);
    CHECK(verify_candidate(binomial_defect_poly(f5, 4), f5, 4).ok);
    RingPtr z = Ring::integers();
    CHECK(verify_candidate(binomial_defect_poly(z, 4), z, 4).ok);
}

TEST_CASE("candidate verification and witnesses") {
    RingPtr f2 = Ring::prime_field(2);
    AlgebraPtr a = Algebra::nilpotent(f2, 2, 3);

    CHECK(verify_candidate(NcPoly::zero(a), f2, 3).ok);

    GVerifyResult bad = verify_candidate(parse_poly("x1*x2", a), f2, 3);
    CHECK_FALSE(bad.ok);
    CHECK(bad.failure == "not swap-symmetric");
    REQUIRE(bad.witness.has_value());
    CHECK((*bad.witness == Word{1, 2} || *bad.witness == Word{2, 1}));

    CHECK_THROWS_MATCHES(verify_candidate(parse_poly("x1", a), f2, 3), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::WrongDegree; }));
}

TEST_CASE("reflection identities") {
    RingPtr f2 = Ring::prime_field(2);
    AlgebraPtr a2 = Algebra::nilpotent(f2, 2, 3);
    NcPoly g = parse_poly("x1*x2 + x2*x1", a2);

    // oracle: expand -g(x1+x2, -x1) by hand via direct substitution
    NcPoly x1 = NcPoly::generator(a2, 1), x2 = NcPoly::generator(a2, 2);
    NcPoly sg = -substitute(g, {x1 + x2, -x1});
    CHECK(sg == g);

    CHECK(reflection_check(g, f2, 3));
    CHECK(reflection_check(NcPoly::zero(a2), f2, 3));

    RingPtr f3 = Ring::prime_field(3);
    CHECK(reflection_check(binomial_defect_poly(f3, 4), f3, 4));

    CHECK_THROWS_MATCHES(reflection_check(parse_poly("x1*x1 + x2*x2", a2), f2, 3), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::PrerequisiteFailed; }));
}

TEST_CASE("solution dimension dichotomy across the desk-scale grid") {
    for (long p : {2L, 3L, 5L})
        for (int m = 3; m <= 6; ++m) {
            GSolutionSpace space = solve_g_system(Ring::prime_field(p), m);
            bool expect_nonzero = (m % 2 == 0) || p == 2;
            INFO("F" << p << ", m=" << m);
            CHECK((space.dimension > 0) == expect_nonzero);
            for (const auto& g : space.basis) {
                CHECK(verify_candidate(g, space.instance.ring, m).ok);
                CHECK(reflection_check(g, space.instance.ring, m));
            }
        }
}

TEST_CASE("solver agrees with exhaustive enumeration at desk scale") {
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
        CHECK(span.size() == brute.size());
    }
}

TEST_CASE("integer coefficients: kernel scaled to primitive vectors") {
    RingPtr z = Ring::integers();
    GSolutionSpace space = solve_g_system(z, 4);
    CHECK(space.dimension > 0);
    NcPoly eee = binomial_defect_poly(z, 4);
    CHECK(space_contains(space, eee));
    for (const auto& g : space.basis) {
        Int content = 0;
        for (const auto& [w, c] : g.terms()) content = int_gcd(content, c.as_integer());
        CHECK(content == 1);
    }
    CHECK_THROWS_MATCHES(solve_g_system(Ring::quadratic_minus5(), 4), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::UnsupportedRing; }));
}
