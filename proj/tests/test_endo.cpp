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
#include <enda/bijection.hpp>
#include <enda/endo.hpp>
#include <enda/selftest.hpp>

using namespace enda;

TEST_CASE("standard endomorphisms") {
    AlgebraPtr a = Algebra::nilpotent(Ring::integers(), 2, 3);
    EndoFamily e = standard_endos(a);
    CHECK(apply(e.at(1, 2), NcPoly::generator(a, 2)) == NcPoly::generator(a, 1));
    CHECK(apply(e.at(1, 2), NcPoly::generator(a, 1)).is_zero());
    CHECK(compose(e.at(1, 1), e.at(1, 1)) == e.at(1, 1));  // idempotent
    CHECK(e.matrix_unit_relations_hold());

    AlgebraPtr a3 = Algebra::nilpotent(Ring::prime_field(5), 3, 3);
    EndoFamily e3 = standard_endos(a3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) CHECK(compose(e3.at(i, j), e3.at(j, k)) == e3.at(i, k));
}

TEST_CASE("composition convention") {
    AlgebraPtr a = Algebra::nilpotent(Ring::integers(), 2, 3);
    EndoFamily e = standard_endos(a);
    CHECK(apply(compose(e.at(1, 2), e.at(2, 1)), NcPoly::generator(a, 1)) == NcPoly::generator(a, 1));
    CHECK(compose(e.at(1, 2), e.at(2, 1)) == e.at(1, 1));
    Endo f = Endo(a, {NcPoly::generator(a, 2), NcPoly::generator(a, 1)});
    CHECK(compose(Endo::identity(a), f) == f);
    CHECK(compose(f, Endo::identity(a)) == f);

    // theta_{a,b} o e11 sends x1 -> a and x2 -> 0
    NcPoly img1 = NcPoly::generator(a, 1) + NcPoly::generator(a, 2);
    Endo theta(a, {img1, NcPoly::generator(a, 1)});
    Endo glued = compose(theta, e.at(1, 1));
    CHECK(glued.image(1) == img1);
    CHECK(glued.image(2).is_zero());

    Rng rng(0);
    for (int t = 0; t < 100; ++t) {
        Endo u = random_endo(a, rng), v = random_endo(a, rng);
        NcPoly x = random_poly(a, rng);
        CHECK(apply(compose(u, v), x) == apply(u, apply(v, x)));
    }
}

TEST_CASE("probing matrices") {
    AlgebraPtr a = Algebra::nilpotent(Ring::integers(), 3, 3);
    EndoFamily e = standard_endos(a);
    std::vector<int> id{1, 2, 3};

    SigmaMatrix t = sigma_matrix(e, id);
    // e_ij(x_j) = x_i: every column reads (x1,...,xn)
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(t.at(i, j, 3) == NcPoly::generator(a, i));

    std::vector<int> swapped{2, 1, 3};
    SigmaMatrix ts = sigma_matrix(e, swapped);
    CHECK(ts.at(1, 1, 3) == apply(e.at(1, 1), NcPoly::generator(a, 2)));

    EndoFamily zero(a, std::vector<Endo>(9, Endo::zero(a)));
    SigmaMatrix tz = sigma_matrix(zero, id);
    for (const auto& entry : tz.entries) CHECK(entry.is_zero());
}

TEST_CASE("linear part matrices") {
    AlgebraPtr a = Algebra::nilpotent(Ring::integers(), 2, 3);
    EndoFamily e = standard_endos(a);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            CHECK(linear_part_matrix(e.at(i, j)) == ExactMatrix::elementary(a->ring(), 2, i - 1, j - 1));

    Endo swap(a, {NcPoly::generator(a, 2), NcPoly::generator(a, 1)});
    ExactMatrix p = linear_part_matrix(swap);
    CHECK(p.at(0, 1) == RingElement::one(a->ring()));
    CHECK(p.at(1, 0) == RingElement::one(a->ring()));
    CHECK(p.at(0, 0).is_zero());

    Endo higher(a, {NcPoly::generator(a, 1) * NcPoly::generator(a, 2), NcPoly::generator(a, 2) * NcPoly::generator(a, 1)});
    CHECK(linear_part_matrix(higher).is_zero());
}

TEST_CASE("linear part is a homomorphism into matrices") {
    AlgebraPtr a = Algebra::nilpotent(Ring::prime_field(3), 3, 4);
    Rng rng(1);
    for (int t = 0; t < 200; ++t) {
        Endo f = random_endo(a, rng), g = random_endo(a, rng);
        CHECK(linear_part_matrix(compose(f, g)) == linear_part_matrix(f) * linear_part_matrix(g));
    }
}

TEST_CASE("automorphism detection and inversion") {
    AlgebraPtr a = Algebra::nilpotent(Ring::integers(), 2, 3);
    NcPoly x1 = NcPoly::generator(a, 1), x2 = NcPoly::generator(a, 2);

    CHECK(is_automorphism(Endo::identity(a)));

    // unipotent: x1 -> x1 + x2 x1, x2 -> x2; the inverse subtracts the tail
    Endo uni(a, {x1 + x2 * x1, x2});
    CHECK(is_automorphism(uni));
    auto inv = inverse_endo(uni);
    REQUIRE(inv.has_value());
    CHECK(inv->image(1) == x1 - x2 * x1);
    CHECK(inv->image(2) == x2);
    CHECK(compose(uni, *inv) == Endo::identity(a));
    CHECK(compose(*inv, uni) == Endo::identity(a));

    // det = 2 is not a unit of Z
    Endo doubling(a, {RingElement::from_int(a->ring(), 2) * x1, x2});
    CHECK_FALSE(is_automorphism(doubling));

    AlgebraPtr free2 = Algebra::free_associative(Ring::integers(), 2);
    CHECK_THROWS_MATCHES(is_automorphism(Endo::identity(free2)), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::UnsupportedVariety; }));
}

TEST_CASE("automorphism inversion across rings and classes") {
    Rng rng(2);
    for (const AlgebraPtr& a : {Algebra::nilpotent(Ring::prime_field(2), 2, 3),
                                Algebra::nilpotent(Ring::prime_field(3), 3, 4),
                                Algebra::nilpotent(Ring::integers(), 2, 4),
                                Algebra::nilpotent(Ring::quadratic_minus5(), 2, 3),
                                Algebra::zero_multiplication(Ring::prime_field(5), 3)}) {
        for (int t = 0; t < 40; ++t) {
            Endo f = random_base_automorphism(a, rng);
            REQUIRE(is_automorphism(f));
            Endo inv = *inverse_endo(f);
            CHECK(compose(f, inv) == Endo::identity(a));
            CHECK(compose(inv, f) == Endo::identity(a));
        }
    }
}

TEST_CASE("standard-base recovery") {
    SECTION("the standard family recovers the base itself") {
        AlgebraPtr a = Algebra::nilpotent(Ring::integers(), 3, 3);
        EndoFamily e = standard_endos(a);
        auto base = find_standard_base(e);
        REQUIRE(base.has_value());
        for (int i = 1; i <= 3; ++i) CHECK((*base)[i - 1] == NcPoly::generator(a, i));
    }

    SECTION("semi-inner conjugated families over F2 and F3") {
        Rng rng(3);
        for (const AlgebraPtr& a : {Algebra::nilpotent(Ring::prime_field(2), 2, 3),
                                    Algebra::nilpotent(Ring::prime_field(3), 2, 4),
                                    Algebra::nilpotent(Ring::prime_field(3), 3, 3)}) {
            for (int t = 0; t < 15; ++t) {
                BijectionRecipe s = sample_full_recipe(a, rng, /*mirror_allowed=*/false);
                EndoFamily family = conjugated_standard_family(s);
                auto base = find_standard_base(family);
                REQUIRE(base.has_value());
                int n = a->gens();
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j)
                        for (int k = 1; k <= n; ++k) {
                            NcPoly got = apply(family.at(i, j), (*base)[k - 1]);
                            if (j == k)
                                CHECK(got == (*base)[i - 1]);
                            else
                                CHECK(got.is_zero());
                        }
            }
        }
    }

    SECTION("families violating the relations are rejected") {
        AlgebraPtr a = Algebra::nilpotent(Ring::prime_field(2), 2, 3);
        EndoFamily e = standard_endos(a);
        std::vector<Endo> broken = e.members();
        broken[1] = Endo::identity(a);  // e_12 := id breaks e_12 o e_12 = 0
        CHECK_THROWS_MATCHES(find_standard_base(EndoFamily(a, broken)), Error,
                             Catch::Matchers::Predicate<Error>(
                                 [](const Error& e2) { return e2.code() == Errc::NotMatrixUnits; }));
    }

    SECTION("all-zero linear parts yield no base") {
        // a family of theta-endomorphisms into F' cannot satisfy the
        // relations nonzero-ly at degree 1; build the degenerate zero-probe
        // case through a family with higher-degree images only
        AlgebraPtr a = Algebra::nilpotent(Ring::prime_field(2), 2, 4);
        NcPoly q = NcPoly::generator(a, 1) * NcPoly::generator(a, 1);
        // e(x) = q-like images square to zero in N4 only if lengths add up;
        // instead verify directly that a zero family is rejected as not
        // matrix units (P_ij must be nonzero)
        EndoFamily zero(a, std::vector<Endo>(4, Endo::zero(a)));
        CHECK_THROWS_AS(find_standard_base(zero), Error);
    }
}

TEST_CASE("relations survive conjugation by any recipe") {
    Rng rng(4);
    AlgebraPtr a = Algebra::nilpotent(Ring::prime_field(3), 2, 4);
    for (int t = 0; t < 60; ++t) {
        BijectionRecipe s = (t % 2 == 0) ? sample_full_recipe(a, rng)
                                         : sample_normalized_recipe(a, static_cast<int>(rand_range(rng, 0, 4)), rng);
        CHECK(conjugated_standard_family(s).matrix_unit_relations_hold());
    }
}

TEST_CASE("gluing endomorphisms") {
    AlgebraPtr a = Algebra::nilpotent(Ring::prime_field(2), 2, 3);
    EndoFamily e = standard_endos(a);
    std::vector<int> id{1, 2};

    SECTION("identity recipe with alpha_i = e_ii glues to the identity") {
        BijectionRecipe s = BijectionRecipe::identity(a);
        EndoFamily family = conjugated_standard_family(s);
        Endo glued = glue_endomorphism(family, {e.at(1, 1), e.at(2, 2)}, id);
        CHECK(glued == Endo::identity(a));
    }

    SECTION("base-permutation conjugation glues arbitrary alphas") {
        Endo perm(a, {NcPoly::generator(a, 2), NcPoly::generator(a, 1)});
        BijectionRecipe s(a, RingElement::one(a->ring()), RingAutomorphism::identity(a->ring()), perm, false,
                          std::nullopt);
        EndoFamily family = conjugated_standard_family(s);
        Rng rng(5);
        for (int t = 0; t < 20; ++t) {
            std::vector<Endo> alphas{random_endo(a, rng), random_endo(a, rng)};
            Endo glued = glue_endomorphism(family, alphas, id);
            SigmaMatrix tm = sigma_matrix(family, id);
            for (int i = 1; i <= 2; ++i)
                for (int j = 1; j <= 2; ++j)
                    CHECK(apply(glued, tm.at(i, j, 2)) == apply(alphas[i - 1], tm.at(i, j, 2)));
        }
    }

    SECTION("gluing against every probe pins the endomorphism on generators") {
        Endo perm(a, {NcPoly::generator(a, 2), NcPoly::generator(a, 1)});
        BijectionRecipe s(a, RingElement::one(a->ring()), RingAutomorphism::identity(a->ring()), perm, false,
                          std::nullopt);
        EndoFamily family = conjugated_standard_family(s);
        Rng rng(6);
        std::vector<Endo> alphas{random_endo(a, rng), random_endo(a, rng)};
        Endo g1 = glue_endomorphism(family, alphas, {1, 2});
        Endo g2 = glue_endomorphism(family, alphas, {2, 1});
        CHECK(g1 == g2);
    }

    SECTION("disagreement anywhere on the probes separates endomorphisms") {
        Endo perm(a, {NcPoly::generator(a, 2), NcPoly::generator(a, 1)});
        BijectionRecipe s(a, RingElement::one(a->ring()), RingAutomorphism::identity(a->ring()), perm, false,
                          std::nullopt);
        EndoFamily family = conjugated_standard_family(s);
        Rng rng(7);
        std::vector<Endo> alphas{random_endo(a, rng), random_endo(a, rng)};
        Endo alpha = glue_endomorphism(family, alphas, id);
        // perturb one generator image; some probe entry must now disagree,
        // which is what makes the glued endomorphism unique
        std::vector<NcPoly> im = alpha.images();
        im[0] = im[0] + NcPoly::generator(a, 1);
        Endo gamma(a, im);
        bool separated = false;
        std::vector<int> perm_idx{1, 2};
        do {
            SigmaMatrix tm = sigma_matrix(family, perm_idx);
            for (int i = 1; i <= 2 && !separated; ++i)
                for (int j = 1; j <= 2 && !separated; ++j)
                    if (apply(alpha, tm.at(i, j, 2)) != apply(gamma, tm.at(i, j, 2))) separated = true;
        } while (!separated && std::next_permutation(perm_idx.begin(), perm_idx.end()));
        CHECK(separated);
    }

    SECTION("a family without backing is rejected") {
        CHECK_THROWS_MATCHES(glue_endomorphism(e, {e.at(1, 1), e.at(2, 2)}, id), Error,
                             Catch::Matchers::Predicate<Error>(
                                 [](const Error& err) { return err.code() == Errc::NotFromRecipe; }));
    }
}
