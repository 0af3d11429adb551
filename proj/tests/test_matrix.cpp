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
#include <enda/matrix.hpp>
#include <enda/sampling.hpp>

using namespace enda;

namespace {

ExactMatrix ints(const RingPtr& r, std::vector<std::vector<long>> rows) {
    ExactMatrix m(r, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = RingElement::from_int(r, rows[i][j]);
    return m;
}

// brute-force oracle: all integer column/row factorizations with entries in
// [-bound, bound]
bool brute_force_has_factorization(const ExactMatrix& a, long bound) {
    int n = a.rows(), m = a.cols();
    std::vector<long> c(n, -bound), d(m, -bound);
    auto advance = [bound](std::vector<long>& v) {
        size_t i = 0;
        while (i < v.size() && v[i] == bound) v[i++] = -bound;
        if (i == v.size()) return false;
        ++v[i];
        return true;
    };
    do {
        std::fill(d.begin(), d.end(), -bound);
        do {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < m && ok; ++j)
                    if (a.at(i, j).as_integer() != Int(c[i]) * d[j]) ok = false;
            if (ok) return true;
        } while (advance(d));
    } while (advance(c));
    return false;
}

}  // namespace

TEST_CASE("rank over the fraction field") {
    RingPtr z = Ring::integers();
    CHECK(rank(ExactMatrix::identity(z, 3)) == 3);
    CHECK(rank(ExactMatrix(z, 2, 4)) == 0);
    CHECK(rank(ints(z, {{2, 4}, {3, 6}})) == 1);
    CHECK(rank(ints(z, {{1, 2}, {3, 4}})) == 2);
    // the rank-1 matrix over Z[sqrt(-5)]
    CHECK(rank(dedekind_matrix_c()) == 1);
}

TEST_CASE("determinant and adjugate") {
    RingPtr z = Ring::integers();
    ExactMatrix m = ints(z, {{1, 2}, {3, 4}});
    CHECK(det(m) == RingElement::from_int(z, -2));
    CHECK(adjugate(m) * m == det(m) * ExactMatrix::identity(z, 2));
    CHECK(det(dedekind_matrix_m()) == RingElement::from_int(Ring::quadratic_minus5(), 2));

    Rng rng(1);
    for (int t = 0; t < 50; ++t) {
        ExactMatrix u = random_unimodular(z, 3, rng);
        auto inv = inverse(u);
        REQUIRE(inv.has_value());
        CHECK(*inv * u == ExactMatrix::identity(z, 3));
        CHECK(is_unit(det(u)));
    }
}

TEST_CASE("rank-1 factorization over Z matches the frozen oracle value") {
    RingPtr z = Ring::integers();
    ExactMatrix a = ints(z, {{2, 4}, {3, 6}});
    // oracle: some bounded integer factorization exists at all
    REQUIRE(brute_force_has_factorization(a, 6));
    auto res = r1mf_factorize(a);
    auto* f = std::get_if<Rank1Factorization>(&res);
    REQUIRE(f != nullptr);
    CHECK(f->column * f->row == a);
    CHECK(f->column == ints(z, {{2}, {3}}));
    CHECK(f->row == ints(z, {{1, 2}}));
}

TEST_CASE("rank preconditions are enforced") {
    RingPtr z = Ring::integers();
    CHECK_THROWS_MATCHES(r1mf_factorize(ints(z, {{0, 0}, {0, 0}})), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == Errc::RankNotOne; }));
    CHECK_THROWS_MATCHES(r1mf_factorize(ints(z, {{1, 0}, {0, 1}})), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == Errc::RankNotOne; }));
}

TEST_CASE("rank-1 factorization over fields and Z[sqrt(-5)]") {
    Rng rng(2);
    for (const RingPtr& r : {Ring::rationals(), Ring::prime_field(5), parse_ring("F9=F3[t]/(t^2+1)")}) {
        for (int t = 0; t < 50; ++t) {
            ExactMatrix a = random_rank1_matrix(r, 3, 4, rng);
            auto res = r1mf_factorize(a);
            auto* f = std::get_if<Rank1Factorization>(&res);
            REQUIRE(f != nullptr);
            CHECK(f->column * f->row == a);
        }
    }
    RingPtr k = Ring::quadratic_minus5();
    ExactMatrix ones = ints(k, {{2, 2}, {2, 2}});
    auto res = r1mf_factorize(ones);
    auto* f = std::get_if<Rank1Factorization>(&res);
    REQUIRE(f != nullptr);
    CHECK(f->column * f->row == ones);
}

TEST_CASE("huge integer entries stay exact") {
    RingPtr z = Ring::integers();
    Int big("123456789012345678901234567890");
    ExactMatrix a(z, 3, 3);
    std::vector<Int> c{big, big * 2 + 1, big * big};
    std::vector<Int> d{Int(7), big - 3, big * 4 + 5};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a.at(i, j) = RingElement::from_int(z, c[i] * d[j]);
    CHECK(rank(a) == 1);
    auto res = r1mf_factorize(a);
    auto* f = std::get_if<Rank1Factorization>(&res);
    REQUIRE(f != nullptr);
    CHECK(f->column * f->row == a);

    // determinant of a big unimodular-by-construction product
    ExactMatrix u = ExactMatrix::identity(z, 3);
    u.at(0, 1) = RingElement::from_int(z, big);
    u.at(1, 2) = RingElement::from_int(z, -big);
    CHECK(det(u) == RingElement::one(z));
    CHECK(*inverse(u) * u == ExactMatrix::identity(z, 3));
}

TEST_CASE("the matrix c admits no factorization over Z[sqrt(-5)]") {
    auto res = r1mf_factorize(dedekind_matrix_c());
    auto* cert = std::get_if<NonFactorizationCertificate>(&res);
    REQUIRE(cert != nullptr);
    CHECK(cert->candidates_examined == 6);  // +-1 and +-1 +- w: every norm divisor of 6
    CHECK(cert->search_bound.find("exact division") != std::string::npos);
}

TEST_CASE("matrix-unit conjugation") {
    RingPtr z = Ring::integers();

    SECTION("the elementary family itself") {
        std::vector<ExactMatrix> e;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) e.push_back(ExactMatrix::elementary(z, 2, i, j));
        ExactMatrix rho = conjugate_matrix_units(e);
        auto ri = inverse(rho);
        REQUIRE(ri.has_value());
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                CHECK(rho * e[static_cast<size_t>(i) * 2 + j] * *ri == ExactMatrix::elementary(z, 2, i, j));
    }

    SECTION("random unimodular conjugates are recovered") {
        Rng rng(3);
        for (int t = 0; t < 30; ++t) {
            int n = static_cast<int>(rand_range(rng, 2, 4));
            ExactMatrix q = random_unimodular(z, n, rng);
            ExactMatrix qi = *inverse(q);
            std::vector<ExactMatrix> family;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) family.push_back(q * ExactMatrix::elementary(z, n, i, j) * qi);
            ExactMatrix rho = conjugate_matrix_units(family);
            ExactMatrix ri = *inverse(rho);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    CHECK(rho * family[static_cast<size_t>(i) * n + j] * ri ==
                          ExactMatrix::elementary(z, n, i, j));
        }
    }

    SECTION("violated relation is rejected") {
        std::vector<ExactMatrix> family;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) family.push_back(ExactMatrix::elementary(z, 2, i, j));
        family[1] = ints(z, {{0, 2}, {0, 0}});  // P_12 P_21 = 2 E_11 != P_11
        CHECK_THROWS_MATCHES(conjugate_matrix_units(family), Error,
                             Catch::Matchers::Predicate<Error>(
                                 [](const Error& e) { return e.code() == Errc::NotMatrixUnits; }));
    }

    SECTION("field coefficients take the field factorization path") {
        for (const RingPtr& r : {Ring::prime_field(2), Ring::prime_field(5), parse_ring("F9=F3[t]/(t^2+1)")}) {
            Rng rng(17);
            for (int t = 0; t < 10; ++t) {
                int n = 3;
                ExactMatrix q(r, n, n);
                do {
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j) q.at(i, j) = random_element(r, rng);
                } while (det(q).is_zero());
                ExactMatrix qi = *inverse(q);
                std::vector<ExactMatrix> family;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) family.push_back(q * ExactMatrix::elementary(r, n, i, j) * qi);
                ExactMatrix rho = conjugate_matrix_units(family);
                ExactMatrix ri = *inverse(rho);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        CHECK(rho * family[static_cast<size_t>(i) * n + j] * ri ==
                              ExactMatrix::elementary(r, n, i, j));
            }
        }
    }

    SECTION("zero member is rejected") {
        std::vector<ExactMatrix> family;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) family.push_back(ExactMatrix::elementary(z, 2, i, j));
        family[3] = ExactMatrix(z, 2, 2);
        CHECK_THROWS_AS(conjugate_matrix_units(family), Error);
    }
}

TEST_CASE("Dedekind report asserts every item by exact computation") {
    DedekindReport rep = dedekind_report();
    REQUIRE(rep.items.size() == 5);
    for (const auto& it : rep.items) {
        INFO(it.name << ": " << it.detail);
        CHECK(it.passed);
    }
    RingPtr k = Ring::quadratic_minus5();
    // frozen facts: det m = 2 (the displayed inverse forces it), det a = 1
    CHECK(det(dedekind_matrix_m()) == RingElement::from_int(k, 2));
    CHECK(det(dedekind_matrix_a()) == RingElement::from_int(k, 1));
    CHECK(dedekind_matrix_m() * dedekind_matrix_m() ==
          RingElement::from_int(k, 2) * dedekind_matrix_a());
}

TEST_CASE("linear solving and kernels") {
    RingPtr z = Ring::integers();
    RingPtr f2 = Ring::prime_field(2);

    CHECK(kernel_basis(ExactMatrix::identity(z, 3)).empty());

    ExactMatrix row(f2, 1, 2);
    row.at(0, 0) = RingElement::one(f2);
    row.at(0, 1) = RingElement::one(f2);
    auto ker = kernel_basis(row);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == RingElement::one(f2));
    CHECK(ker[0][1] == RingElement::one(f2));

    ExactMatrix two(z, 1, 1);
    two.at(0, 0) = RingElement::from_int(z, 2);
    CHECK_FALSE(linear_solve(two, {RingElement::from_int(z, 3)}).has_value());
    auto sol = linear_solve(two, {RingElement::from_int(z, 6)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == RingElement::from_int(z, 3));

    Rng rng(4);
    RingPtr q = Ring::rationals();
    for (int t = 0; t < 25; ++t) {
        ExactMatrix a(q, 3, 4);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 4; ++j) a.at(i, j) = random_element(q, rng, 4);
        for (const auto& v : kernel_basis(a)) {
            for (int i = 0; i < 3; ++i) {
                RingElement s = RingElement::zero(q);
                for (int j = 0; j < 4; ++j) s = s + a.at(i, j) * v[j];
                CHECK(s.is_zero());
            }
        }
    }
}
