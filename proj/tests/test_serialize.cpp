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
#include <enda/selftest.hpp>
#include <enda/serialize.hpp>
#include <fstream>

using namespace enda;

TEST_CASE("matrix literals round-trip") {
    RingPtr k = Ring::quadratic_minus5();
    Json j = Json::parse(R"([["1+1*w","2"],["3","1-1*w"]])");
    ExactMatrix c = matrix_from_json(k, j);
    CHECK(c == dedekind_matrix_c());
    CHECK(matrix_from_json(k, matrix_to_json(c)) == c);

    Rng rng(0);
    for (const RingPtr& r : {Ring::integers(), Ring::rationals(), Ring::prime_field(7),
                             parse_ring("F9=F3[t]/(t^2+1)"), Ring::quadratic_minus5()}) {
        for (int t = 0; t < 50; ++t) {
            ExactMatrix m(r, 2, 3);
            for (int i = 0; i < 2; ++i)
                for (int jj = 0; jj < 3; ++jj) m.at(i, jj) = random_element(r, rng, 50);
            CHECK(matrix_from_json(r, matrix_to_json(m)) == m);
        }
    }
}

TEST_CASE("integer matrices serialize as JSON numbers") {
    RingPtr z = Ring::integers();
    ExactMatrix a(z, 2, 2);
    a.at(0, 0) = RingElement::from_int(z, 2);
    a.at(0, 1) = RingElement::from_int(z, 4);
    a.at(1, 0) = RingElement::from_int(z, 3);
    a.at(1, 1) = RingElement::from_int(z, 6);
    auto res = r1mf_factorize(a);
    CHECK(r1mf_result_to_json(res).dump() == R"({"column":[[2],[3]],"row":[[1,2]]})");
}

TEST_CASE("algebra descriptors round-trip") {
    for (const AlgebraPtr& a : {Algebra::nilpotent(Ring::prime_field(2), 2, 3),
                                Algebra::free_associative(Ring::rationals(), 4),
                                Algebra::zero_multiplication(Ring::quadratic_minus5(), 2)}) {
        AlgebraPtr b = algebra_from_json(algebra_to_json(a));
        CHECK(*a == *b);
    }
}

TEST_CASE("endomorphism families round-trip") {
    AlgebraPtr a = Algebra::nilpotent(Ring::prime_field(3), 2, 3);
    Rng rng(1);
    BijectionRecipe s = sample_full_recipe(a, rng, false);
    EndoFamily family = conjugated_standard_family(s);
    Json j = family_to_json(family);
    CHECK(j.contains("n"));
    CHECK(j.contains("algebra"));
    CHECK(j.at("images").contains("e_1_1"));
    EndoFamily back = family_from_json(j);
    for (int i = 1; i <= 2; ++i)
        for (int k = 1; k <= 2; ++k) CHECK(back.at(i, k) == family.at(i, k));
    CHECK_FALSE(back.has_recipe());  // backing does not survive serialization
}

TEST_CASE("recipes round-trip") {
    AlgebraPtr a = Algebra::nilpotent(Ring::prime_field(2), 2, 3);
    NcPoly g = parse_poly("x1*x2 + x2*x1", a);
    BijectionRecipe s(a, RingElement::one(a->ring()), RingAutomorphism::identity(a->ring()),
                      Endo::identity(a), true, TwistData(g, RingElement::one(a->ring())));
    Json j = recipe_to_json(s);
    BijectionRecipe back = recipe_from_json(j, a);
    CHECK(back.mirror_flag());
    REQUIRE(back.twist().has_value());
    CHECK(back.twist()->g() == g);
    Rng rng(2);
    for (int t = 0; t < 50; ++t) {
        NcPoly f = random_poly(a, rng);
        CHECK(evaluate(back, f) == evaluate(s, f));
    }

    RingPtr f9 = parse_ring("F9=F3[t]/(t^2+1)");
    AlgebraPtr a9 = Algebra::nilpotent(f9, 2, 3);
    BijectionRecipe frob(a9, parse_element(f9, "t"), RingAutomorphism::frobenius(f9, 1), Endo::identity(a9),
                         false, std::nullopt);
    BijectionRecipe frob_back = recipe_from_json(recipe_to_json(frob), a9);
    CHECK(frob_back.scalar() == frob.scalar());
    CHECK(frob_back.ring_auto() == frob.ring_auto());
}

namespace {

// minimal structural validator for the shipped schemas: type / required /
// properties / items
bool validates(const Json& value, const Json& schema) {
    if (schema.contains("type")) {
        const std::string t = schema.at("type").get<std::string>();
        if (t == "object" && !value.is_object()) return false;
        if (t == "array" && !value.is_array()) return false;
        if (t == "string" && !value.is_string()) return false;
        if (t == "integer" && !value.is_number_integer()) return false;
        if (t == "boolean" && !value.is_boolean()) return false;
    }
    if (schema.contains("required"))
        for (const auto& key : schema.at("required"))
            if (!value.contains(key.get<std::string>())) return false;
    if (schema.contains("properties") && value.is_object())
        for (const auto& [key, sub] : schema.at("properties").items())
            if (value.contains(key) && !validates(value.at(key), sub)) return false;
    if (schema.contains("items") && value.is_array())
        for (const auto& item : value)
            if (!validates(item, schema.at("items"))) return false;
    return true;
}

Json load_schema(const std::string& name) {
    std::ifstream in(std::string(ENDA_SOURCE_DIR) + "/docs/schemas/" + name);
    REQUIRE(in.good());
    return Json::parse(in);
}

}  // namespace

TEST_CASE("outputs validate against the shipped schemas") {
    CHECK(validates(gsolution_to_json(solve_g_system(Ring::prime_field(2), 3)), load_schema("gsolve.schema.json")));
    CHECK(validates(gsolution_to_json(solve_g_system(Ring::prime_field(3), 3)), load_schema("gsolve.schema.json")));
    CHECK(validates(dedekind_report_to_json(dedekind_report()), load_schema("dedekind-report.schema.json")));

    RingPtr z = Ring::integers();
    ExactMatrix a(z, 2, 2);
    a.at(0, 0) = RingElement::from_int(z, 2);
    a.at(0, 1) = RingElement::from_int(z, 4);
    a.at(1, 0) = RingElement::from_int(z, 3);
    a.at(1, 1) = RingElement::from_int(z, 6);
    CHECK(validates(r1mf_result_to_json(r1mf_factorize(a)), load_schema("rank1-factor.schema.json")));
    CHECK(validates(r1mf_result_to_json(r1mf_factorize(dedekind_matrix_c())),
                    load_schema("rank1-factor.schema.json")));

    Json checks = Json::array();
    for (const auto& r : selftest_gsolve(0, 10))
        checks.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    Json selftest_doc{{"seed", 0}, {"samples", 10}, {"checks", checks}, {"failed", 0}};
    CHECK(validates(selftest_doc, load_schema("selftest.schema.json")));

    // negative control: a wrong shape must not validate
    CHECK_FALSE(validates(Json{{"ring", 3}}, load_schema("gsolve.schema.json")));
}

TEST_CASE("report JSON shapes") {
    Json d = dedekind_report_to_json(dedekind_report());
    CHECK(d.at("all_passed").is_boolean());
    CHECK(d.at("items").is_array());
    CHECK(d.at("items").size() == 5);
    for (const auto& it : d.at("items")) {
        CHECK(it.contains("name"));
        CHECK(it.contains("passed"));
        CHECK(it.contains("detail"));
    }

    Json g = gsolution_to_json(solve_g_system(Ring::prime_field(2), 3));
    CHECK(g.at("ring") == "F2");
    CHECK(g.at("m") == 3);
    CHECK(g.at("dimension") == 1);
    REQUIRE(g.at("basis").is_array());
    CHECK(g.at("basis")[0] == "x1*x2 + x2*x1");
}
