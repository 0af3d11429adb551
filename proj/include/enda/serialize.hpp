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

#ifndef ENDA_SERIALIZE_HPP
#define ENDA_SERIALIZE_HPP

#include <json.hpp>
#include <limits>
#include <string>

#include "bijection.hpp"
#include "endo.hpp"
#include "gsolve.hpp"
#include "matrix.hpp"
#include "ncpoly.hpp"
#include "ring.hpp"

namespace enda {

using Json = nlohmann::json;

// Matrix literal: JSON array-of-arrays of ring-element literals. Integer and
// residue entries print as JSON numbers when they fit; everything else as
// literal strings.
inline Json matrix_to_json(const ExactMatrix& m) {
    bool numeric = m.ring()->kind() == RingKind::Integers || m.ring()->kind() == RingKind::PrimeField;
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) {
            const RingElement& x = m.at(i, j);
            if (numeric) {
                const Int& n = x.as_integer();
                if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max()) {
                    row.push_back(n.convert_to<long long>());
                    continue;
                }
            }
            row.push_back(x.str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ExactMatrix matrix_from_json(const RingPtr& ring, const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
        fail(Errc::SyntaxError, "matrix literal must be a non-empty array of arrays");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j[0].size());
    ExactMatrix m(ring, rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols) fail(Errc::SyntaxError, "ragged matrix literal");
        for (int c = 0; c < cols; ++c) {
            const Json& cell = j[i][c];
            if (cell.is_number_integer())
                m.at(i, c) = RingElement::from_int(ring, Int(cell.get<long long>()));
            else if (cell.is_string())
                m.at(i, c) = parse_element(ring, cell.get<std::string>());
            else
                fail(Errc::SyntaxError, "matrix entries must be strings or integers");
        }
    }
    return m;
}

inline Json algebra_to_json(const AlgebraPtr& a) {
    Json j;
    j["ring"] = a->ring()->name();
    j["generators"] = a->gens();
    switch (a->variety()) {
        case Variety::FreeAssociative: j["variety"] = "free"; break;
        case Variety::Nilpotent:
            j["variety"] = "nilpotent";
            j["m"] = a->nilpotency();
            break;
        case Variety::ZeroMultiplication: j["variety"] = "zero-multiplication"; break;
    }
    return j;
}

inline AlgebraPtr algebra_from_json(const Json& j) {
    RingPtr ring = parse_ring(j.at("ring").get<std::string>());
    int gens = j.at("generators").get<int>();
    std::string v = j.at("variety").get<std::string>();
    if (v == "free") return Algebra::free_associative(ring, gens);
    if (v == "nilpotent") return Algebra::nilpotent(ring, gens, j.at("m").get<int>());
    if (v == "zero-multiplication") return Algebra::zero_multiplication(ring, gens);
    fail(Errc::SyntaxError, "unknown variety: " + v);
}

// EndoFamily: { "n": n, "algebra": {...}, "images": { "e_1_1": [poly,...] } }
inline Json family_to_json(const EndoFamily& f) {
    Json j;
    j["n"] = f.n();
    j["algebra"] = algebra_to_json(f.algebra());
    Json images = Json::object();
    for (int i = 1; i <= f.n(); ++i)
        for (int k = 1; k <= f.n(); ++k) {
            Json polys = Json::array();
            for (const auto& p : f.at(i, k).images()) polys.push_back(print_poly(p));
            images["e_" + std::to_string(i) + "_" + std::to_string(k)] = std::move(polys);
        }
    j["images"] = std::move(images);
    return j;
}

inline EndoFamily family_from_json(const Json& j) {
    AlgebraPtr alg = algebra_from_json(j.at("algebra"));
    int n = j.at("n").get<int>();
    if (n != alg->gens()) fail(Errc::SyntaxError, "family index count must match the generator count");
    std::vector<Endo> members;
    const Json& images = j.at("images");
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            std::string key = "e_" + std::to_string(i) + "_" + std::to_string(k);
            const Json& polys = images.at(key);
            if (static_cast<int>(polys.size()) != n) fail(Errc::SyntaxError, key + " must list n images");
            std::vector<NcPoly> im;
            for (const auto& p : polys) im.push_back(parse_poly(p.get<std::string>(), alg));
            members.emplace_back(alg, std::move(im));
        }
    return EndoFamily(alg, std::move(members));
}

inline RingAutomorphism ring_auto_from_string(const RingPtr& ring, const std::string& s) {
    if (s == "identity") return RingAutomorphism::identity(ring);
    if (s == "conjugation") return RingAutomorphism::conjugation(ring);
    if (s.rfind("frobenius^", 0) == 0) {
        int j = 0;
        try {
            j = std::stoi(s.substr(10));
        } catch (const std::exception&) {
            fail(Errc::SyntaxError, "bad Frobenius power: " + s);
        }
        return RingAutomorphism::frobenius(ring, j);
    }
    if (s == "frobenius") return RingAutomorphism::frobenius(ring, 1);
    fail(Errc::SyntaxError, "unknown ring automorphism: " + s);
}

// Recipe: { "scalar": "...", "ringAuto": "...", "baseAuto": [poly,...],
//           "mirror": bool, "twist": { "g": poly, "gamma": "..." } | null }
inline Json recipe_to_json(const BijectionRecipe& r) {
    Json j;
    j["scalar"] = r.scalar().str();
    j["ringAuto"] = r.ring_auto().str();
    Json base = Json::array();
    for (const auto& p : r.base_auto().images()) base.push_back(print_poly(p));
    j["baseAuto"] = std::move(base);
    j["mirror"] = r.mirror_flag();
    if (r.twist()) {
        j["twist"] = Json{{"g", print_poly(r.twist()->g())}, {"gamma", r.twist()->gamma().str()}};
    } else {
        j["twist"] = nullptr;
    }
    return j;
}

inline BijectionRecipe recipe_from_json(const Json& j, const AlgebraPtr& alg) {
    const RingPtr& ring = alg->ring();
    RingElement scalar = j.contains("scalar") ? parse_element(ring, j.at("scalar").get<std::string>())
                                              : RingElement::one(ring);
    RingAutomorphism phi = j.contains("ringAuto") ? ring_auto_from_string(ring, j.at("ringAuto").get<std::string>())
                                                  : RingAutomorphism::identity(ring);
    Endo base = Endo::identity(alg);
    if (j.contains("baseAuto") && !j.at("baseAuto").is_null()) {
        std::vector<NcPoly> im;
        for (const auto& p : j.at("baseAuto")) im.push_back(parse_poly(p.get<std::string>(), alg));
        base = Endo(alg, std::move(im));
    }
    bool mirror = j.value("mirror", false);
    std::optional<TwistData> twist;
    if (j.contains("twist") && !j.at("twist").is_null()) {
        NcPoly g = parse_poly(j.at("twist").at("g").get<std::string>(), alg);
        RingElement gamma = parse_element(ring, j.at("twist").at("gamma").get<std::string>());
        if (!g.is_zero()) twist.emplace(g, gamma);
    }
    return BijectionRecipe(alg, std::move(scalar), std::move(phi), std::move(base), mirror, std::move(twist));
}

inline Json report_item_to_json(const ReportItem& it) {
    return Json{{"name", it.name}, {"passed", it.passed}, {"detail", it.detail}};
}

inline Json dedekind_report_to_json(const DedekindReport& rep) {
    Json j;
    j["ring"] = "Z[sqrt(-5)]";
    j["m"] = matrix_to_json(dedekind_matrix_m());
    j["a"] = matrix_to_json(dedekind_matrix_a());
    j["c"] = matrix_to_json(dedekind_matrix_c());
    Json items = Json::array();
    for (const auto& it : rep.items) items.push_back(report_item_to_json(it));
    j["items"] = std::move(items);
    j["all_passed"] = rep.all_passed();
    return j;
}

// CLI-facing: { "ring": "...", "m": k, "dimension": d, "basis": [poly,...] }
inline Json gsolution_to_json(const GSolutionSpace& s) {
    Json j;
    j["ring"] = s.instance.ring->name();
    j["m"] = s.instance.m;
    j["dimension"] = s.dimension;
    Json basis = Json::array();
    for (const auto& g : s.basis) basis.push_back(print_poly(g));
    j["basis"] = std::move(basis);
    return j;
}

inline Json r1mf_result_to_json(const R1mfResult& res) {
    Json j;
    if (const auto* f = std::get_if<Rank1Factorization>(&res)) {
        j["column"] = matrix_to_json(f->column);
        j["row"] = matrix_to_json(f->row);
    } else {
        const auto& cert = std::get<NonFactorizationCertificate>(res);
        j["certificate"] = Json{{"matrix", matrix_to_json(cert.matrix)},
                                {"searchBound", cert.search_bound},
                                {"candidatesExamined", cert.candidates_examined}};
    }
    return j;
}

}  // namespace enda

#endif  // ENDA_SERIALIZE_HPP
