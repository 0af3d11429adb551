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

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <enda/enda.hpp>
#include <enda/serialize.hpp>

namespace {

using namespace enda;

bool color_enabled() {
    const char* c = std::getenv("ENDA_COLOR");
    return c && std::string(c) == "1";
}

std::string tag(bool ok) {
    if (color_enabled()) return ok ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
    return ok ? "PASS" : "FAIL";
}

struct Options {
    std::string ring = "Z";
    int m = 0;  // 0 = free associative
    int n = 2;
    std::string matrix, poly, recipe, family, format = "text", gamma = "1", ring_auto = "identity";
    unsigned long seed = 0;
    int samples = 200;
    bool paper_m = false, paper_a = false, paper_c = false, paper_g = false;
};

AlgebraPtr make_algebra(const Options& opt) {
    RingPtr ring = parse_ring(opt.ring);
    if (opt.m == 0) return Algebra::free_associative(ring, opt.n);
    return Algebra::nilpotent(ring, opt.n, opt.m);
}

Json read_json_arg(const std::string& arg, const char* what) {
    std::string text = arg;
    if (!text.empty() && text[0] != '[' && text[0] != '{') {
        std::ifstream in(text);
        if (!in) fail(Errc::SyntaxError, std::string("cannot open ") + what + " file: " + text);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return Json::parse(text);
}

ExactMatrix input_matrix(const Options& opt) {
    if (opt.paper_m) return dedekind_matrix_m();
    if (opt.paper_a) return dedekind_matrix_a();
    if (opt.paper_c) return dedekind_matrix_c();
    if (opt.matrix.empty()) fail(Errc::SyntaxError, "no matrix given (--matrix or --paper-m/--paper-a/--paper-c)");
    return matrix_from_json(parse_ring(opt.ring), read_json_arg(opt.matrix, "matrix"));
}

int cmd_rank(const Options& opt) {
    ExactMatrix a = input_matrix(opt);
    int r = rank(a);
    if (opt.format == "json")
        std::cout << Json{{"ring", a.ring()->name()}, {"rank", r}}.dump() << "\n";
    else
        std::cout << "rank = " << r << "\n";
    return 0;
}

int cmd_factor(const Options& opt) {
    ExactMatrix a = input_matrix(opt);
    R1mfResult res = r1mf_factorize(a);
    if (opt.format == "json") {
        std::cout << r1mf_result_to_json(res).dump() << "\n";
    } else if (const auto* f = std::get_if<Rank1Factorization>(&res)) {
        std::cout << "column = " << matrix_to_json(f->column).dump()
                  << "\nrow    = " << matrix_to_json(f->row).dump() << "\n";
    } else {
        const auto& cert = std::get<NonFactorizationCertificate>(res);
        std::cout << "no column-by-row factorization exists\nsearch bound: " << cert.search_bound << "\n";
    }
    return 0;
}

int cmd_conjugate_units(const Options& opt) {
    RingPtr ring = parse_ring(opt.ring);
    Json j = read_json_arg(opt.family, "family");
    if (!j.is_array() || j.empty()) fail(Errc::SyntaxError, "family must be a JSON array of n^2 matrices");
    std::vector<ExactMatrix> p;
    for (const auto& mj : j) p.push_back(matrix_from_json(ring, mj));
    ExactMatrix rho = conjugate_matrix_units(p);
    if (opt.format == "json")
        std::cout << Json{{"rho", matrix_to_json(rho)}, {"verified", true}}.dump() << "\n";
    else
        std::cout << "rho = " << matrix_to_json(rho).dump() << "\nconjugation identity verified exactly\n";
    return 0;
}

int cmd_dedekind(const Options& opt) {
    DedekindReport rep = dedekind_report();
    if (opt.format == "json") {
        std::cout << dedekind_report_to_json(rep).dump(2) << "\n";
    } else {
        for (const auto& it : rep.items)
            std::cout << "[" << tag(it.passed) << "] " << it.name << ": " << it.detail << "\n";
    }
    return rep.all_passed() ? 0 : 1;
}

int cmd_gsolve(const Options& opt) {
    if (opt.m < 2) fail(Errc::SyntaxError, "--m must be >= 2");
    GSolutionSpace space = solve_g_system(parse_ring(opt.ring), opt.m);
    if (opt.format == "json") {
        std::cout << gsolution_to_json(space).dump() << "\n";
    } else {
        std::cout << "dimension = " << space.dimension << "\n";
        for (const auto& g : space.basis) std::cout << "  " << print_poly(g) << "\n";
    }
    return 0;
}

int cmd_gverify(const Options& opt) {
    if (opt.m < 2) fail(Errc::SyntaxError, "--m must be >= 2");
    RingPtr ring = parse_ring(opt.ring);
    AlgebraPtr a = Algebra::nilpotent(ring, 2, opt.m);
    NcPoly g = opt.paper_g ? parse_poly("x1*x2 + x2*x1", a) : parse_poly(opt.poly, a);
    GVerifyResult res = verify_candidate(g, ring, opt.m);
    bool reflect = res.ok ? reflection_check(g, ring, opt.m) : false;
    if (opt.format == "json") {
        Json j{{"candidate", print_poly(g)}, {"satisfies_system", res.ok}, {"reflection_identities", reflect}};
        if (!res.ok) {
            j["failure"] = res.failure;
            if (res.witness) j["witness"] = word_str(*res.witness);
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "[" << tag(res.ok) << "] candidate satisfies the functional system";
        if (!res.ok) {
            std::cout << " -- " << res.failure;
            if (res.witness) std::cout << " (witness word " << word_str(*res.witness) << ")";
        }
        std::cout << "\n";
        if (res.ok) std::cout << "[" << tag(reflect) << "] reflection identities\n";
    }
    return (res.ok && reflect) ? 0 : 1;
}

BijectionRecipe tau_from_options(const Options& opt, const AlgebraPtr& a) {
    NcPoly g = opt.paper_g ? parse_poly("x1*x2 + x2*x1", a) : parse_poly(opt.poly, a);
    RingElement gamma = parse_element(a->ring(), opt.gamma);
    RingAutomorphism phi = ring_auto_from_string(a->ring(), opt.ring_auto);
    return build_twist(g, gamma, phi, a);
}

int cmd_tau_build(const Options& opt) {
    if (opt.m < 2) fail(Errc::SyntaxError, "--m must be >= 2");
    AlgebraPtr a = make_algebra(opt);
    BijectionRecipe s = tau_from_options(opt, a);
    Json j{{"algebra", algebra_to_json(a)}, {"recipe", recipe_to_json(s)}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_tau_verify(const Options& opt) {
    if (opt.m < 2) fail(Errc::SyntaxError, "--m must be >= 2");
    AlgebraPtr a = make_algebra(opt);
    BijectionRecipe s = tau_from_options(opt, a);
    TwistPowerReport rep = twist_power_identity(s);
    bool identity_ok = true;
    long count = 0;
    {
        // tau^p = Id: exhaustive when the algebra is small, sampled otherwise
        Int card = a->ring()->cardinality();
        int words = 0;
        for (int l = 1; l <= a->max_word_len(); ++l) words += static_cast<int>(words_of_length(a->gens(), l).size());
        Int total = 1;
        for (int i = 0; i < words; ++i) {
            total *= card;
            if (total > 4096) break;
        }
        bool small = total <= 4096;
        std::vector<NcPoly> elements;
        if (small) {
            auto elems = all_elements(a->ring());
            auto basis = words_up_to(a->gens(), a->max_word_len());
            std::vector<size_t> digits(basis.size(), 0);
            while (true) {
                NcPoly f(a);
                for (size_t i = 0; i < basis.size(); ++i)
                    if (digits[i]) f.add_term(basis[i], elems[digits[i]]);
                elements.push_back(f);
                size_t i = 0;
                while (i < digits.size() && digits[i] == elems.size() - 1) digits[i++] = 0;
                if (i == digits.size()) break;
                ++digits[i];
            }
        } else {
            Rng rng(opt.seed);
            for (int t = 0; t < opt.samples; ++t) elements.push_back(random_poly(a, rng, 6));
        }
        long p = rep.p;
        for (const auto& f : elements) {
            NcPoly acc = f;
            for (long r = 0; r < p; ++r) acc = evaluate(s, acc);
            if (acc != f) {
                identity_ok = false;
                break;
            }
            ++count;
        }
    }
    if (opt.format == "json") {
        Json j{{"p", rep.p},
               {"power_law", rep.power_law_ok},
               {"p_gamma_collapses", rep.p_collapses},
               {"inverse_law", rep.inverse_law_ok},
               {"tau_power_p_is_identity", identity_ok},
               {"elements_checked", count}};
        if (!rep.failures.empty()) j["failures"] = rep.failures;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "[" << tag(rep.power_law_ok) << "] power law for r = 1.." << rep.p << "\n";
        std::cout << "[" << tag(rep.p_collapses) << "] p*gamma = 0 in K\n";
        std::cout << "[" << tag(rep.inverse_law_ok) << "] inverse law\n";
        std::cout << "[" << tag(identity_ok) << "] tau^" << rep.p << " = Id on " << count << " elements\n";
        for (const auto& f : rep.failures) std::cout << "    " << f << "\n";
    }
    return (rep.ok() && identity_ok) ? 0 : 1;
}

int cmd_standard_base(const Options& opt) {
    EndoFamily family = family_from_json(read_json_arg(opt.family, "family"));
    auto base = find_standard_base(family);
    if (opt.format == "json") {
        Json j;
        j["recovered"] = base.has_value();
        if (base) {
            Json b = Json::array();
            for (const auto& z : *base) b.push_back(print_poly(z));
            j["base"] = std::move(b);
        }
        std::cout << j.dump() << "\n";
    } else if (base) {
        std::cout << "recovered base:\n";
        for (size_t i = 0; i < base->size(); ++i)
            std::cout << "  z" << (i + 1) << " = " << print_poly((*base)[i]) << "\n";
    } else {
        std::cout << "no standard base: every probe has zero linear part or verification failed\n";
    }
    return base ? 0 : 1;
}

int cmd_classify(const Options& opt) {
    AlgebraPtr a = make_algebra(opt);
    BijectionRecipe s = recipe_from_json(read_json_arg(opt.recipe, "recipe"), a);
    Classification c = classify(s);
    if (opt.format == "json")
        std::cout << Json{{"verdict", c.str()}, {"detail", c.detail}}.dump() << "\n";
    else
        std::cout << c.str() << " -- " << c.detail << "\n";
    return 0;
}

int cmd_poly_eval(const Options& opt) {
    AlgebraPtr a = make_algebra(opt);
    NcPoly f = parse_poly(opt.poly, a);
    if (opt.format == "json") {
        Json sup = Json::array();
        for (const auto& w : f.support()) sup.push_back(word_str(w));
        std::cout << Json{{"canonical", print_poly(f)},
                          {"degree", f.degree()},
                          {"terms", static_cast<int>(f.terms().size())},
                          {"support", std::move(sup)}}
                         .dump()
                  << "\n";
    } else {
        std::cout << print_poly(f) << "\n";
    }
    return 0;
}

int cmd_selftest(const Options& opt) {
    auto results = run_selftest(opt.seed, opt.samples);
    int failed = 0;
    if (opt.format == "json") {
        Json arr = Json::array();
        for (const auto& r : results) {
            arr.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
            if (!r.passed) ++failed;
        }
        std::cout << Json{{"seed", opt.seed}, {"samples", opt.samples}, {"checks", std::move(arr)}, {"failed", failed}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << "[" << tag(r.passed) << "] " << r.name;
            if (!r.passed) std::cout << " -- " << r.detail;
            std::cout << "\n";
            if (!r.passed) ++failed;
        }
        std::cout << (failed ? "FAILED " : "passed ") << (results.size() - failed) << "/" << results.size()
                  << " checks (seed " << opt.seed << ", samples " << opt.samples << ")\n";
    }
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"enda -- exact computer algebra for endomorphism semigroups of free nilpotent algebras"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--ring", opt.ring, "ring literal: Z | Q | F<p> | F<q>=F<p>[t]/(poly) | Z[sqrt(-5)]");
        cmd->add_option("--m", opt.m, "nilpotency class (omit or 0 for the free algebra)");
        cmd->add_option("--n", opt.n, "generator count");
        cmd->add_option("--format", opt.format, "text | json")->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--seed", opt.seed, "seed for randomized batches");
        cmd->add_option("--samples", opt.samples, "sample count for randomized batches");
    };

    CLI::App* rank1 = app.add_subcommand("rank1", "rank and rank-1 factorization of exact matrices");
    rank1->require_subcommand(1);
    CLI::App* rank1_rank = rank1->add_subcommand("rank", "rank over the fraction field");
    CLI::App* rank1_factor = rank1->add_subcommand("factor", "column-by-row factorization or certificate");
    for (CLI::App* c : {rank1_rank, rank1_factor}) {
        add_common(c);
        c->add_option("--matrix", opt.matrix, "JSON array-of-arrays of ring-element literals");
        c->add_flag("--paper-m", opt.paper_m, "built-in: the conjugating matrix m over Z[sqrt(-5)]");
        c->add_flag("--paper-a", opt.paper_a, "built-in: the matrix a with m^2 = 2a");
        c->add_flag("--paper-c", opt.paper_c, "built-in: the rank-1 matrix c without factorization");
    }

    CLI::App* cunits = app.add_subcommand("conjugate-units", "conjugate a matrix-unit family to the elementary matrices");
    add_common(cunits);
    cunits->add_option("--family", opt.family, "JSON array of n^2 matrices (row-major), or a file path");

    CLI::App* dedekind = app.add_subcommand("dedekind", "the Z[sqrt(-5)] counterexample");
    CLI::App* dedekind_report_cmd = dedekind->add_subcommand("report", "verify all facts exactly");
    add_common(dedekind_report_cmd);
    dedekind->require_subcommand(1);

    CLI::App* gsolve_cmd = app.add_subcommand("gsolve", "solve the symmetric-cocycle functional system");
    add_common(gsolve_cmd);

    CLI::App* gverify_cmd = app.add_subcommand("gverify", "verify a candidate twist polynomial");
    add_common(gverify_cmd);
    gverify_cmd->add_option("--poly", opt.poly, "candidate polynomial in x1, x2");
    gverify_cmd->add_flag("--paper-g", opt.paper_g, "built-in: x1*x2 + x2*x1");

    CLI::App* tau = app.add_subcommand("tau", "twist bijections");
    tau->require_subcommand(1);
    CLI::App* tau_build = tau->add_subcommand("build", "build the twist recipe from a solution g");
    CLI::App* tau_verify = tau->add_subcommand("verify", "verify the power and inverse laws");
    for (CLI::App* c : {tau_build, tau_verify}) {
        add_common(c);
        c->add_option("--poly", opt.poly, "twist polynomial g in x1, x2");
        c->add_option("--gamma", opt.gamma, "twist coefficient (default 1)");
        c->add_option("--ring-auto", opt.ring_auto, "identity | frobenius^j | conjugation");
        c->add_flag("--paper-g", opt.paper_g, "built-in: x1*x2 + x2*x1");
    }

    CLI::App* endo_cmd = app.add_subcommand("endo", "endomorphism families");
    endo_cmd->require_subcommand(1);
    CLI::App* sbase = endo_cmd->add_subcommand("standard-base", "recover a base on which a family acts standardly");
    add_common(sbase);
    sbase->add_option("--family", opt.family, "family JSON (inline or file path)");

    CLI::App* recipe_cmd = app.add_subcommand("recipe", "adjoint-bijection recipes");
    recipe_cmd->require_subcommand(1);
    CLI::App* classify_cmd = recipe_cmd->add_subcommand("classify", "classification of a recipe");
    add_common(classify_cmd);
    classify_cmd->add_option("--recipe", opt.recipe, "recipe JSON (inline or file path)");

    CLI::App* poly_cmd = app.add_subcommand("poly", "polynomial utilities");
    poly_cmd->require_subcommand(1);
    CLI::App* poly_eval = poly_cmd->add_subcommand("eval", "parse and print the canonical form");
    add_common(poly_eval);
    poly_eval->add_option("--poly", opt.poly, "polynomial literal");

    CLI::App* selftest_cmd = app.add_subcommand("selftest", "run the full invariant suite");
    add_common(selftest_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (rank1_rank->parsed()) return cmd_rank(opt);
        if (rank1_factor->parsed()) return cmd_factor(opt);
        if (cunits->parsed()) return cmd_conjugate_units(opt);
        if (dedekind_report_cmd->parsed()) return cmd_dedekind(opt);
        if (gsolve_cmd->parsed()) return cmd_gsolve(opt);
        if (gverify_cmd->parsed()) return cmd_gverify(opt);
        if (tau_build->parsed()) return cmd_tau_build(opt);
        if (tau_verify->parsed()) return cmd_tau_verify(opt);
        if (sbase->parsed()) return cmd_standard_base(opt);
        if (classify_cmd->parsed()) return cmd_classify(opt);
        if (poly_eval->parsed()) return cmd_poly_eval(opt);
        if (selftest_cmd->parsed()) return cmd_selftest(opt);
    } catch (const enda::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
