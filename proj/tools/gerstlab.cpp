#include <gerstlab/chains.hpp>
#include <gerstlab/cobar.hpp>
#include <gerstlab/duality.hpp>
#include <gerstlab/json_io.hpp>
#include <gerstlab/report.hpp>
#include <gerstlab/suites.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>

using namespace gerstlab;

namespace {

std::string basename_of(const std::string& path) {
    auto pos = path.find_last_of("/\\");
    return pos == std::string::npos ? path : path.substr(pos + 1);
}

int weight_cap_from_env() {
    const char* v = std::getenv("GERSTLAB_WEIGHT_CAP");
    if (!v) return 4;
    int w = std::atoi(v);
    return w >= 1 ? w : 4;
}

ReportFormat parse_format(const std::string& f) {
    if (f == "json") return ReportFormat::json;
    if (f == "markdown") return ReportFormat::markdown;
    throw input_error("unknown format: " + f);
}

int finish(const std::vector<SuiteReport>& reports, const std::string& format) {
    std::cout << emit_reports(reports, parse_format(format));
    for (const auto& r : reports)
        if (!r.ok()) return 1;
    return 0;
}

SuiteReport validate_file(const std::string& path, const std::string& type) {
    SuiteReport rep;
    rep.suite = "validate";
    json j = load_json_file(path);
    if (type == "algebra" || (type == "auto" && j.contains("table") && j.contains("unit") && !j.contains("coproduct"))) {
        Algebra A = algebra_from_json(j);
        auto v = A.validate();
        rep.add("algebra_axioms", v.ok, v.ok ? "" : v.violations.front());
        Cochain m = Cochain::multiplication(A);
        rep.add("bracket_mm_zero", gerst_bracket(m, m).is_zero());
    } else if (type == "bialgebra" || (type == "auto" && j.contains("bracket"))) {
        LieBialgebra g = lie_bialgebra_from_json(j);
        auto v = validate_lie_bialgebra(g);
        rep.add("lie_bialgebra_axioms", v.ok, v.ok ? "" : v.violations.front());
    } else if (type == "hopf" || (type == "auto" && j.contains("coproduct"))) {
        FinBialgebra h = bialgebra_from_json(j);
        auto v = validate_bialgebra(h);
        rep.add("bialgebra_axioms", v.ok, v.ok ? "" : v.violations.front());
    } else if (type == "ginfty" || (type == "auto" && j.contains("ops"))) {
        GinftyStructure g = ginfty_from_json(j);
        GinftyEngine eng(g.space, weight_cap_from_env());
        auto v = eng.validate_ops(g, 1);
        rep.add("ginfty_tables", v.ok, v.ok ? "" : v.violations.front());
        if (v.ok) {
            Derivation d = eng.derivation_from_mops(g, 1);
            auto sq = check_square_zero(d);
            rep.add("derivation_square_zero", sq.ok, sq.witness);
        }
    } else {
        throw input_error("cannot determine input type for " + path);
    }
    return rep;
}

void write_fixture_files(const std::string& dir) {
    auto dump = [&](const std::string& name, const json& j) {
        std::ofstream out(dir + "/" + name);
        out << j.dump(2) << "\n";
    };
    dump("dual_numbers.json", algebra_to_json(dual_numbers()));
    dump("q_times_q.json", algebra_to_json(q_times_q()));
    dump("upper_triangular2.json", algebra_to_json(upper_triangular2()));
    dump("m2_trace.json", algebra_to_json(m2_with_trace()));
    dump("lie_bialgebra_2d.json", lie_bialgebra_to_json(two_dim_bialgebra()));
    dump("exterior_hopf.json", bialgebra_to_json(exterior_hopf()));
    {
        LieData g;
        g.labels = {"x", "y"};
        g.degree = {0, 0};
        g.weight = {1, 1};
        g.bracket = [](int i, int j) -> SparseVec {
            if (i == 0 && j == 1) return {{1, Rational(1)}};
            if (i == 1 && j == 0) return {{1, Rational(-1)}};
            return {};
        };
        GerstFixture fx = gerstenhaber_fixture(g, 2);
        dump("gerstenhaber_2d.json", ginfty_to_json(fx.G));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification engine for noncommutative differential calculus"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "report format: json or markdown")->capture_default_str();

    // validate
    auto* cmd_validate = app.add_subcommand("validate", "validate a JSON input against its axioms");
    std::string v_file, v_type = "auto";
    cmd_validate->add_option("file", v_file)->required();
    cmd_validate->add_option("--type", v_type, "algebra, bialgebra, hopf, ginfty or auto");

    // hh
    auto* cmd_hh = app.add_subcommand("hh", "Hochschild cohomology dimensions of an algebra");
    std::string hh_file;
    int hh_max = 3;
    cmd_hh->add_option("file", hh_file)->required();
    cmd_hh->add_option("--max-degree", hh_max);

    // brace
    auto* cmd_brace = app.add_subcommand("brace", "brace D0{D1,...} of cochains over an algebra");
    std::string br_alg, br_d0;
    std::vector<std::string> br_args;
    cmd_brace->add_option("algebra", br_alg)->required();
    cmd_brace->add_option("--cochain", br_d0, "the outer cochain JSON file")->required();
    cmd_brace->add_option("--args", br_args, "inserted cochain JSON files");

    // chains
    auto* cmd_chains = app.add_subcommand("chains", "chain-level identity battery for an algebra");
    std::string ch_file;
    int ch_samples = 5, ch_seed = 9;
    cmd_chains->add_option("file", ch_file)->required();
    cmd_chains->add_option("--samples", ch_samples);
    cmd_chains->add_option("--seed", ch_seed);

    // poly
    auto* cmd_poly = app.add_subcommand("poly", "polyvector/form calculus battery");
    int p_nvars = 2, p_samples = 20, p_seed = 11;
    cmd_poly->add_option("--nvars", p_nvars);
    cmd_poly->add_option("--samples", p_samples);
    cmd_poly->add_option("--seed", p_seed);

    // ginfty
    auto* cmd_ginfty = app.add_subcommand("ginfty", "homotopy-structure checks for an operations file");
    std::string g_file;
    cmd_ginfty->add_option("file", g_file)->required();

    // bvinfty
    auto* cmd_bv = app.add_subcommand("bvinfty", "canonical deformation and BV validation");
    std::string bv_file;
    cmd_bv->add_option("file", bv_file)->required();

    // defcomplex
    auto* cmd_def = app.add_subcommand("defcomplex", "deformation complex of a Lie bialgebra");
    std::string d_file;
    int d_pmax = 2;
    cmd_def->add_option("file", d_file)->required();
    cmd_def->add_option("--pmax", d_pmax);

    // cobar
    auto* cmd_cobar = app.add_subcommand("cobar", "cobar construction battery over an algebra");
    std::string co_file;
    int co_cap = 2, co_len = 2, co_budget = 80, co_seed = 13;
    cmd_cobar->add_option("file", co_file)->required();
    cmd_cobar->add_option("--arity-cap", co_cap);
    cmd_cobar->add_option("--length", co_len);
    cmd_cobar->add_option("--budget", co_budget);
    cmd_cobar->add_option("--seed", co_seed);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all", verify_algebra;
    cmd_verify->add_option("--suite", suite, "suite name or 'all'");
    cmd_verify->add_option("--algebra", verify_algebra, "also run the per-algebra battery on this file");

    // report
    auto* cmd_report = app.add_subcommand("report", "re-emit a stored JSON report");
    std::string rep_file;
    cmd_report->add_option("file", rep_file)->required();

    // fixture generator (used to build the shipped fixtures deterministically)
    auto* cmd_fix = app.add_subcommand("make-fixtures", "write the fixture JSON files into a directory");
    std::string fix_dir = ".";
    cmd_fix->add_option("dir", fix_dir);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_validate) return finish({validate_file(v_file, v_type)}, format);

        if (*cmd_hh) {
            Algebra A = algebra_from_json(load_json_file(hh_file));
            auto hh = hochschild_cohomology(A, hh_max);
            json j;
            j["algebra"] = basename_of(hh_file);
            j["max_degree"] = hh_max;
            json dims = json::array();
            for (const auto& d : hh) dims.push_back(d.dimension);
            j["dims"] = dims;
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*cmd_brace) {
            Algebra A = algebra_from_json(load_json_file(br_alg));
            Cochain D0 = cochain_from_json(load_json_file(br_d0), A);
            std::vector<Cochain> args;
            for (const auto& f : br_args) args.push_back(cochain_from_json(load_json_file(f), A));
            std::cout << cochain_to_json(brace(D0, args)).dump(2) << "\n";
            return 0;
        }

        if (*cmd_chains) {
            Algebra A = algebra_from_json(load_json_file(ch_file));
            SuiteReport rep;
            rep.suite = "chains:" + basename_of(ch_file);
            std::mt19937 rng(ch_seed);
            std::uniform_int_distribution<int> num(-2, 2);
            auto random_chain = [&](int n) {
                ChainElement c(A, n);
                std::vector<int> w(n + 1, 0);
                do {
                    int v = num(rng);
                    if (v != 0) c.add_term(w, Rational(v));
                } while (tuple_next(w, A.dim()));
                return c;
            };
            bool b2 = true, B2 = true, anti = true;
            for (int n = 0; n <= 3; ++n)
                for (int t = 0; t < ch_samples; ++t) {
                    ChainElement c = random_chain(n);
                    if (n >= 2 && !boundary_b(boundary_b(c)).is_zero()) b2 = false;
                    ChainElement cn = normalize_project(c);
                    if (!connes_B(connes_B(cn)).is_zero()) B2 = false;
                    ChainElement mixed = boundary_b_normalized(connes_B(cn));
                    if (n > 0) mixed = mixed + connes_B(boundary_b_normalized(cn));
                    if (!mixed.is_zero()) anti = false;
                }
            rep.add("b_squared_zero", b2);
            rep.add("B_squared_zero", B2);
            rep.add("bB_plus_Bb_zero", anti);
            return finish({rep}, format);
        }

        if (*cmd_poly) {
            SuiteReport rep;
            rep.suite = "poly";
            auto r = bv_module_check(p_nvars, p_samples, p_seed);
            rep.add("bv_module_identities", r.ok, r.ok ? "" : r.violations.front());
            return finish({rep}, format);
        }

        if (*cmd_ginfty) {
            GinftyStructure g = ginfty_from_json(load_json_file(g_file));
            GinftyEngine eng(g.space, weight_cap_from_env());
            SuiteReport rep;
            rep.suite = "ginfty:" + basename_of(g_file);
            auto v = eng.validate_ops(g, 1);
            rep.add("tables_valid", v.ok, v.ok ? "" : v.violations.front());
            if (v.ok) {
                Derivation d = eng.derivation_from_mops(g, 1);
                auto sq = check_square_zero(d);
                rep.add("derivation_square_zero", sq.ok, sq.witness);
            }
            return finish({rep}, format);
        }

        if (*cmd_bv) {
            GinftyStructure g = ginfty_from_json(load_json_file(bv_file));
            GinftyEngine eng(g.space, weight_cap_from_env());
            SuiteReport rep;
            rep.suite = "bvinfty:" + basename_of(bv_file);
            CanonicalDeformation cd = canonical_deformation(eng, g);
            rep.add("canonical_D_is_derivation", cd.D_is_derivation);
            rep.add("partial_can_square_zero", cd.square_zero);
            auto r = validate_bvinfty(canonical_bv_candidate(cd));
            rep.add("canonical_bv_structure", r.ok, r.ok || r.notes.empty() ? "" : r.notes.front());
            return finish({rep}, format);
        }

        if (*cmd_def) {
            LieBialgebra g = lie_bialgebra_from_json(load_json_file(d_file));
            SuiteReport rep;
            rep.suite = "defcomplex:" + basename_of(d_file);
            auto v = validate_lie_bialgebra(g);
            rep.add("bialgebra_axioms", v.ok, v.ok ? "" : v.violations.front());
            if (v.ok) {
                DefComplex dc(g);
                auto obs = obstruction_sequence(dc, {}, d_pmax);
                rep.add("delta0_square_zero", obs.delta0_square_zero);
                rep.add("obstruction_chain_computed", obs.delta0_square_zero);
            }
            return finish({rep}, format);
        }

        if (*cmd_cobar) {
            Algebra A = algebra_from_json(load_json_file(co_file));
            auto r = validate_binfty(A, co_cap, co_len, co_budget, co_seed);
            SuiteReport rep;
            rep.suite = "cobar:" + basename_of(co_file);
            rep.add("coassociativity", r.coassociative);
            rep.add("d_squared_zero", r.d_square_zero);
            rep.add("comultiplication_multiplicative", r.comul_multiplicative);
            rep.add("d_derivation_of_product", r.d_derivation);
            rep.add("filtration_preserved", r.filtration);
            rep.add("antipode_axiom", r.antipode_ok);
            return finish({rep}, format);
        }

        if (*cmd_verify) {
            std::vector<SuiteReport> reports;
            if (suite == "all")
                reports = run_all_suites();
            else
                reports.push_back(run_suite(suite));
            if (!verify_algebra.empty()) reports.push_back(validate_file(verify_algebra, "auto"));
            return finish(reports, format);
        }

        if (*cmd_report) {
            json j = load_json_file(rep_file);
            std::vector<SuiteReport> rs;
            auto parse_one = [](const json& o) {
                SuiteReport r;
                r.suite = o.at("suite").get<std::string>();
                for (const auto& c : o.at("checks"))
                    r.add(c.at("id").get<std::string>(), c.at("pass").get<bool>(),
                          c.contains("witness") ? c.at("witness").get<std::string>() : "");
                return r;
            };
            if (j.is_array())
                for (const auto& o : j) rs.push_back(parse_one(o));
            else
                rs.push_back(parse_one(j));
            std::cout << emit_reports(rs, parse_format(format));
            return 0;
        }

        if (*cmd_fix) {
            write_fixture_files(fix_dir);
            return 0;
        }
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
