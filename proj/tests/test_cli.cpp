#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gerstlab/json_io.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace gerstlab;

namespace {

std::string env_or(const char* name, const std::string& dflt) {
    const char* v = std::getenv(name);
    return v ? v : dflt;
}

const std::string cli = env_or("GERSTLAB_CLI", "./gerstlab");
const std::string fixtures = env_or("GERSTLAB_FIXTURES", "fixtures");
const std::string golden = env_or("GERSTLAB_GOLDEN", "tests/golden");

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string out_file = "cli_out.tmp";
    int rc = std::system((cli + " " + args + " > " + out_file + " 2>/dev/null").c_str());
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(rc), ss.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("hh output matches the golden file byte for byte") {
    auto r = run("hh " + fixtures + "/dual_numbers.json --max-degree 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == slurp(golden + "/hh_dual_numbers.json"));
    // determinism: a second run is byte-identical
    auto r2 = run("hh " + fixtures + "/dual_numbers.json --max-degree 3");
    CHECK(r.out == r2.out);
}

TEST_CASE("validate outputs are byte-stable") {
    auto r = run("validate " + fixtures + "/lie_bialgebra_2d.json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == slurp(golden + "/validate_lie_bialgebra.json"));

    auto m = run("--format markdown validate " + fixtures + "/exterior_hopf.json");
    CHECK(m.exit_code == 0);
    CHECK(m.out == slurp(golden + "/validate_exterior_hopf.md"));
}

TEST_CASE("chains battery matches golden") {
    auto r = run("chains " + fixtures + "/dual_numbers.json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == slurp(golden + "/chains_dual_numbers.json"));
}

TEST_CASE("exit code contract") {
    CHECK(run("validate " + fixtures + "/dual_numbers.json").exit_code == 0);
    // exit 2: malformed input
    {
        std::ofstream bad("bad_input.tmp.json");
        bad << "{ not json";
    }
    CHECK(run("validate bad_input.tmp.json").exit_code == 2);
    CHECK(run("validate no_such_file.json").exit_code == 2);
    // exit 1: violations found (broken unit law), report still emitted
    {
        json j = algebra_to_json(dual_numbers());
        j["unit"] = json::array({"0", "1"});  // x is not a unit
        std::ofstream out("bad_algebra.tmp.json");
        out << j.dump(2);
    }
    auto r = run("validate bad_algebra.tmp.json");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("\"pass\": false") != std::string::npos);
}

TEST_CASE("report subcommand re-emits stored reports") {
    auto r = run("report " + golden + "/validate_lie_bialgebra.json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == slurp(golden + "/validate_lie_bialgebra.json"));
    auto m = run("--format markdown report " + golden + "/validate_lie_bialgebra.json");
    CHECK(m.exit_code == 0);
    CHECK(m.out.find("[pass]") != std::string::npos);
}

TEST_CASE("JSON round-trips") {
    // algebra
    for (const std::string name : {"dual_numbers", "q_times_q", "upper_triangular2", "m2_trace"}) {
        json j = load_json_file(fixtures + "/" + name + ".json");
        Algebra A = algebra_from_json(j);
        json j2 = algebra_to_json(A);
        Algebra A2 = algebra_from_json(j2);
        CHECK(algebra_to_json(A2) == j2);
        CHECK(A2.dim() == A.dim());
    }
    // bialgebra
    {
        json j = load_json_file(fixtures + "/lie_bialgebra_2d.json");
        LieBialgebra g = lie_bialgebra_from_json(j);
        CHECK(lie_bialgebra_from_json(lie_bialgebra_to_json(g)).dim() == g.dim());
        CHECK(lie_bialgebra_to_json(lie_bialgebra_from_json(lie_bialgebra_to_json(g))) == lie_bialgebra_to_json(g));
    }
    // hopf
    {
        json j = load_json_file(fixtures + "/exterior_hopf.json");
        FinBialgebra h = bialgebra_from_json(j);
        CHECK(bialgebra_to_json(bialgebra_from_json(bialgebra_to_json(h))) == bialgebra_to_json(h));
    }
    // ginfty
    {
        json j = load_json_file(fixtures + "/gerstenhaber_2d.json");
        GinftyStructure g = ginfty_from_json(j);
        CHECK(ginfty_to_json(ginfty_from_json(ginfty_to_json(g))) == ginfty_to_json(g));
    }
    // cochains
    {
        Algebra A = dual_numbers();
        Cochain c(A, 2);
        c.entry_mut({0, 1})[1] = Rational(3, 7);
        c.entry_mut({1, 1})[0] = Rational(-2);
        json j = cochain_to_json(c);
        Cochain c2 = cochain_from_json(j, A);
        CHECK(c2 == c);
        CHECK(cochain_to_json(c2) == j);
    }
    // polyvectors
    {
        Polyvector v(2, 1);
        Poly p(2);
        p.add_term({1, 2}, Rational(5, 3));
        v.add({0}, p);
        json j = polyvector_to_json(v);
        CHECK(polyvector_to_json(polyvector_from_json(j)) == j);
    }
}

TEST_CASE("scalars parse and serialize in reduced p/q form") {
    CHECK(rational_from_json(json("4/6")).str() == "2/3");
    CHECK(rational_to_json(Rational(-7, 14)) == json("-1/2"));
    CHECK(rational_from_json(json(5)) == Rational(5));
    CHECK_THROWS_AS(rational_from_json(json("1/0")), input_error);
}
