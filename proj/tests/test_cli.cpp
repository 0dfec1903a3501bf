#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "schema_check.hpp"
#include "subdyn/subdyn.hpp"
#include "testutil.hpp"

using namespace subdyn;
using testutil::run_cli;

namespace {

json load_schema() {
    std::ifstream in(std::string(SUBDYN_DATA_DIR) + "/report.schema.json");
    REQUIRE(in.good());
    return json::parse(in);
}

json parse_and_validate(const std::string& args) {
    auto r = run_cli(args);
    INFO("args: " << args << "\noutput: " << r.out);
    REQUIRE(r.exit_code == 0);
    json rep = json::parse(r.out);
    schema_check::Result res;
    schema_check::check(load_schema(), rep, res);
    for (const std::string& e : res.errors) UNSCOPED_INFO(e);
    REQUIRE(res.ok);
    return rep;
}

}  // namespace

TEST_CASE("analyze a corpus map emits a valid exact report") {
    json rep = parse_and_validate("analyze corpus:example14_s --json");
    CHECK(rep["corpus_name"] == "example14_s");
    CHECK(rep["partition"] == json({"0", "1/4", "1/3", "1/2", "2/3", "1"}));
    CHECK(rep["system"]["matrix"][0] == json({"1/2", "1/2", "1/2", "0", "0"}));
    CHECK(rep["system"]["matrix"][4] == json({"1", "1", "0", "0", "0"}));
    CHECK(rep["classification"]["generic"] == true);
    CHECK(rep["classification"]["mixing"] == true);
    CHECK(rep["classification"]["density"] == json({"6/5", "6/5", "9/5", "3/5", "3/5"}));
    CHECK(rep["graph_analysis"]["period"] == 1);
}

TEST_CASE("analyze a term input") {
    json rep = parse_and_validate("analyze '!( !x0 * !x0 ) /\\ !( x0 * x0 )' --json");
    CHECK(rep["term"] == "!(!x0 * !x0) /\\ !(x0 * x0)");
    CHECK(rep["classification"]["exact"] == true);
    CHECK(rep["classification"]["density"] == json({"1", "1"}));
}

TEST_CASE("analyze the period-2 reference map") {
    json rep = parse_and_validate("analyze corpus:example14_t --json");
    CHECK(rep["graph_analysis"]["period"] == 2);
    CHECK(rep["classification"]["ergodic"] == true);
    CHECK(rep["classification"]["mixing"] == false);
    CHECK(rep["classification"]["density"] == json({"3/4", "3/4", "3/4", "3/2"}));
}

TEST_CASE("analyze human output mentions the classification") {
    auto r = run_cli("analyze corpus:tent");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("invertible: false") != std::string::npos);
    CHECK(r.out.find("exact: true") != std::string::npos);
    CHECK(r.out.find("invariant density: 1 1") != std::string::npos);
}

TEST_CASE("exact orbit report and cycle detection") {
    json rep = parse_and_validate("orbit corpus:tent --start 1/5 --steps 6 --exact --json");
    CHECK(rep["orbit"]["start"] == "1/5");
    CHECK(rep["orbit"]["points"][0] == "1/5");
    CHECK(rep["orbit"]["points"][1] == "2/5");
    CHECK(rep["orbit"]["points"][2] == "4/5");
    CHECK(rep["orbit"]["eventually_periodic"]["preperiod"] == 1);
    CHECK(rep["orbit"]["eventually_periodic"]["period"] == 2);
}

TEST_CASE("decimal starts are parsed exactly") {
    json rep = parse_and_validate("orbit corpus:identity --start 0.3 --steps 2 --exact --json");
    CHECK(rep["orbit"]["start"] == "3/10");
    CHECK(rep["orbit"]["points"][2] == "3/10");
}

TEST_CASE("float orbit report") {
    json rep = parse_and_validate("orbit corpus:tent --start 0.375 --steps 3 --json");
    CHECK(rep["orbit"]["start"] == 0.375);
    CHECK(rep["orbit"]["points"][1] == 0.75);
    CHECK(rep["orbit"]["points"][2] == 0.5);
    CHECK(rep["orbit"]["points"][3] == 1.0);
}

TEST_CASE("orbit CSV output goes to a file") {
    std::string path = "/tmp/subdyn_test_orbit.csv";
    std::remove(path.c_str());
    auto r = run_cli("orbit corpus:tent --start 1/5 --steps 2 --exact --csv " + path);
    REQUIRE(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "step,value\n0,1/5\n1,2/5\n2,4/5\n");
    std::remove(path.c_str());
}

TEST_CASE("orbit without --json or --csv prints CSV to stdout") {
    auto r = run_cli("orbit corpus:tent --start 1/5 --steps 2 --exact");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "step,value\n0,1/5\n1,2/5\n2,4/5\n");
}

TEST_CASE("birkhoff report with explicit start") {
    json rep = parse_and_validate("birkhoff corpus:tent --start 0.25 --steps 16 --json");
    CHECK(rep["start"] == 0.25);
    CHECK(rep["steps"] == 16);
    CHECK(rep["table"]["total"] == 16);
    CHECK(rep["table"]["counts"].size() == 2);
    CHECK(rep["table"]["reference"][0] == 0.5);
}

TEST_CASE("birkhoff random start echoes the seed") {
    json rep = parse_and_validate("birkhoff corpus:tent --steps 100 --seed 7 --json");
    CHECK(rep["seed"] == 7);
    double x = rep["start"].get<double>();
    CHECK(x >= 0.0);
    CHECK(x <= 1.0);
    json rep2 = parse_and_validate("birkhoff corpus:tent --steps 100 --seed 7 --json");
    CHECK(rep2["start"] == rep["start"]);  // deterministic
}

TEST_CASE("birkhoff CSV header") {
    std::string path = "/tmp/subdyn_test_freq.csv";
    std::remove(path.c_str());
    auto r = run_cli("birkhoff corpus:tent --start 0.25 --steps 8 --csv " + path);
    REQUIRE(r.exit_code == 0);
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    CHECK(first == "interval,lo,hi,count,freq,reference");
    std::remove(path.c_str());
}

TEST_CASE("product classify reports the regime") {
    json rep = parse_and_validate("product classify -a 2 -b 1 --json");
    CHECK(rep["regime"] == "AttractsToZero");
    CHECK(rep["map"]["q"] == "2");
    CHECK(parse_and_validate("product classify -a 1 -b 4 --json")["regime"] == "Exact");
    CHECK(parse_and_validate("product classify -a 3 -b 3 --json")["regime"] == "GenericNotErgodic");
}

TEST_CASE("product slowcf verifies the identities") {
    json rep = parse_and_validate("product slowcf -a 1 -b 1 --x 2/5 --json");
    CHECK(rep["x"] == "2/5");
    CHECK(rep["image"] == "2/3");
    CHECK(rep["digits"] == json({2, 2}));
    CHECK(rep["identity_holds"] == true);
    CHECK(rep["block_frequency_holds"] == true);
}

TEST_CASE("product slowcf requires q = 1") {
    auto r = run_cli("product slowcf -a 1 -b 2 --x 2/5 --json");
    CHECK(r.exit_code == 2);
}

TEST_CASE("product derivbound reports the grid minima") {
    json rep = parse_and_validate("product derivbound -a 1 -b 4 --grid 1000 --json");
    CHECK(rep["grid"] == 1000);
    CHECK(rep["reference"] == Catch::Approx(2.25).margin(1e-12));
    CHECK(rep["min_abs_second"].get<double>() >= 2.25 - 1e-9);
}

TEST_CASE("boolean adding-machine report") {
    json rep = parse_and_validate("boolean adding-machine -n 3 --json");
    CHECK(rep["substitution"]["n"] == 3);
    CHECK(rep["classification"]["invertible"] == true);
    CHECK(rep["classification"]["permutation_order"] == 8);
    CHECK(rep["classification"]["generic"] == true);
    const json& table = rep["point_map"]["table"];
    REQUIRE(table.size() == 8);
    for (size_t k = 0; k < 8; ++k) CHECK(table[k] == (k + 1) % 8);
}

TEST_CASE("boolean analyze accepts semicolon-separated terms") {
    json rep = parse_and_validate("boolean analyze -n 2 --terms 'x1;x0' --json");
    CHECK(rep["classification"]["invertible"] == true);
    CHECK(rep["classification"]["permutation_order"] == 2);
    CHECK(rep["classification"]["generic"] == false);
}

TEST_CASE("boolean truth table CSV") {
    std::string path = "/tmp/subdyn_test_tt.csv";
    std::remove(path.c_str());
    auto r = run_cli("boolean adding-machine -n 2 --csv " + path);
    REQUIRE(r.exit_code == 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "input_bits,output_bits\n00,10\n10,01\n01,11\n11,00\n");
    std::remove(path.c_str());
}

TEST_CASE("corpus listing names every entry") {
    auto r = run_cli("corpus");
    REQUIRE(r.exit_code == 0);
    for (const NamedMap& nm : corpus()) CHECK(r.out.find(nm.name) != std::string::npos);
}

TEST_CASE("exit code taxonomy") {
    CHECK(run_cli("analyze 'x0 ->'").exit_code == 2);           // parse error
    CHECK(run_cli("analyze 'x0 /\\ x1'").exit_code == 3);       // arity error
    CHECK(run_cli("orbit corpus:tent --start 3/2 --steps 3").exit_code == 4);   // domain
    CHECK(run_cli("orbit corpus:tent --start abc --steps 3").exit_code == 4);   // bad start
    CHECK(run_cli("boolean adding-machine -n 25").exit_code == 5);              // resource cap
    CHECK(run_cli("boolean adding-machine -n 5 --max-n 4").exit_code == 5);     // lowered cap
    CHECK(run_cli("boolean adding-machine -n 5 --max-n 5").exit_code == 0);
    CHECK(run_cli("analyze corpus:no_such_map").exit_code == 2);
    CHECK(run_cli("analyze corpus:frac_1_1 --json").exit_code == 2);  // wrong kind
    CHECK(run_cli("boolean analyze -n 2 --terms 'x5;x0'").exit_code == 3);
    CHECK(run_cli("product classify -a 0 -b 1").exit_code == 2);
    CHECK(run_cli("--no-such-flag").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("analyze 'x0 * x0' --json").exit_code == 0);  // flat pieces are fine
}
