#include "tqft/cli.hpp"
#include "tqft/json_io.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace tqft;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("group spec parsing") {
    CHECK(load_group_spec("S3").order() == 6);
    CHECK(load_group_spec("Z12").order() == 12);
    CHECK(load_group_spec("D4").order() == 8);
    CHECK(load_group_spec("Q8").order() == 8);
    CHECK(load_group_spec("trivial").order() == 1);
    CHECK(load_group_spec("cyclic:9").order() == 9);
    CHECK(load_group_spec("product:Z2,Z3").order() == 6);
    CHECK(load_group_spec(R"({"preset": "symmetric", "params": [3]})").order() == 6);
    CHECK(load_group_spec(R"({"name": "K", "order": 2, "cayley": [[0,1],[1,0]]})").order() == 2);
    CHECK_THROWS_AS(load_group_spec("wat"), std::invalid_argument);
    CHECK_THROWS_AS(load_group_spec(R"({"cayley": [[0,1],[1,1]]})"), std::invalid_argument);
    CHECK_THROWS_AS(load_group_spec(R"({"order": 3, "cayley": [[0,1],[1,0]]})"),
                    std::invalid_argument);
}

TEST_CASE("algebra spec parsing") {
    CHECK(load_algebra_spec(R"({"semisimple": [1, 2, 3]})").dim() == 3);
    CHECK(load_algebra_spec(R"({"class_functions_of": "S3"})").dim() == 3);
    CHECK(load_algebra_spec(R"({"group_algebra_of": "S3"})").dim() == 6);
    FrobeniusAlgebra a = load_algebra_spec(
        R"({"mu": [[[1]]], "unit": [1], "trace": [[2, 1]]})");
    CHECK(a.dim() == 1);
    CHECK(a.trace_vector()[0] == Cplx(2, 1));
    CHECK_THROWS_AS(load_algebra_spec(R"({"semisimple": [1, 0]})"), std::invalid_argument);
    CHECK_THROWS_AS(load_algebra_spec(R"({"nothing": 1})"), std::invalid_argument);
}

TEST_CASE("triangulation JSON round trip") {
    Triangulation t = standard_surface(2);
    Json j = triangulation_to_json(t);
    Triangulation back = triangulation_from_json(j);
    CHECK(back.tris.size() == t.tris.size());
    CHECK(back.pairings.size() == t.pairings.size());
    // the slot/pairing structure alone reproduces the state sum
    LatticeTensorData d = group_algebra_tensors(load_group_spec("S3"));
    CHECK(partition_function(back, d) == partition_function(t, d));
    CHECK(load_surface_spec("genus:1").tris.size() == 2);
}

TEST_CASE("cli: group classes") {
    CliRun r = cli({"group", "--preset", "S3", "classes"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["schema"] == "tqft/1");
    CHECK(j["class_sizes"] == Json::array({1, 3, 2}));
}

TEST_CASE("cli: dw matches the pinned torus example") {
    CliRun r = cli({"dw", "--group", "Z2", "--genus", "1"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["value"] == "4/2");
    CHECK(j["decimal"] == 2.0);
}

TEST_CASE("cli: double of the trivial group emits S = [[1]]") {
    CliRun r = cli({"double", "--group", "trivial", "--emit", "s"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["S"][0][0][0] == 1.0);
    CHECK(j["S"][0][0][1] == 0.0);
}

TEST_CASE("cli exit codes: usage, validation, invariant") {
    CHECK(cli({"nonsense"}).code == 2);
    CHECK(cli({"dw", "--group", "nope", "--genus", "1"}).code == 2);
    CHECK(cli({"dw"}).code == 2); // missing group
    CHECK(cli({"su2k", "--level", "0"}).code == 2);
    CHECK(cli({"lattice", "--group", "Z2", "--surface", "genus:-1"}).code == 2);
}

TEST_CASE("cli: byte-identical repeated output") {
    for (auto args : {std::vector<std::string>{"chartable", "--group", "S4"},
                      std::vector<std::string>{"double", "--group", "S3", "--emit", "s,t,dims"},
                      std::vector<std::string>{"lattice", "--group", "S3", "--surface", "genus:2",
                                               "--shuffle", "10", "--seed", "7"}}) {
        CliRun a = cli(args), b = cli(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("cli: cobordism evaluation from a word file") {
    std::string path = "/tmp/tqft_test_word.txt";
    {
        std::ofstream f(path);
        f << "cap\ncopants\npants\ncup\n";
    }
    CliRun r = cli({"cob", "--word", path, "--algebra", R"({"class_functions_of": "S3"})"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["in_circles"] == 0);
    CHECK(j["out_circles"] == 0);
    CHECK(j["matrix"][0][0][0] == doctest::Approx(3.0)); // torus counts irreps
}

TEST_CASE("cli: openclosed cardy run") {
    CliRun r = cli({"openclosed", "--traces", "1,4,9", "--k", "2,1,3", "--signs", "+,-,+"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["cardy_pass"] == true);
    CHECK(j["k_theory"] == "Z^3");
}

TEST_CASE("cli: ym emits value and tail bound") {
    CliRun r = cli({"ym", "--spectrum", "su2", "--genus", "2", "--area", "0.1", "--nmax", "200"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["value"].get<double>() > 1.0);
    CHECK(j["tail_bound"].get<double>() < 1e-8);
}

TEST_CASE("cli: lattice shuffle reports invariance") {
    CliRun r = cli({"lattice", "--group", "Z3", "--surface", "genus:1", "--shuffle", "25",
                    "--seed", "11"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["pachner_invariant"] == true);
    CHECK(j["value"]["value"] == "3");
}

TEST_CASE("cli: selftest subset filter") {
    CliRun r = cli({"selftest", "--only", "torus"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS]") != std::string::npos);
    CHECK(r.out.find("dw_torus_flat_bundle_count") != std::string::npos);
    // module-prefix filters select subsets
    CliRun dw = cli({"selftest", "--only", "dw"});
    CHECK(dw.out.find("dw_mednykh_bridge") != std::string::npos);
    CHECK(dw.out.find("su2k_fusion") == std::string::npos);
}
