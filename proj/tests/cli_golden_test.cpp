#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string binary_path() {
    const char* env = std::getenv("CHOWKIT_BIN");
    REQUIRE_MESSAGE(env != nullptr, "CHOWKIT_BIN must point at the CLI");
    return env;
}

RunResult run_cli(const std::string& args) {
    const std::string cmd = binary_path() + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace

TEST_CASE("golden numbers through the CLI") {
    const RunResult r = run_cli("discriminant equidegree --d 4 --m 1 --n 3");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["command"] == "discriminant equidegree");
    CHECK(j["outputs"]["degree"] == 108);

    const json bi = json::parse(
        run_cli("discriminant bidegree --a 2 --b 3 --n 4").out);
    CHECK(bi["outputs"]["coeff_base"] == 78);
    CHECK(bi["outputs"]["coeff_fiber"] == 98);
    CHECK(bi["outputs"]["A"] == 10);
    CHECK(bi["outputs"]["B"] == 8);
    CHECK(bi["outputs"]["C"] == 13);

    const json chi = json::parse(run_cli("k3 chi --l 2 --p 0").out);
    CHECK(chi["outputs"]["chi"] == 2);
}

TEST_CASE("reruns are byte-identical") {
    for (const std::string args :
         {"lines-divisor --d 4 --show-chern", "k3 table --degree 6",
          "picard ff --a 2 --b 3 --n 4", "chow demo --dump-ring"}) {
        const RunResult a = run_cli(args);
        const RunResult b = run_cli(args);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("lines-divisor reports the 320 class with its Chern table") {
    const RunResult r = run_cli("lines-divisor --d 4 --show-chern");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["outputs"]["integral"] == 320);
    CHECK(j["outputs"]["c4"] == "5*(143*s1^4 - 264*s1^2*s2 + 42*s2^2)");
    CHECK(j["outputs"]["c1"] == "10*s1");
    CHECK(j["outputs"]["ch1"] == "10*s1");
    CHECK(j["outputs"]["fundamental_class"] == "t^2 + t*s1 + s2");
    // no floating point anywhere: every number is an integer or "num/den"
    CHECK(r.out.find('.') == std::string::npos);
}

TEST_CASE("picard ff flags convention agreement") {
    const json agree = json::parse(run_cli("picard ff --a 2 --b 3 --n 4").out);
    CHECK(agree["outputs"]["conventions_agree"] == true);
    CHECK(agree["outputs"]["index"] == 5);
    CHECK(agree["outputs"]["lattice"]["basis"] ==
          json::parse(R"([["1","1"],["0","5"]])"));

    const json differ = json::parse(run_cli("picard ff --a 1 --b 2 --n 3").out);
    CHECK(differ["outputs"]["conventions_agree"] == false);
    CHECK(differ["outputs"].contains("other_convention_lattice"));

    const json stmt = json::parse(
        run_cli("picard ff --a 1 --b 2 --n 3 --convention statement").out);
    CHECK(stmt["outputs"]["lattice"] ==
          differ["outputs"]["other_convention_lattice"]);
}

TEST_CASE("k3 tables through the CLI") {
    const json t4 = json::parse(run_cli("k3 table --degree 4").out);
    CHECK(t4["outputs"]["basis"] ==
          json::array({"D_{1,1}", "D_{2,1}", "lambda_1"}));
    CHECK(t4["outputs"]["named_classes"]["D_{0,0}|U4"] ==
          json::array({0, 0, 108}));
    CHECK(t4["outputs"]["named_classes"]["D_{3,1}|U4"] ==
          json::array({0, 0, 320}));
    CHECK_FALSE(t4["axioms"].empty());

    const json t8 = json::parse(run_cli("k3 table --degree 8").out);
    CHECK(t8["outputs"]["named_classes"]["D_{0,0}|U8\\D_{3,1}"] ==
          json::array({0, 0, 0, 80}));
}

TEST_CASE("chow demo prints the intermediate tables") {
    const json demo = json::parse(run_cli("chow demo").out);
    CHECK(demo["outputs"]["ch0"] == "5");
    CHECK(demo["outputs"]["ch1"] == "10*s1");
    CHECK(demo["outputs"]["ch2"] == "-5*s1^2 + 20*s2");
    CHECK(demo["outputs"]["ch3"] == "5/3*s1^3 - 10*s1*s2");
    CHECK(demo["outputs"]["ch4"] ==
          "-5/12*s1^4 + 10/3*s1^2*s2 - 5/3*s2^2");
    CHECK(demo["outputs"]["schubert_integrals"]["s1^4"] == 2);
    CHECK(demo["outputs"]["schubert_integrals"]["s1^2*s2"] == 1);
    CHECK(demo["outputs"]["schubert_integrals"]["s2^2"] == 1);
    CHECK(demo["outputs"]["c4_reduced"] == "320*s2^2");

    const json rings = json::parse(run_cli("chow demo --dump-ring").out);
    CHECK(rings["outputs"]["rings"].size() == 3);
    CHECK(rings["outputs"]["rings"][1]["name"] == "Gr(2,4)");
}

TEST_CASE("exit codes") {
    CHECK(run_cli("discriminant equidegree --d 4 --m 1 --n 3").exit_code == 0);
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("discriminant equidegree --d 4").exit_code == 2);
    CHECK(run_cli("picard ff --a 2 --b 3 --n 4 --convention bogus").exit_code ==
          2);
    CHECK(run_cli("lines-divisor --d 1").exit_code == 3);
    CHECK(run_cli("discriminant equidegree --d 4 --m 3 --n 3").exit_code == 3);
    CHECK(run_cli("k3 table --degree 10").exit_code == 3);
    CHECK(run_cli("k3 chi --l 2 --p -1").exit_code == 3);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("--version").exit_code == 0);
}

TEST_CASE("--out writes the same bytes as stdout") {
    const std::string path = "cli_out_test.json";
    std::remove(path.c_str());
    const RunResult direct = run_cli("k3 chi --l 2 --p 3");
    const RunResult redirected =
        run_cli("k3 chi --l 2 --p 3 --out " + path);
    CHECK(redirected.exit_code == 0);
    CHECK(redirected.out.empty());
    std::ifstream file(path, std::ios::binary);
    REQUIRE(file.good());
    std::string contents((std::istreambuf_iterator<char>(file)),
                         std::istreambuf_iterator<char>());
    CHECK(contents == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("--human renders aligned text") {
    const RunResult r = run_cli("k3 chi --l 2 --p 0 --human");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("chi") != std::string::npos);
    CHECK(r.out.find('{') == std::string::npos);
}

TEST_CASE("CHOWKIT_MAX_DIM caps the ring dimension") {
    // The lines computation needs a 7-dimensional product ring; capping the
    // dimension below that is a precondition violation (exit 3).
    const std::string cmd = "CHOWKIT_MAX_DIM=3 " + binary_path() +
                            " lines-divisor --d 4 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 256> buffer{};
    while (fread(buffer.data(), 1, buffer.size(), pipe) > 0) {
    }
    const int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 3);

    // A generous cap leaves the result untouched.
    const std::string ok_cmd = "CHOWKIT_MAX_DIM=40 " + binary_path() +
                               " discriminant equidegree --d 4 --m 1 --n 3";
    FILE* ok_pipe = popen(ok_cmd.c_str(), "r");
    REQUIRE(ok_pipe != nullptr);
    std::string out;
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), ok_pipe)) > 0)
        out.append(buffer.data(), n);
    CHECK(WEXITSTATUS(pclose(ok_pipe)) == 0);
    CHECK(json::parse(out)["outputs"]["degree"] == 108);
}
