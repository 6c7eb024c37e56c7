#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "weld/gauss_code.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(WELD_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

}  // namespace

TEST_CASE("cli validate: exit 0 on valid, 2 on invalid") {
    CHECK(run_cli("validate \"O1+U2+O3+U1+O2+U3+\"").exit_code == 0);
    CHECK(run_cli("validate \"O1+U2+\"").exit_code == 2);       // structure error
    CHECK(run_cli("validate \"O1*\"").exit_code == 2);          // syntax error
    CHECK(run_cli("nonsense-subcommand").exit_code == 2);       // usage error
}

TEST_CASE("cli invariants: JSON battery with the trefoil alexander") {
    const CliResult r =
        run_cli("invariants \"O1+U2+O3+U1+O2+U3+\" --level welded --groups S3 --quandles R3 --json");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("schema") == "weld-report/1");
    const auto alex = j.at("results").at("battery").at("entries").at("alexander");
    CHECK(alex == nlohmann::json::parse("[[0,1],[1,-1],[2,1]]"));
    CHECK(j.at("results").at("battery").at("entries").at("hom_counts").at("S3") == 12);
}

TEST_CASE("cli JSON output is byte-identical across runs and echoes canonical form") {
    const std::string args = "invariants \"O1+U2+O3+U1+O2+U3+\" --level tube --groups S3,Z5 "
                             "--quandles R3 --json";
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    const std::string canon = j.at("inputs").at("canonical").get<std::string>();
    // parsing the echoed canonical form reproduces the input's canonical form
    CHECK(weld::to_string(weld::canonical(weld::parse_gauss_code(canon))) == canon);
    CHECK(weld::canonical(weld::parse_gauss_code(canon)) ==
          weld::canonical(weld::parse_gauss_code("O1+U2+O3+U1+O2+U3+")));
}

TEST_CASE("cli compare: tube equality exits 0, welded chirality exits 3") {
    // K' = reverse(vreflect(K)) of the right trefoil
    const std::string t = "\"O1+U2+O3+U1+O2+U3+\"";
    const std::string rv = "\"U3-O2-U1-O3-U2-O1-\"";
    CHECK(run_cli("compare " + t + " " + rv + " --level tube --groups S3,S4 --quandles R3")
              .exit_code == 0);
    const CliResult welded = run_cli("compare " + t + " " + rv +
                                     " --level welded --classical --groups S3 --quandles R3 --json");
    CHECK(welded.exit_code == 3);
    const auto j = nlohmann::json::parse(welded.out);
    CHECK(j.at("results").at("verdict").at("outcome") == "DistinguishedClassically");
    CHECK(j.at("results").at("verdict").at("witness") == "f_polynomial");
}

TEST_CASE("cli search: found exits 0, not found exits 3") {
    const CliResult found =
        run_cli("search \"O1+U1+\" \"\" --depth 1 --max-states 1000 --json");
    CHECK(found.exit_code == 0);
    const auto j = nlohmann::json::parse(found.out);
    CHECK(j.at("results").at("search").at("found") == true);
    CHECK(run_cli("search \"O1+U2+O3+U1+O2+U3+\" \"\" --depth 2 --max-states 500").exit_code ==
          3);
}

TEST_CASE("cli corpus verify passes") {
    const CliResult r = run_cli("corpus verify --json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("results").at("all_ok") == true);
}

TEST_CASE("cli thm8-demo reproduces and exits 0") {
    const CliResult r = run_cli("thm8-demo --json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("results").at("reproduced") == true);
    CHECK(j.at("results").at("tube_certificates_equal") == true);
    CHECK(j.at("results").at("f_polynomials_differ") == true);
}
