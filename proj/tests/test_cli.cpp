/*
   Copyright 2026 The minreal authors

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

#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "gf5_fixtures.hpp"

#ifndef MINREAL_CLI_PATH
#define MINREAL_CLI_PATH "minreal"
#endif

namespace {

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string command = std::string(MINREAL_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) output.append(buffer.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/minreal_cli_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("end-to-end realize run") {
    const std::string path = write_temp("golden.txt", minreal::testing::Gf5Example::problem_text);
    const CliResult r = run_cli("realize " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("dimension: 9") != std::string::npos);
    CHECK(r.output.find("transfer check: PASS") != std::string::npos);
    CHECK(r.output.find("minimality: PASS") != std::string::npos);
}

TEST_CASE("json flag and seed flag") {
    const std::string path = write_temp("golden_json.txt", minreal::testing::Gf5Example::problem_text);
    const CliResult r = run_cli("realize --json --seed 7 " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"dimension\": 9") != std::string::npos);
}

TEST_CASE("exit codes") {
    SUBCASE("parse error gives 1") {
        const std::string path = write_temp("broken.txt", "field gf 4\nrows 1\ncols 1\n");
        const CliResult r = run_cli("realize " + path);
        CHECK(r.exit_code == 1);
        CHECK(r.output.find("parse error") != std::string::npos);
    }
    SUBCASE("usage error gives 1") {
        const std::string path = write_temp("improper.txt", "field gf 5\nrows 1\ncols 1\nT[1][1] = s\n");
        CHECK(run_cli("realize " + path).exit_code == 1);
    }
    SUBCASE("missing file gives 1") { CHECK(run_cli("realize /tmp/minreal_no_such_file").exit_code == 1); }
    SUBCASE("failed verification gives 2") {
        const std::string path = write_temp("bad_triple.txt",
                                            "field gf 5\nrows 1\ncols 1\nT[1][1] = 1/(s+3)\n"
                                            "states 1\nF[1][1] = 1\nG[1][1] = 1\nH[1][1] = 1\n");
        const CliResult r = run_cli("verify " + path);
        CHECK(r.exit_code == 2);
        CHECK(r.output.find("FAIL") != std::string::npos);
    }
}

TEST_CASE("jnf and smf subcommands") {
    const std::string jnf_path =
        write_temp("companion.txt", "field gf 5\nrows 2\ncols 2\nT[1][2] = 1\nT[2][1] = 3\nT[2][2] = 4\n");
    const CliResult jnf = run_cli("jnf " + jnf_path);
    CHECK(jnf.exit_code == 0);
    CHECK(jnf.output.find("similarity check: PASS") != std::string::npos);

    const std::string smf_path = write_temp(
        "component.txt",
        "field gf 5\nrows 2\ncols 2\n"
        "T[1][1] = (4*s^2+4*s+1)/(s^3+3*s^2+s+1)\nT[1][2] = (3*s^2+3*s+2)/(s^3+3*s^2+s+1)\n"
        "T[2][1] = (2*s^2+s+2)/(s^3+3*s^2+s+1)\nT[2][2] = (4*s^2+2*s+4)/(s^3+3*s^2+s+1)\n");
    const CliResult smf = run_cli("smf " + smf_path);
    CHECK(smf.exit_code == 0);
    CHECK(smf.output.find("prime: s^3+3*s^2+s+1") != std::string::npos);
    CHECK(smf.output.find("rank: 1") != std::string::npos);
}
