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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "minreal/problem.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw minreal::UsageError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run(minreal::Command command, const std::string& path, const minreal::RunOptions& options) {
    const minreal::ProblemFile problem = minreal::parse_problem(read_file(path));
    const minreal::RunResult result = minreal::run_command(command, problem, options);
    std::cout << result.output;
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact minimal state-space realizations with the state matrix in Jacobson normal form"};
    app.require_subcommand(1);

    std::string path;
    minreal::RunOptions options;
    minreal::Command command = minreal::Command::realize;

    const auto add = [&](const std::string& name, const std::string& help, minreal::Command c) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("file", path, "problem file")->required();
        sub->add_flag("--json", options.json, "machine-readable output");
        sub->add_option("--seed", options.seed, "seed for the factorizer's pseudo-random source");
        sub->callback([&, c] { command = c; });
        return sub;
    };
    add("realize", "minimal realization of a strictly proper transfer matrix", minreal::Command::realize);
    add("jnf", "Jacobson normal form of a square scalar matrix", minreal::Command::jnf);
    add("smf", "Smith-McMillan data of the prime components", minreal::Command::smf);
    add("verify", "check a provided (F, G, H) against the transfer matrix", minreal::Command::verify);

    CLI11_PARSE(app, argc, argv);

    try {
        return run(command, path, options);
    } catch (const minreal::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const minreal::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const minreal::FactorRangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const minreal::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const minreal::ArithmeticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
