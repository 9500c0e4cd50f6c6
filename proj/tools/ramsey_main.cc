// Copyright 2026 The Tree Ramsey Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using namespace ramsey;
using namespace ramsey::cli;

// Flag storage. Only options actually given on the command line become
// settings, so the config file can fill in the rest.
struct FlagTable {
    std::map<std::string, std::string> text;
    std::map<std::string, bool> flags;
    std::vector<int> orders;
    std::vector<std::pair<std::string, CLI::Option*>> bound;

    void option(CLI::App* app, const std::string& name, const std::string& key, const std::string& help) {
        bound.emplace_back(key, app->add_option(name, text[key], help));
    }
    void flag(CLI::App* app, const std::string& name, const std::string& key, const std::string& help) {
        bound.emplace_back("!" + key, app->add_flag(name, flags[key], help));
    }

    Settings collect() const {
        Settings s;
        for (const auto& [key, opt] : bound) {
            if (opt->count() == 0) continue;
            if (key == "orders") {
                s.emplace_back("order", std::to_string(orders.at(0)));
                s.emplace_back("col_order", std::to_string(orders.at(1)));
            } else if (key[0] == '!') {
                s.emplace_back(key.substr(1), flags.at(key.substr(1)) ? "true" : "false");
            } else {
                s.emplace_back(key, text.at(key));
            }
        }
        return s;
    }
};

void add_patterns(CLI::App* sub, FlagTable& t) {
    t.option(sub, "--red", "red", "red pattern (P<n>, K1,<k>, S<k>,<a>,<b>, T<m>.<j>, K<n>, graph:<n>:<edges>, @file)");
    t.option(sub, "--blue", "blue", "blue pattern, same forms as --red");
}

void add_budget(CLI::App* sub, FlagTable& t) {
    t.flag(sub, "--extended,!--no-extended", "extended", "exhaustive search up to order 10");
    t.flag(sub, "--heroic,!--no-heroic", "heroic", "exhaustive search up to order 11");
    t.option(sub, "--threads", "threads", "worker threads (0 = all cores)");
}

void add_tabu(CLI::App* sub, FlagTable& t) {
    t.option(sub, "--seed", "seed", "random seed");
    t.option(sub, "--iterations", "iterations", "Tabu iterations per restart");
    t.option(sub, "--restarts", "restarts", "Tabu restarts");
    t.option(sub, "--tenure", "tenure", "Tabu tenure (-1 = ceil(L/4))");
}

int run(int argc, char** argv) {
    CLI::App app{"Generalized Ramsey numbers of small trees by exhaustive and heuristic search"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", RAMSEY_VERSION);
    std::string config_path;
    std::string run_dir;
    app.add_option("--config", config_path, "key = value option file (flags override it)");
    app.add_option("--run-dir", run_dir, "where run manifests go (default $RAMSEY_RUN_DIR or ./runs)");

    FlagTable t;
    CLI::App* trees = app.add_subcommand("trees", "list the tree catalog of one order");
    t.option(trees, "--order", "order", "tree order");

    CLI::App* enumerate = app.add_subcommand("enumerate", "count unlabelled graphs (colorings of K_N)");
    t.option(enumerate, "--order", "order", "N");
    t.option(enumerate, "--shards", "shards", "number of shards");
    t.option(enumerate, "--shard", "shard", "shard to run (0-based)");
    t.option(enumerate, "--checkpoint", "checkpoint", "resume from a checkpoint token");
    add_budget(enumerate, t);

    CLI::App* objective = app.add_subcommand("objective", "evaluate the objective of one coloring");
    add_patterns(objective, t);
    t.option(objective, "--coloring", "coloring", "\"N=<n> bits=<0/1 string>\"");

    CLI::App* search = app.add_subcommand("search", "exhaustive minimum at one order");
    add_patterns(search, t);
    t.option(search, "--order", "order", "N");
    t.flag(search, "--census,!--no-census", "census", "count every minimizing class");
    t.option(search, "--witness-cap", "witness_cap", "witnesses kept");
    add_budget(search, t);

    CLI::App* tabu = app.add_subcommand("tabu", "Tabu search at one order");
    add_patterns(tabu, t);
    t.option(tabu, "--order", "order", "N");
    add_tabu(tabu, t);

    CLI::App* oracle = app.add_subcommand("oracle", "known results that apply to a pair");
    add_patterns(oracle, t);

    CLI::App* ramsey = app.add_subcommand("ramsey", "compute r(G, H)");
    add_patterns(ramsey, t);
    t.flag(ramsey, "--census,!--no-census", "census", "also count critical classes at r - 1");
    t.flag(ramsey, "--oracle-seed,!--no-oracle-seed", "oracle_seed", "start from oracle lower bounds");
    t.option(ramsey, "--witness-cap", "witness_cap", "witnesses kept per census");
    add_budget(ramsey, t);
    add_tabu(ramsey, t);

    CLI::App* table = app.add_subcommand("table", "r(T_m^i, T_n^j) over two tree catalogs");
    t.bound.emplace_back("orders", table->add_option("--orders", t.orders, "row and column tree orders")->expected(2));
    t.option(table, "--field", "field", "text field: r, critical, optimal or min");
    t.flag(table, "--oracle-seed,!--no-oracle-seed", "oracle_seed", "start from oracle lower bounds");
    add_budget(table, t);
    add_tabu(table, t);

    CLI::App* aqo = app.add_subcommand("aqo", "simulated adiabatic optimization");
    add_patterns(aqo, t);
    t.option(aqo, "--order", "order", "single order N (omit to walk N up to r)");
    t.option(aqo, "--runtime", "runtime", "total anneal time T");
    t.option(aqo, "--steps", "steps", "integration steps");
    t.option(aqo, "--shots", "shots", "measurements");
    t.option(aqo, "--seed", "seed", "measurement seed");
    t.option(aqo, "--sweep", "sweep", "comma-separated runtimes for the overlap sweep");

    std::string manifest_path;
    CLI::App* replay = app.add_subcommand("replay", "re-run a manifest and check the result is byte-identical");
    replay->add_option("manifest", manifest_path, "manifest file")->required();

    for (CLI::App* sub : {trees, enumerate, objective, search, tabu, oracle, ramsey, table, aqo}) {
        t.option(sub, "--out", "out", "text, json or csv");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    std::string command = app.get_subcommands().front()->get_name();
    const std::filesystem::path dir = run_dir.empty() ? default_run_dir() : std::filesystem::path(run_dir);
    if (command == "replay") {
        const auto started = std::chrono::system_clock::now();
        const ReplayOutcome r = replay_manifest(manifest_path);
        const auto finished = std::chrono::system_clock::now();
        const RunRecord rec = write_run(dir, r.command, r.options, settings_json(options_settings(r.options)),
                                        r.output.result, started, finished);
        std::cout << (r.identical ? "identical" : "DIFFERENT") << " result sha256 " << rec.digest << "\n";
        std::cerr << "manifest: " << rec.manifest_path.string() << "\n";
        return r.identical ? kExitOk : kExitInternal;
    }
    const Settings file = config_path.empty() ? Settings{} : load_config(config_path);
    const RunOptions opts = resolve_options(file, t.collect());

    const auto started = std::chrono::system_clock::now();
    const CommandOutput out = run_command(command, opts);
    const auto finished = std::chrono::system_clock::now();

    std::cout << out.display;
    const RunRecord rec = write_run(dir, command, opts, settings_json(options_settings(opts)), out.result, started, finished);
    std::cerr << "manifest: " << rec.manifest_path.string() << "\n";
    return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ramsey::cli::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ramsey::cli::kExitInvalidInput;
    } catch (const ramsey::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ramsey::cli::kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ramsey::cli::kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return ramsey::cli::kExitInternal;
    }
}
