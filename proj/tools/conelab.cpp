// conelab: flatness of families of normal cones by colon-ideal criteria,
// tangent star cones, top Segre classes of hypersurface cones, and free
// resolutions, over Q with exact arithmetic.
//
// A session file declares one ring, some bindings, and optionally a command:
//
//     ring x,y,z,t; param t;
//     ideal X = x*y, z*(z - t*x);
//     tangent-star X;
//
// `conelab run file.cone` executes the file's own command; every command is
// also a subcommand taking the file as argument, e.g. `conelab flat fam.cone`.
// Exit codes: 0 verdict true (or no verdict), 1 verdict false, 2 input error,
// 3 resource cap exceeded.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "conelab/errors.hpp"
#include "conelab/runner.hpp"

using namespace conelab;

namespace {

struct CliArgs {
    std::string file;
    RunOptions opts;
    std::vector<std::string> cmd_args;
    std::string json_path;
    std::string dirs_csv;
    std::string order, param, test_ideal, poly, ideal_name;
};

void add_common(CLI::App* cmd, CliArgs& a, bool wants_file) {
    if (wants_file)
        cmd->add_option("file", a.file, "session script (.cone)")
            ->check(CLI::ExistingFile);
    cmd->add_option("--order", a.order, "monomial order override: lex|grevlex");
    cmd->add_option("--param", a.param, "family parameter variable");
    cmd->add_option("--test-ideal", a.test_ideal, "script file binding the test ideal J");
    cmd->add_option("--seed", a.opts.seed, "seed for generated test ideals");
    cmd->add_flag("--saturate", a.opts.saturate,
                  "also evaluate the saturation variant of the parameter colon");
    cmd->add_flag("--verify", a.opts.verify, "verify verdict conclusions by direct computation");
    cmd->add_option("--json", a.json_path, "write the JSON report to this path");
    cmd->add_option("--max-pairs", a.opts.max_pairs, "pair cap for basis computations");
    cmd->add_option("--dirs", a.dirs_csv, "direction variable names, comma separated");
    cmd->add_option("--poly", a.poly, "inline polynomial instead of a script file");
    cmd->add_option("--ideal", a.ideal_name, "name of the ideal binding to use");
    cmd->add_option("args", a.cmd_args, "binding names passed to the command");
}

int emit(const RunResult& result, const std::string& json_path) {
    std::cout << result.report.dump(2) << "\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "cannot write " << json_path << "\n";
            return kExitInputError;
        }
        out << result.report.dump(2) << "\n";
    }
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"normal cone flatness toolkit"};
    app.require_subcommand(1);

    static const std::vector<std::string> commands = {
        "gb",      "nf",           "colon",   "intersect",     "saturate", "eliminate",
        "dim",     "tangent-star", "smf",     "s0",            "coalesce", "embedded",
        "flat",    "internal-flat", "fiber-compare", "pd",     "cm",       "verdict"};

    std::vector<std::unique_ptr<CliArgs>> storage;
    for (const auto& name : commands) {
        auto args = std::make_unique<CliArgs>();
        CLI::App* sub = app.add_subcommand(name, "");
        add_common(sub, *args, true);
        storage.push_back(std::move(args));
    }
    // `run` executes the command stored in the file itself
    auto run_args = std::make_unique<CliArgs>();
    CLI::App* run_sub = app.add_subcommand("run", "execute the script's own command");
    add_common(run_sub, *run_args, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitInputError : kExitTrue;
    }

    // find the chosen subcommand and its argument block
    CLI::App* chosen = app.get_subcommands().front();
    CliArgs* a = nullptr;
    std::string command = chosen->get_name();
    if (chosen == run_sub) {
        a = run_args.get();
    } else {
        for (size_t i = 0; i < commands.size(); ++i)
            if (commands[i] == command) a = storage[i].get();
    }

    if (!a->order.empty()) a->opts.order = a->order;
    if (!a->param.empty()) a->opts.param = a->param;
    if (!a->test_ideal.empty()) a->opts.test_ideal_file = a->test_ideal;
    if (!a->poly.empty()) a->opts.poly = a->poly;
    if (!a->ideal_name.empty()) a->opts.ideal_name = a->ideal_name;
    if (!a->dirs_csv.empty()) {
        std::string cur;
        for (char c : a->dirs_csv + ",") {
            if (c == ',') {
                if (!cur.empty()) a->opts.dirs.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
    }

    try {
        SessionScript script;
        if (a->opts.poly) {
            script = script_from_inline_poly(*a->opts.poly, a->opts.param);
            a->opts.param.reset(); // already applied to the inferred ring
        } else if (!a->file.empty()) {
            script = parse_script_file(a->file);
        } else {
            std::cerr << "either a script file or --poly is required\n";
            return kExitInputError;
        }

        std::vector<std::string> args = a->cmd_args;
        if (command == "run") {
            if (!script.command) {
                std::cerr << "script has no command statement\n";
                return kExitInputError;
            }
            command = *script.command;
            if (args.empty()) args = script.command_args;
        } else if (args.empty() && script.command && *script.command == command) {
            args = script.command_args;
        }
        return emit(run_command(script, command, args, a->opts), a->json_path);
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
