#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "holo/scenario.hpp"

namespace {

using holo::json;

void emit(const json& report, const std::string& output, bool pretty) {
    std::string text = report.dump(2) + "\n";
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw holo::ConfigError("cannot open output file: " + output);
        out << text;
    }
    if (pretty) {
        // human summary on stderr, machine report stays clean on stdout
        if (report["command"] == "holonomy") {
            std::cerr << "holonomy: " << report["loops"].size() << " loops, all_agree="
                      << (report["all_agree"].get<bool>() ? "yes" : "no") << "\n";
        } else if (report["command"] == "verify") {
            for (const auto& s : report["suites"])
                std::cerr << "suite " << s["name"].get<std::string>() << ": "
                          << s["failures"].get<long long>() << "/" << s["cases"].get<long long>()
                          << " failures, max deviation " << s["max_deviation"].get<double>()
                          << "\n";
        } else if (report["command"] == "curvature") {
            std::cerr << "curvature: " << report.dump() << "\n";
        }
    }
}

std::vector<holo::BasePoint> parse_triple(const std::string& text, int dim) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) values.push_back(std::stod(tok));
    if (static_cast<int>(values.size()) != 3 * dim)
        throw holo::ConfigError("--triple needs 3*dim comma-separated coordinates");
    std::vector<holo::BasePoint> triple(3);
    for (int i = 0; i < 3; ++i)
        triple[i].assign(values.begin() + i * dim, values.begin() + (i + 1) * dim);
    return triple;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete connection holonomy toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string output;
    std::string triple_text;
    std::vector<std::string> suites;
    long long cases = 1000;
    long long seed_override = -1;
    bool pretty = false;
    bool serial = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "scenario config (JSON)")->required();
        cmd->add_option("--seed", seed_override, "override the config seed");
        cmd->add_option("--output", output, "report file (default stdout)");
        cmd->add_flag("--pretty", pretty, "human summary on stderr");
        cmd->add_flag("--serial", serial, "disable OpenMP parallelism");
    };

    CLI::App* holonomy = app.add_subcommand("holonomy", "verify holonomy phases per loop");
    add_common(holonomy);

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify);
    verify->add_option("--suite", suites, "suite name (repeatable)");
    verify->add_option("--cases", cases, "cases per suite");

    CLI::App* curvature = app.add_subcommand("curvature", "evaluate curvature at a base triple");
    add_common(curvature);
    curvature->add_option("--triple", triple_text, "3*dim comma-separated coordinates")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        holo::Scenario sc = holo::scenario_from_file(config_path);
        if (seed_override >= 0) {
            sc.seed = static_cast<unsigned long long>(seed_override);
            if (sc.sampler) sc.sampler->seed = sc.seed;
        }
        if (output.empty()) output = sc.output;

        int exit_code = 0;
        json report;
        if (holonomy->parsed()) {
            report = holo::run_holonomy(sc, !serial, exit_code);
        } else if (verify->parsed()) {
            report = holo::run_verify(sc, suites, cases, !serial, exit_code);
        } else {
            report = holo::run_curvature(sc, parse_triple(triple_text, sc.base.dim), exit_code);
        }
        emit(report, output, pretty);
        return exit_code;
    } catch (const holo::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const holo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
