#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

using nlohmann::json;

namespace {

const std::string cli = HOLO_CLI_PATH;

struct RunResult {
    int exit_code;
    json report;
    bool has_report;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

RunResult run(const std::string& args, const std::string& out_path) {
    std::string cmd = cli + " " + args + " --output " + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    std::string text = slurp(out_path);
    r.has_report = !text.empty();
    if (r.has_report) r.report = json::parse(text);
    return r;
}

std::string config_path() {
    static const std::string path = []() {
        std::string p = "cli_test_config.json";
        json cfg{
            {"group", {{"kind", "circle"}, {"tolerance", 1e-9}}},
            {"base", {{"dim", 1}, {"box", {{0.0, 10.0}}}}},
            {"connection", {{"builtin", "omega_mu"}, {"mu", 2}}},
            {"loops", {{1.0, 1.5, 1.0}}},
            {"sampler",
             {{"count", 16}, {"max_step", 0.3}, {"seed", 9}, {"w_small", true}}},
        };
        write_file(p, cfg.dump(2));
        return p;
    }();
    return path;
}

}  // namespace

TEST_CASE("holonomy subcommand") {
    RunResult r = run("holonomy --config " + config_path(), "cli_out_holonomy.json");
    CHECK(r.exit_code == 0);
    REQUIRE(r.has_report);
    CHECK(r.report["schema_version"] == 1);
    CHECK(r.report["all_agree"] == true);
    CHECK(r.report["loops"].size() == 17);
    CHECK(r.report["loops"][0]["report"]["methods"]["direct"]["status"] == "ok");
}

TEST_CASE("holonomy output is byte-identical across runs and modes") {
    RunResult a = run("holonomy --config " + config_path(), "cli_out_det_a.json");
    RunResult b = run("holonomy --config " + config_path() + " --serial", "cli_out_det_b.json");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(slurp("cli_out_det_a.json") == slurp("cli_out_det_b.json"));
}

TEST_CASE("verify subcommand") {
    RunResult r = run("verify --config " + config_path() +
                          " --suite stokes --suite dA_eq_B --cases 200",
                      "cli_out_verify.json");
    CHECK(r.exit_code == 0);
    REQUIRE(r.has_report);
    CHECK(r.report["failures_total"] == 0);
    CHECK(r.report["suites"].size() == 2);

    RunResult bad = run("verify --config " + config_path() + " --suite bogus",
                        "cli_out_bad_suite.json");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("curvature subcommand") {
    RunResult r = run("curvature --config " + config_path() + " --triple 0.5,1.5,2.0",
                      "cli_out_curv.json");
    CHECK(r.exit_code == 0);
    REQUIRE(r.has_report);
    CHECK(r.report["value"][0].get<double>() == doctest::Approx(-1.0));

    RunResult bad = run("curvature --config " + config_path() + " --triple 0.5,1.5",
                        "cli_out_curv_bad.json");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("config errors exit with code 2") {
    write_file("cli_bad_config.json", "{ not json");
    RunResult parse_fail = run("holonomy --config cli_bad_config.json", "cli_out_e1.json");
    CHECK(parse_fail.exit_code == 2);

    json cfg{
        {"group", {{"kind", "circle"}}},
        {"base", {{"dim", 1}, {"box", {{0.0, 10.0}}}}},
        {"connection", {{"custom", {{"A_s", {"m0[0]+1"}}}}}},
    };
    write_file("cli_bad_conn.json", cfg.dump());
    RunResult conn_fail = run("holonomy --config cli_bad_conn.json", "cli_out_e2.json");
    CHECK(conn_fail.exit_code == 2);

    RunResult missing = run("holonomy --config does_not_exist.json", "cli_out_e3.json");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("disagreeing loops exit with code 1") {
    // a path that is not a loop makes the holonomy report an error entry
    json cfg{
        {"group", {{"kind", "circle"}}},
        {"base", {{"dim", 1}, {"box", {{0.0, 10.0}}}}},
        {"connection", {{"builtin", "omega_mu"}, {"mu", 2}}},
        {"loops", {{1.0, 2.0}}},
    };
    write_file("cli_notloop.json", cfg.dump());
    RunResult r = run("holonomy --config cli_notloop.json", "cli_out_notloop.json");
    CHECK(r.exit_code == 1);
    REQUIRE(r.has_report);
    CHECK(r.report["all_agree"] == false);
    CHECK(r.report["loops"][0].contains("error"));
}
