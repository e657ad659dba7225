#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "holo/scenario.hpp"

using namespace holo;

namespace {

json base_config() {
    return json{
        {"group", {{"kind", "circle"}, {"k", 1}, {"tolerance", 1e-9}}},
        {"base", {{"dim", 1}, {"box", {{0.0, 10.0}}}}},
        {"connection", {{"builtin", "omega_mu"}, {"mu", 2}}},
        {"loops", {{1.0, 1.5, 1.0}}},
        {"sampler",
         {{"count", 8}, {"max_step", 0.3}, {"seed", 77}, {"n_steps", 6}, {"w_small", true}}},
    };
}

}  // namespace

TEST_CASE("scenario parsing") {
    Scenario sc = scenario_from_json(base_config());
    CHECK(sc.group.angular());
    CHECK(sc.base.dim == 1);
    CHECK(sc.loops.size() == 1);
    CHECK(sc.loops[0].points.size() == 3);
    REQUIRE(sc.sampler.has_value());
    CHECK(sc.sampler->count == 8);
    CHECK(sc.sampler->seed == 77);
    CHECK(sc.seed == 77);
    CHECK(approx_equal(sc.connection.local({1.0}, {2.0}),
                       GroupElement(sc.group, {1.0})));
}

TEST_CASE("scenario config errors") {
    json missing_seed = base_config();
    missing_seed["sampler"].erase("seed");
    CHECK_THROWS_AS(scenario_from_json(missing_seed), ConfigError);

    json bad_builtin = base_config();
    bad_builtin["connection"] = {{"builtin", "nonexistent"}};
    CHECK_THROWS_AS(scenario_from_json(bad_builtin), ConfigError);

    json bad_custom = base_config();
    bad_custom["connection"] = {{"custom", {{"A_s", {"m0[0]+1"}}}}};
    CHECK_THROWS_AS(scenario_from_json(bad_custom), ConfigError);

    json bad_loop = base_config();
    bad_loop["loops"] = {{{1.0, 2.0}, {1.5, 2.0}}};  // 2-d points over a 1-d base
    CHECK_THROWS_AS(scenario_from_json(bad_loop), ConfigError);

    json bad_expr = base_config();
    bad_expr["connection"] = {{"custom", {{"A_s", {"m1[0]-m0["}}}}};
    CHECK_THROWS_AS(scenario_from_json(bad_expr), SyntaxError);
}

TEST_CASE("custom and exact connection specs") {
    json cfg = base_config();
    cfg["connection"] = {{"custom", {{"A_s", {"(m1[0]-m0[0])^2"}}}}};
    Scenario sc = scenario_from_json(cfg);
    CHECK(approx_equal(sc.connection.local({1.0}, {2.5}),
                       GroupElement(sc.group, {2.25})));

    cfg["connection"] = {{"exact", {{"alpha0", {"sin(m0[0])"}}}}};
    Scenario exact = scenario_from_json(cfg);
    std::mt19937 rng(1);
    CHECK(is_flat_on_samples(exact.connection, 500, rng));
}

TEST_CASE("collect_loops is deterministic and honors explicit loops first") {
    Scenario sc = scenario_from_json(base_config());
    std::vector<DiscretePath> a = collect_loops(sc);
    std::vector<DiscretePath> b = collect_loops(sc);
    REQUIRE(a.size() == 9);  // 1 explicit + 8 sampled
    REQUIRE(a.size() == b.size());
    CHECK(a[0].points == sc.loops[0].points);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].points == b[i].points);
    for (const auto& loop : a) CHECK(loop.is_loop(1e-12));
}

TEST_CASE("every suite passes on a matching scenario") {
    Scenario sc = scenario_from_json(base_config());
    json exact_cfg = base_config();
    exact_cfg["connection"] = {{"exact", {{"alpha0", {"sin(m0[0])"}}}}};
    Scenario exact = scenario_from_json(exact_cfg);
    for (const auto& name : known_suites()) {
        CAPTURE(name);
        // flatness only holds for connections built from a potential
        const Scenario& target = name == "exact_implies_flat" ? exact : sc;
        SuiteResult r = run_suite(name, target, 200, false);
        CHECK(r.cases == 200);
        CHECK(r.failures == 0);
        CHECK(r.max_deviation < 1e-9);
    }
    CHECK_THROWS_AS(run_suite("no_such_suite", sc, 10, false), ConfigError);
}

TEST_CASE("serial and parallel suite runs agree exactly") {
    Scenario sc = scenario_from_json(base_config());
    for (const auto& name : {"stokes", "dA_eq_B", "phase_agreement"}) {
        SuiteResult serial = run_suite(name, sc, 400, false);
        SuiteResult parallel = run_suite(name, sc, 400, true);
        CHECK(serial.failures == parallel.failures);
        CHECK(serial.max_deviation == parallel.max_deviation);
    }
}

TEST_CASE("run_holonomy") {
    Scenario sc = scenario_from_json(base_config());
    int code = -1;
    json out = run_holonomy(sc, false, code);
    CHECK(code == 0);
    CHECK(out["schema_version"] == 1);
    CHECK(out["all_agree"] == true);
    REQUIRE(out["loops"].size() == 9);
    const json& first = out["loops"][0]["report"];
    CHECK(first["agreement"] == true);
    CHECK(first["methods"]["direct"]["status"] == "ok");
    double phase = first["methods"]["direct"]["value"][0].get<double>();
    CHECK(phase == doctest::Approx(-0.5));

    // identical runs produce identical reports
    int code2 = -1;
    json out2 = run_holonomy(sc, true, code2);
    CHECK(out == out2);
    CHECK(code2 == 0);
}

TEST_CASE("run_verify") {
    Scenario sc = scenario_from_json(base_config());
    int code = -1;
    json out = run_verify(sc, {"ddzero", "stokes"}, 100, false, code);
    CHECK(code == 0);
    CHECK(out["failures_total"] == 0);
    REQUIRE(out["suites"].size() == 2);
    CHECK(out["suites"][0]["name"] == "ddzero");
    CHECK(out["suites"][1]["cases"] == 100);

    CHECK_THROWS_AS(run_verify(sc, {"bogus"}, 10, false, code), ConfigError);
}

TEST_CASE("run_curvature") {
    Scenario sc = scenario_from_json(base_config());
    int code = -1;
    json out = run_curvature(sc, {{0.5}, {1.5}, {2.0}}, code);
    CHECK(code == 0);
    CHECK(out["value"][0].get<double>() == doctest::Approx(-1.0));
    CHECK(out["log"][0].get<double>() == doctest::Approx(-1.0));

    // a triple whose curvature sits on the branch cut reports a null log
    json cut = run_curvature(sc, {{1.0}, {1.0 + kPi / 2}, {kPi / 2}}, code);
    CHECK(code == 0);
    CHECK(cut["value"][0].get<double>() == doctest::Approx(kPi));
    CHECK(cut["log"].is_null());
}
