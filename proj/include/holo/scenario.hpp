#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holo/batch.hpp"
#include "holo/connection.hpp"
#include "holo/json_io.hpp"
#include "holo/transport.hpp"

namespace holo {

struct SamplerSpec {
    long long count = 0;
    double max_step = 0.5;
    unsigned long long seed = 0;
    int n_steps = 6;
    bool w_small = false;  // constrain steps so the log methods apply
};

struct Scenario {
    GroupDescriptor group;
    BasePatch base;
    json connection_spec;
    DiscreteConnection connection;
    std::vector<DiscretePath> loops;
    std::optional<SamplerSpec> sampler;
    std::vector<std::string> checks;
    std::string output;  // empty means stdout
    unsigned long long seed = 0;
};

Scenario scenario_from_json(const json& j);
Scenario scenario_from_file(const std::string& path);

DiscreteConnection connection_from_json(const json& j, const BasePatch& base,
                                        const GroupDescriptor& group);

// explicit loops followed by sampled ones, order-stable
std::vector<DiscretePath> collect_loops(const Scenario& sc);

struct SuiteResult {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    double max_deviation = 0.0;
};

std::vector<std::string> known_suites();
bool is_known_suite(const std::string& name);
SuiteResult run_suite(const std::string& name, const Scenario& sc, long long cases,
                      bool parallel);

json holonomy_report_json(const HolonomyReport& r);

// Reports carry "schema_version": 1. Exit codes: 0 all good, 1 failures,
// 2 config errors (raised as ConfigError before these run).
json run_holonomy(const Scenario& sc, bool parallel, int& exit_code);
json run_verify(const Scenario& sc, const std::vector<std::string>& suites, long long cases,
                bool parallel, int& exit_code);
json run_curvature(const Scenario& sc, const std::vector<BasePoint>& triple, int& exit_code);

}  // namespace holo
