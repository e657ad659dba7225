#include "holo/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace holo {

namespace {

DiscretePath loop_from_json(const json& j, int base_dim) {
    DiscretePath path;
    for (const auto& pt : j) {
        if (pt.is_number()) {
            if (base_dim != 1)
                throw ConfigError("scalar loop points require a 1-dimensional base");
            path.points.push_back({pt.get<double>()});
        } else {
            BasePoint m = pt.get<BasePoint>();
            if (static_cast<int>(m.size()) != base_dim)
                throw ConfigError("loop point dimension does not match the base patch");
            path.points.push_back(std::move(m));
        }
    }
    if (path.points.size() < 1) throw ConfigError("empty loop in config");
    return path;
}

GroupElement random_group_element(const GroupDescriptor& g, std::mt19937& rng) {
    std::vector<double> c(g.k);
    std::uniform_real_distribution<double> dist(g.angular() ? -kPi : -2.0,
                                                g.angular() ? kPi : 2.0);
    for (double& x : c) x = dist(rng);
    return GroupElement(g, std::move(c));
}

}  // namespace

DiscreteConnection connection_from_json(const json& j, const BasePatch& base,
                                        const GroupDescriptor& group) {
    if (!j.is_object()) throw ConfigError("connection spec must be an object");
    if (j.contains("builtin")) {
        std::string name = j.at("builtin").get<std::string>();
        if (name != "omega_mu") throw ConfigError("unknown builtin connection: " + name);
        if (base.dim != 1 || group.angular() == false || group.k != 1)
            throw ConfigError("omega_mu requires a 1-dimensional base and circle group");
        if (!(base.box[0].first >= 0.0))
            throw ConfigError("omega_mu requires a base box inside r > 0");
        double mu = j.value("mu", 1.0);
        DiscreteConnection A = omega_mu(mu, base.box[0].second, group.tolerance);
        A.patch = base;
        return A;
    }
    if (j.contains("custom")) {
        auto exprs = j.at("custom").at("A_s").get<std::vector<std::string>>();
        return connection_from_expressions(exprs, base, group);
    }
    if (j.contains("exact")) {
        auto exprs = j.at("exact").at("alpha0").get<std::vector<std::string>>();
        return connection_from_zero_cochain(exprs, base, group);
    }
    throw ConfigError("connection spec needs \"builtin\", \"custom\" or \"exact\"");
}

Scenario scenario_from_json(const json& j) {
    Scenario sc;
    if (!j.is_object()) throw ConfigError("scenario must be a JSON object");
    sc.group = descriptor_from_json(j.at("group"));
    sc.base = patch_from_json(j.at("base"));
    sc.connection_spec = j.at("connection");
    sc.connection = connection_from_json(sc.connection_spec, sc.base, sc.group);

    if (j.contains("loops"))
        for (const auto& loop : j.at("loops"))
            sc.loops.push_back(loop_from_json(loop, sc.base.dim));

    if (j.contains("sampler")) {
        const json& s = j.at("sampler");
        SamplerSpec spec;
        spec.count = s.at("count").get<long long>();
        spec.max_step = s.value("max_step", 0.5);
        if (!s.contains("seed")) throw ConfigError("sampler spec requires a seed");
        spec.seed = s.at("seed").get<unsigned long long>();
        spec.n_steps = s.value("n_steps", 6);
        spec.w_small = s.value("w_small", false);
        if (spec.count < 0 || spec.n_steps < 1 || spec.max_step <= 0.0)
            throw ConfigError("invalid sampler spec");
        sc.sampler = spec;
        sc.seed = spec.seed;
    }
    if (j.contains("seed")) sc.seed = j.at("seed").get<unsigned long long>();
    if (j.contains("checks")) sc.checks = j.at("checks").get<std::vector<std::string>>();
    if (j.contains("output")) sc.output = j.at("output").get<std::string>();
    return sc;
}

Scenario scenario_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return scenario_from_json(j);
}

std::vector<DiscretePath> collect_loops(const Scenario& sc) {
    std::vector<DiscretePath> out = sc.loops;
    if (sc.sampler) {
        const SamplerSpec& s = *sc.sampler;
        double radius = s.max_step;
        if (s.w_small) {
            std::mt19937 rng = case_rng(s.seed, -1);
            BasePoint mid(sc.base.dim);
            for (int i = 0; i < sc.base.dim; ++i)
                mid[i] = 0.5 * (sc.base.box[i].first + sc.base.box[i].second);
            radius = std::min(radius, w_safe_radius(sc.connection, mid, rng));
        }
        for (long long i = 0; i < s.count; ++i) {
            std::mt19937 rng = case_rng(s.seed, i);
            BasePoint start = sc.base.clamp_inside(sample_base_point(sc.base, rng), radius);
            out.push_back(sample_loop(sc.base, start, s.n_steps, radius, rng));
        }
    }
    return out;
}

json holonomy_report_json(const HolonomyReport& r) {
    json methods = json::object();
    for (const auto& m : r.methods) {
        json entry;
        switch (m.status) {
            case MethodStatus::ok: entry["status"] = "ok"; break;
            case MethodStatus::skipped: entry["status"] = "skipped"; break;
            case MethodStatus::error: entry["status"] = "error"; break;
        }
        entry["value"] = m.value ? to_json(*m.value) : json(nullptr);
        if (!m.detail.empty()) entry["detail"] = m.detail;
        methods[m.name] = entry;
    }
    return json{{"methods", methods},
                {"agreement", r.agreement},
                {"max_deviation", r.max_deviation}};
}

namespace {

// sample a small n-simplex whose vertices all lie in the given pair region;
// retries a bounded number of times
Simplex sample_small_simplex(const BasePatch& patch, const Region& region, int dim,
                             double radius, std::mt19937& rng) {
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<Vertex> vertices;
        BasePoint center = sample_base_point(patch, rng);
        std::uniform_real_distribution<double> dist(-radius, radius);
        for (int i = 0; i <= dim; ++i) {
            BasePoint m(patch.dim);
            for (int d = 0; d < patch.dim; ++d) m[d] = center[d] + dist(rng);
            vertices.push_back(patch.clamp_inside(m, 1e-6));
        }
        Simplex s(std::move(vertices));
        if (is_small(s, region)) return s;
    }
    throw DomainError("failed to sample a region-small simplex");
}

double half_extent(const BasePatch& patch) {
    double e = std::numeric_limits<double>::infinity();
    for (const auto& [lo, hi] : patch.box) e = std::min(e, 0.5 * (hi - lo));
    return e;
}

struct SuiteContext {
    const Scenario& sc;
    const DiscreteConnection& A;
    double tol;
    double wide_radius;  // patch-scale sampling
    double w_radius;     // W''-safe sampling
};

using SuiteFn = std::function<BatchCase(const SuiteContext&)>;

BatchCase suite_ddzero(const SuiteContext& ctx) {
    const BasePatch patch = ctx.sc.base;
    double radius = ctx.wide_radius;
    return [patch, radius](std::mt19937& rng) {
        Simplex t2 = sample_small_simplex(patch, Region::full(), 2, radius, rng);
        std::uniform_int_distribution<long long> coeff(-3, 3);
        Chain c = Chain::single(t2, coeff(rng) * 2 + 1);  // odd, never zero
        return boundary(boundary(c)).empty() ? 0.0 : std::numeric_limits<double>::infinity();
    };
}

BatchCase suite_deltadelta(const SuiteContext& ctx) {
    const DiscreteConnection A = ctx.A;
    const BasePatch patch = ctx.sc.base;
    double radius = ctx.wide_radius;
    Cochain alpha0;
    alpha0.dim = 0;
    alpha0.coefficients = A.group;
    alpha0.domain = A.domain.base_region;
    GroupDescriptor g = A.group;
    alpha0.evaluate_simplex = [g](const Simplex& s) -> Value {
        std::vector<double> c(g.k);
        double t = 0.0;
        for (double x : s.vertices[0]) t += x;
        for (int i = 0; i < g.k; ++i) c[i] = std::sin(t + i);
        return GroupElement(g, std::move(c));
    };
    Cochain dd = coboundary(coboundary(alpha0));
    return [dd, patch, radius](std::mt19937& rng) {
        Simplex t2 = sample_small_simplex(patch, dd.domain, 2, radius, rng);
        Value v = integrate(dd, t2);
        return value_deviation(v, value_identity(v));
    };
}

BatchCase suite_stokes(const SuiteContext& ctx) {
    Cochain alpha1 = local_cochain(ctx.A);
    Cochain dalpha1 = coboundary(alpha1);
    const BasePatch patch = ctx.sc.base;
    double radius = ctx.wide_radius;
    return [alpha1, dalpha1, patch, radius](std::mt19937& rng) {
        Simplex t2 = sample_small_simplex(patch, alpha1.domain, 2, radius, rng);
        Value lhs = integrate(alpha1, boundary(t2));
        Value rhs = integrate(dalpha1, t2);
        return value_deviation(lhs, rhs);
    };
}

BatchCase suite_dA_eq_B(const SuiteContext& ctx) {
    Cochain dA = coboundary(local_cochain(ctx.A));
    Cochain B = local_curvature_cochain(ctx.A);
    const BasePatch patch = ctx.sc.base;
    double radius = ctx.wide_radius;
    return [dA, B, patch, radius](std::mt19937& rng) {
        Simplex t2 = sample_small_simplex(patch, B.domain, 2, radius, rng);
        return value_deviation(integrate(dA, t2), integrate(B, t2));
    };
}

BatchCase suite_dLA_eq_LB(const SuiteContext& ctx) {
    Cochain dLA = coboundary(log_local_cochain(ctx.A));
    Cochain LB = log_curvature_cochain(ctx.A);
    const BasePatch patch = ctx.sc.base;
    double radius = ctx.w_radius;
    return [dLA, LB, patch, radius](std::mt19937& rng) {
        Simplex t2 = sample_small_simplex(patch, LB.domain, 2, radius, rng);
        return value_deviation(integrate(dLA, t2), integrate(LB, t2));
    };
}

BatchCase suite_exp_pushforward(const SuiteContext& ctx) {
    Cochain expLA = pushforward_exp(log_local_cochain(ctx.A));
    Cochain As = local_cochain(ctx.A);
    const BasePatch patch = ctx.sc.base;
    double radius = ctx.w_radius;
    Region w = expLA.domain;
    return [expLA, As, patch, radius, w](std::mt19937& rng) {
        Simplex t1 = sample_small_simplex(patch, w, 1, radius, rng);
        return value_deviation(integrate(expLA, t1), integrate(As, t1));
    };
}

BatchCase suite_product_formula(const SuiteContext& ctx) {
    const DiscreteConnection A = ctx.A;
    const BasePatch patch = ctx.sc.base;
    return [A, patch](std::mt19937& rng) {
        std::uniform_int_distribution<int> len(2, 8);
        int n = len(rng);
        BundlePath path;
        for (int k = 0; k <= n; ++k)
            path.points.emplace_back(sample_base_point(patch, rng),
                                     random_group_element(A.group, rng));
        GroupElement lhs = GroupElement::identity(A.group);
        for (int k = 1; k <= n; ++k)
            lhs = compose(lhs, inverse(eval(A, path.points[k - 1], path.points[k])));
        lhs = compose(lhs, eval(A, path.points[0], path.points[n]));
        return deviation(lhs, curvature_product(A, path));
    };
}

BatchCase suite_roundtrip_lift(const SuiteContext& ctx) {
    const DiscreteConnection A = ctx.A;
    DiscreteConnection back = connection_from_lift(lift_map(A), A.patch, A.group, A.domain);
    const BasePatch patch = ctx.sc.base;
    return [A, back, patch](std::mt19937& rng) {
        BasePoint m0 = sample_base_point(patch, rng);
        BasePoint m1 = sample_base_point(patch, rng);
        if (!A.domain.contains_base_pair(m0, m1)) return 0.0;
        double d = deviation(A.local_form(m0, m1), back.local_form(m0, m1));
        // also the converse direction: the lift of the recovered form
        auto lifted = horizontal_lift(A, BundlePoint(m0, random_group_element(A.group, rng)), m1);
        auto lifted2 = horizontal_lift(back, lifted.first, m1);
        return std::max(d, deviation(lifted.second.fiber, lifted2.second.fiber));
    };
}

BatchCase suite_exact_implies_flat(const SuiteContext& ctx) {
    const DiscreteConnection A = ctx.A;
    const BasePatch patch = ctx.sc.base;
    return [A, patch](std::mt19937& rng) {
        BasePoint m0 = sample_base_point(patch, rng);
        BasePoint m1 = sample_base_point(patch, rng);
        BasePoint m2 = sample_base_point(patch, rng);
        if (!region_triple_contains(A.domain, m0, m1, m2)) return 0.0;
        GroupElement b = curvature_local(A, m0, m1, m2);
        return deviation(b, GroupElement::identity(A.group));
    };
}

BatchCase suite_equivariance(const SuiteContext& ctx) {
    const DiscreteConnection A = ctx.A;
    const BasePatch patch = ctx.sc.base;
    return [A, patch](std::mt19937& rng) {
        BundlePoint q0(sample_base_point(patch, rng), random_group_element(A.group, rng));
        BundlePoint q1(sample_base_point(patch, rng), random_group_element(A.group, rng));
        if (!A.domain.contains_bundle_pair(q0, q1)) return 0.0;
        GroupElement g0 = random_group_element(A.group, rng);
        GroupElement g1 = random_group_element(A.group, rng);
        GroupElement lhs = eval(A, act(g0, q0), act(g1, q1));
        GroupElement rhs = compose(g1, compose(eval(A, q0, q1), inverse(g0)));
        return deviation(lhs, rhs);
    };
}

BatchCase suite_phase_agreement(const SuiteContext& ctx) {
    const DiscreteConnection A = ctx.A;
    const BasePatch patch = ctx.sc.base;
    SamplerSpec spec = ctx.sc.sampler.value_or(SamplerSpec{0, 0.5, 0, 6, false});
    double radius = spec.w_small ? ctx.w_radius : std::min(spec.max_step, ctx.wide_radius);
    int n_steps = spec.n_steps;
    return [A, patch, radius, n_steps](std::mt19937& rng) {
        BasePoint start = patch.clamp_inside(sample_base_point(patch, rng), radius);
        DiscretePath loop = sample_loop(patch, start, n_steps, radius, rng);
        HolonomyReport r = verify_phase_theorems(A, loop);
        if (!r.agreement) return std::numeric_limits<double>::infinity();
        return r.max_deviation;
    };
}

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"ddzero", suite_ddzero},
        {"deltadelta", suite_deltadelta},
        {"stokes", suite_stokes},
        {"dA_eq_B", suite_dA_eq_B},
        {"dLA_eq_LB", suite_dLA_eq_LB},
        {"exp_pushforward", suite_exp_pushforward},
        {"product_formula", suite_product_formula},
        {"roundtrip_lift", suite_roundtrip_lift},
        {"exact_implies_flat", suite_exact_implies_flat},
        {"equivariance", suite_equivariance},
        {"phase_agreement", suite_phase_agreement},
    };
    return table;
}

}  // namespace

std::vector<std::string> known_suites() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : suite_table()) names.push_back(name);
    return names;
}

bool is_known_suite(const std::string& name) {
    for (const auto& [n, fn] : suite_table())
        if (n == name) return true;
    return false;
}

SuiteResult run_suite(const std::string& name, const Scenario& sc, long long cases,
                      bool parallel) {
    const SuiteFn* fn = nullptr;
    for (const auto& [n, f] : suite_table())
        if (n == name) fn = &f;
    if (!fn) throw ConfigError("unknown suite: " + name);

    SuiteContext ctx{sc, sc.connection, sc.group.tolerance, 0.0, 0.0};
    ctx.wide_radius = half_extent(sc.base);
    {
        std::mt19937 rng = case_rng(sc.seed, -2);
        BasePoint mid(sc.base.dim);
        for (int i = 0; i < sc.base.dim; ++i)
            mid[i] = 0.5 * (sc.base.box[i].first + sc.base.box[i].second);
        ctx.w_radius = w_safe_radius(sc.connection, mid, rng);
    }

    BatchCase batch = (*fn)(ctx);
    BatchResult r = run_batch(cases, sc.seed, ctx.tol, batch, parallel);
    return SuiteResult{name, r.cases, r.failures, r.max_deviation};
}

json run_holonomy(const Scenario& sc, bool parallel, int& exit_code) {
    std::vector<DiscretePath> loops = collect_loops(sc);
    std::vector<json> entries(loops.size());
    bool all_agree = true;
    bool any_error = false;

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long i = 0; i < static_cast<long long>(loops.size()); ++i) {
        json entry;
        entry["index"] = i;
        json pts = json::array();
        for (const auto& m : loops[i].points) pts.push_back(m);
        entry["loop"] = pts;
        try {
            HolonomyReport r = verify_phase_theorems(sc.connection, loops[i]);
            entry["report"] = holonomy_report_json(r);
            if (!r.agreement) {
#pragma omp critical
                all_agree = false;
            }
        } catch (const Error& e) {
            entry["error"] = e.what();
#pragma omp critical
            {
                any_error = true;
                all_agree = false;
            }
        }
        entries[i] = std::move(entry);
    }

    json out;
    out["schema_version"] = 1;
    out["command"] = "holonomy";
    out["loops"] = entries;
    out["all_agree"] = all_agree;
    exit_code = all_agree ? 0 : 1;
    (void)any_error;
    return out;
}

json run_verify(const Scenario& sc, const std::vector<std::string>& suites, long long cases,
                bool parallel, int& exit_code) {
    std::vector<std::string> selected = suites.empty() ? sc.checks : suites;
    if (selected.empty()) selected = known_suites();
    for (const auto& name : selected)
        if (!is_known_suite(name)) throw ConfigError("unknown suite: " + name);

    json results = json::array();
    long long failures_total = 0;
    for (const auto& name : selected) {
        SuiteResult r = run_suite(name, sc, cases, parallel);
        failures_total += r.failures;
        results.push_back(json{{"name", r.name},
                               {"cases", r.cases},
                               {"failures", r.failures},
                               {"max_deviation", r.max_deviation}});
    }
    json out;
    out["schema_version"] = 1;
    out["command"] = "verify";
    out["suites"] = results;
    out["failures_total"] = failures_total;
    exit_code = failures_total == 0 ? 0 : 1;
    return out;
}

json run_curvature(const Scenario& sc, const std::vector<BasePoint>& triple, int& exit_code) {
    json out;
    out["schema_version"] = 1;
    out["command"] = "curvature";
    out["triple"] = triple;
    if (triple.size() != 3) throw ConfigError("curvature needs exactly three base points");
    try {
        GroupElement b = curvature_local(sc.connection, triple[0], triple[1], triple[2]);
        out["value"] = to_json(b);
        try {
            AlgebraElement lb =
                log_curvature_local(sc.connection, triple[0], triple[1], triple[2]);
            out["log"] = to_json(lb);
        } catch (const DomainError&) {
            out["log"] = nullptr;
        }
        exit_code = 0;
    } catch (const DomainError& e) {
        out["error"] = e.what();
        exit_code = 1;
    }
    return out;
}

}  // namespace holo
