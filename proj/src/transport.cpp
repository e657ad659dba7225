#include "holo/transport.hpp"

#include <algorithm>
#include <cmath>

namespace holo {

bool DiscretePath::is_loop(double tol) const {
    return !points.empty() && base_close(points.front(), points.back(), tol);
}

bool DiscretePath::subordinated(const Region& r) const {
    for (int k = 1; k <= length(); ++k)
        if (!r.contains(points[k - 1], points[k])) return false;
    return true;
}

BundlePath lift_path(const DiscreteConnection& A, const DiscretePath& m_path,
                     const BundlePoint& q0) {
    if (m_path.points.empty()) throw DomainError("cannot lift an empty path");
    if (!base_close(q0.base, m_path.points.front(), A.group.tolerance))
        throw DomainError("starting point is not over the first path point");
    BundlePath out;
    out.points.reserve(m_path.points.size());
    out.points.push_back(q0);
    for (int k = 1; k <= m_path.length(); ++k) {
        // q_k := h2(q_{k-1}, m_k)
        out.points.push_back(horizontal_lift(A, out.points.back(), m_path.points[k]).second);
    }
    return out;
}

BundlePoint parallel_transport(const DiscreteConnection& A, const DiscretePath& m_path,
                               const BundlePoint& q0) {
    return lift_path(A, m_path, q0).points.back();
}

GroupElement holonomy(const DiscreteConnection& A, const DiscretePath& m_loop,
                      const BundlePoint& q0) {
    if (!m_loop.is_loop(A.group.tolerance)) throw NotALoopError("path is not a loop");
    return kappa(q0, parallel_transport(A, m_loop, q0));
}

GroupElement holonomy(const DiscreteConnection& A, const DiscretePath& m_loop) {
    return holonomy(A, m_loop, BundlePoint(m_loop.points.front(),
                                           GroupElement::identity(A.group)));
}

GroupElement holonomy_via_local_product(const DiscreteConnection& A,
                                        const DiscretePath& m_loop) {
    if (!m_loop.is_loop(A.group.tolerance)) throw NotALoopError("path is not a loop");
    GroupElement acc = GroupElement::identity(A.group);
    for (int k = 1; k <= m_loop.length(); ++k)
        acc = compose(acc, inverse(A.local(m_loop.points[k - 1], m_loop.points[k])));
    return acc;
}

GroupElement curvature_product(const DiscreteConnection& A, const BundlePath& q_path) {
    GroupElement acc = GroupElement::identity(A.group);
    int n = static_cast<int>(q_path.points.size()) - 1;
    for (int k = 1; k <= n - 1; ++k)
        acc = compose(acc, inverse(curvature(A, q_path.points[0], q_path.points[k],
                                             q_path.points[k + 1])));
    return acc;
}

Chain interpolating_chain(const DiscretePath& m_path) {
    Chain c = Chain::zero(1);
    for (int k = 1; k <= m_path.length(); ++k)
        c.add_term(Simplex{m_path.points[k - 1], m_path.points[k]}, 1);
    return c;
}

Chain fan_two_chain(const DiscretePath& m_loop) {
    if (m_loop.length() < 2) throw DomainError("fan requires a loop of length >= 2");
    Chain c = Chain::zero(2);
    for (int j = 1; j <= m_loop.length() - 1; ++j)
        c.add_term(Simplex{m_loop.points[0], m_loop.points[j], m_loop.points[j + 1]}, 1);
    return c;
}

const PhaseMethod* HolonomyReport::find(const std::string& name) const {
    for (const auto& m : methods)
        if (m.name == name) return &m;
    return nullptr;
}

namespace {

PhaseMethod run_method(const std::string& name, bool applicable, const std::string& skip_why,
                       const std::function<GroupElement()>& compute) {
    PhaseMethod m;
    m.name = name;
    if (!applicable) {
        m.status = MethodStatus::skipped;
        m.detail = skip_why;
        return m;
    }
    try {
        m.value = compute();
        m.status = MethodStatus::ok;
    } catch (const Error& e) {
        m.status = MethodStatus::error;
        m.detail = e.what();
    }
    return m;
}

}  // namespace

HolonomyReport verify_phase_theorems(const DiscreteConnection& A, const DiscretePath& m_loop) {
    if (!m_loop.is_loop(A.group.tolerance)) throw NotALoopError("path is not a loop");
    if (!m_loop.subordinated(A.domain.base_region))
        throw DomainError("loop is not subordinated to the connection domain");

    const int n = m_loop.length();
    const auto& pts = m_loop.points;

    bool fan_ok = n >= 2;
    for (int k = 0; fan_ok && k <= n - 1; ++k)
        fan_ok = region_triple_contains(A.domain, pts[0], pts[k], pts[k + 1]);

    bool steps_in_w = true;
    for (int k = 1; steps_in_w && k <= n; ++k) steps_in_w = A.in_w(pts[k - 1], pts[k]);

    bool fan_in_w = n >= 2 && steps_in_w;
    for (int k = 0; fan_in_w && k <= n - 1; ++k) {
        fan_in_w = A.in_w(pts[0], pts[k]) && A.in_w(pts[0], pts[k + 1]) &&
                   A.in_w(pts[k], pts[k + 1]) && A.in_w(pts[k], pts[0]) &&
                   A.in_w(pts[k + 1], pts[0]) && A.in_w(pts[k + 1], pts[k]);
    }

    HolonomyReport report;

    report.methods.push_back(run_method("direct", true, "", [&] { return holonomy(A, m_loop); }));
    report.methods.push_back(run_method("local_product", true, "",
                                        [&] { return holonomy_via_local_product(A, m_loop); }));
    report.methods.push_back(run_method("connection_cochain", true, "", [&] {
        Value v = integrate(local_cochain(A), interpolating_chain(m_loop));
        return inverse(std::get<GroupElement>(v));
    }));
    report.methods.push_back(run_method(
        "curvature_cochain", fan_ok, "fan triple outside V''^(3)", [&] {
            Value v = integrate(local_curvature_cochain(A), fan_two_chain(m_loop));
            return inverse(std::get<GroupElement>(v));
        }));
    report.methods.push_back(run_method(
        "log_connection_cochain", steps_in_w, "a step is outside W''", [&] {
            Value v = integrate(log_local_cochain(A), interpolating_chain(m_loop));
            return exp_of(negate(std::get<AlgebraElement>(v)));
        }));
    report.methods.push_back(run_method(
        "log_curvature_cochain", fan_in_w, "fan triple outside W''^(3)", [&] {
            Value v = integrate(log_curvature_cochain(A), fan_two_chain(m_loop));
            return exp_of(negate(std::get<AlgebraElement>(v)));
        }));

    report.agreement = true;
    const GroupElement* ref = nullptr;
    for (const auto& m : report.methods) {
        if (m.status != MethodStatus::ok) {
            if (m.status == MethodStatus::error) report.agreement = false;
            continue;
        }
        if (!ref) {
            ref = &*m.value;
            continue;
        }
        double dev = deviation(*ref, *m.value);
        report.max_deviation = std::max(report.max_deviation, dev);
        if (dev > A.group.tolerance) report.agreement = false;
    }
    return report;
}

std::vector<GroupElement> holonomy_monoid_sample(
    const DiscreteConnection& A, const BasePoint& base_point,
    const std::function<DiscretePath(std::mt19937&)>& loop_sampler, int n, std::mt19937& rng) {
    std::vector<GroupElement> out;
    out.push_back(GroupElement::identity(A.group));  // empty loop
    for (int i = 0; i < n; ++i) {
        DiscretePath loop = loop_sampler(rng);
        (void)base_point;
        out.push_back(holonomy(A, loop));
    }
    return out;
}

DiscretePath sample_loop(const BasePatch& patch, const BasePoint& start, int n_steps,
                         double radius, std::mt19937& rng) {
    DiscretePath path;
    path.points.push_back(start);
    std::uniform_real_distribution<double> dist(-radius, radius);
    for (int k = 1; k < n_steps; ++k) {
        BasePoint m(patch.dim);
        for (int i = 0; i < patch.dim; ++i) m[i] = start[i] + dist(rng);
        path.points.push_back(patch.clamp_inside(m, 1e-6));
    }
    path.points.push_back(start);
    return path;
}

double w_safe_radius(const DiscreteConnection& A, const BasePoint& start, std::mt19937& rng) {
    // bisect on the ball radius; a radius is accepted when every sampled loop
    // keeps all steps and fan triples in W''
    auto acceptable = [&](double radius) {
        for (int trial = 0; trial < 16; ++trial) {
            DiscretePath loop = sample_loop(A.patch, start, 6, radius, rng);
            const auto& pts = loop.points;
            for (int k = 1; k <= loop.length(); ++k) {
                if (!A.in_w(pts[k - 1], pts[k]) || !A.in_w(pts[k], pts[k - 1])) return false;
            }
            for (int k = 0; k <= loop.length() - 1; ++k)
                if (!A.in_w(pts[0], pts[k]) || !A.in_w(pts[k], pts[k + 1])) return false;
        }
        return true;
    };
    double lo = 0.0, hi = 1.0;
    while (hi < 64.0 && acceptable(hi)) {
        lo = hi;
        hi *= 2.0;
    }
    for (int it = 0; it < 24; ++it) {
        double mid = 0.5 * (lo + hi);
        if (acceptable(mid))
            lo = mid;
        else
            hi = mid;
    }
    return std::max(lo * 0.5, 1e-3);  // keep clear of the boundary
}

}  // namespace holo
