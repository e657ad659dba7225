#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "holo/connection.hpp"

namespace holo {

// Discrete path m_0, ..., m_N in the base.
struct DiscretePath {
    std::vector<BasePoint> points;

    int length() const { return static_cast<int>(points.size()) - 1; }
    bool is_loop(double tol) const;
    bool subordinated(const Region& r) const;
};

struct BundlePath {
    std::vector<BundlePoint> points;
};

BundlePath lift_path(const DiscreteConnection& A, const DiscretePath& m_path,
                     const BundlePoint& q0);

BundlePoint parallel_transport(const DiscreteConnection& A, const DiscretePath& m_path,
                               const BundlePoint& q0);

GroupElement holonomy(const DiscreteConnection& A, const DiscretePath& m_loop,
                      const BundlePoint& q0);

// Phase of a loop from the fiber of its first point; independent of the fiber
// point since G is abelian.
GroupElement holonomy(const DiscreteConnection& A, const DiscretePath& m_loop);

// prod_k A_s(m_{k-1}, m_k)^{-1}
GroupElement holonomy_via_local_product(const DiscreteConnection& A,
                                        const DiscretePath& m_loop);

// prod_{k=1}^{N-1} B(q_0, q_k, q_{k+1})^{-1}
GroupElement curvature_product(const DiscreteConnection& A, const BundlePath& q_path);

// sum_k (m_{k-1}, m_k) as a 1-chain
Chain interpolating_chain(const DiscretePath& m_path);

// sum_{j=1}^{N-1} (m_0, m_j, m_{j+1}); its boundary equals the interpolating
// chain of the loop plus degenerate 1-simplexes.
Chain fan_two_chain(const DiscretePath& m_loop);

enum class MethodStatus { ok, skipped, error };

struct PhaseMethod {
    std::string name;
    MethodStatus status = MethodStatus::skipped;
    std::optional<GroupElement> value;
    std::string detail;  // skip/error reason
};

struct HolonomyReport {
    std::vector<PhaseMethod> methods;
    bool agreement = false;
    double max_deviation = 0.0;

    const PhaseMethod* find(const std::string& name) const;
};

// Computes the holonomy phase by up to six routes (direct transport, local
// product, connection cochain, curvature cochain over the fan, and the two
// log-cochain routes) and checks that all applicable ones coincide.
HolonomyReport verify_phase_theorems(const DiscreteConnection& A, const DiscretePath& m_loop);

std::vector<GroupElement> holonomy_monoid_sample(
    const DiscreteConnection& A, const BasePoint& base_point,
    const std::function<DiscretePath(std::mt19937&)>& loop_sampler, int n, std::mt19937& rng);

// Seeded random-walk loop sampler: n_steps intermediate points inside a ball
// of the given radius around the start point, clamped to the patch interior.
DiscretePath sample_loop(const BasePatch& patch, const BasePoint& start, int n_steps,
                         double radius, std::mt19937& rng);

// Largest ball radius (found by bisection) such that sampled loops keep all
// steps and fan triples inside W''.
double w_safe_radius(const DiscreteConnection& A, const BasePoint& start, std::mt19937& rng);

}  // namespace holo
