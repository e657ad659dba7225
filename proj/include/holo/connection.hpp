#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>

#include "holo/bundle.hpp"
#include "holo/complex.hpp"
#include "holo/expr.hpp"
#include "holo/group.hpp"

namespace holo {

using LocalForm = std::function<GroupElement(const BasePoint&, const BasePoint&)>;
using LiftMap =
    std::function<std::pair<BundlePoint, BundlePoint>(const BundlePoint&, const BasePoint&)>;

// Discrete connection on the trivialized patch Q = V x G, given by its local
// form A_s for the canonical section s(m) = (m, e). The global form, the
// horizontal lift, the curvature and all derived cochains come from it.
struct DiscreteConnection {
    BasePatch patch;
    GroupDescriptor group;
    DTypeRegion domain;  // base shadow of U
    LocalForm local_form;

    GroupElement local(const BasePoint& m0, const BasePoint& m1) const;

    // W'' = A_s^{-1}(V_e') and Wtilde'' = B_s^{-1}(V_e)
    bool in_w(const BasePoint& m0, const BasePoint& m1) const;
    bool in_w_tilde(const BasePoint& m0, const BasePoint& m1, const BasePoint& m2) const;
    Region w_region() const;
};

GroupElement eval(const DiscreteConnection& A, const BundlePoint& q0, const BundlePoint& q1);

std::pair<BundlePoint, BundlePoint> horizontal_lift(const DiscreteConnection& A,
                                                    const BundlePoint& q, const BasePoint& m);

LiftMap lift_map(const DiscreteConnection& A);

DiscreteConnection connection_from_lift(const LiftMap& h, const BasePatch& patch,
                                        const GroupDescriptor& group,
                                        const DTypeRegion& domain);

GroupElement curvature(const DiscreteConnection& A, const BundlePoint& q0,
                       const BundlePoint& q1, const BundlePoint& q2);

GroupElement curvature_local(const DiscreteConnection& A, const BasePoint& m0,
                             const BasePoint& m1, const BasePoint& m2);

// LA_s; requires (m0, m1) in W''
AlgebraElement log_local_form(const DiscreteConnection& A, const BasePoint& m0,
                              const BasePoint& m1);

// LB_s; requires the triple in Wtilde''
AlgebraElement log_curvature_local(const DiscreteConnection& A, const BasePoint& m0,
                                   const BasePoint& m1, const BasePoint& m2);

// The six derived cochains. Bundle-space cochains see flattened (base, fiber)
// vertices; base-space cochains see base points.
Cochain as_cochain(const DiscreteConnection& A);              // [A], dim 1 on Q
Cochain curvature_cochain(const DiscreteConnection& A);       // [B], dim 2 on Q
Cochain local_cochain(const DiscreteConnection& A);           // [A_s], dim 1 on V
Cochain local_curvature_cochain(const DiscreteConnection& A); // [B_s], dim 2 on V
Cochain log_local_cochain(const DiscreteConnection& A);       // [LA_s]
Cochain log_curvature_cochain(const DiscreteConnection& A);   // [LB_s]

struct FlatnessWitness {
    BasePoint m0, m1, m2;
    GroupElement value;
};

bool is_flat_on_samples(const DiscreteConnection& A, int n_samples, std::mt19937& rng,
                        FlatnessWitness* witness = nullptr);
bool is_symmetric_on_samples(const DiscreteConnection& A, int n_samples, std::mt19937& rng);

BasePoint sample_base_point(const BasePatch& patch, std::mt19937& rng, double margin = 1e-6);

// Built-in family on V = (0, hi) with circle group:
// A_s(r0, r1) = angle (r1 - r0)^mu. Flat exactly when mu = 1.
DiscreteConnection omega_mu(double mu, double box_hi = 10.0, double tol = 1e-9);

// Custom connection: one expression per group coordinate, in m0[j], m1[j].
// The A_s(m, m) = e requirement is validated by sampling.
DiscreteConnection connection_from_expressions(const std::vector<std::string>& coord_exprs,
                                               const BasePatch& patch,
                                               const GroupDescriptor& group,
                                               unsigned validation_seed = 12345);

// A_s(m0, m1) = alpha0(m1) * alpha0(m0)^{-1} for an expression-defined
// 0-cochain alpha0 (variables m0[j] only); such connections are flat.
DiscreteConnection connection_from_zero_cochain(const std::vector<std::string>& coord_exprs,
                                                const BasePatch& patch,
                                                const GroupDescriptor& group);

}  // namespace holo
