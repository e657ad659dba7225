#include "holo/connection.hpp"

#include <cmath>

namespace holo {

namespace {

void check_pair_in_domain(const DiscreteConnection& A, const BasePoint& m0,
                          const BasePoint& m1) {
    if (!A.domain.contains_base_pair(m0, m1))
        throw DomainError("base pair outside the connection domain");
}

}  // namespace

GroupElement DiscreteConnection::local(const BasePoint& m0, const BasePoint& m1) const {
    check_pair_in_domain(*this, m0, m1);
    return local_form(m0, m1);
}

bool DiscreteConnection::in_w(const BasePoint& m0, const BasePoint& m1) const {
    if (!domain.contains_base_pair(m0, m1)) return false;
    return in_Ve_prime(local_form(m0, m1));
}

bool DiscreteConnection::in_w_tilde(const BasePoint& m0, const BasePoint& m1,
                                    const BasePoint& m2) const {
    if (!region_triple_contains(domain, m0, m1, m2)) return false;
    ExpNeighborhoods nb(group);
    return nb.in_Ve(curvature_local(*this, m0, m1, m2));
}

Region DiscreteConnection::w_region() const {
    auto self = *this;
    return Region::from_predicate("W''", [self](const Vertex& a, const Vertex& b) {
        return self.in_w(a, b);
    });
}

GroupElement eval(const DiscreteConnection& A, const BundlePoint& q0, const BundlePoint& q1) {
    check_pair_in_domain(A, q0.base, q1.base);
    // A(phi_s(m0,g0), phi_s(m1,g1)) = g1 A_s(m0,m1) g0^{-1}
    return compose(q1.fiber, compose(A.local_form(q0.base, q1.base), inverse(q0.fiber)));
}

std::pair<BundlePoint, BundlePoint> horizontal_lift(const DiscreteConnection& A,
                                                    const BundlePoint& q, const BasePoint& m) {
    if (!A.domain.contains_prime(q, m))
        throw DomainError("(q, m) outside U' for horizontal lift");
    GroupElement fiber = compose(q.fiber, inverse(A.local_form(q.base, m)));
    return {q, BundlePoint(m, std::move(fiber))};
}

LiftMap lift_map(const DiscreteConnection& A) {
    return [A](const BundlePoint& q, const BasePoint& m) { return horizontal_lift(A, q, m); };
}

DiscreteConnection connection_from_lift(const LiftMap& h, const BasePatch& patch,
                                        const GroupDescriptor& group,
                                        const DTypeRegion& domain) {
    DiscreteConnection A;
    A.patch = patch;
    A.group = group;
    A.domain = domain;
    A.local_form = [h, group](const BasePoint& m0, const BasePoint& m1) {
        // A_h(q0, q1) = kappa(h2(q0, pi(q1)), q1) evaluated on the section
        BundlePoint q0(m0, GroupElement::identity(group));
        BundlePoint q1(m1, GroupElement::identity(group));
        auto lifted = h(q0, m1);
        return kappa(lifted.second, q1);
    };
    return A;
}

GroupElement curvature(const DiscreteConnection& A, const BundlePoint& q0,
                       const BundlePoint& q1, const BundlePoint& q2) {
    if (!region_triple_contains(A.domain, q0.base, q1.base, q2.base))
        throw DomainError("triple outside U^(3)");
    return compose(inverse(eval(A, q0, q2)), compose(eval(A, q1, q2), eval(A, q0, q1)));
}

GroupElement curvature_local(const DiscreteConnection& A, const BasePoint& m0,
                             const BasePoint& m1, const BasePoint& m2) {
    if (!region_triple_contains(A.domain, m0, m1, m2))
        throw DomainError("triple outside V''^(3)");
    return compose(inverse(A.local_form(m0, m2)),
                   compose(A.local_form(m1, m2), A.local_form(m0, m1)));
}

AlgebraElement log_local_form(const DiscreteConnection& A, const BasePoint& m0,
                              const BasePoint& m1) {
    check_pair_in_domain(A, m0, m1);
    GroupElement g = A.local_form(m0, m1);
    if (!in_Ve_prime(g)) throw DomainError("A_s value outside V_e'; pair not in W''");
    return log_of(g);
}

AlgebraElement log_curvature_local(const DiscreteConnection& A, const BasePoint& m0,
                                   const BasePoint& m1, const BasePoint& m2) {
    GroupElement b = curvature_local(A, m0, m1, m2);
    try {
        return log_of(b);
    } catch (const BranchCutError&) {
        throw DomainError("B_s value on the branch cut; triple not in Wtilde''");
    }
}

Cochain as_cochain(const DiscreteConnection& A) {
    Cochain c;
    c.dim = 1;
    c.coefficients = A.group;
    int d = A.patch.dim;
    auto group = A.group;
    auto self = A;
    c.domain = Region::from_predicate("U", [self, d, group](const Vertex& a, const Vertex& b) {
        return self.domain.contains_bundle_pair(split_vertex(a, d, group),
                                                split_vertex(b, d, group));
    });
    c.evaluate_simplex = [self, d, group](const Simplex& s) -> Value {
        return eval(self, split_vertex(s.vertices[0], d, group),
                    split_vertex(s.vertices[1], d, group));
    };
    return c;
}

Cochain curvature_cochain(const DiscreteConnection& A) {
    Cochain c = as_cochain(A);
    c.dim = 2;
    int d = A.patch.dim;
    auto group = A.group;
    auto self = A;
    c.evaluate_simplex = [self, d, group](const Simplex& s) -> Value {
        return curvature(self, split_vertex(s.vertices[0], d, group),
                         split_vertex(s.vertices[1], d, group),
                         split_vertex(s.vertices[2], d, group));
    };
    return c;
}

Cochain local_cochain(const DiscreteConnection& A) {
    Cochain c;
    c.dim = 1;
    c.coefficients = A.group;
    c.domain = A.domain.base_region;
    c.domain.name = "V''";
    auto self = A;
    c.evaluate_simplex = [self](const Simplex& s) -> Value {
        return self.local_form(s.vertices[0], s.vertices[1]);
    };
    return c;
}

Cochain local_curvature_cochain(const DiscreteConnection& A) {
    Cochain c = local_cochain(A);
    c.dim = 2;
    auto self = A;
    c.evaluate_simplex = [self](const Simplex& s) -> Value {
        return curvature_local(self, s.vertices[0], s.vertices[1], s.vertices[2]);
    };
    return c;
}

Cochain log_local_cochain(const DiscreteConnection& A) {
    Cochain c;
    c.dim = 1;
    c.algebra_valued = true;
    c.coefficients = A.group;
    c.domain = A.w_region();
    auto self = A;
    c.evaluate_simplex = [self](const Simplex& s) -> Value {
        return log_local_form(self, s.vertices[0], s.vertices[1]);
    };
    return c;
}

Cochain log_curvature_cochain(const DiscreteConnection& A) {
    Cochain c = log_local_cochain(A);
    c.dim = 2;
    auto self = A;
    c.evaluate_simplex = [self](const Simplex& s) -> Value {
        return log_curvature_local(self, s.vertices[0], s.vertices[1], s.vertices[2]);
    };
    return c;
}

BasePoint sample_base_point(const BasePatch& patch, std::mt19937& rng, double margin) {
    BasePoint m(patch.dim);
    for (int i = 0; i < patch.dim; ++i) {
        std::uniform_real_distribution<double> dist(patch.box[i].first + margin,
                                                    patch.box[i].second - margin);
        m[i] = dist(rng);
    }
    return m;
}

bool is_flat_on_samples(const DiscreteConnection& A, int n_samples, std::mt19937& rng,
                        FlatnessWitness* witness) {
    GroupElement e = GroupElement::identity(A.group);
    for (int i = 0; i < n_samples; ++i) {
        BasePoint m0 = sample_base_point(A.patch, rng);
        BasePoint m1 = sample_base_point(A.patch, rng);
        BasePoint m2 = sample_base_point(A.patch, rng);
        if (!region_triple_contains(A.domain, m0, m1, m2)) continue;
        GroupElement b = curvature_local(A, m0, m1, m2);
        if (!approx_equal(b, e)) {
            if (witness) *witness = FlatnessWitness{m0, m1, m2, b};
            return false;
        }
    }
    return true;
}

bool is_symmetric_on_samples(const DiscreteConnection& A, int n_samples, std::mt19937& rng) {
    GroupElement e = GroupElement::identity(A.group);
    for (int i = 0; i < n_samples; ++i) {
        BasePoint m0 = sample_base_point(A.patch, rng);
        BasePoint m1 = sample_base_point(A.patch, rng);
        if (!A.domain.contains_base_pair(m0, m1) || !A.domain.contains_base_pair(m1, m0))
            continue;
        if (!approx_equal(compose(A.local_form(m0, m1), A.local_form(m1, m0)), e))
            return false;
    }
    return true;
}

DiscreteConnection omega_mu(double mu, double box_hi, double tol) {
    if (mu < 1.0) throw ConfigError("omega_mu requires mu >= 1");
    DiscreteConnection A;
    A.patch = BasePatch(1, {{0.0, box_hi}});
    A.group = GroupDescriptor::circle(tol);
    A.domain = DTypeRegion::full();
    GroupDescriptor g = A.group;
    A.local_form = [mu, g](const BasePoint& m0, const BasePoint& m1) {
        double p = std::pow(m1[0] - m0[0], mu);
        if (!std::isfinite(p))
            throw DomainError("non-integer exponent applied to a negative step");
        return GroupElement(g, {p});
    };
    return A;
}

namespace {

using SharedAsts = std::shared_ptr<std::vector<expr::Ast>>;

SharedAsts parse_coords(const std::vector<std::string>& coord_exprs,
                        const GroupDescriptor& group, const BasePatch& patch) {
    if (static_cast<int>(coord_exprs.size()) != group.k)
        throw ConfigError("need exactly one expression per group coordinate");
    auto asts = std::make_shared<std::vector<expr::Ast>>();
    for (const auto& text : coord_exprs) {
        expr::Ast ast = expr::parse(text);
        if (expr::max_var_index(*ast) >= patch.dim)
            throw ConfigError("expression references a component beyond the base dimension");
        asts->push_back(std::move(ast));
    }
    return asts;
}

}  // namespace

DiscreteConnection connection_from_expressions(const std::vector<std::string>& coord_exprs,
                                               const BasePatch& patch,
                                               const GroupDescriptor& group,
                                               unsigned validation_seed) {
    auto asts = parse_coords(coord_exprs, group, patch);
    DiscreteConnection A;
    A.patch = patch;
    A.group = group;
    A.domain = DTypeRegion::full();
    A.local_form = [asts, group](const BasePoint& m0, const BasePoint& m1) {
        std::vector<double> coords;
        coords.reserve(asts->size());
        for (const auto& ast : *asts) coords.push_back(expr::evaluate(*ast, m0, m1));
        return GroupElement(group, std::move(coords));
    };

    // sampled check of the identity requirement A_s(m, m) = e
    std::mt19937 rng(validation_seed);
    GroupElement e = GroupElement::identity(group);
    for (int i = 0; i < 64; ++i) {
        BasePoint m = sample_base_point(patch, rng);
        if (!approx_equal(A.local_form(m, m), e))
            throw ConfigError("custom connection violates A_s(m, m) = e at a sampled point");
    }
    return A;
}

DiscreteConnection connection_from_zero_cochain(const std::vector<std::string>& coord_exprs,
                                                const BasePatch& patch,
                                                const GroupDescriptor& group) {
    auto asts = parse_coords(coord_exprs, group, patch);
    DiscreteConnection A;
    A.patch = patch;
    A.group = group;
    A.domain = DTypeRegion::full();
    A.local_form = [asts, group](const BasePoint& m0, const BasePoint& m1) {
        const std::vector<double> none;
        std::vector<double> a0, a1;
        for (const auto& ast : *asts) {
            a0.push_back(expr::evaluate(*ast, m0, none));
            a1.push_back(expr::evaluate(*ast, m1, none));
        }
        return compose(GroupElement(group, std::move(a1)),
                       inverse(GroupElement(group, std::move(a0))));
    };
    return A;
}

}  // namespace holo
