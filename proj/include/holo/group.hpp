#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "holo/errors.hpp"

namespace holo {

inline constexpr double kPi = 3.14159265358979323846;

// Reduce x into (-pi, pi].
double mod2pi(double x);

enum class GroupKind { circle, torus, vector_group };

// Descriptor of an abelian structure group: U(1), a torus U(1)^k, or R^k
// under addition. circle is the same as torus(1).
struct GroupDescriptor {
    GroupKind kind = GroupKind::circle;
    int k = 1;
    double tolerance = 1e-9;

    static GroupDescriptor circle(double tol = 1e-9);
    static GroupDescriptor torus(int k, double tol = 1e-9);
    static GroupDescriptor vector(int k, double tol = 1e-9);

    int dim() const { return k; }
    bool angular() const { return kind != GroupKind::vector_group; }
    bool compatible(const GroupDescriptor& o) const {
        return angular() == o.angular() && k == o.k;
    }
    std::string kind_name() const;
};

struct AlgebraElement;

// Group element; circle/torus coordinates are angles kept in (-pi, pi].
struct GroupElement {
    GroupDescriptor descriptor;
    std::vector<double> coords;

    GroupElement() = default;
    GroupElement(GroupDescriptor d, std::vector<double> c);

    static GroupElement identity(const GroupDescriptor& d);
    bool is_identity() const;
};

struct AlgebraElement {
    GroupDescriptor descriptor;
    std::vector<double> coords;

    AlgebraElement() = default;
    AlgebraElement(GroupDescriptor d, std::vector<double> c);

    static AlgebraElement zero(const GroupDescriptor& d);
};

GroupElement compose(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
GroupElement power(const GroupElement& g, long long n);
bool approx_equal(const GroupElement& g, const GroupElement& h);
// largest per-component angular (resp. absolute) distance
double deviation(const GroupElement& g, const GroupElement& h);

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement negate(const AlgebraElement& a);
AlgebraElement scale(const AlgebraElement& a, long long n);
bool approx_equal(const AlgebraElement& a, const AlgebraElement& b);
double deviation(const AlgebraElement& a, const AlgebraElement& b);

GroupElement exp_of(const AlgebraElement& a);
// Principal-branch log; requires g in V_e (no component on the cut at angle pi).
AlgebraElement log_of(const GroupElement& g);

// Neighborhoods U_0, V_e, U_0', V_e' of 0 and e used by the log constructions.
// Per-component sup-norm balls; u0_prime_radius = u0_radius / 3 so that sums
// of three U_0' elements land in U_0.
struct ExpNeighborhoods {
    GroupDescriptor descriptor;
    double u0_radius;
    double u0_prime_radius;

    explicit ExpNeighborhoods(const GroupDescriptor& d);

    bool in_U0(const AlgebraElement& a) const;
    bool in_U0_prime(const AlgebraElement& a) const;
    bool in_Ve(const GroupElement& g) const;
    bool in_Ve_prime(const GroupElement& g) const;
};

bool in_Ve_prime(const GroupElement& g);
bool in_U0_prime(const AlgebraElement& a);

}  // namespace holo
