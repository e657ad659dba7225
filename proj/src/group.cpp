#include "holo/group.hpp"

#include <algorithm>
#include <limits>

namespace holo {

double mod2pi(double x) {
    double y = std::remainder(x, 2.0 * kPi);  // lands in [-pi, pi]
    if (y <= -kPi) y += 2.0 * kPi;
    return y;
}

GroupDescriptor GroupDescriptor::circle(double tol) {
    return GroupDescriptor{GroupKind::circle, 1, tol};
}

GroupDescriptor GroupDescriptor::torus(int k, double tol) {
    if (k < 1) throw ConfigError("torus rank must be positive");
    return GroupDescriptor{GroupKind::torus, k, tol};
}

GroupDescriptor GroupDescriptor::vector(int k, double tol) {
    if (k < 1) throw ConfigError("vector group rank must be positive");
    return GroupDescriptor{GroupKind::vector_group, k, tol};
}

std::string GroupDescriptor::kind_name() const {
    switch (kind) {
        case GroupKind::circle: return "circle";
        case GroupKind::torus: return "torus";
        case GroupKind::vector_group: return "vector";
    }
    return "?";
}

namespace {

void check_dim(const GroupDescriptor& d, const std::vector<double>& c) {
    if (static_cast<int>(c.size()) != d.k)
        throw DescriptorMismatchError("coordinate count does not match group rank");
}

void canonicalize(const GroupDescriptor& d, std::vector<double>& c) {
    if (!d.angular()) return;
    for (double& x : c) x = mod2pi(x);
}

void check_same(const GroupDescriptor& a, const GroupDescriptor& b) {
    if (!a.compatible(b))
        throw DescriptorMismatchError("group descriptors do not match: " + a.kind_name() +
                                      "(" + std::to_string(a.k) + ") vs " + b.kind_name() +
                                      "(" + std::to_string(b.k) + ")");
}

}  // namespace

GroupElement::GroupElement(GroupDescriptor d, std::vector<double> c)
    : descriptor(std::move(d)), coords(std::move(c)) {
    check_dim(descriptor, coords);
    canonicalize(descriptor, coords);
}

GroupElement GroupElement::identity(const GroupDescriptor& d) {
    return GroupElement(d, std::vector<double>(d.k, 0.0));
}

bool GroupElement::is_identity() const {
    return approx_equal(*this, identity(descriptor));
}

AlgebraElement::AlgebraElement(GroupDescriptor d, std::vector<double> c)
    : descriptor(std::move(d)), coords(std::move(c)) {
    check_dim(descriptor, coords);
}

AlgebraElement AlgebraElement::zero(const GroupDescriptor& d) {
    return AlgebraElement(d, std::vector<double>(d.k, 0.0));
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    check_same(g.descriptor, h.descriptor);
    std::vector<double> c(g.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = g.coords[i] + h.coords[i];
    return GroupElement(g.descriptor, std::move(c));
}

GroupElement inverse(const GroupElement& g) {
    std::vector<double> c(g.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -g.coords[i];
    return GroupElement(g.descriptor, std::move(c));
}

GroupElement power(const GroupElement& g, long long n) {
    std::vector<double> c(g.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<double>(n) * g.coords[i];
    return GroupElement(g.descriptor, std::move(c));
}

double deviation(const GroupElement& g, const GroupElement& h) {
    check_same(g.descriptor, h.descriptor);
    double dev = 0.0;
    for (std::size_t i = 0; i < g.coords.size(); ++i) {
        double d = g.coords[i] - h.coords[i];
        if (g.descriptor.angular()) d = mod2pi(d);
        dev = std::max(dev, std::abs(d));
    }
    return dev;
}

bool approx_equal(const GroupElement& g, const GroupElement& h) {
    return deviation(g, h) <= g.descriptor.tolerance;
}

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
    check_same(a.descriptor, b.descriptor);
    std::vector<double> c(a.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
    return AlgebraElement(a.descriptor, std::move(c));
}

AlgebraElement negate(const AlgebraElement& a) {
    return scale(a, -1);
}

AlgebraElement scale(const AlgebraElement& a, long long n) {
    std::vector<double> c(a.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<double>(n) * a.coords[i];
    return AlgebraElement(a.descriptor, std::move(c));
}

double deviation(const AlgebraElement& a, const AlgebraElement& b) {
    check_same(a.descriptor, b.descriptor);
    double dev = 0.0;
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        dev = std::max(dev, std::abs(a.coords[i] - b.coords[i]));
    return dev;
}

bool approx_equal(const AlgebraElement& a, const AlgebraElement& b) {
    return deviation(a, b) <= a.descriptor.tolerance;
}

GroupElement exp_of(const AlgebraElement& a) {
    // angular components reduce mod 2pi; vector components map identically
    return GroupElement(a.descriptor, a.coords);
}

AlgebraElement log_of(const GroupElement& g) {
    if (g.descriptor.angular()) {
        for (double x : g.coords) {
            if (std::abs(mod2pi(x - kPi)) <= g.descriptor.tolerance)
                throw BranchCutError("log undefined at angle pi (point outside V_e)");
        }
    }
    return AlgebraElement(g.descriptor, g.coords);
}

ExpNeighborhoods::ExpNeighborhoods(const GroupDescriptor& d)
    : descriptor(d),
      u0_radius(d.angular() ? kPi : std::numeric_limits<double>::infinity()),
      u0_prime_radius(u0_radius / 3.0) {}

bool ExpNeighborhoods::in_U0(const AlgebraElement& a) const {
    for (double x : a.coords)
        if (!(std::abs(x) < u0_radius)) return false;
    return true;
}

bool ExpNeighborhoods::in_U0_prime(const AlgebraElement& a) const {
    for (double x : a.coords)
        if (!(std::abs(x) < u0_prime_radius)) return false;
    return true;
}

bool ExpNeighborhoods::in_Ve(const GroupElement& g) const {
    if (!descriptor.angular()) return true;
    for (double x : g.coords)
        if (std::abs(mod2pi(x - kPi)) <= descriptor.tolerance) return false;
    return true;
}

bool ExpNeighborhoods::in_Ve_prime(const GroupElement& g) const {
    if (!descriptor.angular()) return true;
    for (double x : g.coords)
        if (!(std::abs(x) < u0_prime_radius)) return false;
    return true;
}

bool in_Ve_prime(const GroupElement& g) {
    return ExpNeighborhoods(g.descriptor).in_Ve_prime(g);
}

bool in_U0_prime(const AlgebraElement& a) {
    return ExpNeighborhoods(a.descriptor).in_U0_prime(a);
}

}  // namespace holo
