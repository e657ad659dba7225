#pragma once

#include <utility>
#include <vector>

#include "holo/complex.hpp"
#include "holo/group.hpp"

namespace holo {

using BasePoint = std::vector<double>;

// Base box V in R^d; membership is the open interior.
struct BasePatch {
    int dim = 1;
    std::vector<std::pair<double, double>> box;  // d closed intervals

    BasePatch() = default;
    BasePatch(int d, std::vector<std::pair<double, double>> b);

    bool contains(const BasePoint& m) const;
    BasePoint clamp_inside(const BasePoint& m, double margin) const;
};

// Point q = (m, g) of the trivialized patch Q = V x G. The canonical section
// is s(m) = (m, e), so phi_s is the identity in these coordinates.
struct BundlePoint {
    BasePoint base;
    GroupElement fiber;

    BundlePoint() = default;
    BundlePoint(BasePoint m, GroupElement g) : base(std::move(m)), fiber(std::move(g)) {}
};

// Flatten q to base coords followed by fiber coords, for use as a simplex
// vertex on Q; split_vertex undoes it.
Vertex flatten(const BundlePoint& q);
BundlePoint split_vertex(const Vertex& v, int base_dim, const GroupDescriptor& g);

bool base_close(const BasePoint& a, const BasePoint& b, double tol);

// D-type region represented by its base shadow U''. Membership of a bundle
// pair depends only on the projected base points, which makes GxG-invariance
// and the inclusion of the vertical set automatic.
struct DTypeRegion {
    Region base_region;  // pairs of base points

    static DTypeRegion full() { return DTypeRegion{Region::full()}; }
    static DTypeRegion from_base_region(Region r) { return DTypeRegion{std::move(r)}; }

    bool contains_base_pair(const BasePoint& m0, const BasePoint& m1) const {
        return base_region.contains(m0, m1);
    }
    bool contains_bundle_pair(const BundlePoint& q0, const BundlePoint& q1) const {
        return base_region.contains(q0.base, q1.base);
    }
    // U' membership: (q, m)
    bool contains_prime(const BundlePoint& q, const BasePoint& m) const {
        return base_region.contains(q.base, m);
    }
};

BundlePoint act(const GroupElement& g, const BundlePoint& q);

// kappa(q0, q1) = the unique g with act(g, q0) = q1; requires equal base points.
GroupElement kappa(const BundlePoint& q0, const BundlePoint& q1);

// Membership of a base triple in R^(3). With all_ordered_pairs the check runs
// over all j != k instead of j < k only; the two agree for symmetric regions.
bool region_triple_contains(const DTypeRegion& r, const BasePoint& m0, const BasePoint& m1,
                            const BasePoint& m2, bool all_ordered_pairs = false);

bool region_triple_contains(const Region& r, const BasePoint& m0, const BasePoint& m1,
                            const BasePoint& m2, bool all_ordered_pairs = false);

}  // namespace holo
