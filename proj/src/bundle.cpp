#include "holo/bundle.hpp"

#include <algorithm>
#include <cmath>

namespace holo {

BasePatch::BasePatch(int d, std::vector<std::pair<double, double>> b)
    : dim(d), box(std::move(b)) {
    if (dim < 1 || static_cast<int>(box.size()) != dim)
        throw ConfigError("base patch box must have one interval per dimension");
    for (const auto& [lo, hi] : box)
        if (!(lo < hi)) throw ConfigError("base patch box interval is empty");
}

bool BasePatch::contains(const BasePoint& m) const {
    if (static_cast<int>(m.size()) != dim) return false;
    for (int i = 0; i < dim; ++i)
        if (!(box[i].first < m[i] && m[i] < box[i].second)) return false;
    return true;
}

BasePoint BasePatch::clamp_inside(const BasePoint& m, double margin) const {
    BasePoint out = m;
    for (int i = 0; i < dim; ++i)
        out[i] = std::clamp(out[i], box[i].first + margin, box[i].second - margin);
    return out;
}

Vertex flatten(const BundlePoint& q) {
    Vertex v = q.base;
    v.insert(v.end(), q.fiber.coords.begin(), q.fiber.coords.end());
    return v;
}

BundlePoint split_vertex(const Vertex& v, int base_dim, const GroupDescriptor& g) {
    if (static_cast<int>(v.size()) != base_dim + g.k)
        throw Error("vertex length does not match bundle dimensions");
    BasePoint m(v.begin(), v.begin() + base_dim);
    std::vector<double> fc(v.begin() + base_dim, v.end());
    return BundlePoint(std::move(m), GroupElement(g, std::move(fc)));
}

bool base_close(const BasePoint& a, const BasePoint& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

BundlePoint act(const GroupElement& g, const BundlePoint& q) {
    return BundlePoint(q.base, compose(g, q.fiber));
}

GroupElement kappa(const BundlePoint& q0, const BundlePoint& q1) {
    if (!base_close(q0.base, q1.base, q0.fiber.descriptor.tolerance))
        throw FiberMismatchError("kappa requires points over the same base point");
    return compose(q1.fiber, inverse(q0.fiber));
}

bool region_triple_contains(const Region& r, const BasePoint& m0, const BasePoint& m1,
                            const BasePoint& m2, bool all_ordered_pairs) {
    const BasePoint* ms[3] = {&m0, &m1, &m2};
    for (int j = 0; j < 3; ++j) {
        for (int k = all_ordered_pairs ? 0 : j + 1; k < 3; ++k) {
            if (k == j) continue;
            if (!r.contains(*ms[j], *ms[k])) return false;
        }
    }
    return true;
}

bool region_triple_contains(const DTypeRegion& r, const BasePoint& m0, const BasePoint& m1,
                            const BasePoint& m2, bool all_ordered_pairs) {
    return region_triple_contains(r.base_region, m0, m1, m2, all_ordered_pairs);
}

}  // namespace holo
