#include "holo/json_io.hpp"

namespace holo {

json to_json(const GroupDescriptor& d) {
    json j;
    j["kind"] = d.kind_name();
    if (d.kind != GroupKind::circle) j["k"] = d.k;
    j["tolerance"] = d.tolerance;
    return j;
}

GroupDescriptor descriptor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ConfigError("group descriptor must be an object with a \"kind\" field");
    std::string kind = j.at("kind").get<std::string>();
    double tol = j.value("tolerance", 1e-9);
    if (tol <= 0.0) throw ConfigError("tolerance must be positive");
    if (kind == "circle") return GroupDescriptor::circle(tol);
    int k = j.value("k", 1);
    if (kind == "torus") return GroupDescriptor::torus(k, tol);
    if (kind == "vector") return GroupDescriptor::vector(k, tol);
    throw ConfigError("unknown group kind: " + kind);
}

json to_json(const BasePatch& p) {
    json box = json::array();
    for (const auto& [lo, hi] : p.box) box.push_back(json::array({lo, hi}));
    return json{{"dim", p.dim}, {"box", box}};
}

BasePatch patch_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("box"))
        throw ConfigError("base patch must have \"dim\" and \"box\"");
    int dim = j.at("dim").get<int>();
    std::vector<std::pair<double, double>> box;
    for (const auto& iv : j.at("box")) {
        if (!iv.is_array() || iv.size() != 2)
            throw ConfigError("box intervals must be [lo, hi] pairs");
        box.emplace_back(iv[0].get<double>(), iv[1].get<double>());
    }
    return BasePatch(dim, std::move(box));
}

json to_json(const GroupElement& g) {
    return json(g.coords);
}

json to_json(const AlgebraElement& a) {
    return json(a.coords);
}

json to_json(const BundlePoint& q) {
    return json{{"base", q.base}, {"fiber", q.fiber.coords}};
}

BundlePoint bundle_point_from_json(const json& j, const GroupDescriptor& g) {
    if (!j.is_object() || !j.contains("base") || !j.contains("fiber"))
        throw ConfigError("bundle point must have \"base\" and \"fiber\"");
    return BundlePoint(j.at("base").get<std::vector<double>>(),
                       GroupElement(g, j.at("fiber").get<std::vector<double>>()));
}

json to_json(const Chain& c) {
    json out = json::array();
    for (const auto& [s, coeff] : c.terms) {
        json vertices = json::array();
        for (const auto& v : s.vertices) vertices.push_back(v);
        out.push_back(json{{"coeff", coeff}, {"vertices", vertices}});
    }
    return out;
}

Chain chain_from_json(const json& j, int dim) {
    Chain c = Chain::zero(dim);
    for (const auto& term : j) {
        std::vector<Vertex> vertices;
        for (const auto& v : term.at("vertices")) vertices.push_back(v.get<Vertex>());
        c.add_term(Simplex(std::move(vertices)), term.at("coeff").get<long long>());
    }
    return c;
}

}  // namespace holo
