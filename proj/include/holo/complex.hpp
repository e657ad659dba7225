#pragma once

#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "holo/errors.hpp"
#include "holo/group.hpp"

namespace holo {

// Points of the ambient space (base points, or flattened bundle points).
using Vertex = std::vector<double>;

// Singular n-simplex in the vertex-tuple model: an (n+1)-tuple of points.
// Vertices may repeat; degenerate simplexes are legal chain generators.
struct Simplex {
    std::vector<Vertex> vertices;

    Simplex() = default;
    explicit Simplex(std::vector<Vertex> v) : vertices(std::move(v)) {}
    Simplex(std::initializer_list<Vertex> v) : vertices(v) {}

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    bool degenerate() const;

    friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

// Free integer combination of n-simplexes. Zero-coefficient terms are absent.
struct Chain {
    int dim = 0;
    std::map<Simplex, long long> terms;

    static Chain zero(int dim) { return Chain{dim, {}}; }
    static Chain single(const Simplex& s, long long coeff = 1);

    void add_term(const Simplex& s, long long coeff);
    bool empty() const { return terms.empty(); }
    std::size_t size() const { return terms.size(); }

    // terms restricted to simplexes with repeated vertices
    Chain degenerate_part() const;
    Chain nondegenerate_part() const;
};

Chain operator+(const Chain& a, const Chain& b);
Chain operator-(const Chain& a, const Chain& b);
Chain operator*(long long n, const Chain& c);
bool operator==(const Chain& a, const Chain& b);

Chain boundary(const Simplex& s);
Chain boundary(const Chain& c);

// Predicate-backed open-set model over ordered pairs of ambient points.
struct Region {
    std::string name = "full";
    std::function<bool(const Vertex&, const Vertex&)> contains_pair;  // null means full

    static Region full() { return Region{}; }
    static Region from_predicate(std::string name,
                                 std::function<bool(const Vertex&, const Vertex&)> pred);

    bool contains(const Vertex& a, const Vertex& b) const {
        return !contains_pair || contains_pair(a, b);
    }
};

// All ordered pairs (j < k) of the simplex vertices lie in the region.
// Every 0-simplex is small.
bool is_small(const Simplex& s, const Region& r);

// Coefficient value of a cochain: group-valued or algebra-valued.
using Value = std::variant<GroupElement, AlgebraElement>;

Value value_identity(const Value& like);
Value value_combine(const Value& a, const Value& b);
Value value_invert(const Value& a);
Value value_power(const Value& a, long long n);
bool value_approx_equal(const Value& a, const Value& b);
double value_deviation(const Value& a, const Value& b);

// Singular n-cochain on Region-small simplexes, n in {0,1,2}. Evaluation
// extends to chains as a homomorphism into the coefficient group.
struct Cochain {
    int dim = 0;
    bool algebra_valued = false;
    GroupDescriptor coefficients;
    Region domain;
    std::function<Value(const Simplex&)> evaluate_simplex;

    Value identity() const;
};

Cochain coboundary(const Cochain& alpha);

// Pointwise group product of two cochains of equal dimension.
Cochain cochain_product(const Cochain& a, const Cochain& b);

Value integrate(const Cochain& alpha, const Chain& c);
Value integrate(const Cochain& alpha, const Simplex& s);

// Change of coefficients: (f_* alpha)(T) = f(alpha(T)).
Cochain pushforward(const std::function<Value(const Value&)>& f, bool result_algebra_valued,
                    const GroupDescriptor& result_coefficients, const Cochain& alpha);

// f = exp of the group module.
Cochain pushforward_exp(const Cochain& alpha);

}  // namespace holo
