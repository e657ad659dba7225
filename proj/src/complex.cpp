#include "holo/complex.hpp"

#include <sstream>

namespace holo {

namespace {

std::string describe(const Simplex& s) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        if (i) out << "; ";
        for (std::size_t j = 0; j < s.vertices[i].size(); ++j) {
            if (j) out << ",";
            out << s.vertices[i][j];
        }
    }
    out << ")";
    return out.str();
}

}  // namespace

bool Simplex::degenerate() const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j]) return true;
    return false;
}

Chain Chain::single(const Simplex& s, long long coeff) {
    Chain c{s.dim(), {}};
    c.add_term(s, coeff);
    return c;
}

void Chain::add_term(const Simplex& s, long long coeff) {
    if (coeff == 0) return;
    if (s.dim() != dim) throw Error("simplex dimension does not match chain dimension");
    auto [it, inserted] = terms.emplace(s, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
    }
}

Chain Chain::degenerate_part() const {
    Chain out = Chain::zero(dim);
    for (const auto& [s, a] : terms)
        if (s.degenerate()) out.add_term(s, a);
    return out;
}

Chain Chain::nondegenerate_part() const {
    Chain out = Chain::zero(dim);
    for (const auto& [s, a] : terms)
        if (!s.degenerate()) out.add_term(s, a);
    return out;
}

Chain operator+(const Chain& a, const Chain& b) {
    if (a.dim != b.dim) throw Error("chain dimension mismatch");
    Chain out = a;
    for (const auto& [s, coeff] : b.terms) out.add_term(s, coeff);
    return out;
}

Chain operator-(const Chain& a, const Chain& b) {
    return a + (-1LL) * b;
}

Chain operator*(long long n, const Chain& c) {
    Chain out = Chain::zero(c.dim);
    for (const auto& [s, coeff] : c.terms) out.add_term(s, n * coeff);
    return out;
}

bool operator==(const Chain& a, const Chain& b) {
    return a.dim == b.dim && a.terms == b.terms;
}

Chain boundary(const Simplex& s) {
    int n = s.dim();
    if (n < 1) throw Error("boundary of a 0-simplex is undefined");
    Chain out = Chain::zero(n - 1);
    for (int k = 0; k <= n; ++k) {
        std::vector<Vertex> face;
        face.reserve(n);
        for (int j = 0; j <= n; ++j)
            if (j != k) face.push_back(s.vertices[j]);
        out.add_term(Simplex(std::move(face)), (k % 2 == 0) ? 1 : -1);
    }
    return out;
}

Chain boundary(const Chain& c) {
    if (c.dim < 1) throw Error("boundary of a 0-chain is undefined");
    Chain out = Chain::zero(c.dim - 1);
    for (const auto& [s, coeff] : c.terms) out = out + coeff * boundary(s);
    return out;
}

Region Region::from_predicate(std::string name,
                              std::function<bool(const Vertex&, const Vertex&)> pred) {
    return Region{std::move(name), std::move(pred)};
}

bool is_small(const Simplex& s, const Region& r) {
    if (s.dim() == 0) return true;  // S_{0,U} = S_0
    for (std::size_t j = 0; j < s.vertices.size(); ++j)
        for (std::size_t k = j + 1; k < s.vertices.size(); ++k)
            if (!r.contains(s.vertices[j], s.vertices[k])) return false;
    return true;
}

Value value_identity(const Value& like) {
    if (std::holds_alternative<GroupElement>(like))
        return GroupElement::identity(std::get<GroupElement>(like).descriptor);
    return AlgebraElement::zero(std::get<AlgebraElement>(like).descriptor);
}

Value value_combine(const Value& a, const Value& b) {
    if (std::holds_alternative<GroupElement>(a))
        return compose(std::get<GroupElement>(a), std::get<GroupElement>(b));
    return add(std::get<AlgebraElement>(a), std::get<AlgebraElement>(b));
}

Value value_invert(const Value& a) {
    if (std::holds_alternative<GroupElement>(a)) return inverse(std::get<GroupElement>(a));
    return negate(std::get<AlgebraElement>(a));
}

Value value_power(const Value& a, long long n) {
    if (std::holds_alternative<GroupElement>(a)) return power(std::get<GroupElement>(a), n);
    return scale(std::get<AlgebraElement>(a), n);
}

bool value_approx_equal(const Value& a, const Value& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<GroupElement>(a))
        return approx_equal(std::get<GroupElement>(a), std::get<GroupElement>(b));
    return approx_equal(std::get<AlgebraElement>(a), std::get<AlgebraElement>(b));
}

double value_deviation(const Value& a, const Value& b) {
    if (std::holds_alternative<GroupElement>(a))
        return deviation(std::get<GroupElement>(a), std::get<GroupElement>(b));
    return deviation(std::get<AlgebraElement>(a), std::get<AlgebraElement>(b));
}

Value Cochain::identity() const {
    if (algebra_valued) return AlgebraElement::zero(coefficients);
    return GroupElement::identity(coefficients);
}

Cochain coboundary(const Cochain& alpha) {
    if (alpha.dim != 0 && alpha.dim != 1)
        throw Error("coboundary supported only for 0- and 1-cochains");
    Cochain out = alpha;
    out.dim = alpha.dim + 1;
    out.evaluate_simplex = [alpha](const Simplex& s) -> Value {
        // (delta alpha)(T) = alpha(boundary T), extended homomorphically
        Value acc = alpha.identity();
        for (const auto& [face, coeff] : boundary(s).terms)
            acc = value_combine(acc, value_power(alpha.evaluate_simplex(face), coeff));
        return acc;
    };
    return out;
}

Cochain cochain_product(const Cochain& a, const Cochain& b) {
    if (a.dim != b.dim || a.algebra_valued != b.algebra_valued)
        throw Error("cochain product requires equal dimension and coefficient kind");
    Cochain out = a;
    auto ea = a.evaluate_simplex;
    auto eb = b.evaluate_simplex;
    out.evaluate_simplex = [ea, eb](const Simplex& s) {
        return value_combine(ea(s), eb(s));
    };
    return out;
}

Value integrate(const Cochain& alpha, const Simplex& s) {
    if (s.dim() != alpha.dim) throw Error("simplex dimension does not match cochain");
    if (!is_small(s, alpha.domain))
        throw NotSmallError("simplex " + describe(s) + " is not " + alpha.domain.name +
                            "-small");
    return alpha.evaluate_simplex(s);
}

Value integrate(const Cochain& alpha, const Chain& c) {
    if (c.dim != alpha.dim) throw Error("chain dimension does not match cochain");
    Value acc = alpha.identity();
    for (const auto& [s, coeff] : c.terms)
        acc = value_combine(acc, value_power(integrate(alpha, s), coeff));
    return acc;
}

Cochain pushforward(const std::function<Value(const Value&)>& f, bool result_algebra_valued,
                    const GroupDescriptor& result_coefficients, const Cochain& alpha) {
    Cochain out = alpha;
    out.algebra_valued = result_algebra_valued;
    out.coefficients = result_coefficients;
    auto eval = alpha.evaluate_simplex;
    out.evaluate_simplex = [f, eval](const Simplex& s) { return f(eval(s)); };
    return out;
}

Cochain pushforward_exp(const Cochain& alpha) {
    if (!alpha.algebra_valued) throw Error("pushforward_exp expects an algebra-valued cochain");
    return pushforward(
        [](const Value& v) -> Value { return exp_of(std::get<AlgebraElement>(v)); }, false,
        alpha.coefficients, alpha);
}

}  // namespace holo
