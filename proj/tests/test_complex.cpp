#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "holo/complex.hpp"
#include "holo/connection.hpp"

using namespace holo;

namespace {

const GroupDescriptor circle = GroupDescriptor::circle();
const GroupDescriptor vec1 = GroupDescriptor::vector(1);

Vertex v(double x) { return {x}; }
Vertex v2(double x, double y) { return {x, y}; }

Simplex random_simplex(std::mt19937& rng, int dim, double lo = -5, double hi = 5) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<Vertex> vs;
    for (int i = 0; i <= dim; ++i) vs.push_back({dist(rng), dist(rng)});
    return Simplex(std::move(vs));
}

// algebra-valued 1-cochain built from a smooth function of the endpoints
Cochain test_one_cochain() {
    Cochain c;
    c.dim = 1;
    c.algebra_valued = true;
    c.coefficients = vec1;
    c.domain = Region::full();
    c.evaluate_simplex = [](const Simplex& s) -> Value {
        const Vertex& a = s.vertices[0];
        const Vertex& b = s.vertices[1];
        return AlgebraElement(vec1, {std::sin(a[0]) * b[1] + a[1] - b[0]});
    };
    return c;
}

Cochain test_zero_cochain() {
    Cochain c;
    c.dim = 0;
    c.algebra_valued = true;
    c.coefficients = vec1;
    c.domain = Region::full();
    c.evaluate_simplex = [](const Simplex& s) -> Value {
        const Vertex& a = s.vertices[0];
        return AlgebraElement(vec1, {a[0] * a[0] - 2 * a[1]});
    };
    return c;
}

double scalar(const Value& val) { return std::get<AlgebraElement>(val).coords[0]; }

}  // namespace

TEST_CASE("boundary of 1- and 2-simplexes") {
    Chain b1 = boundary(Simplex{v(1), v(2)});
    Chain e1 = Chain::single(Simplex{v(2)}) - Chain::single(Simplex{v(1)});
    CHECK(b1 == e1);

    Chain b2 = boundary(Simplex{v(0), v(1), v(2)});
    Chain e2 = Chain::single(Simplex{v(1), v(2)}) - Chain::single(Simplex{v(0), v(2)}) +
               Chain::single(Simplex{v(0), v(1)});
    CHECK(b2 == e2);

    CHECK(boundary(Simplex{v(3), v(3)}).empty());
    CHECK_THROWS_AS(boundary(Simplex{v(1)}), Error);
}

TEST_CASE("boundary of boundary vanishes") {
    std::mt19937 rng(101);
    for (int i = 0; i < 1000; ++i) {
        Chain c = Chain::zero(2);
        std::uniform_int_distribution<int> coeff(-3, 3);
        for (int t = 0; t < 3; ++t) c.add_term(random_simplex(rng, 2), coeff(rng));
        CHECK(boundary(boundary(c)).empty());
    }
}

TEST_CASE("coboundary formulas") {
    Cochain a0 = test_zero_cochain();
    Cochain d0 = coboundary(a0);
    Simplex t1{v2(1, 0.5), v2(3, -1)};
    double expect0 = scalar(a0.evaluate_simplex(Simplex{v2(3, -1)})) -
                     scalar(a0.evaluate_simplex(Simplex{v2(1, 0.5)}));
    CHECK(scalar(d0.evaluate_simplex(t1)) == doctest::Approx(expect0));

    Cochain a1 = test_one_cochain();
    Cochain d1 = coboundary(a1);
    std::mt19937 rng(5);
    Simplex t2 = random_simplex(rng, 2);
    auto f = [&](int i, int j) {
        return scalar(a1.evaluate_simplex(Simplex{t2.vertices[i], t2.vertices[j]}));
    };
    CHECK(scalar(d1.evaluate_simplex(t2)) == doctest::Approx(f(1, 2) - f(0, 2) + f(0, 1)));

    Cochain a2 = coboundary(a1);
    CHECK_THROWS_AS(coboundary(a2), Error);
}

TEST_CASE("coboundary of coboundary is the identity cochain") {
    Cochain dd = coboundary(coboundary(test_zero_cochain()));
    std::mt19937 rng(7);
    for (int i = 0; i < 1000; ++i) {
        Value val = dd.evaluate_simplex(random_simplex(rng, 2));
        CHECK(std::abs(scalar(val)) < 1e-9);
    }
}

TEST_CASE("integration pairing") {
    DiscreteConnection A = omega_mu(2.0);
    Cochain as = local_cochain(A);
    Value got = integrate(as, Simplex{v(1.0), v(2.0)});
    CHECK(approx_equal(std::get<GroupElement>(got), GroupElement(circle, {1.0})));

    Value empty = integrate(as, Chain::zero(1));
    CHECK(std::get<GroupElement>(empty).is_identity());

    Cochain a1 = test_one_cochain();
    Simplex s{v2(0.5, 1), v2(2.5, -2)};
    Chain twice = 2 * Chain::single(s);
    CHECK(scalar(integrate(a1, twice)) ==
          doctest::Approx(2 * scalar(a1.evaluate_simplex(s))));
}

TEST_CASE("pairing is a homomorphism in the chain argument") {
    Cochain a1 = test_one_cochain();
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int i = 0; i < 200; ++i) {
        Chain c1 = Chain::zero(1), c2 = Chain::zero(1);
        for (int t = 0; t < 3; ++t) {
            c1.add_term(random_simplex(rng, 1), coeff(rng));
            c2.add_term(random_simplex(rng, 1), coeff(rng));
        }
        double lhs = scalar(integrate(a1, c1 + c2));
        double rhs = scalar(integrate(a1, c1)) + scalar(integrate(a1, c2));
        CHECK(lhs == doctest::Approx(rhs));
        CHECK(scalar(integrate(a1, Chain::zero(1) - c1)) ==
              doctest::Approx(-scalar(integrate(a1, c1))));
    }
}

TEST_CASE("cochain product pairs pointwise") {
    Cochain a = test_one_cochain();
    Cochain b = coboundary(test_zero_cochain());
    Cochain p = cochain_product(a, b);
    std::mt19937 rng(23);
    for (int i = 0; i < 100; ++i) {
        Simplex s = random_simplex(rng, 1);
        CHECK(scalar(p.evaluate_simplex(s)) ==
              doctest::Approx(scalar(a.evaluate_simplex(s)) + scalar(b.evaluate_simplex(s))));
    }
}

TEST_CASE("smallness") {
    DiscreteConnection A = omega_mu(2.0);
    Region w = A.w_region();
    CHECK(is_small(Simplex{v(1.0), v(1.5)}, w));
    CHECK(!is_small(Simplex{v(1.0), v(3.0)}, w));
    CHECK(is_small(Simplex{v(100.0)}, w));  // 0-simplexes are always small

    // faces of a small simplex stay small
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> dist(1.0, 1.6);
    for (int i = 0; i < 200; ++i) {
        Simplex t{v(dist(rng)), v(dist(rng)), v(dist(rng))};
        if (!is_small(t, w)) continue;
        for (const auto& [face, coeff] : boundary(t).terms) CHECK(is_small(face, w));
    }

    CHECK_THROWS_AS(integrate(log_local_cochain(A), Simplex{v(1.0), v(3.0)}), NotSmallError);
}

TEST_CASE("singular Stokes") {
    Cochain a1 = test_one_cochain();
    Cochain d1 = coboundary(a1);
    std::mt19937 rng(37);
    for (int i = 0; i < 1000; ++i) {
        Simplex t2 = random_simplex(rng, 2);
        double lhs = scalar(integrate(a1, boundary(Simplex(t2))));
        double rhs = scalar(integrate(d1, t2));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("pushforward") {
    DiscreteConnection A = omega_mu(2.0);
    Cochain la = log_local_cochain(A);
    Cochain back = pushforward_exp(la);
    Cochain as = local_cochain(A);
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> dist(1.0, 1.6);
    for (int i = 0; i < 200; ++i) {
        Simplex s{v(dist(rng)), v(dist(rng))};
        if (!is_small(s, back.domain)) continue;
        CHECK(value_approx_equal(back.evaluate_simplex(s), as.evaluate_simplex(s)));
    }

    Cochain zero;
    zero.dim = 1;
    zero.algebra_valued = true;
    zero.coefficients = circle;
    zero.domain = Region::full();
    zero.evaluate_simplex = [](const Simplex&) -> Value {
        return AlgebraElement(circle, {0.0});
    };
    Cochain ones = pushforward_exp(zero);
    CHECK(std::get<GroupElement>(ones.evaluate_simplex(Simplex{v(1), v(2)})).is_identity());
}

TEST_CASE("degenerate part split") {
    Chain c = Chain::single(Simplex{v(1), v(1)}) + 2 * Chain::single(Simplex{v(1), v(2)});
    CHECK(c.degenerate_part() == Chain::single(Simplex{v(1), v(1)}));
    CHECK(c.nondegenerate_part() == 2 * Chain::single(Simplex{v(1), v(2)}));
    CHECK(c.degenerate_part() + c.nondegenerate_part() == c);
}
