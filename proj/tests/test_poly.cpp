#include "doctest.h"
#include "spinorlab/poly.hpp"
#include "spinorlab/unipoly.hpp"

using namespace spinorlab;

namespace {
Poly from(std::initializer_list<long> ascending) {
    std::vector<mpq_class> c;
    for (long v : ascending) c.emplace_back(v);
    return Poly(std::move(c));
}
}  // namespace

TEST_CASE("poly arithmetic and division") {
    Poly p = from({-1, 0, 1});  // t^2 - 1
    Poly d = from({-1, 1});     // t - 1
    auto [q, r] = p.divmod(d);
    CHECK(q == from({1, 1}));
    CHECK(r.is_zero());
    CHECK(p.eval(mpq_class(3)) == 8);
    CHECK((p * d).degree() == 3);
}

TEST_CASE("gcd and squarefree decomposition") {
    Poly f = from({-1, 1}) * from({-1, 1}) * from({2, 1});  // (t-1)^2 (t+2)
    Poly g = from({-1, 1}) * from({3, 1});
    CHECK(poly_gcd(f, g) == from({-1, 1}));
    auto sq = squarefree_decomposition(f);
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].first == from({2, 1}));
    CHECK(sq[0].second == 1);
    CHECK(sq[1].first == from({-1, 1}));
    CHECK(sq[1].second == 2);
}

TEST_CASE("root isolation over Q and quadratic extensions") {
    // (t - 3/2)^2 (t^2 - 2)
    Poly f = from({-3, 2}) * from({-3, 2}) * from({-2, 0, 1});
    RootReport rr = find_roots(f);
    REQUIRE(rr.rational.size() == 1);
    CHECK(rr.rational[0].first == mpq_class(3, 2));
    CHECK(rr.rational[0].second == 2);
    REQUIRE(rr.quadratic.size() == 1);
    CHECK(rr.quadratic[0].disc == 2);
    CHECK(rr.quadratic[0].first * rr.quadratic[0].first == Scalar(2));
    CHECK(rr.unresolved_degree == 0);

    // rational pair from a square discriminant
    RootReport rr2 = find_roots(from({2, -3, 1}));  // (t-1)(t-2)
    CHECK(rr2.rational.size() == 2);
}

TEST_CASE("lagrange interpolation reproduces exact polynomials") {
    Poly p = from({1, -2, 0, 5});
    std::vector<mpq_class> xs = {0, 1, -1, 2}, ys;
    for (const auto& x : xs) ys.push_back(p.eval(x));
    CHECK(lagrange_interpolate(xs, ys) == p);
}

TEST_CASE("unipoly evaluation and exact division by t") {
    int n = 4;
    UniPolySpinor f = UniPolySpinor::constant(Spinor::unit(n)) +
                      UniPolySpinor::constant(Spinor::monomial(n, 0b0011)).times_t();
    CHECK(poly_eval(f, Scalar(0)) == Spinor::unit(n));
    Spinor at1 = poly_eval(f, Scalar(1));
    CHECK(at1.coeff(0b0011) == Scalar(1));

    UniPolySpinor g = f.times_t();  // t*1 + t^2*e12
    CHECK(poly_eval(poly_divide_t(g), Scalar(5)) == poly_eval(f, Scalar(5)));
    CHECK_THROWS_AS(poly_divide_t(f), std::domain_error);
}
