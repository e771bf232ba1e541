#include "doctest.h"
#include "spinorlab/rng.hpp"
#include "spinorlab/spinor.hpp"

using namespace spinorlab;

namespace {

Spinor mono(int n, std::initializer_list<int> idx, long c = 1) {
    IndexMask m = 0;
    for (int i : idx) m |= IndexMask{1} << (i - 1);
    return Spinor::monomial(n, m, Scalar(c));
}

Vector random_vector(Rng& rng, int n, long lo = -3, long hi = 3) {
    Vector v(n);
    for (int i = 1; i <= n; ++i) {
        v.e(i) = Scalar(rng.range(lo, hi));
        v.f(i) = Scalar(rng.range(lo, hi));
    }
    return v;
}

Spinor random_spinor(Rng& rng, int n, int terms) {
    Spinor s(n);
    for (int t = 0; t < terms; ++t)
        s.add_coeff(static_cast<IndexMask>(rng.next() & full_mask(n)), Scalar(rng.range(-4, 4)));
    return s;
}

// formal sum of monomials of /\V, used as the test-side oracle for the
// Clifford action on general exterior monomials
using VMonomial = std::vector<Vector>;
using VSum = std::vector<std::pair<Scalar, VMonomial>>;

VSum clifford_on_monomial(const Vector& v, const VMonomial& y) {
    VSum out;
    VMonomial wedge;
    wedge.push_back(v);
    wedge.insert(wedge.end(), y.begin(), y.end());
    out.emplace_back(Scalar(1), std::move(wedge));
    for (size_t i = 0; i < y.size(); ++i) {
        Scalar c = polar(v, y[i]);
        if (c.is_zero()) continue;
        if (i % 2 == 1) c = -c;  // (-1)^{i+1} with 1-based position
        VMonomial rest;
        for (size_t j = 0; j < y.size(); ++j)
            if (j != i) rest.push_back(y[j]);
        out.emplace_back(c, std::move(rest));
    }
    return out;
}

Scalar pair_with(const VMonomial& x, const VSum& sum) {
    Scalar acc;
    for (const auto& [c, mono] : sum) acc += c * monomial_scalar_product(x, mono);
    return acc;
}

}  // namespace

TEST_CASE("wedge basics") {
    int n = 4;
    CHECK(wedge(mono(n, {2}), mono(n, {1})) == mono(n, {1, 2}, -1));
    CHECK(wedge(mono(n, {1}), mono(n, {1})).is_zero());
    CHECK(wedge(mono(n, {1, 2}), mono(n, {3, 4})) == mono(n, {1, 2, 3, 4}));
    // bilinearity spot check
    Rng rng(7);
    Spinor a = random_spinor(rng, n, 3), b = random_spinor(rng, n, 3), c = random_spinor(rng, n, 2);
    CHECK(wedge(a + b, c) == wedge(a, c) + wedge(b, c));
}

TEST_CASE("contraction basics") {
    int n = 4;
    CHECK(contract(2, mono(n, {1, 2})) == mono(n, {1}, -1));
    CHECK(contract(1, mono(n, {1, 2})) == mono(n, {2}));
    CHECK(contract(3, mono(n, {1, 2})).is_zero());
    CHECK_THROWS_AS(contract(5, mono(n, {1})), std::invalid_argument);
}

TEST_CASE("clifford action examples") {
    int n = 4;
    Vector v = Vector::basis_e(n, 1) + Vector::basis_f(n, 1);
    CHECK(clifford_apply(v, mono(n, {1, 2})) == mono(n, {2}));
    CHECK(clifford_apply(Vector::basis_f(n, 1), Spinor::unit(n)).is_zero());
}

TEST_CASE("clifford relation v.v = q(v) over 1000 random cases") {
    Rng rng(42);
    int checked = 0;
    while (checked < 1000) {
        int n = (rng.next() % 2 == 0) ? 4 : 6;
        Vector v = random_vector(rng, n);
        Spinor x = random_spinor(rng, n, 3);
        if (x.is_zero()) continue;
        Spinor lhs = clifford_apply(v, clifford_apply(v, x));
        Spinor rhs = v.q() * x;
        REQUIRE(lhs == rhs);
        ++checked;
    }
}

TEST_CASE("polarized clifford relation") {
    Rng rng(43);
    for (int t = 0; t < 300; ++t) {
        int n = (rng.next() % 2 == 0) ? 4 : 6;
        Vector v = random_vector(rng, n), w = random_vector(rng, n);
        Spinor x = random_spinor(rng, n, 3);
        Spinor lhs = clifford_apply(v, clifford_apply(w, x)) +
                     clifford_apply(w, clifford_apply(v, x));
        CHECK(lhs == polar(v, w) * x);
    }
}

TEST_CASE("scalar product on monomials of /\\V") {
    int n = 4;
    VMonomial f12 = {Vector::basis_f(n, 1), Vector::basis_f(n, 2)};
    VMonomial e12 = {Vector::basis_e(n, 1), Vector::basis_e(n, 2)};
    VMonomial f13 = {Vector::basis_f(n, 1), Vector::basis_f(n, 3)};
    CHECK(monomial_scalar_product(f12, e12) == Scalar(1));
    CHECK(monomial_scalar_product(e12, e12) == Scalar(0));
    CHECK(monomial_scalar_product(f13, e12) == Scalar(0));
    CHECK(monomial_scalar_product({}, {}) == Scalar(1));
}

TEST_CASE("adjointness <x, v.y> = <v.x, y> on random monomials") {
    Rng rng(44);
    for (int t = 0; t < 200; ++t) {
        int n = 4 + 2 * static_cast<int>(rng.next() % 2);
        int k = 1 + static_cast<int>(rng.next() % 3);
        VMonomial x, y;
        for (int i = 0; i < k; ++i) x.push_back(random_vector(rng, n, -2, 2));
        for (int i = 0; i < k + 1; ++i) y.push_back(random_vector(rng, n, -2, 2));
        auto basis = Vector::hyperbolic_basis(n);
        const Vector& v = basis[rng.next() % basis.size()];
        Scalar lhs = pair_with(x, clifford_on_monomial(v, y));
        // <v.x, y>: expand v.x and pair each monomial with y
        Scalar rhs;
        for (const auto& [c, mono] : clifford_on_monomial(v, x))
            rhs += c * monomial_scalar_product(mono, y);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("dual pairing picks matching index sets") {
    int n = 4;
    Spinor f = mono(n, {1}, 2) + mono(n, {1, 2, 3}, 5);
    Spinor x = mono(n, {1}, 7) + mono(n, {3}, 11);
    CHECK(dual_pairing(f, x) == Scalar(14));
}

TEST_CASE("normalization scales the smallest stored index set to one") {
    int n = 4;
    Spinor s = mono(n, {1, 2}, 3) + mono(n, {3, 4}, 6);
    Spinor u = s.normalized();
    CHECK(u.coeff(0b0011) == Scalar(1));
    CHECK(u.coeff(0b1100) == Scalar(2));
    CHECK(proportional(s, u));
}
