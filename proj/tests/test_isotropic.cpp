#include "doctest.h"
#include "spinorlab/isotropic.hpp"
#include "spinorlab/orbit.hpp"
#include "spinorlab/rng.hpp"

using namespace spinorlab;

namespace {

IsotropicSubspace span_e(int n, int k) {
    std::vector<Vector> rows;
    for (int i = 1; i <= k; ++i) rows.push_back(Vector::basis_e(n, i));
    return IsotropicSubspace::from_vectors(n, rows);
}

IsotropicSubspace span_f(int n) {
    std::vector<Vector> rows;
    for (int i = 1; i <= n; ++i) rows.push_back(Vector::basis_f(n, i));
    return IsotropicSubspace::from_vectors(n, rows);
}

}  // namespace

TEST_CASE("isotropy is validated at construction") {
    int n = 4;
    CHECK_THROWS_AS(IsotropicSubspace::from_vectors(
                        n, {Vector::basis_e(n, 1) + Vector::basis_f(n, 1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(IsotropicSubspace::from_vectors(
                        n, {Vector::basis_e(n, 1), Vector::basis_f(n, 1)}),
                    std::invalid_argument);  // not mutually orthogonal
    CHECK_THROWS_AS(IsotropicSubspace::from_vectors(
                        n, {Vector::basis_e(n, 1), Vector::basis_e(n, 1)}),
                    std::invalid_argument);  // dependent rows
}

TEST_CASE("psi kernels of the weight vectors") {
    for (int n : {4, 6}) {
        CHECK(psi_kernel(Spinor::e_range(n, n)) == span_e(n, n));
        CHECK(psi_kernel(Spinor::unit(n)) == span_f(n));
    }
}

TEST_CASE("kernel of e_[N] + e_[N-2l] drops to the common part for l >= 2") {
    int n = 6;
    Spinor q = Spinor::e_range(n, n) + Spinor::e_range(n, 2);  // l = 2
    CHECK(psi_kernel(q) == span_e(n, 2));
    Spinor dense = Spinor::e_range(n, n) + Spinor::unit(n);  // l = 3
    CHECK(psi_kernel(dense).dim() == 0);
}

TEST_CASE("purity by kernel dimension") {
    int n = 4;
    CHECK(is_pure(Spinor::e_range(n, n)));
    CHECK_FALSE(is_pure(Spinor::e_range(n, n) + Spinor::unit(n)));
    CHECK(is_pure(Spinor::e_range(n, n) + Spinor::monomial(n, 0b0011)));
    CHECK_THROWS_AS(is_pure(Spinor(n)), std::domain_error);
}

TEST_CASE("pure_from_subspace on the weight subspaces and a pencil subspace") {
    int n = 6;
    CHECK(proportional(pure_from_subspace(span_e(n, n)), Spinor::e_range(n, n)));
    CHECK(proportional(pure_from_subspace(span_f(n)), Spinor::unit(n)));

    // H = span(e1 + t f2, e2 - t f1, f3..f6) annihilates e1^e2 + t*1
    Scalar t(3);
    std::vector<Vector> rows = {Vector::basis_e(n, 1) + t * Vector::basis_f(n, 2),
                                Vector::basis_e(n, 2) - t * Vector::basis_f(n, 1)};
    for (int i = 3; i <= n; ++i) rows.push_back(Vector::basis_f(n, i));
    Spinor expect = Spinor::monomial(n, 0b000011) + t * Spinor::unit(n);
    Spinor got = pure_from_subspace(IsotropicSubspace::from_vectors(n, rows));
    CHECK(proportional(got, expect));
    for (const Vector& v : rows) CHECK(clifford_apply(v, expect).is_zero());
}

TEST_CASE("pure_from_subspace rejects non-maximal and odd-component input") {
    int n = 4;
    CHECK_THROWS_AS(pure_from_subspace(span_e(n, 2)), std::domain_error);
    std::vector<Vector> rows = {Vector::basis_f(n, 1)};
    for (int i = 2; i <= n; ++i) rows.push_back(Vector::basis_e(n, i));
    CHECK_THROWS_AS(pure_from_subspace(IsotropicSubspace::from_vectors(n, rows)),
                    std::domain_error);
}

TEST_CASE("pfaffian chart examples") {
    int n = 6;
    CHECK(pfaffian_chart(Mat(n, n)) == Spinor::unit(n));

    Mat a(n, n);
    a.at(0, 1) = Scalar(5);
    a.at(1, 0) = Scalar(-5);
    CHECK(pfaffian_chart(a) == Spinor::unit(n) + Scalar(5) * Spinor::monomial(n, 0b000011));

    // block matrix C_2: all sub-pfaffians on complete pair blocks are 1
    Mat c2(n, n);
    for (int i = 0; i < 2; ++i) {
        c2.at(2 * i, 2 * i + 1) = Scalar(1);
        c2.at(2 * i + 1, 2 * i) = Scalar(-1);
    }
    Spinor expect = Spinor::unit(n) + Spinor::monomial(n, 0b0011) + Spinor::monomial(n, 0b1100) +
                    Spinor::monomial(n, 0b1111);
    CHECK(pfaffian_chart(c2) == expect);
}

TEST_CASE("chart spinors are pure with the prescribed kernel") {
    Rng rng(21);
    for (int n : {4, 6}) {
        for (int trial = 0; trial < 10; ++trial) {
            Mat a = random_skew(rng, n, -3, 3);
            Spinor chart = pfaffian_chart(a);
            CHECK(is_pure(chart));
            // psi_kernel = span{ f_j + sum_k A_kj e_k }
            std::vector<Vector> rows;
            for (int j = 1; j <= n; ++j) {
                Vector v = Vector::basis_f(n, j);
                for (int k = 1; k <= n; ++k) v.e(k) = a.at(k - 1, j - 1);
                rows.push_back(v);
            }
            CHECK(psi_kernel(chart) == IsotropicSubspace::from_vectors(n, rows));
            CHECK(chart_coordinates(chart) == a);
        }
    }
}

TEST_CASE("chart coordinate errors") {
    int n = 4;
    CHECK_THROWS_AS(chart_coordinates(Spinor::e_range(n, n)), std::domain_error);
    CHECK(chart_coordinates(Spinor::unit(n)) == Mat(n, n));
    Spinor s = Spinor::unit(n) + Spinor::monomial(n, 0b0011);
    Mat a = chart_coordinates(s);
    CHECK(a.at(0, 1) == Scalar(1));
    CHECK(a.at(1, 0) == Scalar(-1));
}

TEST_CASE("hamming distance on pinned pairs") {
    for (int n : {4, 6, 8}) {
        CHECK(hamming_distance(Spinor::e_range(n, n), Spinor::unit(n)) == n / 2);
        Spinor a = Spinor::e_range(n, n);
        CHECK(hamming_distance(a, Scalar(7) * a) == 0);
    }
    CHECK(hamming_distance(Spinor::e_range(6, 6), Spinor::e_range(6, 2)) == 2);
    CHECK_THROWS_AS(hamming_distance(Spinor::e_range(4, 4),
                                     Spinor::e_range(4, 4) + Spinor::unit(4)),
                    std::domain_error);
}

TEST_CASE("orthogonal grassmannian component") {
    int n = 6;
    CHECK(og_component(span_e(n, n)) == OGComponent::plus);
    CHECK(og_component(span_f(n)) == OGComponent::plus);
    std::vector<Vector> rows = {Vector::basis_f(n, 1)};
    for (int i = 2; i <= n; ++i) rows.push_back(Vector::basis_e(n, i));
    CHECK(og_component(IsotropicSubspace::from_vectors(n, rows)) == OGComponent::minus);
    CHECK_THROWS_AS(og_component(span_e(n, 2)), std::domain_error);
}

TEST_CASE("line in variety iff distance one, cross-checked on the pencil") {
    int n = 6;
    CHECK(line_in_variety(Spinor::e_range(n, n), Spinor::e_range(n, n - 2)));
    CHECK_FALSE(line_in_variety(Spinor::e_range(n, n), Spinor::unit(n)));
    CHECK_FALSE(line_in_variety(Spinor::e_range(n, n), Spinor::e_range(n, 2)));
    CHECK_THROWS_AS(line_in_variety(Spinor::unit(n), Scalar(2) * Spinor::unit(n)),
                    std::domain_error);
}

TEST_CASE("round trip psi_kernel . pure_from_subspace on random maximal subspaces") {
    Rng rng(22);
    int trips = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int n = (trial % 4 == 3) ? 8 : 6;
        IsotropicSubspace h = random_max_isotropic(rng, n, trial % 2 == 1);
        if (og_component(h) != OGComponent::plus) continue;
        Spinor a = pure_from_subspace(h);
        CHECK(psi_kernel(a) == h);
        ++trips;
    }
    CHECK(trips >= 90);  // chart plus twist stays in the even component
}

TEST_CASE("rank-distance law: d(chart(A), 1) = rank(A)/2") {
    Rng rng(23);
    for (int n : {6, 8}) {
        for (int r = 0; r <= n; r += 2) {
            Mat a = random_skew_of_rank(rng, n, r);
            Spinor chart = pfaffian_chart(a);
            CHECK(hamming_distance(chart, Spinor::unit(n)) == r / 2);
        }
    }
}

TEST_CASE("distances stay within the diameter") {
    Rng rng(24);
    int n = 6;
    for (int trial = 0; trial < 20; ++trial) {
        Spinor a = pure_from_subspace(random_max_isotropic(rng, n, true));
        Spinor b = pure_from_subspace(random_max_isotropic(rng, n, false));
        int d = hamming_distance(a, b);
        CHECK(d >= 0);
        CHECK(d <= n / 2);
    }
}

TEST_CASE("pencil purity matches distance one on ten samples") {
    int n = 6;
    Spinor a = Spinor::e_range(n, n);
    Spinor b = Spinor::e_range(n, n - 2);
    REQUIRE(hamming_distance(a, b) == 1);
    for (long t = 1; t <= 10; ++t) CHECK(is_pure(a + Scalar(t) * b));
    Spinor c = Spinor::e_range(n, 2);
    REQUIRE(hamming_distance(a, c) == 2);
    for (long t = 1; t <= 10; ++t) CHECK_FALSE(is_pure(a + Scalar(t) * c));
}
