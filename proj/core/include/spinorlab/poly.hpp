#ifndef SPINORLAB_POLY_HPP
#define SPINORLAB_POLY_HPP

#include <utility>
#include <vector>

#include "spinorlab/scalar.hpp"

namespace spinorlab {

/// Univariate polynomial over the rationals, coefficients ascending.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const mpq_class& v);
    /// c * t^k
    static Poly term(const mpq_class& c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const mpq_class& coeff(int k) const;
    const std::vector<mpq_class>& coeffs() const { return c_; }

    mpq_class eval(const mpq_class& t) const;
    Scalar eval(const Scalar& t) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly l, const Poly& r) { return l += r; }
    friend Poly operator-(Poly l, const Poly& r) { return l -= r; }
    friend Poly operator*(const Poly& l, const Poly& r);
    friend bool operator==(const Poly& l, const Poly& r) { return l.c_ == r.c_; }

    /// Euclidean division; both quotient and remainder exact.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly derivative() const;
    Poly monic() const;

  private:
    void trim();
    std::vector<mpq_class> c_;
};

/// Monic gcd by the Euclidean algorithm.
Poly poly_gcd(Poly a, Poly b);

/// Yun squarefree decomposition: list of (squarefree factor, multiplicity)
/// with multiplicities ascending; constant factors dropped.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

/// Roots of a polynomial sorted into the supported fields. Rational roots and
/// conjugate root pairs of irreducible quadratic factors are exact; factors of
/// degree >= 3 are reported by their total degree in `unresolved_degree`.
struct RootReport {
    std::vector<std::pair<mpq_class, int>> rational;  // (root, multiplicity)
    struct QuadPair {
        Scalar first, second;  // conjugate roots in Q(sqrt(d))
        long disc;
        int mult;
    };
    std::vector<QuadPair> quadratic;
    int unresolved_degree = 0;
};
RootReport find_roots(const Poly& f);

/// Unique interpolating polynomial through distinct rational nodes.
Poly lagrange_interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys);

}  // namespace spinorlab

#endif
