#ifndef SPINORLAB_SPINOR_HPP
#define SPINORLAB_SPINOR_HPP

#include <map>
#include <string>

#include "spinorlab/index_set.hpp"
#include "spinorlab/scalar.hpp"
#include "spinorlab/vector.hpp"

namespace spinorlab {

/// Sparse element of the exterior algebra over E, coefficients indexed by
/// basis monomials e_I. Half-spinors live in the even-cardinality part,
/// cospinors are the same container read against the dual basis f_I.
/// Zero coefficients are never stored.
class Spinor {
  public:
    explicit Spinor(int n) : n_(n) {}

    static Spinor unit(int n) { return monomial(n, 0); }  // the scalar 1
    static Spinor monomial(int n, IndexMask m, Scalar c = Scalar(1));
    /// e_1 ^ ... ^ e_k.
    static Spinor e_range(int n, int k) { return monomial(n, full_mask(k)); }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::map<IndexMask, Scalar>& terms() const { return terms_; }

    Scalar coeff(IndexMask m) const;
    void set_coeff(IndexMask m, Scalar c);
    void add_coeff(IndexMask m, const Scalar& c);

    bool pure_even() const;  // all stored cardinalities even
    bool pure_odd() const;

    Spinor operator-() const;
    Spinor& operator+=(const Spinor& o);
    Spinor& operator-=(const Spinor& o);
    Spinor& operator*=(const Scalar& c);
    friend Spinor operator+(Spinor l, const Spinor& r) { return l += r; }
    friend Spinor operator-(Spinor l, const Spinor& r) { return l -= r; }
    friend Spinor operator*(const Scalar& c, Spinor s) { return s *= c; }
    friend bool operator==(const Spinor& l, const Spinor& r) {
        return l.n_ == r.n_ && l.terms_ == r.terms_;
    }
    friend bool operator!=(const Spinor& l, const Spinor& r) { return !(l == r); }

    /// Projective normalization: the coefficient of the smallest stored index
    /// set (by bitmask order) is scaled to 1.
    Spinor normalized() const;

    std::string str() const;

  private:
    int n_;
    std::map<IndexMask, Scalar> terms_;
};

/// True when a and b span the same line (either may be zero only if both are).
bool proportional(const Spinor& a, const Spinor& b);

/// Exterior product; e_I ^ e_J carries the shuffle sign and dies on overlap.
Spinor wedge(const Spinor& x, const Spinor& y);

/// Contraction f_j -| x against the basis covector f_j.
Spinor contract(int j, const Spinor& x);

/// Clifford action of v = e + f on x in /\E:  v.x = e ^ x + f -| x.
Spinor clifford_apply(const Vector& v, const Spinor& x);

/// Pairing < f , x > of a cospinor (coefficients on the dual monomials f_I)
/// with a spinor; in the hyperbolic basis <f_I, e_J> = delta_IJ.
Scalar dual_pairing(const Spinor& f, const Spinor& x);

/// Scalar product of decomposable elements of /\V: <x_1^..^x_k, y_1^..^y_h>
/// = det(P(x_i, y_j)) when k = h, else 0.
Scalar monomial_scalar_product(const std::vector<Vector>& x, const std::vector<Vector>& y);

}  // namespace spinorlab

#endif
