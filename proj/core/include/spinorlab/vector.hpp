#ifndef SPINORLAB_VECTOR_HPP
#define SPINORLAB_VECTOR_HPP

#include <vector>

#include "spinorlab/scalar.hpp"

namespace spinorlab {

/// Vector of V = E + E^dual in the hyperbolic basis (e_1..e_n, f_1..f_n),
/// with quadratic form q(v) = sum_k a_k b_k and polar pairing P(e_i, f_j) =
/// delta_ij, P = 0 on e-e and f-f pairs. The normalization P(e_i, f_i) = 1
/// (not 1/2) is forced by the Clifford relation v.v = q(v) on v = e_i + f_i.
class Vector {
  public:
    explicit Vector(int n) : e_(n), f_(n) {}
    Vector(std::vector<Scalar> e, std::vector<Scalar> f);

    static Vector basis_e(int n, int i);
    static Vector basis_f(int n, int i);
    /// The 2n hyperbolic basis vectors, e's first.
    static std::vector<Vector> hyperbolic_basis(int n);

    int n() const { return static_cast<int>(e_.size()); }
    const Scalar& e(int i) const { return e_[i - 1]; }
    const Scalar& f(int i) const { return f_[i - 1]; }
    Scalar& e(int i) { return e_[i - 1]; }
    Scalar& f(int i) { return f_[i - 1]; }

    bool is_zero() const;
    Scalar q() const;

    Vector operator-() const;
    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector& operator*=(const Scalar& c);
    friend Vector operator+(Vector l, const Vector& r) { return l += r; }
    friend Vector operator-(Vector l, const Vector& r) { return l -= r; }
    friend Vector operator*(const Scalar& c, Vector v) { return v *= c; }
    friend bool operator==(const Vector& l, const Vector& r) { return l.e_ == r.e_ && l.f_ == r.f_; }

  private:
    std::vector<Scalar> e_, f_;
};

/// Polar pairing P(u, v).
Scalar polar(const Vector& u, const Vector& v);

}  // namespace spinorlab

#endif
