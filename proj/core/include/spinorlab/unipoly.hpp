#ifndef SPINORLAB_UNIPOLY_HPP
#define SPINORLAB_UNIPOLY_HPP

#include <map>

#include "spinorlab/poly.hpp"
#include "spinorlab/spinor.hpp"

namespace spinorlab {

/// Spinor whose coefficients are univariate polynomials in one parameter t:
/// a one-parameter family of spinors, evaluated exactly at rational t.
class UniPolySpinor {
  public:
    explicit UniPolySpinor(int n) : n_(n) {}

    int n() const { return n_; }
    const std::map<IndexMask, Poly>& terms() const { return terms_; }
    void set_coeff(IndexMask m, Poly p);
    void add_coeff(IndexMask m, const Poly& p);

    /// Lift of a constant spinor.
    static UniPolySpinor constant(const Spinor& s);
    /// t * F
    UniPolySpinor times_t() const;

    friend UniPolySpinor operator+(UniPolySpinor l, const UniPolySpinor& r);

  private:
    int n_;
    std::map<IndexMask, Poly> terms_;
};

/// Coefficient-wise evaluation at rational t.
Spinor poly_eval(const UniPolySpinor& f, const Scalar& t);

/// Exact division by t; every coefficient polynomial must have zero constant
/// term, otherwise std::domain_error.
UniPolySpinor poly_divide_t(const UniPolySpinor& f);

}  // namespace spinorlab

#endif
