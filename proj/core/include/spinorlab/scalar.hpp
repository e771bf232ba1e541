#ifndef SPINORLAB_SCALAR_HPP
#define SPINORLAB_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace spinorlab {

/// Raised when an operation would leave the supported ground fields
/// (rationals and a single quadratic extension Q(sqrt(d))).
class unsupported_field_error : public std::runtime_error {
  public:
    explicit unsupported_field_error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact field element a + b*sqrt(d) with a, b rational and d a fixed
/// non-square integer discriminant. Plain rationals are the case b = 0,
/// stored canonically with d = 0. All arithmetic is exact; there is no
/// floating point anywhere in the library.
class Scalar {
  public:
    Scalar() : d_(0) {}
    Scalar(long v) : a_(v), d_(0) {}  // NOLINT: implicit by design
    Scalar(const mpq_class& v) : a_(v), d_(0) { a_.canonicalize(); }
    Scalar(long num, long den);
    Scalar(mpq_class a, mpq_class b, long d);

    /// Parses "p", "p/q" or "(p/q)+(r/s)*sqrt(d)".
    static Scalar parse(const std::string& text);
    /// The element sqrt(d).
    static Scalar sqrt_of(long d);

    const mpq_class& rat() const { return a_; }
    const mpq_class& ext() const { return b_; }
    long disc() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    /// Galois conjugate a - b*sqrt(d).
    Scalar conj() const;
    /// Field norm (a + b sqrt(d))(a - b sqrt(d)) = a^2 - d b^2, a rational.
    mpq_class field_norm() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
    friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
    friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
    friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }

    friend bool operator==(const Scalar& l, const Scalar& r) {
        return l.a_ == r.a_ && l.b_ == r.b_ && (l.b_ == 0 || l.d_ == r.d_);
    }
    friend bool operator!=(const Scalar& l, const Scalar& r) { return !(l == r); }

    /// Total order used only for deterministic bookkeeping (pivot tie-breaks,
    /// canonical printing); for extension scalars it is lexicographic in (a, b).
    friend bool operator<(const Scalar& l, const Scalar& r);

    Scalar inverse() const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

  private:
    void reduce();
    static long merge_disc(const Scalar& l, const Scalar& r);

    mpq_class a_;
    mpq_class b_;
    long d_;
};

/// Strips square factors from |d| found by bounded trial division, so that the
/// stored discriminant is squarefree for every value met at desk scale.
/// Returns the reduced d and multiplies `scale` by the extracted square root.
long reduce_discriminant(const mpz_class& d, mpz_class& scale);

}  // namespace spinorlab

#endif
