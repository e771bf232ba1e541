#ifndef SPINORLAB_ISOTROPIC_HPP
#define SPINORLAB_ISOTROPIC_HPP

#include "spinorlab/matrix.hpp"
#include "spinorlab/spinor.hpp"

namespace spinorlab {

/// Totally isotropic subspace of V = E + E^dual, held as a reduced row basis
/// (k x 2n, e-coordinates then f-coordinates). Construction canonicalizes to
/// reduced row echelon form and checks independence and isotropy, so equality
/// of subspaces is equality of the stored matrices.
class IsotropicSubspace {
  public:
    IsotropicSubspace(int n, Mat rows);
    static IsotropicSubspace from_vectors(int n, const std::vector<Vector>& span);

    int n() const { return n_; }
    int dim() const { return rows_.rows(); }
    bool is_maximal() const { return dim() == n_; }
    const Mat& rows() const { return rows_; }
    Vector row_vector(int i) const;
    std::vector<Vector> basis() const;

    bool contains(const Vector& v) const;

    friend bool operator==(const IsotropicSubspace& l, const IsotropicSubspace& r) {
        return l.n_ == r.n_ && l.rows_ == r.rows_;
    }
    friend bool operator!=(const IsotropicSubspace& l, const IsotropicSubspace& r) {
        return !(l == r);
    }

  private:
    int n_;
    Mat rows_;
};

enum class OGComponent { plus, minus };

/// Row coordinates of a vector, [e-part | f-part], length 2n.
std::vector<Scalar> vector_row(const Vector& v);
Vector row_to_vector(int n, const std::vector<Scalar>& row);

/// Matrix of the map v -> v.a over the hyperbolic basis; rows run over the
/// basis monomials of the opposite parity (all masks of that parity, ascending),
/// columns over (e_1..e_n, f_1..f_n).
Mat psi_matrix_dense(const Spinor& a);

/// Kernel H_a of v -> v.a; always totally isotropic.
IsotropicSubspace psi_kernel(const Spinor& a);

/// dim H_a = n, i.e. [a] lies on the Spinor variety.
bool is_pure(const Spinor& a);

/// The pure spinor annihilated by a maximal isotropic H in the even component,
/// normalized so the smallest stored index set has coefficient 1.
Spinor pure_from_subspace(const IsotropicSubspace& h);

/// a_H = sum_I Pf(A_I) e_I for a skew matrix A; the inverse chart reads the
/// degree-2 coefficients back off a spinor with nonzero scalar term.
Spinor pfaffian_chart(const Mat& a);
Mat chart_coordinates(const Spinor& a);

/// Half the codimension of H_a n H_b: the minimal number of lines inside the
/// variety joining the two points.
int hamming_distance(const Spinor& a, const Spinor& b);

OGComponent og_component(const IsotropicSubspace& h);

/// True iff the projective line through two distinct pure spinors lies in the
/// Spinor variety, i.e. their Hamming distance is 1.
bool line_in_variety(const Spinor& a, const Spinor& b);

}  // namespace spinorlab

#endif
