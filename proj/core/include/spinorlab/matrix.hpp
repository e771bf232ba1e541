#ifndef SPINORLAB_MATRIX_HPP
#define SPINORLAB_MATRIX_HPP

#include <vector>

#include "spinorlab/index_set.hpp"
#include "spinorlab/scalar.hpp"

namespace spinorlab {

/// Dense row-major matrix of exact scalars.
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    std::vector<Scalar> row(int i) const;
    void set_row(int i, const std::vector<Scalar>& r);
    void append_row(const std::vector<Scalar>& r);

    static Mat identity(int n);
    Mat transposed() const;
    bool is_skew() const;

    friend bool operator==(const Mat& l, const Mat& r) {
        return l.rows_ == r.rows_ && l.cols_ == r.cols_ && l.a_ == r.a_;
    }

  private:
    int rows_, cols_;
    std::vector<Scalar> a_;
};

/// Scales a row so that all entries are integral (also the sqrt coordinates),
/// coprime, with the first nonzero entry positive. Deterministic canonical form.
void make_row_primitive(std::vector<Scalar>& row);

/// Incremental row-echelon accumulator over the scalar field. Rows are kept
/// primitive; elimination is the fraction-free cross-multiplication step with
/// content reduction, pivots are the first nonzero entry in column order.
class Echelon {
  public:
    explicit Echelon(int cols) : cols_(cols) {}

    /// Reduces the row against the current echelon and inserts the remainder.
    /// Returns true when the rank grew.
    bool insert(std::vector<Scalar> row);
    /// Reduction only; true iff the row lies in the current row span.
    bool in_span(std::vector<Scalar> row) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Kernel of the matrix whose rows were inserted: one primitive basis
    /// vector per free column, ordered by free column.
    std::vector<std::vector<Scalar>> kernel_basis() const;

  private:
    void reduce(std::vector<Scalar>& row) const;

    int cols_;
    std::vector<std::vector<Scalar>> rows_;  // sorted by pivot column
    std::vector<int> pivots_;
};

/// Incremental kernel computation for row streams whose terminal corank is
/// known in advance: once the rank reaches cols - expected_corank, further
/// rows are only checked for orthogonality against the candidate kernel
/// (an exact membership test) and inserted when they cut deeper. The result
/// is the exact kernel whatever the true corank is.
class KernelAccumulator {
  public:
    KernelAccumulator(int cols, int expected_corank)
        : ech_(cols), expected_corank_(expected_corank) {}

    void feed(std::vector<Scalar> row);
    /// Exact kernel of everything fed so far.
    const std::vector<std::vector<Scalar>>& kernel();
    int rank() const { return ech_.rank(); }

  private:
    Echelon ech_;
    int expected_corank_;
    std::vector<std::vector<Scalar>> candidate_;
};

/// Rank by fraction-free elimination with deterministic pivoting.
int exact_rank(const Mat& m);

/// Null-space basis (row vectors of length cols) with exact entries; together
/// with exact_rank satisfies rank + kernel dim = cols.
std::vector<std::vector<Scalar>> exact_kernel(const Mat& m);

/// Determinant by fraction-free (Bareiss) elimination.
Scalar exact_det(const Mat& m);

/// Pfaffian of a skew-symmetric matrix of even size m (m = 0 gives 1),
/// by Laplace-type expansion along the first row. Pf(A)^2 = det(A).
Scalar pfaffian(const Mat& a);

/// All sub-Pfaffians Pf(A_I) of an n x n skew matrix, indexed by the bitmask
/// of the even subset I of {1..n}; odd masks hold zero. pf[0] = 1.
std::vector<Scalar> sub_pfaffians(const Mat& a);

/// Solves x * rows = target for row vectors spanning a subspace; returns the
/// coefficients when target lies in the span, empty otherwise.
std::vector<Scalar> solve_in_span(const std::vector<std::vector<Scalar>>& rows,
                                  const std::vector<Scalar>& target);

}  // namespace spinorlab

#endif
