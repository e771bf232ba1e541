#include "spinorlab/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinorlab {

std::vector<Scalar> Mat::row(int i) const {
    std::vector<Scalar> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

void Mat::set_row(int i, const std::vector<Scalar>& r) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("Mat: row length mismatch");
    for (int j = 0; j < cols_; ++j) at(i, j) = r[j];
}

void Mat::append_row(const std::vector<Scalar>& r) {
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("Mat: row length mismatch");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Mat Mat::transposed() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool Mat::is_skew() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

void make_row_primitive(std::vector<Scalar>& row) {
    mpz_class den_lcm(1), num_gcd(0);
    for (const Scalar& s : row) {
        for (const mpq_class* q : {&s.rat(), &s.ext()}) {
            if (*q == 0) continue;
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q->get_den().get_mpz_t());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q->get_num().get_mpz_t());
        }
    }
    if (num_gcd == 0) return;  // zero row
    Scalar scale(mpq_class(den_lcm) / mpq_class(num_gcd));
    const Scalar* lead = nullptr;
    for (Scalar& s : row) {
        s *= scale;
        if (!lead && !s.is_zero()) lead = &s;
    }
    bool flip = lead->rat() < 0 || (lead->rat() == 0 && lead->ext() < 0);
    if (flip)
        for (Scalar& s : row) s = -s;
}

namespace {

int first_nonzero(const std::vector<Scalar>& row) {
    for (size_t j = 0; j < row.size(); ++j)
        if (!row[j].is_zero()) return static_cast<int>(j);
    return -1;
}

}  // namespace

void Echelon::reduce(std::vector<Scalar>& row) const {
    int steps_since_norm = 0;
    for (size_t k = 0; k < rows_.size(); ++k) {
        int p = pivots_[k];
        if (row[p].is_zero()) continue;
        const Scalar s = rows_[k][p];
        const Scalar t = row[p];
        for (int j = 0; j < cols_; ++j) {
            const Scalar& stored = rows_[k][j];
            if (j < p || stored.is_zero()) {  // stored row is zero before its pivot
                if (!row[j].is_zero()) row[j] = s * row[j];
            } else if (row[j].is_zero()) {
                row[j] = -(t * stored);
            } else {
                row[j] = s * row[j] - t * stored;
            }
        }
        // content reduction is the expensive part; amortize it
        if (++steps_since_norm == 8) {
            make_row_primitive(row);
            steps_since_norm = 0;
        }
    }
    if (steps_since_norm != 0) make_row_primitive(row);
}

bool Echelon::insert(std::vector<Scalar> row) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("Echelon: bad row length");
    make_row_primitive(row);
    reduce(row);
    int p = first_nonzero(row);
    if (p < 0) return false;
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), p);
    size_t idx = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + idx, std::move(row));
    return true;
}

bool Echelon::in_span(std::vector<Scalar> row) const {
    make_row_primitive(row);
    reduce(row);
    return first_nonzero(row) < 0;
}

std::vector<std::vector<Scalar>> Echelon::kernel_basis() const {
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots_) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(cols_);
        v[f] = Scalar(1);
        for (int k = static_cast<int>(rows_.size()) - 1; k >= 0; --k) {
            int p = pivots_[k];
            if (p > f) continue;
            Scalar dot;
            for (int j = p + 1; j <= f; ++j) {
                if (!v[j].is_zero() && !rows_[k][j].is_zero()) dot += rows_[k][j] * v[j];
            }
            v[p] = -dot / rows_[k][p];
        }
        make_row_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

void KernelAccumulator::feed(std::vector<Scalar> row) {
    if (!candidate_.empty()) {
        bool orthogonal = true;
        for (const auto& k : candidate_) {
            Scalar dot;
            for (size_t j = 0; j < row.size(); ++j)
                if (!row[j].is_zero() && !k[j].is_zero()) dot += row[j] * k[j];
            if (!dot.is_zero()) {
                orthogonal = false;
                break;
            }
        }
        if (orthogonal) return;  // row already lies in the accumulated row span
        candidate_.clear();
    }
    ech_.insert(std::move(row));
    if (candidate_.empty() && ech_.rank() >= ech_.cols() - expected_corank_)
        candidate_ = ech_.kernel_basis();
}

const std::vector<std::vector<Scalar>>& KernelAccumulator::kernel() {
    if (candidate_.empty()) candidate_ = ech_.kernel_basis();
    return candidate_;
}

int exact_rank(const Mat& m) {
    Echelon e(m.cols());
    for (int i = 0; i < m.rows(); ++i) e.insert(m.row(i));
    return e.rank();
}

std::vector<std::vector<Scalar>> exact_kernel(const Mat& m) {
    Echelon e(m.cols());
    for (int i = 0; i < m.rows(); ++i) e.insert(m.row(i));
    return e.kernel_basis();
}

Scalar exact_det(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("exact_det: square matrix required");
    int n = m.rows();
    if (n == 0) return Scalar(1);
    Mat w = m;
    Scalar prev(1);
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k).is_zero()) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i) {
                if (!w.at(i, k).is_zero()) {
                    swap = i;
                    break;
                }
            }
            if (swap < 0) return Scalar();
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(swap, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
            }
            w.at(i, k) = Scalar();
        }
        prev = w.at(k, k);
    }
    Scalar det = w.at(n - 1, n - 1);
    return negate ? -det : det;
}

namespace {

Scalar pfaffian_rec(const Mat& a, IndexMask mask, std::vector<Scalar>& memo,
                    std::vector<bool>& seen) {
    if (mask == 0) return Scalar(1);
    if (seen[mask]) return memo[mask];
    int i1 = std::countr_zero(mask) + 1;
    Scalar sum;
    int pos = 1;
    for (IndexMask rest = mask & (mask - 1); rest; rest &= rest - 1) {
        ++pos;  // position of j in the sorted subset, 1-based
        int j = std::countr_zero(rest) + 1;
        const Scalar& aij = a.at(i1 - 1, j - 1);
        if (!aij.is_zero()) {
            IndexMask sub = mask & ~(IndexMask{1} << (i1 - 1)) & ~(IndexMask{1} << (j - 1));
            Scalar term = aij * pfaffian_rec(a, sub, memo, seen);
            if (pos % 2 == 0)
                sum += term;
            else
                sum -= term;
        }
    }
    seen[mask] = true;
    memo[mask] = sum;
    return sum;
}

}  // namespace

Scalar pfaffian(const Mat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("pfaffian: square matrix required");
    if (a.rows() % 2 != 0) throw std::invalid_argument("pfaffian: even size required");
    if (!a.is_skew()) throw std::invalid_argument("pfaffian: skew-symmetric matrix required");
    int n = a.rows();
    if (n == 0) return Scalar(1);
    if (n > 20) throw std::invalid_argument("pfaffian: size too large");
    std::vector<Scalar> memo(size_t{1} << n);
    std::vector<bool> seen(size_t{1} << n, false);
    return pfaffian_rec(a, full_mask(n), memo, seen);
}

std::vector<Scalar> sub_pfaffians(const Mat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("sub_pfaffians: square matrix required");
    if (!a.is_skew()) throw std::invalid_argument("sub_pfaffians: skew-symmetric matrix required");
    int n = a.rows();
    if (n > 20) throw std::invalid_argument("sub_pfaffians: size too large");
    std::vector<Scalar> pf(size_t{1} << n);
    std::vector<bool> seen(size_t{1} << n, false);
    pf[0] = Scalar(1);
    seen[0] = true;
    for (IndexMask mask = 0; mask < (IndexMask{1} << n); ++mask) {
        if (!set_even(mask)) continue;
        pfaffian_rec(a, mask, pf, seen);
    }
    return pf;
}

std::vector<Scalar> solve_in_span(const std::vector<std::vector<Scalar>>& rows,
                                  const std::vector<Scalar>& target) {
    if (rows.empty()) return {};
    int k = static_cast<int>(rows.size());
    int len = static_cast<int>(target.size());
    // Gaussian elimination on the transposed system with augmented column.
    Mat aug(len, k + 1);
    for (int i = 0; i < len; ++i) {
        for (int j = 0; j < k; ++j) aug.at(i, j) = rows[j][i];
        aug.at(i, k) = target[i];
    }
    std::vector<int> pivot_row(k, -1);
    int r = 0;
    for (int c = 0; c < k && r < len; ++c) {
        int pr = -1;
        for (int i = r; i < len; ++i) {
            if (!aug.at(i, c).is_zero()) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        for (int j = 0; j <= k; ++j) std::swap(aug.at(r, j), aug.at(pr, j));
        Scalar inv = aug.at(r, c).inverse();
        for (int j = c; j <= k; ++j) aug.at(r, j) *= inv;
        for (int i = 0; i < len; ++i) {
            if (i == r || aug.at(i, c).is_zero()) continue;
            Scalar t = aug.at(i, c);
            for (int j = c; j <= k; ++j) aug.at(i, j) -= t * aug.at(r, j);
        }
        pivot_row[c] = r;
        ++r;
    }
    // inconsistent if a zero row has nonzero augmented entry
    for (int i = r; i < len; ++i)
        if (!aug.at(i, k).is_zero()) return {};
    std::vector<Scalar> x(k);
    for (int c = 0; c < k; ++c)
        if (pivot_row[c] >= 0) x[c] = aug.at(pivot_row[c], k);
    return x;
}

}  // namespace spinorlab
