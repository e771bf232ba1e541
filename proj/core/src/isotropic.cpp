#include "spinorlab/isotropic.hpp"

#include <stdexcept>

namespace spinorlab {

namespace {

Mat reduced_row_basis(int cols, const std::vector<std::vector<Scalar>>& raw) {
    Echelon ech(cols);
    for (const auto& r : raw) ech.insert(r);
    // full reduction: pivots scaled to 1, zeros above each pivot
    std::vector<std::vector<Scalar>> rows = ech.rows();
    const std::vector<int>& piv = ech.pivots();
    for (size_t k = 0; k < rows.size(); ++k) {
        Scalar inv = rows[k][piv[k]].inverse();
        for (auto& c : rows[k]) c *= inv;
    }
    for (size_t k = rows.size(); k-- > 0;) {
        for (size_t i = 0; i < k; ++i) {
            Scalar f = rows[i][piv[k]];
            if (f.is_zero()) continue;
            for (int j = 0; j < cols; ++j) rows[i][j] -= f * rows[k][j];
        }
    }
    Mat out(0, cols);
    for (auto& r : rows) out.append_row(r);
    return out;
}

}  // namespace

std::vector<Scalar> vector_row(const Vector& v) {
    std::vector<Scalar> row(2 * v.n());
    for (int i = 1; i <= v.n(); ++i) {
        row[i - 1] = v.e(i);
        row[v.n() + i - 1] = v.f(i);
    }
    return row;
}

Vector row_to_vector(int n, const std::vector<Scalar>& row) {
    Vector v(n);
    for (int i = 1; i <= n; ++i) {
        v.e(i) = row[i - 1];
        v.f(i) = row[n + i - 1];
    }
    return v;
}

IsotropicSubspace::IsotropicSubspace(int n, Mat rows) : n_(n) {
    if (rows.cols() != 2 * n) throw std::invalid_argument("IsotropicSubspace: need 2n columns");
    std::vector<std::vector<Scalar>> raw;
    for (int i = 0; i < rows.rows(); ++i) raw.push_back(rows.row(i));
    rows_ = reduced_row_basis(2 * n, raw);
    if (rows_.rows() != rows.rows())
        throw std::invalid_argument("IsotropicSubspace: rows not linearly independent");
    for (int i = 0; i < rows_.rows(); ++i) {
        Vector vi = row_vector(i);
        if (!vi.q().is_zero()) throw std::invalid_argument("IsotropicSubspace: row not isotropic");
        for (int j = i + 1; j < rows_.rows(); ++j) {
            if (!polar(vi, row_vector(j)).is_zero())
                throw std::invalid_argument("IsotropicSubspace: rows not mutually orthogonal");
        }
    }
}

IsotropicSubspace IsotropicSubspace::from_vectors(int n, const std::vector<Vector>& span) {
    Mat m(0, 2 * n);
    for (const Vector& v : span) m.append_row(vector_row(v));
    return IsotropicSubspace(n, m);
}

Vector IsotropicSubspace::row_vector(int i) const { return row_to_vector(n_, rows_.row(i)); }

std::vector<Vector> IsotropicSubspace::basis() const {
    std::vector<Vector> out;
    for (int i = 0; i < dim(); ++i) out.push_back(row_vector(i));
    return out;
}

bool IsotropicSubspace::contains(const Vector& v) const {
    Echelon ech(2 * n_);
    for (int i = 0; i < rows_.rows(); ++i) ech.insert(rows_.row(i));
    return ech.in_span(vector_row(v));
}

namespace {

/// Rows of the psi matrix restricted to the index sets that actually occur.
/// Row order follows ascending mask so kernels are reproducible.
Mat psi_matrix_support(const Spinor& a, std::vector<IndexMask>* masks_out = nullptr) {
    const int n = a.n();
    std::map<IndexMask, std::vector<Scalar>> rows;
    auto row_of = [&](IndexMask m) -> std::vector<Scalar>& {
        auto [it, fresh] = rows.try_emplace(m);
        if (fresh) it->second.assign(2 * n, Scalar());
        return it->second;
    };
    for (const auto& [m, c] : a.terms()) {
        for (int i = 1; i <= n; ++i) {
            if (!set_contains(m, i)) {
                Scalar t = c;
                if (insert_sign(i, m) < 0) t = -t;
                row_of(m | (IndexMask{1} << (i - 1)))[i - 1] += t;
            } else {
                Scalar t = c;
                if (remove_sign(i, m) < 0) t = -t;
                row_of(m & ~(IndexMask{1} << (i - 1)))[n + i - 1] += t;
            }
        }
    }
    Mat out(0, 2 * n);
    for (auto& [m, r] : rows) {
        out.append_row(r);
        if (masks_out) masks_out->push_back(m);
    }
    return out;
}

}  // namespace

Mat psi_matrix_dense(const Spinor& a) {
    const int n = a.n();
    const bool even_input = a.pure_even();
    if (!even_input && !a.pure_odd())
        throw std::invalid_argument("psi_matrix_dense: homogeneous parity required");
    std::vector<IndexMask> row_masks;
    for (IndexMask m = 0; m <= full_mask(n); ++m)
        if (set_even(m) != even_input) row_masks.push_back(m);
    std::vector<int> index_of(size_t{1} << n, -1);
    for (size_t r = 0; r < row_masks.size(); ++r) index_of[row_masks[r]] = static_cast<int>(r);

    Mat out(static_cast<int>(row_masks.size()), 2 * n);
    for (const auto& [m, c] : a.terms()) {
        for (int i = 1; i <= n; ++i) {
            if (!set_contains(m, i)) {
                Scalar t = c;
                if (insert_sign(i, m) < 0) t = -t;
                out.at(index_of[m | (IndexMask{1} << (i - 1))], i - 1) += t;
            } else {
                Scalar t = c;
                if (remove_sign(i, m) < 0) t = -t;
                out.at(index_of[m & ~(IndexMask{1} << (i - 1))], n + i - 1) += t;
            }
        }
    }
    return out;
}

IsotropicSubspace psi_kernel(const Spinor& a) {
    if (a.is_zero()) throw std::domain_error("psi_kernel: zero spinor");
    Mat m = psi_matrix_support(a);
    auto kernel = exact_kernel(m);
    Mat rows(0, 2 * a.n());
    for (const auto& v : kernel) rows.append_row(v);
    return IsotropicSubspace(a.n(), rows);
}

bool is_pure(const Spinor& a) {
    if (a.is_zero()) throw std::domain_error("is_pure: zero spinor");
    return exact_rank(psi_matrix_support(a)) == a.n();
}

Spinor pure_from_subspace(const IsotropicSubspace& h) {
    const int n = h.n();
    if (!h.is_maximal()) throw std::domain_error("pure_from_subspace: subspace not maximal");
    if (og_component(h) != OGComponent::plus)
        throw std::domain_error("pure_from_subspace: subspace lies in the odd component");

    std::vector<IndexMask> evens;
    for (IndexMask m = 0; m <= full_mask(n); ++m)
        if (set_even(m)) evens.push_back(m);
    std::vector<int> col_of(size_t{1} << n, -1);
    for (size_t c = 0; c < evens.size(); ++c) col_of[evens[c]] = static_cast<int>(c);

    // one block of constraints (v.x)_I = 0 per basis row v of H; the
    // annihilator of a maximal even-component subspace is a line
    KernelAccumulator acc(static_cast<int>(evens.size()), 1);
    for (const Vector& v : h.basis()) {
        std::map<IndexMask, std::vector<Scalar>> rows;
        auto row_of = [&](IndexMask m) -> std::vector<Scalar>& {
            auto [it, fresh] = rows.try_emplace(m);
            if (fresh) it->second.assign(evens.size(), Scalar());
            return it->second;
        };
        for (IndexMask j : evens) {
            for (int i = 1; i <= n; ++i) {
                if (!v.e(i).is_zero() && !set_contains(j, i)) {
                    Scalar t = v.e(i);
                    if (insert_sign(i, j) < 0) t = -t;
                    row_of(j | (IndexMask{1} << (i - 1)))[col_of[j]] += t;
                }
                if (!v.f(i).is_zero() && set_contains(j, i)) {
                    Scalar t = v.f(i);
                    if (remove_sign(i, j) < 0) t = -t;
                    row_of(j & ~(IndexMask{1} << (i - 1)))[col_of[j]] += t;
                }
            }
        }
        for (auto& [m, r] : rows) acc.feed(std::move(r));
    }
    auto kernel = acc.kernel();
    if (kernel.size() != 1)
        throw std::logic_error("pure_from_subspace: annihilator is not a line");
    Spinor a(n);
    for (size_t c = 0; c < evens.size(); ++c) a.set_coeff(evens[c], kernel[0][c]);
    return a.normalized();
}

Spinor pfaffian_chart(const Mat& a) {
    const int n = a.rows();
    std::vector<Scalar> pf = sub_pfaffians(a);  // validates skewness
    Spinor out(n);
    for (IndexMask m = 0; m <= full_mask(n); ++m)
        if (set_even(m)) out.set_coeff(m, pf[m]);
    return out;
}

Mat chart_coordinates(const Spinor& a) {
    const int n = a.n();
    Scalar unit = a.coeff(0);
    if (unit.is_zero())
        throw std::domain_error("chart_coordinates: spinor outside the chart (no scalar term)");
    Scalar inv = unit.inverse();
    Mat m(n, n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            Scalar c = a.coeff((IndexMask{1} << (i - 1)) | (IndexMask{1} << (j - 1))) * inv;
            m.at(i - 1, j - 1) = c;
            m.at(j - 1, i - 1) = -c;
        }
    }
    return m;
}

int hamming_distance(const Spinor& a, const Spinor& b) {
    if (a.n() != b.n()) throw std::invalid_argument("hamming_distance: dimension mismatch");
    IsotropicSubspace ha = psi_kernel(a), hb = psi_kernel(b);
    if (!ha.is_maximal() || !hb.is_maximal())
        throw std::domain_error("hamming_distance: both spinors must be pure");
    Echelon ech(2 * a.n());
    for (int i = 0; i < ha.dim(); ++i) ech.insert(ha.rows().row(i));
    for (int i = 0; i < hb.dim(); ++i) ech.insert(hb.rows().row(i));
    int intersection = 2 * a.n() - ech.rank();
    return (a.n() - intersection) / 2;
}

OGComponent og_component(const IsotropicSubspace& h) {
    if (!h.is_maximal()) throw std::domain_error("og_component: maximal subspace required");
    const int n = h.n();
    // dim(H n E) = dim H - rank of the f-coordinate block
    Echelon ech(n);
    for (int i = 0; i < h.dim(); ++i) {
        std::vector<Scalar> frow(n);
        for (int j = 0; j < n; ++j) frow[j] = h.rows().at(i, n + j);
        ech.insert(std::move(frow));
    }
    int dim_he = h.dim() - ech.rank();
    return ((n - dim_he) % 2 == 0) ? OGComponent::plus : OGComponent::minus;
}

bool line_in_variety(const Spinor& a, const Spinor& b) {
    if (proportional(a, b)) throw std::domain_error("line_in_variety: points must be distinct");
    int d = hamming_distance(a, b);
    // cross-check against purity along the pencil
    for (long t : {1L, -1L, 2L}) {
        Spinor p = a + Scalar(t) * b;
        bool pure = !p.is_zero() && is_pure(p);
        if (pure != (d == 1))
            throw std::logic_error("line_in_variety: pencil purity disagrees with distance");
    }
    return d == 1;
}

}  // namespace spinorlab
