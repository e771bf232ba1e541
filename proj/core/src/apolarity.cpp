#include "spinorlab/apolarity.hpp"

#include <stdexcept>

namespace spinorlab {

namespace {

void check_even(const Spinor& q, const char* who) {
    if (q.is_zero()) throw std::domain_error(std::string(who) + ": zero spinor");
    if (!q.pure_even()) throw std::invalid_argument(std::string(who) + ": even spinor required");
}

std::vector<IndexMask> masks_of_parity(int n, bool even) {
    std::vector<IndexMask> out;
    for (IndexMask m = 0; m <= full_mask(n); ++m)
        if (set_even(m) == even) out.push_back(m);
    return out;
}

}  // namespace

Mat apolarity_matrix(const Spinor& q) {
    check_even(q, "apolarity_matrix");
    const int n = q.n();
    auto odds = masks_of_parity(n, false);
    std::vector<int> col_of(size_t{1} << n, -1);
    for (size_t c = 0; c < odds.size(); ++c) col_of[odds[c]] = static_cast<int>(c);

    Mat m(2 * n, static_cast<int>(odds.size()));
    auto basis = Vector::hyperbolic_basis(n);
    for (int i = 1; i <= n; ++i) {
        Spinor fi_q = clifford_apply(basis[n + i - 1], q);  // f_i . q
        for (const auto& [mask, c] : fi_q.terms()) m.at(i - 1, col_of[mask]) = c;
        Spinor ei_q = clifford_apply(basis[i - 1], q);  // e_i . q
        for (const auto& [mask, c] : ei_q.terms()) m.at(n + i - 1, col_of[mask]) = c;
    }
    return m;
}

Vector phi_apply(const Spinor& q, const Spinor& f) {
    check_even(q, "phi_apply");
    if (q.n() != f.n()) throw std::invalid_argument("phi_apply: dimension mismatch");
    const int n = q.n();
    Vector u(n);
    for (int i = 1; i <= n; ++i) {
        u.e(i) = dual_pairing(f, clifford_apply(Vector::basis_f(n, i), q));
        u.f(i) = dual_pairing(f, clifford_apply(Vector::basis_e(n, i), q));
    }
    return u;
}

std::vector<Spinor> ker_phi(const Spinor& q) {
    check_even(q, "ker_phi");
    const int n = q.n();
    auto odds = masks_of_parity(n, false);
    auto kernel = exact_kernel(apolarity_matrix(q));
    std::vector<Spinor> out;
    out.reserve(kernel.size());
    for (const auto& v : kernel) {
        Spinor f(n);
        for (size_t c = 0; c < odds.size(); ++c) f.set_coeff(odds[c], v[c]);
        out.push_back(std::move(f));
    }
    return out;
}

int rank_phi(const Spinor& q) {
    check_even(q, "rank_phi");
    return exact_rank(apolarity_matrix(q));
}

std::vector<Spinor> annihilator_span(const Spinor& q) {
    check_even(q, "annihilator_span");
    const int n = q.n();
    auto evens = masks_of_parity(n, true);
    std::vector<int> col_of(size_t{1} << n, -1);
    for (size_t c = 0; c < evens.size(); ++c) col_of[evens[c]] = static_cast<int>(c);

    // the span is 2-dimensional on every secant point, so the accumulator can
    // switch to orthogonality verification once the corank reaches 2
    KernelAccumulator acc(static_cast<int>(evens.size()), 2);
    for (const Spinor& f : ker_phi(q)) {
        // constraint <f, e_j . a> = 0: row entry at J = I \ {j} is +-f_I
        for (int j = 1; j <= n; ++j) {
            std::vector<Scalar> row(evens.size());
            bool nonzero = false;
            for (const auto& [mask, c] : f.terms()) {
                if (!set_contains(mask, j)) continue;
                IndexMask sub = mask & ~(IndexMask{1} << (j - 1));
                Scalar t = c;
                if (remove_sign(j, mask) < 0) t = -t;
                row[col_of[sub]] += t;
                nonzero = true;
            }
            if (nonzero) acc.feed(std::move(row));
        }
        // constraint <f, f_i . a> = 0: row entry at J = I u {i} is +-f_I
        for (int i = 1; i <= n; ++i) {
            std::vector<Scalar> row(evens.size());
            bool nonzero = false;
            for (const auto& [mask, c] : f.terms()) {
                if (set_contains(mask, i)) continue;
                IndexMask sup = mask | (IndexMask{1} << (i - 1));
                Scalar t = c;
                if (insert_sign(i, mask) < 0) t = -t;
                row[col_of[sup]] += t;
                nonzero = true;
            }
            if (nonzero) acc.feed(std::move(row));
        }
    }
    std::vector<Spinor> out;
    for (const auto& v : acc.kernel()) {
        Spinor a(n);
        for (size_t c = 0; c < evens.size(); ++c) a.set_coeff(evens[c], v[c]);
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace spinorlab
