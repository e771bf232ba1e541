#include "spinorlab/group.hpp"

#include <stdexcept>

namespace spinorlab {

GroupElement::GroupElement(std::vector<Vector> factors) : factors_(std::move(factors)) {
    if (factors_.size() % 2 != 0)
        throw std::invalid_argument("GroupElement: even number of factors required");
    for (const Vector& v : factors_)
        if (v.q().is_zero())
            throw std::invalid_argument("GroupElement: anisotropic factors required");
}

int GroupElement::n() const { return factors_.empty() ? 0 : factors_.front().n(); }

Scalar GroupElement::spinor_norm() const {
    Scalar s(1);
    for (const Vector& v : factors_) s *= v.q();
    return s;
}

GroupElement GroupElement::reversed() const {
    std::vector<Vector> rev(factors_.rbegin(), factors_.rend());
    return GroupElement(std::move(rev));
}

GroupElement random_group_element(Rng& rng, int n, int k) {
    if (k < 1) throw std::invalid_argument("random_group_element: k >= 1 required");
    std::vector<Vector> factors;
    factors.reserve(2 * k);
    for (int t = 0; t < 2 * k; ++t) {
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 100)
                throw std::logic_error("random_group_element: anisotropic sampling stalled");
            Vector v(n);
            for (int i = 1; i <= n; ++i) {
                v.e(i) = Scalar(rng.range(-2, 2));
                v.f(i) = Scalar(rng.range(-2, 2));
            }
            if (!v.q().is_zero()) {
                factors.push_back(std::move(v));
                break;
            }
        }
    }
    return GroupElement(std::move(factors));
}

Spinor group_apply(const GroupElement& g, const Spinor& x) {
    Spinor out = x;
    const auto& fs = g.factors();
    for (size_t i = fs.size(); i-- > 0;) out = clifford_apply(fs[i], out);
    return out;
}

namespace {

/// rho_w(u) = (P(u,w)/q(w)) w - u; the conjugation action of a single vector.
Vector reflect(const Vector& w, const Vector& u) {
    Scalar c = polar(u, w) / w.q();
    Vector out = w;
    out *= c;
    out -= u;
    return out;
}

/// True reflection r_w(u) = u - (P(u,w)/q(w)) w, used while building the
/// factorization (equal to -rho_w; even products agree).
Vector mirror(const Vector& w, const Vector& u) {
    Scalar c = polar(u, w) / w.q();
    Vector out = u;
    Vector shift = w;
    shift *= c;
    out -= shift;
    return out;
}

}  // namespace

Vector conjugate(const GroupElement& g, const Vector& v) {
    Vector out = v;
    const auto& fs = g.factors();
    for (size_t i = fs.size(); i-- > 0;) out = reflect(fs[i], out);
    return out;
}

IsotropicSubspace conjugate(const GroupElement& g, const IsotropicSubspace& h) {
    std::vector<Vector> rows;
    rows.reserve(h.dim());
    for (int i = 0; i < h.dim(); ++i) rows.push_back(conjugate(g, h.row_vector(i)));
    return IsotropicSubspace::from_vectors(h.n(), rows);
}

GroupElement witt_standardize(const IsotropicSubspace& h) {
    const int n = h.n();
    const int k = h.dim();
    std::vector<Vector> rows = h.basis();
    std::vector<Vector> mirrors;  // applied first-to-last

    auto apply_mirror = [&](const Vector& w, int from) {
        for (size_t m = from; m < rows.size(); ++m) rows[m] = mirror(w, rows[m]);
        mirrors.push_back(w);
    };

    for (int j = 1; j <= k; ++j) {
        // drop e_1..e_{j-1} components; f components below j vanish by
        // orthogonality to the already placed e_i
        for (size_t m = j - 1; m < rows.size(); ++m) {
            for (int i = 1; i < j; ++i) {
                if (!rows[m].e(i).is_zero()) rows[m].e(i) = Scalar();
                if (!rows[m].f(i).is_zero())
                    throw std::logic_error("witt_standardize: lost orthogonality");
            }
        }
        int pick = -1;
        for (size_t m = j - 1; m < rows.size(); ++m) {
            if (!rows[m].is_zero()) {
                pick = static_cast<int>(m);
                break;
            }
        }
        if (pick < 0) throw std::logic_error("witt_standardize: degenerate basis");
        std::swap(rows[j - 1], rows[pick]);
        Vector u = rows[j - 1];
        Vector ej = Vector::basis_e(n, j);
        Vector fj = Vector::basis_f(n, j);

        if (u == ej) continue;  // already in place
        if (!u.f(j).is_zero()) {
            // q(u - e_j) = -P(u, e_j) != 0: one reflection sends u to e_j
            apply_mirror(u - ej, j - 1);
        } else if (!u.e(j).is_zero()) {
            apply_mirror(u - fj, j - 1);
            apply_mirror(fj - ej, j - 1);
        } else {
            // route through z = f_j + v, anisotropy against u via some basis v
            Vector z = fj;
            bool found = false;
            for (int i = j + 1; i <= n && !found; ++i) {
                if (!u.e(i).is_zero()) {
                    z += Vector::basis_f(n, i);
                    found = true;
                } else if (!u.f(i).is_zero()) {
                    z += Vector::basis_e(n, i);
                    found = true;
                }
            }
            if (!found) throw std::logic_error("witt_standardize: no pairing direction");
            apply_mirror(u - z, j - 1);
            apply_mirror(z - ej, j - 1);
        }
        if (!(rows[j - 1] == Vector::basis_e(n, j)))
            throw std::logic_error("witt_standardize: row not standardized");
    }

    if (mirrors.size() % 2 != 0) {
        if (k == n)
            throw std::domain_error(
                "witt_standardize: maximal subspace in the odd component has no even lift");
        // extra reflection fixing e_1..e_k pointwise keeps the target subspace
        apply_mirror(Vector::basis_e(n, n) + Vector::basis_f(n, n), k);
    }

    // conjugate() applies the rightmost factor first
    std::vector<Vector> factors(mirrors.rbegin(), mirrors.rend());
    return GroupElement(std::move(factors));
}

}  // namespace spinorlab
