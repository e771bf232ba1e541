#include "spinorlab/orbit.hpp"

#include <algorithm>
#include <set>

#include "spinorlab/poly.hpp"

namespace spinorlab {

OrbitLabel OrbitLabel::sigma(int l) {
    if (l < 2) throw std::invalid_argument("OrbitLabel: Sigma needs l >= 2");
    return {Kind::sigma, l};
}

OrbitLabel OrbitLabel::theta(int l) {
    if (l < 2) throw std::invalid_argument("OrbitLabel: Theta needs l >= 2");
    if (l == 2) return sigma(2);  // the two orbits coincide
    return {Kind::theta, l};
}

std::string OrbitLabel::str() const {
    switch (kind) {
        case Kind::pure:
            return "Pure";
        case Kind::sigma:
            return "Sigma(" + std::to_string(l) + ")";
        default:
            return "Theta(" + std::to_string(l) + ")";
    }
}

Spinor representative(const OrbitLabel& label, int n) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("representative: even n >= 4 required");
    switch (label.kind) {
        case OrbitLabel::Kind::pure:
            return Spinor::e_range(n, n);
        case OrbitLabel::Kind::sigma: {
            if (label.l < 2 || 2 * label.l > n)
                throw std::invalid_argument("representative: Sigma(l) needs 2 <= l <= n/2");
            return Spinor::e_range(n, n) + Spinor::e_range(n, n - 2 * label.l);
        }
        default: {
            if (label.l < 3 || 2 * label.l > n)
                throw std::invalid_argument("representative: Theta(l) needs 3 <= l <= n/2");
            Spinor q(n);
            for (int i = 1; i <= label.l; ++i)
                q.add_coeff((IndexMask{1} << (2 * i - 2)) | (IndexMask{1} << (2 * i - 1)), Scalar(1));
            return q;
        }
    }
}

Spinor sample_orbit(const OrbitLabel& label, int n, std::uint64_t seed, int twists) {
    Spinor rep = representative(label, n);
    if (twists <= 0) return rep;
    Rng rng(seed);
    GroupElement g = random_group_element(rng, n, twists);
    return group_apply(g, rep);
}

Spinor factor_extract(const Spinor& q, int m) {
    if (m < 0 || m > q.n()) throw std::invalid_argument("factor_extract: bad prefix length");
    Spinor out(q.n() - m);
    const IndexMask prefix = full_mask(m);
    for (const auto& [mask, c] : q.terms()) {
        if ((mask & prefix) != prefix)
            throw std::invalid_argument("factor_extract: monomial misses a prefix index");
        out.set_coeff(mask >> m, c);
    }
    return out;
}

Spinor wedge_prefix(const Spinor& q, int m) {
    if (m < 0) throw std::invalid_argument("wedge_prefix: bad prefix length");
    Spinor out(q.n() + m);
    const IndexMask prefix = full_mask(m);
    for (const auto& [mask, c] : q.terms()) out.set_coeff((mask << m) | prefix, c);
    return out;
}

namespace {

/// Dense coordinates over the even-cardinality monomials, ascending mask.
struct EvenCoords {
    explicit EvenCoords(int n) {
        for (IndexMask m = 0; m <= full_mask(n); ++m)
            if (set_even(m)) masks.push_back(m);
        col.assign(size_t{1} << n, -1);
        for (size_t c = 0; c < masks.size(); ++c) col[masks[c]] = static_cast<int>(c);
    }
    std::vector<Scalar> row(const Spinor& s) const {
        std::vector<Scalar> r(masks.size());
        for (const auto& [m, c] : s.terms()) r[col[m]] = c;
        return r;
    }
    std::vector<IndexMask> masks;
    std::vector<int> col;
};

/// Echelon of span({a} u {v_alpha . (v_beta . a)}).
Echelon cone_echelon(const Spinor& a, const EvenCoords& ec) {
    const int n = a.n();
    Echelon ech(static_cast<int>(ec.masks.size()));
    ech.insert(ec.row(a));
    auto basis = Vector::hyperbolic_basis(n);
    std::vector<Spinor> inner;
    inner.reserve(basis.size());
    for (const Vector& vb : basis) inner.push_back(clifford_apply(vb, a));
    for (const Vector& va : basis)
        for (const Spinor& w : inner) ech.insert(ec.row(clifford_apply(va, w)));
    return ech;
}

}  // namespace

std::vector<Spinor> tangent_cone_span(const Spinor& a) {
    if (a.is_zero() || !is_pure(a)) throw std::domain_error("tangent_cone_span: pure spinor required");
    EvenCoords ec(a.n());
    Echelon ech = cone_echelon(a, ec);
    std::vector<Spinor> out;
    for (const auto& r : ech.rows()) {
        Spinor s(a.n());
        for (size_t c = 0; c < ec.masks.size(); ++c) s.set_coeff(ec.masks[c], r[c]);
        out.push_back(std::move(s));
    }
    return out;
}

bool is_tangent_at(const Spinor& q, const Spinor& a) {
    if (q.n() != a.n()) throw std::invalid_argument("is_tangent_at: dimension mismatch");
    if (a.is_zero() || !is_pure(a)) throw std::domain_error("is_tangent_at: pure base point required");
    EvenCoords ec(a.n());
    Echelon ech = cone_echelon(a, ec);
    return ech.in_span(ec.row(q));
}

int orbit_dimension(const Spinor& q) {
    if (q.is_zero()) throw std::domain_error("orbit_dimension: zero spinor");
    EvenCoords ec(q.n());
    return cone_echelon(q, ec).rank() - 1;
}

ClosedFormDims closed_form_dims(int n) {
    if (n < 6 || n % 2 != 0) throw std::invalid_argument("closed_form_dims: even n >= 6 required");
    ClosedFormDims t;
    t.n = n;
    long ln = n;
    t.pure = ln * (ln - 1) / 2;
    t.sigma2 = t.pure + 4 * ln - 15;
    t.secant = ln * (ln - 1) + 1;
    t.tangential = ln * (ln - 1);
    return t;
}

long ClosedFormDims::sigma_l(int l) const {
    if (l == 2) return sigma2;
    if (l < 2 || 2 * l > n) throw std::invalid_argument("sigma_l: 2 <= l <= n/2 required");
    long ln = n, ll = l;
    return pure + ll * (2 * ln - 1) - 2 * ll * ll + 1;
}

long ClosedFormDims::theta_l(int l) const {
    if (l == 2) return sigma2;
    if (l < 3 || 2 * l > n) throw std::invalid_argument("theta_l: 3 <= l <= n/2 required");
    long ln = n, ll = l;
    return pure + ll * (2 * ln - 1) - 2 * ll * ll;
}

long ClosedFormDims::of_label(const OrbitLabel& label) const {
    switch (label.kind) {
        case OrbitLabel::Kind::pure:
            return pure;
        case OrbitLabel::Kind::sigma:
            return sigma_l(label.l);
        default:
            return theta_l(label.l);
    }
}

TerraciniResult terracini_deficient(const Spinor& a, const Spinor& b) {
    if (a.n() != b.n()) throw std::invalid_argument("terracini_deficient: dimension mismatch");
    if (a.is_zero() || b.is_zero() || !is_pure(a) || !is_pure(b))
        throw std::domain_error("terracini_deficient: pure spinors required");
    if (proportional(a, b)) throw std::domain_error("terracini_deficient: distinct points required");
    const int n = a.n();
    EvenCoords ec(n);
    Echelon ech = cone_echelon(a, ec);
    Echelon conb = cone_echelon(b, ec);
    for (const auto& r : conb.rows()) ech.insert(r);
    long ambient = long{1} << (n - 1);
    long expected = std::min<long>(static_cast<long>(n) * (n - 1) + 2, ambient);
    int s = ech.rank();
    return {s < expected, s};
}

Mat random_skew(Rng& rng, int n, long lo, long hi) {
    Mat a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Scalar v(rng.range(lo, hi));
            a.at(i, j) = v;
            a.at(j, i) = -v;
        }
    }
    return a;
}

Mat random_skew_of_rank(Rng& rng, int n, int rank) {
    if (rank % 2 != 0 || rank < 0 || rank > n)
        throw std::invalid_argument("random_skew_of_rank: even rank <= n required");
    for (int attempt = 0; attempt < 200; ++attempt) {
        Mat a(n, n);
        for (int p = 0; p < rank / 2; ++p) {
            std::vector<long> u(n), v(n);
            for (int i = 0; i < n; ++i) {
                u[i] = rng.range(-2, 2);
                v[i] = rng.range(-2, 2);
            }
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    a.at(i, j) += Scalar(u[i] * v[j] - v[i] * u[j]);
        }
        if (exact_rank(a) == rank) return a;
    }
    throw std::logic_error("random_skew_of_rank: sampling stalled");
}

IsotropicSubspace random_max_isotropic(Rng& rng, int n, bool twist) {
    Spinor a = pfaffian_chart(random_skew(rng, n, -2, 2));
    if (twist) {
        GroupElement g = random_group_element(rng, n, 1);
        a = group_apply(g, a);
    }
    return psi_kernel(a);
}

namespace {

std::vector<int> pick_subset(Rng& rng, int count, int total) {
    std::set<int> s;
    while (static_cast<int>(s.size()) < count) s.insert(static_cast<int>(rng.range(0, total - 1)));
    return {s.begin(), s.end()};
}

Poly pencil_minor(const Mat& mx, const Mat& mw, const std::vector<int>& rows,
                  const std::vector<int>& cols, const std::vector<mpq_class>& nodes) {
    const int r = static_cast<int>(rows.size());
    std::vector<mpq_class> ys;
    ys.reserve(nodes.size());
    for (const mpq_class& t : nodes) {
        Mat sub(r, r);
        Scalar ts{mpq_class(t)};
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                sub.at(i, j) = mx.at(rows[i], cols[j]) + ts * mw.at(rows[i], cols[j]);
        Scalar d = exact_det(sub);
        if (!d.is_rational()) throw std::logic_error("pencil_minor: non-rational determinant");
        ys.push_back(d.rat());
    }
    return lagrange_interpolate(nodes, ys);
}

}  // namespace

std::vector<PencilPoint> pencil_pure_points(const Spinor& x, const Spinor& w, Rng& rng) {
    if (x.n() != w.n()) throw std::invalid_argument("pencil_pure_points: dimension mismatch");
    if (x.is_zero() || w.is_zero() || proportional(x, w))
        throw std::invalid_argument("pencil_pure_points: independent spinors required");
    const int n = x.n();
    const int r = n + 1;  // purity is rank psi = n; minors one size up
    Mat mx = psi_matrix_dense(x);
    Mat mw = psi_matrix_dense(w);
    std::vector<mpq_class> nodes;
    for (int i = 0; static_cast<int>(nodes.size()) < r + 1; ++i) {
        nodes.emplace_back(i);
        if (static_cast<int>(nodes.size()) < r + 1 && i > 0) nodes.emplace_back(-i);
    }

    // blind row subsets are almost surely singular on the sparse pencils of
    // untwisted representatives; instead pick independent rows at a random
    // evaluation point so every sampled minor is a nonzero polynomial
    auto squarefree_degree = [](const Poly& p) {
        int d = 0;
        for (const auto& [factor, mult] : squarefree_decomposition(p)) d += factor.degree();
        return d;
    };

    Poly g;
    int k_min = r;  // multiplicity of [w] seen by the minors
    int used = 0, stable = 0;
    for (int attempt = 0; attempt < 120; ++attempt) {
        if (used >= 4 && stable >= 3 && (g.degree() < 1 || squarefree_degree(g) <= 2)) break;
        if (used >= 24) break;
        auto cols = pick_subset(rng, r, mx.cols());
        Scalar t0(rng.range(3, 64) * (rng.next() % 2 == 0 ? 1 : -1));
        std::vector<int> order(mx.rows());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        for (size_t i = order.size(); i-- > 1;)
            std::swap(order[i], order[rng.next() % (i + 1)]);
        Echelon probe(r);
        std::vector<int> rows;
        for (int i : order) {
            std::vector<Scalar> v(r);
            for (int j = 0; j < r; ++j) v[j] = mx.at(i, cols[j]) + t0 * mw.at(i, cols[j]);
            if (probe.insert(std::move(v))) rows.push_back(i);
            if (static_cast<int>(rows.size()) == r) break;
        }
        if (static_cast<int>(rows.size()) < r) continue;  // t0 unlucky or rank-deficient columns
        std::sort(rows.begin(), rows.end());
        Poly p = pencil_minor(mx, mw, rows, cols, nodes);
        if (p.is_zero()) throw std::logic_error("pencil_pure_points: probed minor vanished");
        ++used;
        k_min = std::min(k_min, r - p.degree());
        if (used == 1) {
            g = p.monic();
            stable = 0;
        } else {
            Poly g2 = poly_gcd(g, p);
            if (g2 == g)
                ++stable;
            else {
                g = std::move(g2);
                stable = 0;
            }
        }
    }
    if (used == 0) throw std::logic_error("pencil_pure_points: psi pencil has no nonzero minor");

    std::vector<PencilPoint> out;
    if (g.degree() >= 1) {
        RootReport roots = find_roots(g);
        for (const auto& [t0, mult] : roots.rational) {
            Spinor p = x + Scalar(t0) * w;
            if (!p.is_zero() && is_pure(p)) out.push_back({std::move(p), mult, false});
        }
        for (const auto& qp : roots.quadratic) {
            Spinor p1 = x + qp.first * w;
            Spinor p2 = x + qp.second * w;
            if (!p1.is_zero() && is_pure(p1)) {
                if (p2.is_zero() || !is_pure(p2))
                    throw std::logic_error("pencil_pure_points: conjugate point not pure");
                out.push_back({std::move(p1), qp.mult, false});
                out.push_back({std::move(p2), qp.mult, false});
            }
        }
    }
    if (k_min >= 1 && is_pure(w)) out.push_back({w, k_min, true});
    return out;
}

Classification classify(const Spinor& q) {
    if (q.is_zero()) throw std::domain_error("classify: zero spinor");
    if (!q.pure_even()) throw std::invalid_argument("classify: even spinor required");
    const int n = q.n();
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("classify: even n >= 4 required");
    if (is_pure(q)) return {OrbitLabel::pure(), {}};

    IsotropicSubspace hq = psi_kernel(q);
    const int h = hq.dim();
    if ((n - h) % 2 != 0)
        throw not_in_secant_error("classify: kernel corank " + std::to_string(n - h) + " is odd");
    const int l = (n - h) / 2;
    if (l < 2) throw not_in_secant_error("classify: kernel dimension too large for a secant point");
    if (l == 2) return {OrbitLabel::sigma(2), {}};

    GroupElement g = witt_standardize(hq);
    Spinor qs = group_apply(g, q);
    const int m = n - 2 * l;
    Spinor qr(0);
    try {
        qr = factor_extract(qs, m);
    } catch (const std::invalid_argument&) {
        throw not_in_secant_error("classify: standardized point does not factor through e_[m]");
    }

    auto span = annihilator_span(qr);
    if (span.size() != 2)
        throw not_in_secant_error("classify: annihilator span has dimension " +
                                  std::to_string(span.size()));
    EvenCoords ec(2 * l);
    if (solve_in_span({ec.row(span[0]), ec.row(span[1])}, ec.row(qr)).empty())
        throw std::logic_error("classify: point escaped its annihilator span");
    Spinor w = proportional(span[0], qr) ? span[1] : span[0];

    Rng rng(0x53504c414253ULL);  // fixed stream: classification is deterministic
    auto points = pencil_pure_points(qr, w, rng);

    if (points.size() == 2) {
        const Spinor& p1 = points[0].point;
        const Spinor& p2 = points[1].point;
        auto lam = solve_in_span({ec.row(p1), ec.row(p2)}, ec.row(qr));
        if (lam.empty() || lam[0].is_zero() || lam[1].is_zero())
            throw not_in_secant_error("classify: point not spanned by the two pure points");
        if (hamming_distance(p1, p2) != l)
            throw not_in_secant_error("classify: pure pair has the wrong distance");
        GroupElement ginv = g.reversed();
        Scalar scale = g.spinor_norm().inverse();
        Spinor b1 = scale * group_apply(ginv, wedge_prefix(lam[0] * p1, m));
        Spinor b2 = scale * group_apply(ginv, wedge_prefix(lam[1] * p2, m));
        if (!(b1 + b2 == q)) throw std::logic_error("classify: certificate does not re-sum");
        if (!is_pure(b1) || !is_pure(b2))
            throw std::logic_error("classify: lifted certificate point not pure");
        Certificate cert;
        cert.pair = {std::move(b1), std::move(b2)};
        return {OrbitLabel::sigma(l), std::move(cert)};
    }

    if (points.size() == 1 && points[0].mult >= 2) {
        const Spinor& p = points[0].point;
        if (!is_tangent_at(qr, p))
            throw not_in_secant_error("classify: doubled pure point is not a tangency");
        Spinor tp = group_apply(g.reversed(), wedge_prefix(p, m)).normalized();
        if (!is_tangent_at(q, tp)) throw std::logic_error("classify: lifted tangency failed");
        Certificate cert;
        cert.tangency = std::move(tp);
        return {OrbitLabel::theta(l), std::move(cert)};
    }

    if (points.size() > 2) throw std::logic_error("classify: more than two pure points on a pencil");
    throw not_in_secant_error("classify: no bisecant or tangent structure on the pencil");
}

std::vector<std::pair<Spinor, Spinor>> decompositions_sigma2(const Spinor& q, int trials,
                                                             std::uint64_t seed) {
    Classification cls = classify(q);
    if (cls.label != OrbitLabel::sigma(2))
        throw std::domain_error("decompositions_sigma2: point is not in Sigma(2)");
    const int n = q.n();
    const int m = n - 4;

    IsotropicSubspace hq = psi_kernel(q);
    GroupElement g = witt_standardize(hq);
    Spinor qr = factor_extract(group_apply(g, q), m);
    GroupElement ginv = g.reversed();
    Scalar scale = g.spinor_norm().inverse();

    Rng rng(seed);
    std::vector<std::pair<Spinor, Spinor>> out;
    std::set<std::string> seen;
    for (int trial = 0; trial < trials; ++trial) {
        Rng trng = rng.fork(static_cast<std::uint64_t>(trial));
        Mat a(4, 4);
        if (trial == 1) {
            a.at(0, 1) = Scalar(1);
            a.at(1, 0) = Scalar(-1);
        } else if (trial >= 2) {
            a = random_skew(trng, 4, -2, 2);
        }
        Spinor cand = pfaffian_chart(a);
        if (trial >= 2 && trial % 3 == 2) {
            GroupElement tw = random_group_element(trng, 4, 1);
            cand = group_apply(tw, cand);
        }
        std::vector<PencilPoint> points;
        try {
            points = pencil_pure_points(qr, cand, trng);
        } catch (const std::invalid_argument&) {
            continue;  // candidate collapsed onto the pencil base
        }
        for (const auto& pp : points) {
            if (pp.at_infinity) continue;
            Spinor comp = qr - pp.point;
            if (comp.is_zero() || !is_pure(comp)) continue;
            if (hamming_distance(pp.point, comp) != 2) continue;
            std::string k1 = pp.point.normalized().str();
            std::string k2 = comp.normalized().str();
            std::string key = k1 < k2 ? k1 + "|" + k2 : k2 + "|" + k1;
            if (!seen.insert(key).second) continue;
            Spinor b1 = scale * group_apply(ginv, wedge_prefix(pp.point, m));
            Spinor b2 = scale * group_apply(ginv, wedge_prefix(comp, m));
            if (!(b1 + b2 == q)) throw std::logic_error("decompositions_sigma2: pair does not re-sum");
            out.emplace_back(std::move(b1), std::move(b2));
        }
    }
    return out;
}

}  // namespace spinorlab
