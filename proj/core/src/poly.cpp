#include "spinorlab/poly.hpp"

#include <stdexcept>

namespace spinorlab {

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const mpq_class& v) { return Poly(std::vector<mpq_class>{v}); }

Poly Poly::term(const mpq_class& c, int k) {
    std::vector<mpq_class> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

const mpq_class& Poly::coeff(int k) const {
    static const mpq_class zero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[k];
}

mpq_class Poly::eval(const mpq_class& t) const {
    mpq_class acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

Scalar Poly::eval(const Scalar& t) const {
    Scalar acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * t + Scalar(c_[i]);
    return acc;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& l, const Poly& r) {
    if (l.is_zero() || r.is_zero()) return Poly();
    std::vector<mpq_class> out(l.c_.size() + r.c_.size() - 1);
    for (size_t i = 0; i < l.c_.size(); ++i)
        for (size_t j = 0; j < r.c_.size(); ++j) out[i + j] += l.c_[i] * r.c_[j];
    return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly r = *this;
    std::vector<mpq_class> q(std::max<int>(0, degree() - d.degree() + 1));
    const mpq_class lead = d.c_.back();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        mpq_class f = r.c_.back() / lead;
        q[k] = f;
        for (size_t i = 0; i < d.c_.size(); ++i) r.c_[k + i] -= f * d.c_[i];
        r.trim();
    }
    return {Poly(std::move(q)), r};
}

Poly Poly::derivative() const {
    if (degree() < 1) return Poly();
    std::vector<mpq_class> out(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = mpq_class(static_cast<long>(i)) * c_[i];
    return Poly(std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Poly p = *this;
    mpq_class lead = p.c_.back();
    for (auto& c : p.c_) c /= lead;
    return p;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r).monic();
    }
    return a.monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    if (f.degree() < 1) return out;
    Poly fm = f.monic();
    Poly d = poly_gcd(fm, fm.derivative());
    if (d.degree() == 0) {
        out.emplace_back(fm, 1);
        return out;
    }
    Poly b = fm.divmod(d).first;
    Poly c = fm.derivative().divmod(d).first;
    Poly w = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly a = poly_gcd(b, w);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = b.divmod(a).first;
        c = w.divmod(a).first;
        w = c - b.derivative();
        ++i;
    }
    return out;
}

namespace {

/// True when q is the square of a rational, returned through root.
bool rational_square_root(const mpq_class& q, mpq_class& root) {
    if (q < 0) return false;
    if (q == 0) {
        root = 0;
        return true;
    }
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) ||
        !mpz_perfect_square_p(q.get_den().get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), q.get_den().get_mpz_t());
    root = mpq_class(rn) / mpq_class(rd);
    return true;
}

}  // namespace

RootReport find_roots(const Poly& f) {
    RootReport report;
    if (f.degree() < 1) return report;
    for (const auto& [factor, mult] : squarefree_decomposition(f)) {
        Poly g = factor;
        // peel linear factors found through the quadratic formula route below;
        // squarefree factors of our pencil polynomials have degree <= 2, higher
        // degrees only arise from spurious minor content and are reported as-is
        if (g.degree() == 1) {
            report.rational.emplace_back(-g.coeff(0) / g.coeff(1), mult);
            continue;
        }
        if (g.degree() == 2) {
            const mpq_class a = g.coeff(2), b = g.coeff(1), c = g.coeff(0);
            mpq_class disc = b * b - 4 * a * c;
            mpq_class root;
            if (rational_square_root(disc, root)) {
                report.rational.emplace_back((-b + root) / (2 * a), mult);
                if (root != 0) report.rational.emplace_back((-b - root) / (2 * a), mult);
                continue;
            }
            // disc = (p/q): sqrt(disc) = sqrt(p q)/q
            mpz_class scale(1);
            long d = reduce_discriminant(disc.get_num() * disc.get_den(), scale);
            Scalar sq = Scalar(mpq_class(scale) / mpq_class(disc.get_den()), 0, 0) *
                        Scalar::sqrt_of(d);
            Scalar inv2a = Scalar(mpq_class(1) / (2 * a));
            RootReport::QuadPair pair;
            pair.first = (Scalar(-b) + sq) * inv2a;
            pair.second = (Scalar(-b) - sq) * inv2a;
            pair.disc = d;
            pair.mult = mult;
            report.quadratic.push_back(std::move(pair));
            continue;
        }
        report.unresolved_degree += g.degree() * mult;
    }
    return report;
}

Poly lagrange_interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("lagrange_interpolate: size mismatch");
    Poly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        Poly basis = Poly::constant(1);
        mpq_class denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * Poly(std::vector<mpq_class>{-xs[j], 1});
            denom *= xs[i] - xs[j];
        }
        acc += basis * Poly::constant(ys[i] / denom);
    }
    return acc;
}

}  // namespace spinorlab
