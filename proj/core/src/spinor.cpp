#include "spinorlab/spinor.hpp"

#include <sstream>
#include <stdexcept>

#include "spinorlab/matrix.hpp"

namespace spinorlab {

Vector::Vector(std::vector<Scalar> e, std::vector<Scalar> f) : e_(std::move(e)), f_(std::move(f)) {
    if (e_.size() != f_.size()) throw std::invalid_argument("Vector: e/f length mismatch");
}

Vector Vector::basis_e(int n, int i) {
    Vector v(n);
    v.e(i) = Scalar(1);
    return v;
}

Vector Vector::basis_f(int n, int i) {
    Vector v(n);
    v.f(i) = Scalar(1);
    return v;
}

std::vector<Vector> Vector::hyperbolic_basis(int n) {
    std::vector<Vector> basis;
    basis.reserve(2 * n);
    for (int i = 1; i <= n; ++i) basis.push_back(basis_e(n, i));
    for (int i = 1; i <= n; ++i) basis.push_back(basis_f(n, i));
    return basis;
}

bool Vector::is_zero() const {
    for (const auto& c : e_)
        if (!c.is_zero()) return false;
    for (const auto& c : f_)
        if (!c.is_zero()) return false;
    return true;
}

Scalar Vector::q() const {
    Scalar s;
    for (size_t k = 0; k < e_.size(); ++k) s += e_[k] * f_[k];
    return s;
}

Vector Vector::operator-() const {
    Vector v = *this;
    for (auto& c : v.e_) c = -c;
    for (auto& c : v.f_) c = -c;
    return v;
}

Vector& Vector::operator+=(const Vector& o) {
    if (n() != o.n()) throw std::invalid_argument("Vector: dimension mismatch");
    for (size_t k = 0; k < e_.size(); ++k) {
        e_[k] += o.e_[k];
        f_[k] += o.f_[k];
    }
    return *this;
}

Vector& Vector::operator-=(const Vector& o) { return *this += -o; }

Vector& Vector::operator*=(const Scalar& c) {
    for (auto& x : e_) x *= c;
    for (auto& x : f_) x *= c;
    return *this;
}

Scalar polar(const Vector& u, const Vector& v) {
    if (u.n() != v.n()) throw std::invalid_argument("polar: dimension mismatch");
    Scalar s;
    for (int k = 1; k <= u.n(); ++k) s += u.e(k) * v.f(k) + u.f(k) * v.e(k);
    return s;
}

Spinor Spinor::monomial(int n, IndexMask m, Scalar c) {
    Spinor s(n);
    s.set_coeff(m, std::move(c));
    return s;
}

Scalar Spinor::coeff(IndexMask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void Spinor::set_coeff(IndexMask m, Scalar c) {
    if (m > full_mask(n_)) throw std::invalid_argument("Spinor: index set out of range");
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_[m] = std::move(c);
}

void Spinor::add_coeff(IndexMask m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Spinor::pure_even() const {
    for (const auto& [m, c] : terms_)
        if (!set_even(m)) return false;
    return true;
}

bool Spinor::pure_odd() const {
    for (const auto& [m, c] : terms_)
        if (set_even(m)) return false;
    return true;
}

Spinor Spinor::operator-() const {
    Spinor s(n_);
    for (const auto& [m, c] : terms_) s.terms_[m] = -c;
    return s;
}

Spinor& Spinor::operator+=(const Spinor& o) {
    if (n_ != o.n_) throw std::invalid_argument("Spinor: dimension mismatch");
    for (const auto& [m, c] : o.terms_) add_coeff(m, c);
    return *this;
}

Spinor& Spinor::operator-=(const Spinor& o) { return *this += -o; }

Spinor& Spinor::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Spinor Spinor::normalized() const {
    if (terms_.empty()) return *this;
    Scalar lead = terms_.begin()->second;
    Spinor s = *this;
    s *= lead.inverse();
    return s;
}

std::string Spinor::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        if (m == 0) {
            os << "*1";
        } else {
            for (int i : set_indices(m)) os << "*e" << i;
        }
    }
    return os.str();
}

bool proportional(const Spinor& a, const Spinor& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.normalized() == b.normalized();
}

Spinor wedge(const Spinor& x, const Spinor& y) {
    if (x.n() != y.n()) throw std::invalid_argument("wedge: dimension mismatch");
    Spinor out(x.n());
    for (const auto& [mi, ci] : x.terms()) {
        for (const auto& [mj, cj] : y.terms()) {
            if (mi & mj) continue;
            Scalar c = ci * cj;
            if (shuffle_sign(mi, mj) < 0) c = -c;
            out.add_coeff(mi | mj, c);
        }
    }
    return out;
}

Spinor contract(int j, const Spinor& x) {
    if (j < 1 || j > x.n()) throw std::invalid_argument("contract: index out of range");
    Spinor out(x.n());
    for (const auto& [m, c] : x.terms()) {
        if (!set_contains(m, j)) continue;
        Scalar v = c;
        if (remove_sign(j, m) < 0) v = -v;
        out.add_coeff(m & ~(IndexMask{1} << (j - 1)), v);
    }
    return out;
}

Spinor clifford_apply(const Vector& v, const Spinor& x) {
    if (v.n() != x.n()) throw std::invalid_argument("clifford_apply: dimension mismatch");
    Spinor out(x.n());
    for (const auto& [m, c] : x.terms()) {
        for (int i = 1; i <= v.n(); ++i) {
            // wedge part: e_i ^ e_I
            if (!v.e(i).is_zero() && !set_contains(m, i)) {
                Scalar t = v.e(i) * c;
                if (insert_sign(i, m) < 0) t = -t;
                out.add_coeff(m | (IndexMask{1} << (i - 1)), t);
            }
            // contraction part: f_i -| e_I
            if (!v.f(i).is_zero() && set_contains(m, i)) {
                Scalar t = v.f(i) * c;
                if (remove_sign(i, m) < 0) t = -t;
                out.add_coeff(m & ~(IndexMask{1} << (i - 1)), t);
            }
        }
    }
    return out;
}

Scalar dual_pairing(const Spinor& f, const Spinor& x) {
    if (f.n() != x.n()) throw std::invalid_argument("dual_pairing: dimension mismatch");
    Scalar s;
    const auto& a = f.terms();
    const auto& b = x.terms();
    auto it = a.begin();
    auto jt = b.begin();
    while (it != a.end() && jt != b.end()) {
        if (it->first < jt->first)
            ++it;
        else if (jt->first < it->first)
            ++jt;
        else {
            s += it->second * jt->second;
            ++it;
            ++jt;
        }
    }
    return s;
}

Scalar monomial_scalar_product(const std::vector<Vector>& x, const std::vector<Vector>& y) {
    if (x.size() != y.size()) return Scalar();
    if (x.empty()) return Scalar(1);
    int k = static_cast<int>(x.size());
    Mat gram(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) gram.at(i, j) = polar(x[i], y[j]);
    return exact_det(gram);
}

}  // namespace spinorlab
