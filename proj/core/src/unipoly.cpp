#include "spinorlab/unipoly.hpp"

#include <stdexcept>

namespace spinorlab {

void UniPolySpinor::set_coeff(IndexMask m, Poly p) {
    if (m > full_mask(n_)) throw std::invalid_argument("UniPolySpinor: index set out of range");
    if (p.is_zero())
        terms_.erase(m);
    else
        terms_[m] = std::move(p);
}

void UniPolySpinor::add_coeff(IndexMask m, const Poly& p) {
    if (p.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, p);
    if (!fresh) {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UniPolySpinor UniPolySpinor::constant(const Spinor& s) {
    UniPolySpinor f(s.n());
    for (const auto& [m, c] : s.terms()) {
        if (!c.is_rational())
            throw unsupported_field_error("UniPolySpinor: rational coefficients required");
        f.set_coeff(m, Poly::constant(c.rat()));
    }
    return f;
}

UniPolySpinor UniPolySpinor::times_t() const {
    UniPolySpinor out(n_);
    for (const auto& [m, p] : terms_) out.set_coeff(m, p * Poly::term(1, 1));
    return out;
}

UniPolySpinor operator+(UniPolySpinor l, const UniPolySpinor& r) {
    if (l.n_ != r.n_) throw std::invalid_argument("UniPolySpinor: dimension mismatch");
    for (const auto& [m, p] : r.terms_) l.add_coeff(m, p);
    return l;
}

Spinor poly_eval(const UniPolySpinor& f, const Scalar& t) {
    Spinor out(f.n());
    for (const auto& [m, p] : f.terms()) out.set_coeff(m, p.eval(t));
    return out;
}

UniPolySpinor poly_divide_t(const UniPolySpinor& f) {
    UniPolySpinor out(f.n());
    for (const auto& [m, p] : f.terms()) {
        if (p.coeff(0) != 0)
            throw std::domain_error("poly_divide_t: nonzero constant term at a coefficient");
        std::vector<mpq_class> shifted(p.coeffs().begin() + 1, p.coeffs().end());
        out.set_coeff(m, Poly(std::move(shifted)));
    }
    return out;
}

}  // namespace spinorlab
