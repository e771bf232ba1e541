#include "spinorlab/scalar.hpp"

#include <ostream>
#include <sstream>

namespace spinorlab {

Scalar::Scalar(long num, long den) : a_(num, den), d_(0) {
    if (den == 0) throw std::invalid_argument("Scalar: zero denominator");
    a_.canonicalize();
}

Scalar::Scalar(mpq_class a, mpq_class b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    a_.canonicalize();
    b_.canonicalize();
    reduce();
}

void Scalar::reduce() {
    if (b_ == 0) {
        d_ = 0;
        return;
    }
    if (d_ == 0) throw std::invalid_argument("Scalar: sqrt(0) coordinate must vanish");
    mpz_class dd(d_);
    if (d_ > 0 && mpz_perfect_square_p(dd.get_mpz_t())) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), dd.get_mpz_t());
        a_ += b_ * root;
        b_ = 0;
        d_ = 0;
    }
}

long Scalar::merge_disc(const Scalar& l, const Scalar& r) {
    if (l.b_ == 0) return r.d_;
    if (r.b_ == 0) return l.d_;
    if (l.d_ != r.d_)
        throw unsupported_field_error("Scalar: mixing sqrt(" + std::to_string(l.d_) +
                                      ") with sqrt(" + std::to_string(r.d_) + ")");
    return l.d_;
}

Scalar Scalar::sqrt_of(long d) { return Scalar(mpq_class(0), mpq_class(1), d); }

Scalar Scalar::conj() const { return Scalar(a_, -b_, d_); }

mpq_class Scalar::field_norm() const { return a_ * a_ - mpq_class(d_) * b_ * b_; }

Scalar Scalar::operator-() const { return Scalar(-a_, -b_, d_); }

Scalar& Scalar::operator+=(const Scalar& o) {
    d_ = merge_disc(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    if (b_ == 0) d_ = 0;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    d_ = merge_disc(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    if (b_ == 0) d_ = 0;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (b_ == 0 && o.b_ == 0) {
        a_ *= o.a_;
        return *this;
    }
    long d = merge_disc(*this, o);
    mpq_class a = a_ * o.a_ + mpq_class(d) * b_ * o.b_;
    mpq_class b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = (b_ == 0) ? 0 : d;
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    if (b_ == 0) return Scalar(mpq_class(1) / a_);
    mpq_class n = field_norm();
    if (n == 0) throw std::domain_error("Scalar: non-invertible extension element");
    return Scalar(a_ / n, -b_ / n, d_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.b_ == 0) {
        if (o.a_ == 0) throw std::domain_error("Scalar: division by zero");
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    return *this *= o.inverse();
}

bool operator<(const Scalar& l, const Scalar& r) {
    int c = cmp(l.a_, r.a_);
    if (c != 0) return c < 0;
    return cmp(l.b_, r.b_) < 0;
}

std::string Scalar::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    if (s.ext() == 0) return os << s.rat();
    if (s.rat() != 0) os << s.rat() << (s.ext() > 0 ? "+" : "");
    if (s.ext() == 1)
        ;
    else if (s.ext() == -1)
        os << "-";
    else
        os << s.ext() << "*";
    return os << "sqrt(" << s.disc() << ")";
}

namespace {

mpq_class parse_rational(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (!t.empty() && t.front() == '+') t.erase(t.begin());
    if (t.empty()) throw std::invalid_argument("Scalar: empty rational literal");
    mpq_class v;
    if (v.set_str(t, 10) != 0) throw std::invalid_argument("Scalar: bad rational '" + text + "'");
    if (v.get_den() == 0) throw std::invalid_argument("Scalar: zero denominator in '" + text + "'");
    v.canonicalize();
    return v;
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
    auto sq = text.find("sqrt(");
    if (sq == std::string::npos) return Scalar(parse_rational(text));
    auto close = text.find(')', sq);
    if (close == std::string::npos) throw std::invalid_argument("Scalar: bad literal '" + text + "'");
    long d = std::stol(text.substr(sq + 5, close - sq - 5));
    std::string head = text.substr(0, sq);
    if (!head.empty() && head.back() == '*') head.pop_back();
    // split head into rational part and sqrt coefficient at the last +/- that
    // is not a leading sign or part of a denominator
    std::string a = "0", b;
    if (head.empty()) {
        b = "1";
    } else {
        size_t split = std::string::npos;
        for (size_t i = head.size(); i-- > 1;) {
            if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' && head[i - 1] != '+' &&
                head[i - 1] != '-') {
                split = i;
                break;
            }
        }
        if (split == std::string::npos) {
            b = head;
        } else {
            a = head.substr(0, split);
            b = head.substr(split);
        }
        if (b.empty() || b == "+") b = "1";
        if (b == "-") b = "-1";
    }
    return Scalar(parse_rational(a), parse_rational(b), d);
}

long reduce_discriminant(const mpz_class& d, mpz_class& scale) {
    if (d == 0) throw std::invalid_argument("reduce_discriminant: zero discriminant");
    mpz_class m = abs(d);
    // strip small square factors; bounded so huge semiprime squares may survive,
    // which only affects canonical form, never exactness
    for (long p = 2; p <= 9973 && m > 1; p = (p == 2 ? 3 : p + 2)) {
        mpz_class p2 = mpz_class(p) * p;
        while (mpz_divisible_p(m.get_mpz_t(), p2.get_mpz_t())) {
            m /= p2;
            scale *= p;
        }
    }
    if (mpz_perfect_square_p(m.get_mpz_t())) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
        scale *= root;
        m = 1;
    }
    if (d < 0) m = -m;
    if (!m.fits_slong_p())
        throw unsupported_field_error("reduce_discriminant: discriminant out of range");
    return m.get_si();
}

}  // namespace spinorlab
