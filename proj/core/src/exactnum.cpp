#include "klein/exactnum.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace klein {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class parse_int(std::string_view s, std::string_view whole) {
    s = trim(s);
    std::string t(s);
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    bool ok = !t.empty();
    for (size_t i = 0; i < t.size() && ok; ++i) {
        char c = t[i];
        if (!(std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && c == '-' && t.size() > 1)))
            ok = false;
    }
    if (!ok) throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    return mpz_class(t);
}

bool is_squarefree_positive(long d) {
    if (d <= 1) return false;
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

}  // namespace

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational rational_normalize(const mpz_class& n, const mpz_class& d) { return Rational(n, d); }

Rational Rational::parse(std::string_view s) {
    auto t = trim(s);
    auto slash = t.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(t, s));
    auto n = parse_int(t.substr(0, slash), s);
    auto d = parse_int(t.substr(slash + 1), s);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    Rational r;
    r.v_ = mpq_class(n, d);
    return r;
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

bool exact_root(const mpz_class& n, unsigned long k, mpz_class& out) {
    if (k == 0) return false;
    if (n < 0) {
        if (k % 2 == 0) return false;
        mpz_class m = -n;
        if (!exact_root(m, k, out)) return false;
        out = -out;
        return true;
    }
    return mpz_root(out.get_mpz_t(), n.get_mpz_t(), k) != 0;
}

bool exact_root(const Rational& r, unsigned long k, Rational& out) {
    mpz_class n, d;
    if (!exact_root(r.num(), k, n) || !exact_root(r.den(), k, d)) return false;
    out = Rational(n, d);
    return true;
}

QuadExt::QuadExt(const Rational& a, const Rational& b, long d) : a_(a), b_(b), d_(d) {
    if (!b_.is_zero() && !is_squarefree_positive(d))
        throw std::domain_error("quadratic extension needs a square-free d > 1");
    if (b_.is_zero() && d != 0 && !is_squarefree_positive(d))
        throw std::domain_error("quadratic extension needs a square-free d > 1");
}

long QuadExt::join(const QuadExt& o) const {
    if (d_ == 0) return o.d_;
    if (o.d_ == 0 || o.d_ == d_) return d_;
    throw std::domain_error("mismatched discriminants " + std::to_string(d_) + " and " +
                            std::to_string(o.d_));
}

QuadExt QuadExt::parse(std::string_view s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    auto pos = t.find("*sqrt(");
    if (pos == std::string::npos) return QuadExt(Rational::parse(t));
    if (t.back() != ')') throw std::invalid_argument("malformed quadratic number '" + std::string(s) + "'");
    long d = std::stol(t.substr(pos + 6, t.size() - pos - 7));
    std::string head = t.substr(0, pos);
    // split head into rational part and signed radical coefficient
    size_t split = std::string::npos;
    for (size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
            split = i;
            break;
        }
    }
    Rational a, b;
    if (split == std::string::npos) {
        b = Rational::parse(head);
    } else {
        a = Rational::parse(head.substr(0, split));
        b = Rational::parse(head.substr(split));
    }
    return QuadExt(a, b, d);
}

QuadExt QuadExt::conjugate() const {
    QuadExt r = *this;
    r.b_ = -b_;
    return r;
}

Rational QuadExt::norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

QuadExt QuadExt::inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw std::domain_error("inverse of zero");
    QuadExt r;
    r.a_ = a_ / n;
    r.b_ = -b_ / n;
    r.d_ = d_;
    return r;
}

QuadExt QuadExt::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QuadExt result(1), base = *this;
    result.d_ = d_;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

QuadExt QuadExt::operator-() const {
    QuadExt r = *this;
    r.a_ = -a_;
    r.b_ = -b_;
    return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    d_ = join(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    d_ = join(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    long d = join(o);
    Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    d_ = d;
    return *this;
}

bool operator==(const QuadExt& a, const QuadExt& b) {
    if (a.b_.is_zero() && b.b_.is_zero()) return a.a_ == b.a_;
    return a.d_ == b.d_ && a.a_ == b.a_ && a.b_ == b.b_;
}

std::string QuadExt::str() const {
    if (b_.is_zero()) return a_.str();
    std::string r = a_.str();
    r += b_.sign() < 0 ? "" : "+";
    r += b_.str() + "*sqrt(" + std::to_string(d_) + ")";
    return r;
}

std::string QuadExt::pretty() const {
    if (b_.is_zero()) return a_.str();
    std::string r = a_.str();
    r += b_.sign() < 0 ? " - " : " + ";
    r += b_.abs().str() + "*sqrt(" + std::to_string(d_) + ")";
    return r;
}

QuadExt quad_mul(const QuadExt& u, const QuadExt& v) { return u * v; }
QuadExt quad_conjugate(const QuadExt& u) { return u.conjugate(); }

std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.str(); }

}  // namespace klein
