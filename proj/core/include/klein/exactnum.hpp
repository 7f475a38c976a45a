#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace klein {

// Exact rational number backed by GMP.  Always kept in lowest terms with a
// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    Rational(const mpz_class& n, const mpz_class& d);
    Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}

    // "p/q", "-5/12", "3"; whitespace around the tokens is allowed.
    static Rational parse(std::string_view s);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational inverse() const;
    Rational pow(long e) const;
    mpz_class floor() const;
    // Fractional part in [0,1).
    Rational frac() const { return *this - Rational(floor()); }

    // Canonical text: "p/q", with the "/q" omitted when q = 1.
    std::string str() const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational rational_normalize(const mpz_class& n, const mpz_class& d);

// Exact integer k-th root if it exists.
bool exact_root(const mpz_class& n, unsigned long k, mpz_class& out);
// Exact k-th root of a rational (both parts must be perfect powers).
bool exact_root(const Rational& r, unsigned long k, Rational& out);

// Element p + q*sqrt(d) of a real quadratic field.  d = 0 marks a value that
// has not been tied to any field yet (a plain rational); it adopts the
// discriminant of whatever it is combined with.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(const Rational& r) : a_(r) {}
    QuadExt(long n) : a_(n) {}
    QuadExt(const Rational& a, const Rational& b, long d);

    static QuadExt parse(std::string_view s);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    long discriminant() const { return d_; }
    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadExt conjugate() const;
    // u * conj(u), always rational.
    Rational norm() const;
    QuadExt inverse() const;
    QuadExt pow(long e) const;

    QuadExt operator-() const;
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

    friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
    friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
    friend QuadExt operator*(QuadExt a, const QuadExt& b) { return a *= b; }
    friend QuadExt operator/(QuadExt a, const QuadExt& b) { return a /= b; }
    friend bool operator==(const QuadExt& a, const QuadExt& b);

    // Canonical "p/q+r/s*sqrt(d)"; rationals render as "p/q".
    std::string str() const;
    // Spaced form used by the command line: "p/q + r/s*sqrt(5)".
    std::string pretty() const;

private:
    long join(const QuadExt& o) const;

    Rational a_;
    Rational b_;
    long d_ = 0;
};

QuadExt quad_mul(const QuadExt& u, const QuadExt& v);
QuadExt quad_conjugate(const QuadExt& u);

std::ostream& operator<<(std::ostream& os, const QuadExt& q);

}  // namespace klein
