#pragma once

#include "klein/exactnum.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace klein {

namespace detail {

// c^e for a scalar c and rational e; throws when no exact value exists.
inline Rational scalar_power(const Rational& c, const Rational& e) {
    if (e.is_integer()) return c.pow(e.num().get_si());
    Rational root;
    if (!exact_root(c, e.den().get_ui(), root))
        throw std::domain_error("no exact " + e.str() + " power of " + c.str());
    return root.pow(e.num().get_si());
}

inline QuadExt scalar_power(const QuadExt& c, const Rational& e) {
    if (e.is_integer()) return c.pow(e.num().get_si());
    if (!c.is_rational()) throw std::domain_error("fractional power of an irrational scalar");
    return QuadExt(scalar_power(c.rational_part(), e));
}

}  // namespace detail

// Truncated power series sum_{k<order} c_k t^(k + offset).  The offset only
// tracks a leading fractional power; arithmetic between series requires equal
// offsets for addition and adds them for multiplication.
template <class K>
class TruncSeries {
public:
    TruncSeries() = default;
    explicit TruncSeries(std::size_t order, K c0 = K(0)) : c_(order, K(0)) {
        if (order) c_[0] = c0;
    }
    TruncSeries(std::vector<K> coeffs, Rational offset = Rational(0))
        : c_(std::move(coeffs)), offset_(offset) {}

    static TruncSeries variable(std::size_t order) {
        TruncSeries r(order);
        if (order > 1) r.c_[1] = K(1);
        return r;
    }

    std::size_t order() const { return c_.size(); }
    const std::vector<K>& coeffs() const { return c_; }
    const Rational& offset() const { return offset_; }
    void set_offset(const Rational& o) { offset_ = o; }
    const K& operator[](std::size_t k) const { return c_[k]; }
    K& operator[](std::size_t k) { return c_[k]; }

    // Index of the first nonzero coefficient, or order() if all vanish.
    std::size_t valuation() const {
        std::size_t k = 0;
        while (k < c_.size() && c_[k] == K(0)) ++k;
        return k;
    }

    TruncSeries truncated(std::size_t n) const {
        TruncSeries r = *this;
        r.c_.resize(n, K(0));
        return r;
    }

    // Multiply by t^k (k may be negative when the low coefficients vanish);
    // the order is preserved.
    TruncSeries shifted(long k) const {
        TruncSeries r(c_.size());
        r.offset_ = offset_;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            long j = static_cast<long>(i) + k;
            if (j < 0) {
                if (!(c_[i] == K(0))) throw std::domain_error("series shift drops a nonzero term");
                continue;
            }
            if (static_cast<std::size_t>(j) < c_.size()) r.c_[j] = c_[i];
        }
        return r;
    }

    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        check_compatible(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        check_compatible(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    TruncSeries& operator*=(const K& s) {
        for (auto& v : c_) v *= s;
        return *this;
    }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const K& s) { return a *= s; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        std::size_t n = std::min(a.c_.size(), b.c_.size());
        TruncSeries r(n);
        r.offset_ = a.offset_ + b.offset_;
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == K(0)) continue;
            for (std::size_t j = 0; i + j < n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.offset_ == b.offset_ && a.c_ == b.c_;
    }

    TruncSeries inverse() const {
        if (c_.empty() || c_[0] == K(0)) throw std::domain_error("series inverse needs a unit constant term");
        std::size_t n = c_.size();
        TruncSeries r(n);
        r.offset_ = -offset_;
        K inv0 = K(1) / c_[0];
        r.c_[0] = inv0;
        for (std::size_t m = 1; m < n; ++m) {
            K s(0);
            for (std::size_t k = 1; k <= m; ++k) s += c_[k] * r.c_[m - k];
            r.c_[m] = -s * inv0;
        }
        return r;
    }

    // Power with rational exponent.  The constant term must be nonzero and
    // have an exact e-th power; the result uses that principal value.
    TruncSeries pow(const Rational& e) const {
        if (c_.empty() || c_[0] == K(0)) throw std::domain_error("series power needs a nonzero constant term");
        std::size_t n = c_.size();
        TruncSeries r(n);
        r.offset_ = offset_ * e;
        r.c_[0] = detail::scalar_power(c_[0], e);
        K inv0 = K(1) / c_[0];
        K ee(e);
        for (std::size_t m = 1; m < n; ++m) {
            K s(0);
            for (std::size_t k = 1; k <= m; ++k)
                s += (ee * K(static_cast<long>(k)) - K(static_cast<long>(m - k))) * c_[k] * r.c_[m - k];
            r.c_[m] = s * inv0 / K(static_cast<long>(m));
        }
        return r;
    }

    TruncSeries derivative() const {
        if (!offset_.is_zero()) throw std::domain_error("derivative of a series with fractional offset");
        std::size_t n = c_.size();
        TruncSeries r(n);
        for (std::size_t k = 1; k < n; ++k) r.c_[k - 1] = c_[k] * K(static_cast<long>(k));
        if (n) r.c_[n - 1] = K(0);
        return r;
    }

    // sum_k c_k g^k for g with zero constant term.
    TruncSeries compose(const TruncSeries& g) const {
        if (g.order() && !(g.c_[0] == K(0))) throw std::domain_error("composition needs g(0) = 0");
        std::size_t n = std::min(c_.size(), g.c_.size());
        TruncSeries r(n);
        for (std::size_t k = c_.size(); k-- > 0;) {
            r = r * g;
            r.c_[0] += c_[k];
        }
        return r;
    }

    std::string str() const {
        std::string s;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (k) s += ", ";
            s += c_[k].str();
        }
        return "[" + s + "]" + (offset_.is_zero() ? "" : " * t^(" + offset_.str() + ")");
    }

private:
    void check_compatible(const TruncSeries& o) const {
        if (o.c_.size() != c_.size() || !(o.offset_ == offset_))
            throw std::domain_error("incompatible series");
    }

    std::vector<K> c_;
    Rational offset_;
};

using RatSeries = TruncSeries<Rational>;

}  // namespace klein
