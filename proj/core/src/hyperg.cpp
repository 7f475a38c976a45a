#include "klein/hyperg.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace klein {

std::string HGParams::str() const { return "(" + a.str() + ", " + b.str() + "; " + c.str() + ")"; }

std::string ExponentTriple::str() const { return "(" + e0.str() + ", " + e1.str() + ", " + einf.str() + ")"; }

ExponentTriple ExponentTriple::parse(std::string_view text) {
    ExponentTriple e;
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t end = text.find(',', start);
        if (i < 2 && end == std::string_view::npos)
            throw std::invalid_argument("expected three comma-separated exponents, got '" + std::string(text) + "'");
        if (i == 2 && end != std::string_view::npos)
            throw std::invalid_argument("unexpected ',' at position " + std::to_string(end) + " in '" +
                                        std::string(text) + "'");
        auto part = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        try {
            e[i] = Rational::parse(part);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed fraction '" + std::string(part) + "' at position " +
                                        std::to_string(start) + " in '" + std::string(text) + "'");
        }
        start = end + 1;
    }
    return e;
}

bool is_nonpositive_integer(const Rational& r) { return r.is_integer() && r.sign() <= 0; }

HGParams params_from_exponents(const ExponentTriple& e) {
    Rational half(1, 2);
    HGParams p{(Rational(1) - e.e0 - e.e1 - e.einf) * half, (Rational(1) - e.e0 - e.e1 + e.einf) * half,
               Rational(1) - e.e0};
    if (is_nonpositive_integer(p.c))
        throw std::domain_error("c = " + p.c.str() + " is a non-positive integer");
    return p;
}

ExponentTriple exponents_from_params(const HGParams& p) {
    return {Rational(1) - p.c, p.c - p.a - p.b, p.b - p.a};
}

std::pair<HGParams, Rational> euler_transform(const HGParams& p) {
    return {{p.c - p.a, p.c - p.b, p.c}, p.c - p.a - p.b};
}

namespace {

RatFunc X_() { return RatFunc::variable(Var::X); }

// One unit step: F_next = s0 * F + s1 * F' for the current parameters.
bool unit_step(const HGParams& p, char which, int dir, HGParams& next, RatFunc& s0, RatFunc& s1) {
    RatFunc X = X_();
    const Rational &a = p.a, &b = p.b, &c = p.c;
    next = p;
    switch (which) {
        case 'a':
        case 'b': {
            const Rational& u = which == 'a' ? a : b;
            const Rational& v = which == 'a' ? b : a;
            if (dir > 0) {
                if (u.is_zero()) return false;
                s0 = RatFunc(1);
                s1 = X * RatFunc(u.inverse());
                (which == 'a' ? next.a : next.b) += Rational(1);
            } else {
                if (c == u) return false;
                Rational k = (c - u).inverse();
                s0 = (RatFunc(c - u) - RatFunc(v) * X) * RatFunc(k);
                s1 = X * (RatFunc(1) - X) * RatFunc(k);
                (which == 'a' ? next.a : next.b) -= Rational(1);
            }
            return true;
        }
        case 'c': {
            if (dir > 0) {
                if (c == a || c == b) return false;
                Rational k = c / ((c - a) * (c - b));
                s0 = RatFunc((c - a - b) * k);
                s1 = (RatFunc(1) - X) * RatFunc(k);
                next.c += Rational(1);
            } else {
                if (c.is_one()) return false;
                s0 = RatFunc(1);
                s1 = X * RatFunc((c - Rational(1)).inverse());
                next.c -= Rational(1);
            }
            return !is_nonpositive_integer(next.c);
        }
    }
    return false;
}

bool walk(const HGParams& target, const HGParams& base, const std::array<char, 3>& order, ContiguousRelation& out,
          std::string& failed_at) {
    RatFunc X = X_();
    RatFunc q = X * (RatFunc(1) - X);
    RatFunc ab(base.a * base.b);
    RatFunc pcoef = (RatFunc(base.c) - RatFunc(base.a + base.b + Rational(1)) * X) / q;
    RatFunc abq = ab / q;
    RatFunc r0(1), r1(0);
    HGParams cur = base;
    std::string path;
    for (char which : order) {
        auto get = [&](const HGParams& p) -> const Rational& {
            return which == 'a' ? p.a : (which == 'b' ? p.b : p.c);
        };
        while (get(cur) != get(target)) {
            int dir = get(target) > get(cur) ? 1 : -1;
            HGParams next;
            RatFunc s0, s1;
            if (!unit_step(cur, which, dir, next, s0, s1)) {
                failed_at = path + (path.empty() ? "" : " ") + which + (dir > 0 ? "+" : "-") + " at " + cur.str();
                return false;
            }
            // derivative of r0 F + r1 F' in the base basis
            RatFunc d0 = r0.derivative(Var::X) + r1 * abq;
            RatFunc d1 = r0 + r1.derivative(Var::X) - r1 * pcoef;
            RatFunc n0 = s0 * r0 + s1 * d0;
            RatFunc n1 = s0 * r1 + s1 * d1;
            r0 = std::move(n0);
            r1 = std::move(n1);
            cur = next;
            if (!path.empty()) path += ' ';
            path += which;
            path += dir > 0 ? '+' : '-';
        }
    }
    out = {r0, r1, path};
    return true;
}

}  // namespace

ContiguousRelation contiguous_express(const HGParams& target, const HGParams& base) {
    if (!(target.a - base.a).is_integer() || !(target.b - base.b).is_integer() || !(target.c - base.c).is_integer())
        throw std::domain_error("parameters " + target.str() + " and " + base.str() + " are not contiguous");
    if (is_nonpositive_integer(base.c) || is_nonpositive_integer(target.c))
        throw std::domain_error("c is a non-positive integer");
    std::array<std::array<char, 3>, 6> orders = {{{'c', 'a', 'b'},
                                                  {'c', 'b', 'a'},
                                                  {'a', 'c', 'b'},
                                                  {'b', 'c', 'a'},
                                                  {'a', 'b', 'c'},
                                                  {'b', 'a', 'c'}}};
    std::string first_failure;
    for (const auto& ord : orders) {
        ContiguousRelation rel;
        std::string failed;
        if (walk(target, base, ord, rel, failed)) return rel;
        if (first_failure.empty()) first_failure = failed;
    }
    throw std::domain_error("degenerate contiguous path from " + base.str() + " to " + target.str() + ": " +
                            first_failure);
}

RatSeries series_2f1(const HGParams& p, std::size_t order) {
    if (is_nonpositive_integer(p.c)) throw std::domain_error("2F1 undefined: c = " + p.c.str());
    RatSeries s(order);
    Rational term(1);
    for (std::size_t k = 0; k < order; ++k) {
        s[k] = term;
        Rational kk(static_cast<long>(k));
        term *= (p.a + kk) * (p.b + kk) / ((p.c + kk) * (kk + Rational(1)));
    }
    return s;
}

RatSeries series_2f1_at(const HGParams& p, const RatSeries& g) {
    return series_2f1(p, g.order()).compose(g);
}

RatFunc schwarzian_data(const ExponentTriple& e, Var v) {
    RatFunc X = RatFunc::variable(v);
    RatFunc one(1);
    RatFunc p = RatFunc(Rational(1) - e.e0) / X + RatFunc(Rational(1) - e.e1) / (X - one);
    Rational s = Rational(1) - e.e0 - e.e1;
    RatFunc q = RatFunc((s * s - e.einf * e.einf) / Rational(4)) / (X * (X - one));
    return RatFunc(2) * q - p.derivative(v) - p * p / RatFunc(2);
}

RatSeries series_of(const MultiPoly& p, Var v, std::size_t order) {
    RatSeries s(order);
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = 0; i < kNumVars; ++i)
            if (m.e[i] && static_cast<Var>(i) != v)
                throw std::domain_error("series_of: polynomial has other symbols");
        unsigned k = m[v];
        if (k < order) s[k] += c;
    }
    return s;
}

RatSeries series_of(const RatFunc& r, Var v, std::size_t order) {
    RatSeries d = series_of(r.den(), v, order);
    if (d[0].is_zero()) throw std::domain_error("series_of: pole at 0");
    return series_of(r.num(), v, order) * d.inverse();
}

}  // namespace klein
