#include "klein/schwarz.hpp"

#include <algorithm>
#include <stdexcept>

namespace klein {

std::string group_name(Group g) {
    switch (g) {
        case Group::Tetrahedral: return "tetrahedral";
        case Group::Octahedral: return "octahedral";
        case Group::Icosahedral: return "icosahedral";
    }
    return "?";
}

namespace {

ExponentTriple T(long a, long b, long c, long d, long e, long f) {
    return {Rational(a, b), Rational(c, d), Rational(e, f)};
}

std::vector<SchwarzType> build_types() {
    std::vector<SchwarzType> t = {
        {Group::Tetrahedral, T(1, 3, 1, 2, 1, 3), 3, 0, "(1/2,1/3,1/3)"},
        {Group::Tetrahedral, T(1, 3, 1, 3, 2, 3), 3, 1, "(1/3,1/3,2/3)"},
        {Group::Octahedral, T(1, 4, 1, 2, 1, 3), 4, 2, "(1/2,1/3,1/4)"},
        {Group::Octahedral, T(1, 4, 1, 4, 2, 3), 4, 3, "(2/3,1/4,1/4)"},
        {Group::Icosahedral, T(1, 5, 1, 2, 1, 3), 5, 4, "(1/2,1/3,1/5)"},
        {Group::Icosahedral, T(2, 5, 1, 2, 1, 3), 5, 5, "(1/2,1/3,2/5)"},
        {Group::Icosahedral, T(1, 5, 1, 2, 2, 5), 5, 6, "(1/2,1/5,2/5)"},
        {Group::Icosahedral, T(2, 5, 1, 3, 1, 3), 5, 7, "(1/3,1/3,2/5)"},
        {Group::Icosahedral, T(1, 5, 1, 3, 2, 3), 5, 8, "(1/3,2/3,1/5)"},
        {Group::Icosahedral, T(1, 5, 2, 3, 1, 5), 5, 9, "(2/3,1/5,1/5)"},
        {Group::Icosahedral, T(2, 5, 1, 3, 3, 5), 5, 10, "(1/3,2/5,3/5)"},
        {Group::Icosahedral, T(1, 5, 1, 3, 3, 5), 5, 11, "(1/3,1/5,3/5)"},
        {Group::Icosahedral, T(1, 5, 1, 5, 4, 5), 5, 12, "(1/5,1/5,4/5)"},
        {Group::Icosahedral, T(2, 5, 2, 5, 2, 5), 5, 13, "(2/5,2/5,2/5)"},
    };
    return t;
}

bool is_half_integer(const Rational& r) { return r.den() == 2; }

}  // namespace

const std::vector<SchwarzType>& schwarz_types() {
    static const std::vector<SchwarzType> types = build_types();
    return types;
}

bool in_contiguity_orbit(const ExponentTriple& e, const ExponentTriple& r) {
    bool parity_free = false;
    long parity = 0;
    for (int i = 0; i < 3; ++i) {
        Rational plus = e[i] - r[i], minus = e[i] + r[i];
        bool p = plus.is_integer(), m = minus.is_integer();
        if (!p && !m) return false;
        if (p && m) {
            parity_free = true;
            continue;
        }
        Rational k = p ? plus : minus;
        parity += mpz_class(k.num() % 2) == 0 ? 0 : 1;
    }
    return parity_free || parity % 2 == 0;
}

namespace {

std::vector<std::array<int, 3>> permutations3() {
    std::array<int, 3> p = {0, 1, 2};
    std::vector<std::array<int, 3>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

ExponentTriple permuted(const ExponentTriple& e, const std::array<int, 3>& p) { return {e[p[0]], e[p[1]], e[p[2]]}; }

}  // namespace

Classification classify(const ExponentTriple& e) {
    Classification c;
    int halves = 0;
    for (int i = 0; i < 3; ++i) {
        if (e[i].is_integer()) {
            c.rejection = Rejection::Cyclic;
            c.reason = "cyclic: out of scope";
            return c;
        }
        if (is_half_integer(e[i])) ++halves;
    }
    if (halves >= 2) {
        c.rejection = Rejection::Dihedral;
        c.reason = "dihedral: out of scope";
        return c;
    }
    for (const auto& t : schwarz_types())
        for (const auto& p : permutations3())
            if (in_contiguity_orbit(permuted(e, p), t.representative)) {
                c.type = t;
                return c;
            }
    c.rejection = Rejection::NotAlgebraic;
    c.reason = "not algebraic: no finite Schwarz type";
    return c;
}

unsigned covering_degree(const ExponentTriple& e, int m) {
    if (m < 3 || m > 5) throw std::domain_error("covering degree needs m in {3,4,5}");
    Rational d = Rational(6L * m, 6L - m) * (e.e0.abs() + e.e1.abs() + e.einf.abs() - Rational(1));
    if (!d.is_integer() || d.sign() <= 0)
        throw std::domain_error("classification inconsistency: covering degree " + d.str());
    return static_cast<unsigned>(d.num().get_ui());
}

RatFunc standard_invariant(int m) {
    const char* text = nullptr;
    switch (m) {
        case 3: text = "s^3*(s^3+4)^3/(4*(2*s^3-1)^3)"; break;
        case 4: text = "108*s^4*(s^4-1)^4/(s^8+14*s^4+1)^3"; break;
        case 5: text = "1728*s^5*(s^10-11*s^5-1)^5/(s^20+228*s^15+494*s^10-228*s^5+1)^3"; break;
        default: throw std::domain_error("standard invariant needs m in {3,4,5}");
    }
    return RatFunc::parse(text);
}

RatFunc invariant_in_z(int m, bool reciprocal) {
    RatFunc S = standard_invariant(m);
    auto collapse = [m](const MultiPoly& p) {
        MultiPoly r;
        for (const auto& [mono, c] : p.terms()) {
            unsigned k = mono[Var::s];
            if (k % m) throw std::logic_error("invariant is not a polynomial in s^m");
            Monomial mm = mono;
            mm.at(Var::s) = 0;
            mm.at(Var::z) = static_cast<std::uint16_t>(k / m);
            r += MultiPoly::monomial(mm, c);
        }
        return r;
    };
    RatFunc Sz(collapse(S.num()), collapse(S.den()));
    if (!reciprocal) return Sz;
    return substitute(Sz, {{Var::z, RatFunc::variable(Var::z).inverse()}});
}

std::string zpoint_name(ZPoint p) {
    switch (p) {
        case ZPoint::Zero: return "0";
        case ZPoint::One: return "1";
        case ZPoint::Infinity: return "inf";
        case ZPoint::ZeroOrInfinity: return "0|inf";
    }
    return "?";
}

PointAssignment assign_points(const ExponentTriple& e, const SchwarzType& t) {
    ExponentTriple a{e.e0.abs(), e.e1.abs(), e.einf.abs()};
    std::optional<ExponentTriple> best;
    auto score = [](const ExponentTriple& c) {
        return std::make_pair(is_half_integer(c.e1) ? 0 : 1, c.e0 == c.e1 ? 0 : 1);
    };
    auto less = [](const ExponentTriple& x, const ExponentTriple& y) {
        for (int i = 0; i < 3; ++i)
            if (x[i] != y[i]) return x[i] < y[i];
        return false;
    };
    for (const auto& p : permutations3()) {
        ExponentTriple c = permuted(a, p);
        if (!in_contiguity_orbit(c, t.representative)) continue;
        if (!best || score(c) < score(*best) || (score(c) == score(*best) && less(c, *best))) best = c;
    }
    if (!best) throw std::domain_error("classification inconsistency: no point assignment for " + e.str());
    PointAssignment pa;
    pa.exponents = *best;
    for (int i = 0; i < 3; ++i) {
        const Rational& x = pa.exponents[i];
        long d = x.den().get_si();
        if (d == 2)
            pa.fiber[i] = ZPoint::One;
        else if (d == t.m && t.m != 3)
            pa.fiber[i] = ZPoint::Zero;
        else if (d == 3 && t.m != 3)
            pa.fiber[i] = ZPoint::Infinity;
        else if (i == 0)
            pa.fiber[i] = ZPoint::Zero;
        else
            pa.fiber[i] = ZPoint::ZeroOrInfinity;
    }
    return pa;
}

}  // namespace klein
