#include "klein/darboux.hpp"

#include <doctest.h>

using namespace klein;

namespace {

using Coeffs = std::vector<Rational>;

// Series helpers kept separate from the library's TruncSeries.
Coeffs mul(const Coeffs& a, const Coeffs& b) {
    Coeffs r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Coeffs unit(std::size_t n) {
    Coeffs r(n);
    r[0] = Rational(1);
    return r;
}

// a^e for a(0) != 0 via the recurrence n a0 r_n = sum_k ((e+1)k - n) a_k r_{n-k}.
Coeffs power(const Coeffs& a, const Rational& e) {
    std::size_t n = a.size();
    Coeffs r(n);
    REQUIRE(exact_root(a[0].pow(e.num().get_si()), e.den().get_ui(), r[0]));
    for (std::size_t m = 1; m < n; ++m) {
        Rational s;
        for (std::size_t k = 1; k <= m; ++k)
            s += ((e + Rational(1)) * Rational(long(k)) - Rational(long(m))) * a[k] * r[m - k];
        r[m] = s / (Rational(long(m)) * a[0]);
    }
    return r;
}

struct Laurent {
    long v = 0;  // t-valuation
    Coeffs c;    // c[0] != 0 unless the series vanishes
};

Laurent normalize(Coeffs c) {
    Laurent l;
    std::size_t k = 0;
    while (k < c.size() && c[k].is_zero()) ++k;
    l.v = static_cast<long>(k);
    l.c.assign(c.size(), Rational(0));
    for (std::size_t i = k; i < c.size(); ++i) l.c[i - k] = c[i];
    return l;
}

// Polynomial in x (and xi) under x = t^2, xi = t*sqrt(q(t^2)/t^2).
struct Chart {
    std::size_t n;
    Coeffs x, xi;
    bool genus1;
    Coeffs eval(const MultiPoly& p) const {
        Coeffs r(n);
        for (const auto& [m, c] : p.terms()) {
            Coeffs term = unit(n);
            for (unsigned k = 0; k < m[Var::x]; ++k) term = mul(term, x);
            for (unsigned k = 0; k < m[Var::xi]; ++k) term = mul(term, xi);
            for (std::size_t i = 0; i < n; ++i) r[i] += c * term[i];
        }
        return r;
    }
};

Chart chart_for(const std::string& curve, std::size_t n) {
    Chart ch{n, Coeffs(n), Coeffs(n), curve != "P1"};
    if (!ch.genus1) {
        ch.x[1] = Rational(1);
        return ch;
    }
    MultiPoly q = MultiPoly::parse(curve.substr(curve.find('=') + 1));
    ch.x[2] = Rational(1);
    // q(t^2)/t^2 from the coefficients of q(x)/x
    Coeffs qx(n);
    auto qc = q.coefficients(Var::x);
    REQUIRE(qc[0].is_zero());
    for (std::size_t k = 1; k < qc.size() && 2 * (k - 1) < n; ++k) qx[2 * (k - 1)] = qc[k].constant_term();
    Coeffs root = power(qx, Rational(1, 2));
    for (std::size_t i = 0; i + 1 < n; ++i) ch.xi[i + 1] = root[i];
    return ch;
}

Laurent eval_ratfunc(const Chart& ch, const RatFunc& r) {
    Laurent a = normalize(ch.eval(r.num())), b = normalize(ch.eval(r.den()));
    Laurent out;
    out.v = a.v - b.v;
    out.c = mul(a.c, power(b.c, Rational(-1)));
    return out;
}

Coeffs direct_2f1(const HGParams& p, std::size_t n) {
    Coeffs out;
    for (std::size_t k = 0; k < n; ++k) {
        Rational t(1);
        for (std::size_t j = 0; j < k; ++j)
            t *= (p.a + Rational(long(j))) * (p.b + Rational(long(j))) /
                 ((p.c + Rational(long(j))) * Rational(long(j + 1)));
        out.push_back(t);
    }
    return out;
}

// Returns an empty string when the record holds to the given t-order.
std::string check_record(const ExportRecord& rec, std::size_t order) {
    std::size_t n = order + 8;
    Chart ch = chart_for(rec.curve, n);
    Laurent phi = eval_ratfunc(ch, RatFunc::parse(rec.covering));
    if (phi.v <= 0) return "covering does not vanish at the chart origin";
    Coeffs phis(n);
    for (std::size_t i = 0; i + phi.v < n; ++i) phis[i + phi.v] = phi.c[i];
    Coeffs F = direct_2f1(rec.params, n), lhs(n), pw = unit(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) lhs[i] += F[k] * pw[i];
        pw = mul(pw, phis);
    }
    Laurent rhs = eval_ratfunc(ch, RatFunc::parse(rec.rational));
    Rational offset(rhs.v);
    for (const auto& [base, e] : rec.factors) {
        Laurent b = eval_ratfunc(ch, RatFunc::parse(base));
        offset += Rational(b.v) * e;
        rhs.c = mul(rhs.c, power(b.c, e));
    }
    if (!offset.is_integer()) return "fractional offset " + offset.str();
    long off = offset.num().get_si();
    for (std::size_t k = 0; k < order; ++k) {
        long j = static_cast<long>(k) - off;
        Rational want = j >= 0 ? rhs.c[j] : Rational(0);
        if (lhs[k] != want) return "t^" + std::to_string(k) + ": " + lhs[k].str() + " vs " + want.str();
    }
    return {};
}

}  // namespace

TEST_CASE("database shape") {
    const auto& db = database();
    REQUIRE(db.size() == 14);
    int genus1 = 0;
    for (const auto& e : db) {
        genus1 += !e.curve.is_rational();
        CHECK(&lookup(e.type_id) == &e);
        CHECK(on_curve(e.anchor, e.curve));
        CHECK(!e.z_anchors.empty());
        // phi equals its stored factorization
        RatFunc prod(e.phi_constant);
        for (const auto& f : e.phi_factors) {
            REQUIRE(f.exponent.is_integer());
            prod *= RatFunc(f.base).pow(f.exponent.num().get_si());
        }
        CHECK(curve_reduce(prod - e.phi, e.curve).is_zero());
    }
    CHECK(genus1 == 7);
    CHECK(lookup(schwarz_types()[0]).type_id == schwarz_types()[0].id);
}

TEST_CASE("every identity holds by an independent series expansion") {
    auto recs = export_records();
    REQUIRE(recs.size() == 56);
    for (const auto& r : recs) CHECK_MESSAGE(check_record(r, 20).empty(), r.name << ": " << check_record(r, 20));
}

TEST_CASE("a perturbed identity is caught") {
    auto recs = export_records();
    ExportRecord r = recs.front();
    r.params.b += Rational(1, 1000);
    CHECK_FALSE(check_record(r, 20).empty());
}

TEST_CASE("export round trip") {
    auto recs = export_records();
    std::string text = render_export(recs);
    CHECK(parse_export(text) == recs);
    CHECK(render_export(parse_export(text)) == text);
    CHECK(text.find("identity tetra1\n") == 0);
    CHECK_THROWS_AS(parse_export("identity x\ntype t\n"), std::invalid_argument);
}

TEST_CASE("curve algebra") {
    CurveSpec c = CurveSpec::genus1(MultiPoly::parse("x^3 - x^2 + x"));
    CHECK(curve_reduce(MultiPoly::parse("xi^3"), c) == MultiPoly::parse("xi*(x^3 - x^2 + x)"));
    CHECK(vanishes_on_curve(MultiPoly::parse("xi^2 - x^3 + x^2 - x"), c));
    CHECK_FALSE(vanishes_on_curve(MultiPoly::parse("xi - x"), c));
    RatFunc r = curve_reduce(RatFunc::parse("1/(1 + xi)"), c);
    CHECK(r.den().degree(Var::xi) == 0);
    CHECK(curve_reduce(r * RatFunc::parse("1 + xi") - RatFunc(1), c).is_zero());
    CHECK(curve_reduce(MultiPoly::parse("xi*x + 1"), CurveSpec::rational()) == MultiPoly(1));
    CHECK(c.str() == "xi^2 = x^3 - x^2 + x");
}

TEST_CASE("radical arithmetic") {
    CurveSpec P1 = CurveSpec::rational();
    RadicalExpr a{{{MultiPoly::parse("1 - 2*x"), Rational(1, 4)}}, RatFunc(1)};
    RadicalExpr b{{{MultiPoly::parse("16 - 32*x"), Rational(3, 4)}}, RatFunc::parse("1/(1+x)")};
    RadicalExpr p = radical_mul(a, b, P1);
    // proportional bases merge: 8 (1-2x) / (1+x)
    CHECK(p.factors.empty());
    CHECK(p.rational == RatFunc::parse("8*(1-2*x)/(1+x)"));
    RatSeries s = puiseux_expand(p, P1, 6);
    RatSeries ref = puiseux_expand(a, P1, 6);
    ref *= puiseux_expand(b, P1, 6);
    CHECK(s == ref);
    RadicalExpr one = radical_mul(a, radical_inverse(a), P1);
    CHECK(puiseux_expand(one, P1, 6) == RatSeries(6, Rational(1)));
    RadicalExpr sq{{{MultiPoly::parse("1 + x"), Rational(1, 2)}}, RatFunc(1)};
    RadicalExpr whole = radical_mul(sq, sq, P1);
    CHECK(whole.factors.empty());
    CHECK(whole.rational == RatFunc::parse("1 + x"));
}

TEST_CASE("Puiseux expansions") {
    CurveSpec c = CurveSpec::genus1(MultiPoly::parse("-x^3 + x^2 + x"));
    RatSeries xi = xi_series(c, 12);
    RatSeries xi2 = xi * xi;
    RatSeries q = puiseux_expand(c.q, c, 12);
    CHECK(as_power_series(xi2) == as_power_series(q));
    CHECK(xi[0].is_zero());
    CHECK(xi[1] == Rational(1));
    RatSeries x = puiseux_expand(MultiPoly::parse("x"), c, 8);
    CHECK(x.offset() == Rational(2));
    CHECK(as_power_series(x)[2] == Rational(1));
    CHECK_THROWS_AS(xi_series(CurveSpec::genus1(MultiPoly::parse("x^3 + 1")), 4), std::domain_error);
}

TEST_CASE("anchor evaluation") {
    const auto& e = database().front();
    AnchorPoint p = e.anchor;
    QuadExt v = evaluate_at_anchor(e.phi, p);
    CHECK(v == e.phi.evaluate({{Var::x, p.x}, {Var::xi, p.xi}}));
    RatFunc pole(MultiPoly(1), MultiPoly::variable(Var::x) - MultiPoly(p.x.rational_part()));
    CHECK_THROWS_AS(evaluate_at_anchor(pole, p), std::domain_error);
}

TEST_CASE("standard coverings") {
    Rational c;
    for (int m = 3; m <= 5; ++m) {
        auto f = standard_covering_factors(m, &c);
        RatFunc prod(c);
        for (const auto& ff : f) prod *= RatFunc(ff.base).pow(ff.exponent.num().get_si());
        CHECK(prod == standard_covering(m));
    }
    CHECK_THROWS(standard_covering(6));
}
