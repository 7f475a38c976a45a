#include "klein/polyalg.hpp"

#include <doctest.h>

#include <random>

using namespace klein;

namespace {

MultiPoly P(const char* s) { return MultiPoly::parse(s); }

// Sylvester matrix determinant by Gaussian elimination over Q.
Rational sylvester_resultant(const MultiPoly& p, const MultiPoly& q, Var v) {
    auto pc = p.coefficients(v), qc = q.coefficients(v);
    std::size_t m = pc.size() - 1, n = qc.size() - 1, N = m + n;
    std::vector<std::vector<Rational>> a(N, std::vector<Rational>(N));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) a[r][r + k] = pc[m - k].constant_term();
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) a[n + r][r + k] = qc[n - k].constant_term();
    Rational det(1);
    for (std::size_t c = 0; c < N; ++c) {
        std::size_t piv = c;
        while (piv < N && a[piv][c].is_zero()) ++piv;
        if (piv == N) return Rational(0);
        if (piv != c) std::swap(a[piv], a[c]), det = -det;
        det *= a[c][c];
        for (std::size_t r = c + 1; r < N; ++r) {
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < N; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

MultiPoly random_poly(std::mt19937& rng, unsigned deg, Var v) {
    std::uniform_int_distribution<int> c(-6, 6);
    MultiPoly r;
    for (unsigned k = 0; k <= deg; ++k) r += MultiPoly::variable(v, k) * Rational(c(rng));
    if (r.degree(v) != deg) r += MultiPoly::variable(v, deg);
    return r;
}

}  // namespace

TEST_CASE("parse and render round trip") {
    MultiPoly p = P("3*X^2*Z - 1/2*x + 7");
    CHECK(MultiPoly::parse(p.str()) == p);
    CHECK(p.degree(Var::X) == 2);
    CHECK(p.total_degree() == 3);
    CHECK(P("(X+1)^3") == P("X^3 + 3*X^2 + 3*X + 1"));
    CHECK(P("xi^2 - x*(x-1)").degree(Var::xi) == 2);
    CHECK_THROWS_AS(P("3*Q"), std::invalid_argument);
    CHECK_THROWS_AS(P("(X+1"), std::invalid_argument);
}

TEST_CASE("division and substitution") {
    MultiPoly a = P("X^3 - 2*X + 5"), b = P("X^2 + X");
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree(Var::X) < 2);
    CHECK(exact_div(P("X^2 - Z^2"), P("X - Z")) == P("X + Z"));
    CHECK(divides(P("X - Z"), P("X^2 - Z^2")));
    CHECK_FALSE(divides(P("X - 2*Z"), P("X^2 - Z^2")));
    CHECK(P("X^2 + Z").substitute(Var::X, P("Z + 1")) == P("Z^2 + 3*Z + 1"));
    CHECK(P("X^2 + Z").evaluate(Var::X, Rational(3)) == P("Z + 9"));
    CHECK(P("X^3*Z").derivative(Var::X) == P("3*X^2*Z"));
}

TEST_CASE("univariate resultant equals the Sylvester determinant") {
    std::mt19937 rng(11);
    for (int i = 0; i < 40; ++i) {
        MultiPoly p = random_poly(rng, 1 + i % 5, Var::X), q = random_poly(rng, 1 + (i * 7) % 6, Var::X);
        MultiPoly r = resultant(p, q, Var::X);
        REQUIRE(r.is_constant());
        CHECK(r.constant_term() == sylvester_resultant(p, q, Var::X));
    }
}

TEST_CASE("bivariate resultant specializes correctly") {
    MultiPoly p = P("X^3*Z - 2*X^2 + Z^2*X - 3"), q = P("X^2 + Z*X - Z^3 + 1");
    MultiPoly r = resultant(p, q, Var::X);
    CHECK(r.degree(Var::X) == 0);
    for (int z = -4; z <= 4; ++z) {
        MultiPoly ps = p.evaluate(Var::Z, Rational(z)), qs = q.evaluate(Var::Z, Rational(z));
        if (ps.degree(Var::X) != 3) continue;
        CHECK(r.evaluate(Var::Z, Rational(z)).constant_term() == sylvester_resultant(ps, qs, Var::X));
    }
}

TEST_CASE("common root gives zero resultant") {
    MultiPoly p = P("(X - Z)*(X^2 + 1)"), q = P("(X - Z)*(X + 3*Z)");
    CHECK(resultant(p, q, Var::X).is_zero());
}

TEST_CASE("gcd") {
    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        MultiPoly c = random_poly(rng, 1 + i % 3, Var::X);
        MultiPoly a = random_poly(rng, 2, Var::X) * c, b = random_poly(rng, 3, Var::X) * c;
        MultiPoly g = poly_gcd(a, b);
        CHECK(divides(g, a));
        CHECK(divides(g, b));
        CHECK(divides(c, g));
    }
    MultiPoly g = poly_gcd(P("(X*Z + 1)^2*(X - Z)"), P("(X*Z + 1)*(X + Z)^2"));
    CHECK(divides(g, P("X*Z + 1")));
    CHECK(g.total_degree() == 2);
    CHECK(poly_gcd(P("X^2 + Z"), P("X + Z^2")).is_constant());
}

TEST_CASE("squarefree decomposition reconstructs") {
    MultiPoly p = P("6*(X - 1)^3*(X + 2)^2*(2*X + 1)");
    MultiPoly unit;
    auto f = squarefree(p, Var::X, &unit);
    MultiPoly prod = unit;
    for (const auto& s : f) prod *= s.factor.pow(s.multiplicity);
    CHECK(prod == p);
    unsigned top = 0;
    for (const auto& s : f) top = std::max(top, s.multiplicity);
    CHECK(top == 3);
}

TEST_CASE("rational roots and univariate factoring") {
    auto roots = rational_roots(P("(2*X - 1)*(X + 3)*(X^2 + 1)"), Var::X);
    REQUIRE(roots.size() == 2);
    CHECK(std::count(roots.begin(), roots.end(), Rational(1, 2)) == 1);
    CHECK(std::count(roots.begin(), roots.end(), Rational(-3)) == 1);

    MultiPoly p = P("-4*(X^2 - 42*X - 7)^3*(4*X - 5)");
    Factored f = factor_univariate(p, Var::X);
    MultiPoly prod(f.unit);
    for (const auto& [b, e] : f.factors) prod *= b.pow(e);
    CHECK(prod == p);
}

TEST_CASE("rational functions") {
    RatFunc r = RatFunc::parse("27*X/(4*X-1)^3");
    CHECK(r * r.inverse() == RatFunc(1));
    CHECK(RatFunc::parse(r.str()) == r);
    CHECK(RatFunc::parse("(X^2-1)/(X-1)") == RatFunc(P("X + 1")));
    CHECK(RatFunc::parse("1/X + 1/(1-X)") == RatFunc(P("1"), P("X - X^2")));
    RatFunc s = substitute(r, {{Var::X, RatFunc::parse("1/X")}});
    CHECK(s == RatFunc::parse("27*X^2/(4-X)^3"));
    CHECK(cleared_str(RatFunc::parse("X/2/(X-1/3)")) == "(3*X) / (6*X - 2)");
    CHECK_THROWS(RatFunc::parse("1/(X-X)"));
}

TEST_CASE("map degree and local behaviour") {
    RatFunc r = RatFunc::parse("27*X/(4*X-1)^3");
    CHECK(map_degree(r) == 3);
    auto at0 = local_behaviour(r, Rational(0));
    CHECK(at0.value == Rational(0));
    CHECK(at0.multiplicity == 1);
    auto inf = local_behaviour(r, std::nullopt);
    CHECK(inf.value == Rational(0));
    CHECK(inf.multiplicity == 2);
    auto pole = local_behaviour(r, Rational(1, 4));
    CHECK_FALSE(pole.value.has_value());
    CHECK(pole.multiplicity == 3);
    CHECK(map_degree(RatFunc::parse("-X^2*(4*X-5)^3/(5*X-4)^3")) == 5);
}
