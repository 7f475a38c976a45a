#include "klein/klein.hpp"

#include <doctest.h>

using namespace klein;

namespace {

ExponentTriple T(const char* s) { return ExponentTriple::parse(s); }
RatFunc R(const char* s) { return RatFunc::parse(s); }

// f/g is a nonzero constant
bool proportional(const RatFunc& f, const RatFunc& g) {
    RatFunc q = f / g;
    return q.is_constant() && !q.is_zero();
}

}  // namespace

TEST_CASE("Schwarzian derivative") {
    RatFunc X = RatFunc::variable(Var::X);
    CHECK(schwarzian_derivative(R("(2*X+1)/(3*X-5)")).is_zero());
    for (long k : {2L, 3L, -4L}) {
        // {X^k, X} = (1 - k^2) / (2 X^2)
        RatFunc ref = RatFunc(Rational(1 - k * k, 2)) / (X * X);
        CHECK(schwarzian_derivative(X.pow(k)) == ref);
    }
    // chain rule {f(g), X} = {f, g} g'^2 + {g, X}
    RatFunc g = R("X^2 + X"), f = R("1/(1 - X^3)");
    RatFunc fg = substitute(f, {{Var::X, g}});
    RatFunc sf = substitute(schwarzian_derivative(f), {{Var::X, g}});
    RatFunc dg = g.derivative(Var::X);
    CHECK(schwarzian_derivative(fg) == sf * dg * dg + schwarzian_derivative(g));
}

TEST_CASE("tetrahedral degree 3 covering") {
    PullbackResult r = compute_covering(T("1/2,1/3,2/3"));
    CHECK(r.psi == R("27*X/(4*X-1)^3"));
    CHECK(r.w == QuadExt(-27));
    CHECK(r.degree == 3);
    CHECK(r.curve.is_rational());
    CHECK(proportional(r.relation, R("x/(x+1)^3")));
    CHECK(pullback_residual(r.assignment.exponents, 3, r.psi).is_zero());
    CHECK(r.ramification[0] == std::vector<unsigned>{2, 1});
    CHECK(r.ramification[2] == std::vector<unsigned>{3});
    CHECK(!r.contiguity.empty());
}

TEST_CASE("icosahedral relation and anchor rejection") {
    PullbackResult r = compute_covering(T("1/2,2/3,1/5"));
    CHECK(proportional(r.relation, R("x*(11+66*x-x^2)^5/(1+66*x-11*x^2)^5")));
    CHECK(r.w == QuadExt(-1));
    int rejected = 0, accepted = 0;
    for (const auto& c : r.w_candidates) (c.accepted ? accepted : rejected)++;
    CHECK(accepted >= 1);
    CHECK(rejected >= 1);
    CHECK(r.degree == 11);
    CHECK(map_degree(r.psi) == 11);
}

TEST_CASE("rejected input") {
    CHECK_THROWS_AS(compute_covering(T("1/2,1/2,1/7")), std::domain_error);
    CHECK_THROWS_AS(compute_covering(T("1/2,1/3,1/7")), std::domain_error);
}

TEST_CASE("constant Schwarz quotient is rejected") {
    const SchwarzType& t = schwarz_types()[0];
    RadicalExpr g{{{MultiPoly::parse("1 - 2*x"), Rational(1, 4)}}, RatFunc::parse("x + 1")};
    CHECK_THROWS_AS(schwarz_quotient(g, g, t), std::runtime_error);
    RadicalExpr h = g;
    h.rational = h.rational * RatFunc(3);
    CHECK_THROWS_AS(schwarz_quotient(g, h, t), std::runtime_error);
}

TEST_CASE("Schwarz quotient with fractional parts") {
    const SchwarzType& t = schwarz_types()[0];  // m = 3
    // (G1/G2)^(-3) = (1+x)^3 / x
    RadicalExpr g1{{{MultiPoly::parse("x"), Rational(1, 3)}}, RatFunc(1)};
    RadicalExpr g2{{}, RatFunc::parse("1 + x")};
    RatFunc phi = schwarz_quotient(g1, g2, t);
    CHECK(proportional(phi, R("(x+1)^3/x")));
}

TEST_CASE("transformation identities are derived") {
    TransformationIdentity id = derive_identity(T("1/2,2/3,2/3"));
    CHECK(id.lhs_params == HGParams{Rational(-5, 12), Rational(1, 4), Rational(1, 3)});
    CHECK(id.rhs_params == HGParams{Rational(-1, 12), Rational(1, 4), Rational(2, 3)});
    REQUIRE(id.theta.factors.size() == 1);
    CHECK(proportional(RatFunc(id.theta.factors[0].base), R("1 - 5/4*X")));
    CHECK(id.theta.factors[0].exponent == Rational(1, 4));
    CHECK(id.psi == R("-X^2*(4*X-5)^3/(5*X-4)^3"));

    TransformationIdentity id3 = derive_identity(T("3/2,1/3,1/3"));
    REQUIRE(id3.theta.factors.size() == 1);
    CHECK(proportional(RatFunc(id3.theta.factors[0].base), R("1 - 42*X - 7*X^2")));
    CHECK(id3.theta.factors[0].exponent == Rational(1, 4));
}

TEST_CASE("rendering") {
    CHECK(render_factored(R("27*X/(4*X-1)^3")) == "27*X / (4*X - 1)^3");
    CHECK(render_factored(R("-X^2*(4*X-5)^3/(5*X-4)^3")) == "-X^2*(4*X - 5)^3 / (5*X - 4)^3");
    CHECK(render_factored(R("4*X/(27*(X-1)^2)")) == "4*X / (27*(X - 1)^2)");
    CHECK(standard_exponents(5) == ExponentTriple{Rational(1, 5), Rational(1, 2), Rational(1, 3)});
}

TEST_CASE("sampled residual agrees with the symbolic one") {
    ExponentTriple e = T("1/2,1/3,2/3");
    for (const char* s : {"27*X/(4*X-1)^3", "28*X/(4*X-1)^3", "X^2*(X-3)/(2*X+1)"}) {
        RatFunc psi = R(s);
        RatFunc full = pullback_residual(e, 3, psi);
        for (Rational x0 : {Rational(1, 7), Rational(-3, 11), Rational(9, 2)}) {
            auto v = pullback_residual_at(e, 3, psi, x0);
            REQUIRE(v.has_value());
            CHECK(QuadExt(*v) == full.evaluate({{Var::X, QuadExt(x0)}}));
        }
    }
    CHECK_FALSE(pullback_residual_at(e, 3, R("27*X/(4*X-1)^3"), Rational(1, 4)).has_value());
    CHECK_FALSE(pullback_residual_at(e, 3, R("27*X/(4*X-1)^3"), Rational(0)).has_value());
}
