#include "klein/exactnum.hpp"

#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <random>

using namespace klein;

namespace {

// Reference fraction on machine integers, small enough to never overflow here.
struct Frac {
    std::int64_t n, d;
    Frac(std::int64_t a, std::int64_t b) : n(a), d(b) {
        if (d < 0) n = -n, d = -d;
        std::int64_t g = std::gcd(n, d);
        if (g) n /= g, d /= g;
    }
};
Frac operator+(Frac a, Frac b) { return {a.n * b.d + b.n * a.d, a.d * b.d}; }
Frac operator*(Frac a, Frac b) { return {a.n * b.n, a.d * b.d}; }

bool same(const Rational& r, Frac f) { return r.num() == f.n && r.den() == f.d; }

}  // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(-3, 6) == Rational(-1, 2));
    CHECK(Rational(4, -8).den() == 2);
    CHECK(Rational(4, -8).sign() < 0);
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse(" 7 ") == Rational(7));
    CHECK(Rational(7, 3).floor() == 2);
    CHECK(Rational(-7, 3).floor() == -3);
    CHECK(Rational(-7, 3).frac() == Rational(2, 3));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5, 4).str() == "5/4");
}

TEST_CASE("rational parse errors") {
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS(Rational(0).inverse());
}

TEST_CASE("rational arithmetic agrees with machine fractions") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> num(-40, 40), den(1, 40);
    for (int i = 0; i < 500; ++i) {
        Frac a(num(rng), den(rng)), b(num(rng), den(rng));
        Rational ra(a.n, a.d), rb(b.n, b.d);
        CHECK(same(ra + rb, a + b));
        CHECK(same(ra * rb, a * b));
        CHECK(same(ra - rb, a + Frac(-b.n, b.d)));
        if (b.n != 0) CHECK(same(ra / rb, a * Frac(b.d, b.n)));
    }
}

TEST_CASE("exact roots") {
    Rational r;
    CHECK(exact_root(Rational(27, 64), 3, r));
    CHECK(r == Rational(3, 4));
    CHECK(exact_root(Rational(-27, 8), 3, r));
    CHECK(r == Rational(-3, 2));
    CHECK_FALSE(exact_root(Rational(2), 2, r));
    CHECK_FALSE(exact_root(Rational(-4), 2, r));
    mpz_class z;
    CHECK(exact_root(mpz_class("1152921504606846976"), 4, z));
    CHECK(z == 32768);
}

TEST_CASE("quadratic extension arithmetic") {
    QuadExt phi(Rational(1, 2), Rational(1, 2), 5);
    // phi^2 = phi + 1
    CHECK(phi * phi == phi + QuadExt(1));
    CHECK(phi.norm() == Rational(-1));
    CHECK(phi * phi.inverse() == QuadExt(1));
    CHECK(phi.conjugate() == QuadExt(Rational(1, 2), Rational(-1, 2), 5));
    CHECK(phi.pow(-3) * phi.pow(3) == QuadExt(1));
    CHECK((phi - phi.conjugate()) * (phi - phi.conjugate()) == QuadExt(5));
    QuadExt q = QuadExt::parse("123/2-55/2*sqrt(5)");
    CHECK(q.rational_part() == Rational(123, 2));
    CHECK(q.radical_part() == Rational(-55, 2));
    CHECK(q.discriminant() == 5);
    CHECK(QuadExt::parse(q.str()) == q);
    CHECK(q.pretty() == "123/2 - 55/2*sqrt(5)");
    CHECK(QuadExt(Rational(3)).is_rational());
}

TEST_CASE("quadratic extension norm is multiplicative") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-9, 9);
    for (int i = 0; i < 200; ++i) {
        QuadExt u(Rational(c(rng), 3), Rational(c(rng), 2), 5), v(Rational(c(rng)), Rational(c(rng), 7), 5);
        CHECK((u * v).norm() == u.norm() * v.norm());
        CHECK(quad_mul(u, v) == u * v);
        CHECK(quad_conjugate(u * v) == u.conjugate() * v.conjugate());
    }
}
