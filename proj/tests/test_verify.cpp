#include "klein/verify.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace klein;

namespace {

ExponentTriple T(const char* s) { return ExponentTriple::parse(s); }
RatFunc R(const char* s) { return RatFunc::parse(s); }

// Every covering obtained by adding 1 to a single coefficient of the
// numerator or denominator.
std::vector<RatFunc> mutants(const RatFunc& psi) {
    std::vector<RatFunc> out;
    for (int side = 0; side < 2; ++side) {
        const MultiPoly& p = side ? psi.den() : psi.num();
        for (unsigned k = 0; k <= p.degree(Var::X); ++k) {
            MultiPoly q = p + MultiPoly::variable(Var::X, k);
            out.push_back(side ? RatFunc(psi.num(), q) : RatFunc(q, psi.den()));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("a correct covering passes every check") {
    auto rep = check_covering(T("1/2,1/3,2/3"), R("27*X/(4*X-1)^3"));
    CHECK(rep.overall());
    CHECK(rep.checks.size() == 3);
    // the placement is found for any ordering of the input
    CHECK(check_covering(T("2/3,1/3,1/2"), R("27*X/(4*X-1)^3")).overall());
}

TEST_CASE("single coefficient mutations are rejected") {
    RatFunc psi = R("-X^2*(4*X-5)^3/(5*X-4)^3");
    for (const RatFunc& m : mutants(psi)) {
        if (m == psi) continue;
        auto rep = check_covering(T("1/2,2/3,2/3"), m);
        CHECK_MESSAGE(!rep.overall(), m.str());
    }
}

TEST_CASE("wrong degree and constant coverings") {
    auto rep = check_covering(T("1/2,1/3,2/3"), R("X"));
    CHECK_FALSE(rep.overall());
    CHECK(rep.checks[0].name == "degree");
    CHECK(rep.checks[0].witness == "degree 1 != 3");
    CHECK_FALSE(check_covering(T("1/2,1/3,2/3"), R("7")).overall());
    CHECK_FALSE(check_covering(T("1/2,1/2,1/7"), R("X^2")).overall());
}

TEST_CASE("database check") {
    auto rep = check_database(12);
    CHECK(rep.checks.size() == 56);
    CHECK(rep.overall());
}

TEST_CASE("identity check catches a wrong exponent") {
    TransformationIdentity id = derive_identity(T("1/2,2/3,2/3"));
    CHECK(check_identity(id).overall());
    id.theta.factors[0].exponent = Rational(1, 3);
    auto rep = check_identity(id);
    CHECK_FALSE(rep.overall());
    CHECK(rep.checks[0].witness.find("X^1") == 0);
}

TEST_CASE("contiguity check") {
    HGParams base{Rational(1, 4), Rational(-1, 12), Rational(2, 3)};
    HGParams target{Rational(5, 4), Rational(11, 12), Rational(2, 3)};
    ContiguityUse use{target, base, contiguous_express(target, base)};
    CHECK(check_contiguity(use).pass);
    use.relation.r0 = use.relation.r0 + RatFunc::parse("X^5");
    Check c = check_contiguity(use);
    CHECK_FALSE(c.pass);
    CHECK(c.witness.find("X^5") == 0);
}

TEST_CASE("report rendering") {
    VerificationReport rep;
    rep.subject = "demo";
    rep.add("one", true);
    rep.add("two", false, "X^3: 1 vs 2");
    auto j = nlohmann::json::parse(rep.render_json());
    CHECK(j["status"] == "fail");
    CHECK(j["checks"].size() == 2);
    CHECK(j["checks"][1]["witness"] == "X^3: 1 vs 2");
    CHECK(rep.render_text() == "subject: demo\n  [pass] one\n  [FAIL] two: X^3: 1 vs 2\noverall: fail\n");
}
