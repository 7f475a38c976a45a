#include "klein/darboux.hpp"
#include "klein/schwarz.hpp"

#include <doctest.h>

#include <algorithm>

using namespace klein;

namespace {

ExponentTriple T(const char* s) { return ExponentTriple::parse(s); }

RatFunc in_z(const char* s) { return RatFunc::parse(s); }

RatFunc at(const RatFunc& r, const RatFunc& z) { return substitute(r, {{Var::z, z}}); }

std::array<Rational, 3> sorted_abs(const ExponentTriple& e) {
    std::array<Rational, 3> a{e.e0.abs(), e.e1.abs(), e.einf.abs()};
    std::sort(a.begin(), a.end());
    return a;
}

}  // namespace

TEST_CASE("fourteen types") {
    const auto& ts = schwarz_types();
    REQUIRE(ts.size() == 14);
    int counts[3] = {};
    for (const auto& t : ts) {
        ++counts[static_cast<int>(t.group)];
        auto c = classify(t.representative);
        REQUIRE(c.type.has_value());
        CHECK(c.type->id == t.id);
        CHECK(t.m == (t.group == Group::Tetrahedral ? 3 : t.group == Group::Octahedral ? 4 : 5));
    }
    CHECK(counts[0] == 2);
    CHECK(counts[1] == 2);
    CHECK(counts[2] == 10);
}

TEST_CASE("classification of worked examples") {
    struct Case {
        const char* e;
        Group g;
        const char* label;
    };
    for (const Case& c : {Case{"1/2,1/3,2/3", Group::Tetrahedral, "(1/2,1/3,1/3)"},
                          Case{"3/2,1/3,1/3", Group::Tetrahedral, "(1/2,1/3,1/3)"},
                          Case{"2/3,4/3,4/3", Group::Tetrahedral, "(1/3,1/3,2/3)"},
                          Case{"1/2,1/3,1/4", Group::Octahedral, "(1/2,1/3,1/4)"},
                          Case{"1/2,2/3,1/5", Group::Icosahedral, "(1/2,1/3,1/5)"},
                          Case{"1/5,1/5,6/5", Group::Icosahedral, "(1/5,1/5,4/5)"}}) {
        auto r = classify(T(c.e));
        REQUIRE_MESSAGE(r.type.has_value(), c.e);
        CHECK(r.type->group == c.g);
        CHECK(r.type->label == c.label);
    }
    // sign changes and permutations stay in the class
    CHECK(classify(T("-2/3,4/3,-4/3")).type->label == "(1/3,1/3,2/3)");
    CHECK(classify(T("4/3,2/3,4/3")).type->label == "(1/3,1/3,2/3)");
}

TEST_CASE("rejections") {
    CHECK(classify(T("1/2,1/2,1/7")).rejection == Rejection::Dihedral);
    CHECK(classify(T("1,1/3,1/3")).rejection == Rejection::Cyclic);
    CHECK(classify(T("1/2,1/3,1/7")).rejection == Rejection::NotAlgebraic);
    CHECK(classify(T("1/2,1/3,2/7")).rejection == Rejection::NotAlgebraic);
    CHECK(classify(T("1/2,1/2,1/7")).reason == "dihedral: out of scope");
    // odd total shift leaves the orbit
    CHECK_FALSE(in_contiguity_orbit(T("4/3,1/3,2/3"), T("1/3,1/3,2/3")));
    CHECK(in_contiguity_orbit(T("4/3,4/3,2/3"), T("1/3,1/3,2/3")));
    CHECK(in_contiguity_orbit(T("-1/3,1/3,-2/3"), T("1/3,1/3,2/3")));
}

TEST_CASE("covering degree") {
    struct Case {
        const char* e;
        int m;
        unsigned d;
    };
    for (const Case& c : {Case{"1/2,1/3,2/3", 3, 3}, Case{"1/2,2/3,2/3", 3, 5}, Case{"3/2,1/3,1/3", 3, 7},
                          Case{"1/2,1/3,4/3", 3, 7}, Case{"1/2,2/3,4/3", 3, 9}, Case{"1/2,1/3,5/3", 3, 9},
                          Case{"3/2,1/3,2/3", 3, 9}, Case{"1/3,2/3,5/3", 3, 10}, Case{"2/3,2/3,4/3", 3, 10},
                          Case{"2/3,4/3,4/3", 3, 14}, Case{"1/2,2/3,1/5", 5, 11}, Case{"1/5,1/5,6/5", 5, 18},
                          Case{"1/2,1/3,1/3", 3, 1}, Case{"1/2,1/3,1/4", 4, 1}, Case{"1/2,1/3,1/5", 5, 1}})
        CHECK_MESSAGE(covering_degree(T(c.e), c.m) == c.d, c.e);
    CHECK_THROWS_AS(covering_degree(T("1/2,1/3,1/4"), 3), std::domain_error);
}

TEST_CASE("point assignment permutes |e| and puts halves at X = 1") {
    for (const char* s : {"1/2,2/3,2/3", "3/2,1/3,1/3", "2/3,4/3,4/3", "1/2,2/3,1/5", "1/5,1/5,6/5", "3/2,1/3,2/3"}) {
        ExponentTriple e = T(s);
        auto c = classify(e);
        PointAssignment pa = assign_points(e, *c.type);
        CHECK(sorted_abs(pa.exponents) == sorted_abs(e));
        bool has_half = false;
        for (int i = 0; i < 3; ++i) has_half |= (e[i].abs() * Rational(2)).is_integer() && !e[i].is_integer();
        if (has_half) CHECK((pa.exponents.e1 * Rational(2)).is_integer());
    }
    PointAssignment pa = assign_points(T("1/2,2/3,2/3"), *classify(T("1/2,2/3,2/3")).type);
    CHECK(pa.exponents == T("2/3,1/2,2/3"));
}

TEST_CASE("invariants composed with s^m = z are the standard Darboux coverings") {
    for (int m = 3; m <= 5; ++m) CHECK_MESSAGE(invariant_in_z(m) == standard_covering(m), "m = " << m);
    CHECK(standard_covering(3) == in_z("z*(z+4)^3/(4*(2*z-1)^3)"));
    CHECK(standard_covering(5) == in_z("1728*z*(z^2-11*z-1)^5/(z^4+228*z^3+494*z^2-228*z+1)^3"));
}

TEST_CASE("invariants composed with s = z^(-1/m)") {
    RatFunc z = RatFunc::variable(Var::z);
    CHECK(invariant_in_z(4, true) == standard_covering(4));
    CHECK(invariant_in_z(5, true) == at(standard_covering(5), -z));
    CHECK(invariant_in_z(3, true) == at(standard_covering(3), z.inverse()));
    CHECK_FALSE(invariant_in_z(3, true) == standard_covering(3));
}

TEST_CASE("S3 without the cube in the denominator is inconsistent") {
    RatFunc cubeless = in_z("z*(z+4)^3/(4*(2*z-1))");
    CHECK_FALSE(cubeless == standard_covering(3));
    // a simple pole at z = 1/2 and a triple one at infinity: not 1/3 above Z = infinity
    CHECK(local_behaviour(cubeless, Rational(1, 2), Var::z).multiplicity == 1);
    CHECK(local_behaviour(standard_covering(3), Rational(1, 2), Var::z).multiplicity == 3);
    CHECK_THROWS_AS(standard_invariant(6), std::domain_error);
}
