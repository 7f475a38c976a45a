#pragma once

#include "klein/exactnum.hpp"
#include "klein/polyalg.hpp"
#include "klein/series.hpp"

#include <string>
#include <utility>
#include <vector>

namespace klein {

struct HGParams {
    Rational a, b, c;
    friend bool operator==(const HGParams&, const HGParams&) = default;
    std::string str() const;
};

// Local exponent differences (e0, e1, einf) at 0, 1, infinity.
struct ExponentTriple {
    Rational e0, e1, einf;
    friend bool operator==(const ExponentTriple&, const ExponentTriple&) = default;
    const Rational& operator[](int i) const { return i == 0 ? e0 : (i == 1 ? e1 : einf); }
    Rational& operator[](int i) { return i == 0 ? e0 : (i == 1 ? e1 : einf); }
    std::string str() const;
    static ExponentTriple parse(std::string_view text);
};
using HGEquation = ExponentTriple;

bool is_nonpositive_integer(const Rational& r);

// a = (1-e0-e1-einf)/2, b = (1-e0-e1+einf)/2, c = 1-e0.
// Throws std::domain_error when c is a non-positive integer.
HGParams params_from_exponents(const ExponentTriple& e);
// (1-c, c-a-b, b-a); inverse of params_from_exponents.
ExponentTriple exponents_from_params(const HGParams& p);

// F(a,b;c;X) = (1-X)^(c-a-b) F(c-a,c-b;c;X).
std::pair<HGParams, Rational> euler_transform(const HGParams& p);

// F_target = r0 * F_base + r1 * F_base', coefficients in X.
struct ContiguousRelation {
    RatFunc r0;
    RatFunc r1;
    std::string path;  // unit steps taken, e.g. "c+ a- a-"
};

// Composes unit Gauss contiguous steps (c first, then a, then b; other orders
// when an intermediate step degenerates).  Throws std::domain_error when the
// shift is not integral or every order degenerates.
ContiguousRelation contiguous_express(const HGParams& target, const HGParams& base);

// (a)_k (b)_k / ((c)_k k!) for k < order.
RatSeries series_2f1(const HGParams& p, std::size_t order);
// 2F1(p; g) for a series g with g(0) = 0.
RatSeries series_2f1_at(const HGParams& p, const RatSeries& g);

// 2q - p' - p^2/2 for the equation H(e0,e1,einf) in the variable v.
RatFunc schwarzian_data(const ExponentTriple& e, Var v = Var::X);

// Series of a rational function in v at v = 0 (denominator nonzero there).
RatSeries series_of(const RatFunc& r, Var v, std::size_t order);
RatSeries series_of(const MultiPoly& p, Var v, std::size_t order);

}  // namespace klein
