#pragma once

#include "klein/exactnum.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace klein {

// Fixed global symbol table.  The declaration order is the variable order of
// the graded lexicographic monomial order.
enum class Var : std::uint8_t { X, Z, x, z, xi, alpha, beta, zeta, s, t };
inline constexpr std::size_t kNumVars = 10;

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

struct Monomial {
    std::array<std::uint16_t, kNumVars> e{};

    unsigned degree() const;
    unsigned operator[](Var v) const { return e[static_cast<std::size_t>(v)]; }
    std::uint16_t& at(Var v) { return e[static_cast<std::size_t>(v)]; }
    bool divides(const Monomial& o) const;
    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Orders monomials from largest to smallest in graded lex order.
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial with rational coefficients.
class MultiPoly {
public:
    using Terms = std::map<Monomial, Rational, GrlexDesc>;

    MultiPoly() = default;
    MultiPoly(const Rational& c);
    MultiPoly(long c) : MultiPoly(Rational(c)) {}
    MultiPoly(int c) : MultiPoly(Rational(c)) {}

    static MultiPoly variable(Var v, unsigned power = 1);
    static MultiPoly monomial(const Monomial& m, const Rational& c);
    // Parses sums/products/integer powers of symbols and exact constants.
    // Division is only allowed by constants.
    static MultiPoly parse(std::string_view text);

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    // Coefficient of the largest monomial.
    Rational lc() const;
    Monomial lm() const;
    Rational coefficient(const Monomial& m) const;

    unsigned degree(Var v) const;
    unsigned low_degree(Var v) const;
    unsigned total_degree() const;
    bool depends_on(Var v) const { return degree(v) > 0; }
    std::vector<Var> variables() const;

    // coefficients(v)[k] is the coefficient of v^k.
    std::vector<MultiPoly> coefficients(Var v) const;
    static MultiPoly from_coefficients(Var v, const std::vector<MultiPoly>& c);
    MultiPoly lead_coeff(Var v) const;

    MultiPoly derivative(Var v) const;
    MultiPoly substitute(Var v, const MultiPoly& p) const;
    MultiPoly evaluate(Var v, const Rational& r) const;
    QuadExt evaluate(const std::map<Var, QuadExt>& point) const;
    MultiPoly rename(Var from, Var to) const;
    MultiPoly pow(unsigned e) const;

    // Rational c with this/c integral, coprime, and positive leading coefficient.
    Rational integer_content() const;
    MultiPoly primitive_integer() const;
    MultiPoly monic() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    MultiPoly& operator/=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator/(MultiPoly a, const Rational& c) { return a /= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    // Canonical rendering: descending graded order, exact coefficients,
    // explicit "*" and "^".
    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// Multivariate division with remainder in graded lex order.
std::pair<MultiPoly, MultiPoly> divmod(const MultiPoly& p, const MultiPoly& q);
// Exact quotient; throws std::domain_error when q does not divide p.
MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q);
bool divides(const MultiPoly& q, const MultiPoly& p);

// Pseudo-remainder lc_v(b)^(deg a - deg b + 1) * a mod b with respect to v.
MultiPoly prem(const MultiPoly& a, const MultiPoly& b, Var v);

// Content with respect to v (gcd of the coefficients, monic) and primitive part.
MultiPoly content(const MultiPoly& p, Var v);
MultiPoly primitive_part(const MultiPoly& p, Var v);

// Monic gcd.  `var` is the main variable of the primitive PRS; contents in the
// other variables are handled recursively.
MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q, Var var);
MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q);

// Sylvester-determinant resultant via the subresultant PRS.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Var var);

struct SqfFactor {
    MultiPoly factor;
    unsigned multiplicity;
};
// Yun's squarefree decomposition of the primitive part of p with respect to v.
// Factors are primitive with integer coefficients; `unit` collects the rest so
// that p = unit * prod factor^multiplicity.
std::vector<SqfFactor> squarefree(const MultiPoly& p, Var v, MultiPoly* unit = nullptr);

// Rational roots of a univariate polynomial in v.  Candidates are only
// enumerated when the leading and constant coefficients are of moderate size;
// 0 and +-1 are always tried.
std::vector<Rational> rational_roots(const MultiPoly& p, Var v);

// Univariate factorisation limited to squarefree decomposition plus splitting
// off rational roots.  Factors are primitive integer polynomials with positive
// leading coefficient.
struct Factored {
    Rational unit;
    std::vector<std::pair<MultiPoly, unsigned>> factors;
};
Factored factor_univariate(const MultiPoly& p, Var v);

// Reduced rational function num/den with the leading coefficient of den equal to 1.
class RatFunc {
public:
    RatFunc() : num_(0), den_(1) {}
    RatFunc(const MultiPoly& n) : num_(n), den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}
    RatFunc(int c) : num_(c), den_(1) {}
    RatFunc(const MultiPoly& n, const MultiPoly& d);

    // Parses an expression that may contain general divisions.
    static RatFunc parse(std::string_view text);
    static RatFunc variable(Var v) { return RatFunc(MultiPoly::variable(v)); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    unsigned degree(Var v) const { return std::max(num_.degree(v), den_.degree(v)); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFunc pow(long e) const;
    RatFunc inverse() const;
    RatFunc derivative(Var v) const;
    QuadExt evaluate(const std::map<Var, QuadExt>& point) const;

    std::string str() const;

private:
    void normalize();
    MultiPoly num_;
    MultiPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& r);

// Numerator and denominator scaled to coprime integer coefficients with a
// positive leading denominator coefficient.
std::pair<MultiPoly, MultiPoly> integer_cleared(const RatFunc& r);
// "(num) / (den)" from integer_cleared, or just "num" when den = 1.
std::string cleared_str(const RatFunc& r);

// Simultaneous substitution of symbols by rational functions.
RatFunc substitute(const MultiPoly& p, const std::map<Var, RatFunc>& bindings);
RatFunc substitute(const RatFunc& r, const std::map<Var, RatFunc>& bindings);

// For P in x_var and z_var with a factor D(x)*z - N(x), returns N/D.
RatFunc extract_linear_factor(const MultiPoly& P, Var x_var = Var::X, Var z_var = Var::Z);

// Multiplicities of the fiber of psi over `value` (nullopt means infinity),
// including the point at infinity; sorted in decreasing order.
std::vector<unsigned> ramification_pattern(const RatFunc& psi, const std::optional<Rational>& value,
                                           Var v = Var::X);

// Local multiplicity of psi at a point (nullopt = infinity) and the image value
// there (nullopt = infinity).
struct LocalBehaviour {
    std::optional<Rational> value;
    unsigned multiplicity;
};
LocalBehaviour local_behaviour(const RatFunc& psi, const std::optional<Rational>& at, Var v = Var::X);

// Degree of a univariate rational function as a map P^1 -> P^1.
unsigned map_degree(const RatFunc& psi, Var v = Var::X);

}  // namespace klein
