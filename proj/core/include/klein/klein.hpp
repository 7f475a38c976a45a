#pragma once

#include "klein/darboux.hpp"
#include "klein/hyperg.hpp"
#include "klein/polyalg.hpp"
#include "klein/schwarz.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace klein {

// One use of contiguous_express inside the pipeline: F(target) expressed in
// the basis F(base), F'(base).
struct ContiguityUse {
    HGParams target;
    HGParams base;
    ContiguousRelation relation;
};

// A candidate value of the constant w together with the z-anchor it came
// from and whether the automorphism check accepted it.
struct WCandidate {
    QuadExt z_anchor;
    QuadExt w;
    bool accepted = false;
};

struct PullbackResult {
    ExponentTriple input;
    PointAssignment assignment;
    SchwarzType type;
    unsigned degree = 0;
    RatFunc psi;
    QuadExt w;
    CurveSpec curve;
    // z = w * relation(x, xi).
    RatFunc relation;
    // Multiplicities over Z = 0, 1, infinity.
    std::array<std::vector<unsigned>, 3> ramification;
    // Image of X = 0, 1, infinity under psi.
    std::array<ZPoint, 3> fiber;
    std::vector<WCandidate> w_candidates;
    std::vector<ContiguityUse> contiguity;
    // "resultant", "resultant-symmetric" or "series".
    std::string elimination;
};

// Exponent differences (1/m, 1/2, 1/3) of the standard equation at Z = 0, 1, infinity.
ExponentTriple standard_exponents(int m);

// Runs the full pipeline; throws std::domain_error for rejected input and
// std::runtime_error when a step fails.  The Schwarzian pull-back identity is
// checked before returning.
PullbackResult compute_covering(const ExponentTriple& e);

// The rational relation Phi with z proportional to (G1/G2)^(-m), normalized to
// primitive integer numerator and denominator with positive leading
// coefficients.  Throws std::runtime_error when fractional powers survive or
// the quotient is constant.
RatFunc schwarz_quotient(const RadicalExpr& G1, const RadicalExpr& G2, const SchwarzType& t,
                         const CurveSpec& curve = CurveSpec::rational());

// 2F1(lhs; X) = theta(X) * 2F1(rhs; psi(X)).
struct TransformationIdentity {
    HGParams lhs_params;
    RadicalExpr theta;
    HGParams rhs_params;
    RatFunc psi;
    std::string str() const;
};

TransformationIdentity derive_identity(const ExponentTriple& e, std::size_t order = 20);
// Same, reusing an already computed covering.
TransformationIdentity derive_identity(const PullbackResult& r, std::size_t order = 20);

// {psi, X} = psi'''/psi' - 3/2 (psi''/psi')^2.
RatFunc schwarzian_derivative(const RatFunc& psi, Var v = Var::X);
// Q1 - (Q0(psi) psi'^2 + {psi, X}); zero iff psi pulls H(standard) back to H(e).
RatFunc pullback_residual(const ExponentTriple& e, int m, const RatFunc& psi);
// The same residual at X = x0, or nullopt when x0 is singular for either side.
std::optional<Rational> pullback_residual_at(const ExponentTriple& e, int m, const RatFunc& psi, const Rational& x0);

// "27*X / (4*X - 1)^3".
std::string render_factored(const RatFunc& r, Var v = Var::X);

}  // namespace klein
