#pragma once

#include "klein/hyperg.hpp"
#include "klein/polyalg.hpp"
#include "klein/schwarz.hpp"
#include "klein/series.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace klein {

enum class CurveKind { Rational, Genus1 };

// P^1 with coordinate x, or the curve xi^2 = q(x).
struct CurveSpec {
    CurveKind kind = CurveKind::Rational;
    MultiPoly q;

    static CurveSpec rational() { return {}; }
    static CurveSpec genus1(const MultiPoly& q) { return {CurveKind::Genus1, q}; }
    bool is_rational() const { return kind == CurveKind::Rational; }
    std::string str() const;
    friend bool operator==(const CurveSpec& a, const CurveSpec& b) { return a.kind == b.kind && a.q == b.q; }
};

struct RadicalFactor {
    MultiPoly base;
    Rational exponent;
};

// prod base^exponent * rational.
struct RadicalExpr {
    std::vector<RadicalFactor> factors;
    RatFunc rational = RatFunc(1);
    std::string str() const;
};

struct Evaluation {
    std::string name;
    HGParams params;
    RadicalExpr value;
};

struct AnchorPoint {
    QuadExt x;
    QuadExt xi;
};

// (x, xi) -> (x_map, xi_map), paired with z -> -1/z on the standard side.
struct Automorphism {
    RatFunc x_map;
    RatFunc xi_map;
};

struct DarbouxEntry {
    int type_id;
    std::string label;
    CurveSpec curve;
    RatFunc phi;
    // phi = phi_constant * prod phi_factors (integer exponents).
    Rational phi_constant;
    std::vector<RadicalFactor> phi_factors;
    // Entries 0,1 and 2,3 are contiguous pairs; entry 2 is the local
    // companion x^(1-c) solution of entry 0.
    std::array<Evaluation, 4> evaluations;
    AnchorPoint anchor;
    std::vector<QuadExt> z_anchors;
    std::optional<Automorphism> automorphism;
};

const std::vector<DarbouxEntry>& database();
const DarbouxEntry& lookup(const SchwarzType& t);
const DarbouxEntry& lookup(int type_id);

// Standard Darboux covering Z = phi0(z) for m in {3,4,5}, in the symbol z.
RatFunc standard_covering(int m);
std::vector<RadicalFactor> standard_covering_factors(int m, Rational* constant);

// xi-degree <= 1 using xi^2 = q(x); xi -> 0 on the rational curve.
MultiPoly curve_reduce(const MultiPoly& p, const CurveSpec& curve);
// Rewrites r as (A + B*xi)/C with C free of xi.
RatFunc curve_reduce(const RatFunc& r, const CurveSpec& curve);
// Zero test on the curve.
bool vanishes_on_curve(const MultiPoly& p, const CurveSpec& curve);

RadicalExpr radical_mul(const RadicalExpr& a, const RadicalExpr& b, const CurveSpec& curve);
RadicalExpr radical_inverse(const RadicalExpr& a);

// Uniformizer t at x = 0: x = t on the rational curve, x = t^2 and
// xi = t*sqrt(q(t^2)/t^2) (principal branch) on genus-1 curves.  The result is
// t^offset times a series whose constant term is nonzero (or the zero series).
RatSeries puiseux_expand(const MultiPoly& p, const CurveSpec& curve, std::size_t order);
RatSeries puiseux_expand(const RatFunc& r, const CurveSpec& curve, std::size_t order);
RatSeries puiseux_expand(const RadicalExpr& e, const CurveSpec& curve, std::size_t order);
// The xi series itself (genus-1 only).
RatSeries xi_series(const CurveSpec& curve, std::size_t order);
// Converts t^k * s (integer k >= 0) into a plain power series of the same order.
RatSeries as_power_series(const RatSeries& s);

bool on_curve(const AnchorPoint& p, const CurveSpec& curve);
// Throws std::domain_error("anchor unusable") at a pole.
QuadExt evaluate_at_anchor(const RatFunc& r, const AnchorPoint& p);

// Line-oriented exact export of all identities, and its parser.
struct ExportRecord {
    std::string name;
    std::string type;
    std::string curve;
    std::string covering;
    HGParams params;
    std::vector<std::pair<std::string, Rational>> factors;
    std::string rational;
    friend bool operator==(const ExportRecord&, const ExportRecord&) = default;
};
std::vector<ExportRecord> export_records();
std::string render_export(const std::vector<ExportRecord>& records);
std::vector<ExportRecord> parse_export(const std::string& text);

}  // namespace klein
