#include "klein/darboux.hpp"

#include "darboux_data.hpp"

#include <sstream>
#include <stdexcept>

namespace klein {

std::string CurveSpec::str() const { return is_rational() ? "P1" : "xi^2 = " + q.str(); }

std::string RadicalExpr::str() const {
    std::string s;
    for (const auto& f : factors) {
        if (!s.empty()) s += " * ";
        s += "(" + f.base.str() + ")^(" + f.exponent.str() + ")";
    }
    if (!(rational == RatFunc(1)) || s.empty()) {
        if (!s.empty()) s += " * ";
        s += "(" + rational.str() + ")";
    }
    return s;
}

// ---------------------------------------------------------------- database

namespace {

std::vector<DarbouxEntry> build_database() {
    std::vector<DarbouxEntry> out;
    for (const auto& raw : detail::raw_database()) {
        DarbouxEntry e;
        e.type_id = raw.type_id;
        e.label = schwarz_types().at(raw.type_id).label;
        e.curve = raw.curve ? CurveSpec::genus1(MultiPoly::parse(raw.curve)) : CurveSpec::rational();
        e.phi = RatFunc::parse(raw.phi);
        e.phi_constant = Rational::parse(raw.phi_constant);
        for (const auto& [base, k] : raw.phi_factors)
            e.phi_factors.push_back({MultiPoly::parse(base), Rational(static_cast<long>(k))});
        for (std::size_t i = 0; i < 4; ++i) {
            const auto& r = raw.evaluations[i];
            Evaluation ev;
            ev.name = r.name;
            ev.params = {Rational::parse(r.a), Rational::parse(r.b), Rational::parse(r.c)};
            for (const auto& [base, ex] : r.factors)
                ev.value.factors.push_back({MultiPoly::parse(base), Rational::parse(ex)});
            ev.value.rational = RatFunc::parse(r.rational);
            e.evaluations[i] = ev;
        }
        e.anchor = {QuadExt::parse(raw.anchor_x), QuadExt::parse(raw.anchor_xi)};
        for (const char* z : raw.z_anchors) e.z_anchors.push_back(QuadExt::parse(z));
        if (raw.aut_x) e.automorphism = Automorphism{RatFunc::parse(raw.aut_x), RatFunc::parse(raw.aut_xi)};
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

const std::vector<DarbouxEntry>& database() {
    static const std::vector<DarbouxEntry> db = build_database();
    return db;
}

const DarbouxEntry& lookup(int type_id) {
    for (const auto& e : database())
        if (e.type_id == type_id) return e;
    throw std::out_of_range("no database entry for type " + std::to_string(type_id));
}

const DarbouxEntry& lookup(const SchwarzType& t) { return lookup(t.id); }

namespace {

int standard_type_id(int m) {
    switch (m) {
        case 3: return 0;
        case 4: return 2;
        case 5: return 4;
    }
    throw std::domain_error("standard covering needs m in {3,4,5}");
}

}  // namespace

RatFunc standard_covering(int m) {
    const auto& e = lookup(standard_type_id(m));
    return substitute(e.phi, {{Var::x, RatFunc::variable(Var::z)}});
}

std::vector<RadicalFactor> standard_covering_factors(int m, Rational* constant) {
    const auto& e = lookup(standard_type_id(m));
    if (constant) *constant = e.phi_constant;
    std::vector<RadicalFactor> out;
    for (const auto& f : e.phi_factors) out.push_back({f.base.rename(Var::x, Var::z), f.exponent});
    return out;
}

// ---------------------------------------------------------------- curve algebra

MultiPoly curve_reduce(const MultiPoly& p, const CurveSpec& curve) {
    if (!p.depends_on(Var::xi)) return p;
    if (curve.is_rational()) return p.evaluate(Var::xi, Rational(0));
    auto c = p.coefficients(Var::xi);
    MultiPoly even, odd, qk(1);
    for (std::size_t k = 0; k < c.size(); k += 2) {
        even += c[k] * qk;
        if (k + 1 < c.size()) odd += c[k + 1] * qk;
        qk *= curve.q;
    }
    return even + odd * MultiPoly::variable(Var::xi);
}

RatFunc curve_reduce(const RatFunc& r, const CurveSpec& curve) {
    MultiPoly n = curve_reduce(r.num(), curve);
    MultiPoly d = curve_reduce(r.den(), curve);
    if (d.is_zero()) throw std::domain_error("denominator vanishes on the curve");
    if (!d.depends_on(Var::xi)) return RatFunc(n, d);
    auto dc = d.coefficients(Var::xi);
    MultiPoly conj = dc[0] - dc[1] * MultiPoly::variable(Var::xi);
    MultiPoly nn = curve_reduce(n * conj, curve);
    MultiPoly dd = curve_reduce(d * conj, curve);
    return RatFunc(nn, dd);
}

bool vanishes_on_curve(const MultiPoly& p, const CurveSpec& curve) { return curve_reduce(p, curve).is_zero(); }

namespace {

// base2 = k * base1 for a rational k?
std::optional<Rational> proportional(const MultiPoly& a, const MultiPoly& b) {
    if (a.size() != b.size() || a.is_zero()) return std::nullopt;
    Rational k = b.lc() / a.lc();
    if (a * k == b) return k;
    return std::nullopt;
}

}  // namespace

RadicalExpr radical_mul(const RadicalExpr& a, const RadicalExpr& b, const CurveSpec& curve) {
    RadicalExpr r;
    RatFunc rat = a.rational * b.rational;
    std::vector<RadicalFactor> fs;
    auto absorb = [&](const RadicalFactor& f0) {
        RadicalFactor f{curve_reduce(f0.base, curve), f0.exponent};
        for (auto& g : fs) {
            auto k = proportional(g.base, f.base);
            if (!k) continue;
            // f.base^e = k^e * g.base^e
            Rational root;
            if (f.exponent.is_integer()) {
                rat *= RatFunc(k->pow(f.exponent.num().get_si()));
            } else if (exact_root(k->abs(), f.exponent.den().get_ui(), root) && k->sign() > 0) {
                rat *= RatFunc(root.pow(f.exponent.num().get_si()));
            } else {
                continue;
            }
            g.exponent += f.exponent;
            return;
        }
        fs.push_back(f);
    };
    for (const auto& f : a.factors) absorb(f);
    for (const auto& f : b.factors) absorb(f);
    for (const auto& f : fs) {
        if (f.exponent.is_zero()) continue;
        if (f.exponent.is_integer())
            rat *= RatFunc(f.base).pow(f.exponent.num().get_si());
        else
            r.factors.push_back(f);
    }
    r.rational = curve_reduce(rat, curve);
    return r;
}

RadicalExpr radical_inverse(const RadicalExpr& a) {
    RadicalExpr r = a;
    for (auto& f : r.factors) f.exponent = -f.exponent;
    r.rational = a.rational.inverse();
    return r;
}

// ---------------------------------------------------------------- series

RatSeries xi_series(const CurveSpec& curve, std::size_t order) {
    if (curve.is_rational()) throw std::domain_error("xi series on a rational curve");
    if (!curve.q.constant_term().is_zero()) throw std::domain_error("curve must pass through (0,0)");
    // q(x)/x with x = t^2
    RatSeries r(order);
    for (const auto& [m, c] : curve.q.terms()) {
        std::size_t k = 2 * (m[Var::x] - 1);
        if (k < order) r[k] += c;
    }
    if (r[0].sign() <= 0) throw std::domain_error("xi series needs q(x)/x > 0 at x = 0");
    return r.pow(Rational(1, 2)).shifted(1);
}

namespace {

constexpr std::size_t kPad = 48;

RatSeries raw_series(const MultiPoly& p0, const CurveSpec& curve, std::size_t order) {
    MultiPoly p = curve_reduce(p0, curve);
    RatSeries s(order);
    if (curve.is_rational()) {
        for (const auto& [m, c] : p.terms()) {
            for (std::size_t i = 0; i < kNumVars; ++i)
                if (m.e[i] && static_cast<Var>(i) != Var::x)
                    throw std::domain_error("unexpected symbol in a curve function: " +
                                            std::string(var_name(static_cast<Var>(i))));
            if (m[Var::x] < order) s[m[Var::x]] += c;
        }
        return s;
    }
    RatSeries xs = xi_series(curve, order);
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = 0; i < kNumVars; ++i)
            if (m.e[i] && static_cast<Var>(i) != Var::x && static_cast<Var>(i) != Var::xi)
                throw std::domain_error("unexpected symbol in a curve function: " +
                                        std::string(var_name(static_cast<Var>(i))));
        std::size_t k = 2 * m[Var::x];
        if (k >= order) continue;
        RatSeries term = m[Var::xi] ? xs : RatSeries(order, Rational(1));
        s += term.shifted(static_cast<long>(k)) * c;
    }
    return s;
}

}  // namespace

RatSeries puiseux_expand(const MultiPoly& p, const CurveSpec& curve, std::size_t order) {
    for (std::size_t pad = kPad;; pad *= 2) {
        RatSeries s = raw_series(p, curve, order + pad);
        std::size_t v = s.valuation();
        if (v < pad) {
            RatSeries r = s.shifted(-static_cast<long>(v)).truncated(order);
            r.set_offset(Rational(static_cast<long>(v)));
            return r;
        }
        if (vanishes_on_curve(p, curve)) throw std::domain_error("function vanishes identically on the curve");
    }
}

RatSeries puiseux_expand(const RatFunc& r, const CurveSpec& curve, std::size_t order) {
    if (r.is_zero()) return RatSeries(order);
    RatSeries n = puiseux_expand(r.num(), curve, order);
    RatSeries d = puiseux_expand(r.den(), curve, order);
    RatSeries q = n * d.inverse();
    return q;
}

RatSeries puiseux_expand(const RadicalExpr& e, const CurveSpec& curve, std::size_t order) {
    RatSeries s = puiseux_expand(e.rational, curve, order);
    for (const auto& f : e.factors) {
        RatSeries b = puiseux_expand(f.base, curve, order);
        try {
            s *= b.pow(f.exponent);
        } catch (const std::domain_error&) {
            throw std::domain_error("radical base " + f.base.str() + " has no principal branch at t = 0");
        }
    }
    return s;
}

RatSeries as_power_series(const RatSeries& s) {
    const Rational& off = s.offset();
    if (!off.is_integer() || off.sign() < 0)
        throw std::domain_error("series has offset t^(" + off.str() + ")");
    RatSeries r = s.shifted(off.num().get_si());
    r.set_offset(Rational(0));
    return r;
}

// ---------------------------------------------------------------- anchors

bool on_curve(const AnchorPoint& p, const CurveSpec& curve) {
    if (curve.is_rational()) return true;
    QuadExt qx = curve.q.evaluate({{Var::x, p.x}});
    return p.xi * p.xi == qx;
}

QuadExt evaluate_at_anchor(const RatFunc& r, const AnchorPoint& p) {
    std::map<Var, QuadExt> point = {{Var::x, p.x}, {Var::xi, p.xi}};
    QuadExt d = r.den().evaluate(point);
    if (d.is_zero()) throw std::domain_error("anchor unusable: pole at x = " + p.x.pretty());
    return r.num().evaluate(point) / d;
}

// ---------------------------------------------------------------- export

std::vector<ExportRecord> export_records() {
    std::vector<ExportRecord> out;
    for (const auto& e : database())
        for (const auto& ev : e.evaluations) {
            ExportRecord r;
            r.name = ev.name;
            r.type = e.label;
            r.curve = e.curve.str();
            r.covering = cleared_str(e.phi);
            r.params = ev.params;
            for (const auto& f : ev.value.factors) r.factors.emplace_back(f.base.str(), f.exponent);
            r.rational = cleared_str(ev.value.rational);
            out.push_back(std::move(r));
        }
    return out;
}

std::string render_export(const std::vector<ExportRecord>& records) {
    std::ostringstream os;
    for (const auto& r : records) {
        os << "identity " << r.name << "\n";
        os << "type " << r.type << "\n";
        os << "curve " << r.curve << "\n";
        os << "covering " << r.covering << "\n";
        os << "params " << r.params.a << " " << r.params.b << " " << r.params.c << "\n";
        for (const auto& [base, ex] : r.factors) os << "factor " << base << " ^ " << ex << "\n";
        os << "rational " << r.rational << "\n";
        os << "end\n";
    }
    return os.str();
}

std::vector<ExportRecord> parse_export(const std::string& text) {
    std::vector<ExportRecord> out;
    std::istringstream is(text);
    std::string line;
    std::optional<ExportRecord> cur;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("export line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto sp = line.find(' ');
        std::string key = line.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : line.substr(sp + 1);
        if (key == "identity") {
            if (cur) fail("missing 'end'");
            cur = ExportRecord{};
            cur->name = rest;
            continue;
        }
        if (!cur) fail("record does not start with 'identity'");
        if (key == "type") {
            cur->type = rest;
        } else if (key == "curve") {
            cur->curve = rest;
        } else if (key == "covering") {
            cur->covering = rest;
            RatFunc::parse(rest);
        } else if (key == "params") {
            std::istringstream ps(rest);
            std::string a, b, c;
            if (!(ps >> a >> b >> c)) fail("params needs three rationals");
            cur->params = {Rational::parse(a), Rational::parse(b), Rational::parse(c)};
        } else if (key == "factor") {
            auto pos = rest.rfind(" ^ ");
            if (pos == std::string::npos) fail("factor needs 'base ^ exponent'");
            std::string base = rest.substr(0, pos);
            MultiPoly::parse(base);
            cur->factors.emplace_back(base, Rational::parse(rest.substr(pos + 3)));
        } else if (key == "rational") {
            cur->rational = rest;
            RatFunc::parse(rest);
        } else if (key == "end") {
            out.push_back(*cur);
            cur.reset();
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    if (cur) fail("missing 'end'");
    return out;
}

}  // namespace klein
