#include "klein/klein.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klein {

ExponentTriple standard_exponents(int m) { return {Rational(1, m), Rational(1, 2), Rational(1, 3)}; }

namespace {

// ---------------------------------------------------------------- roots on the curve

// Product of the squarefree parts of a univariate p, each to multiplicity/n,
// when every multiplicity is divisible by n (constants ignored).
std::optional<MultiPoly> poly_root(const MultiPoly& p, unsigned n, Var v) {
    if (p.is_zero()) return std::nullopt;
    if (p.is_constant()) return MultiPoly(1);
    for (Var u : p.variables())
        if (u != v) return std::nullopt;
    MultiPoly r(1);
    for (const auto& f : squarefree(p, v)) {
        if (f.multiplicity % n) return std::nullopt;
        r *= f.factor.pow(f.multiplicity / n);
    }
    return r;
}

std::optional<RatFunc> ratfunc_root(const RatFunc& T, unsigned n) {
    auto a = poly_root(T.num(), n, Var::x);
    auto b = poly_root(T.den(), n, Var::x);
    if (!a || !b) return std::nullopt;
    return RatFunc(*a, *b);
}

// Exact square root including the constant.
std::optional<RatFunc> exact_sqrt(const RatFunc& T) {
    auto g = ratfunc_root(T, 2);
    if (!g) return std::nullopt;
    RatFunc k = T / (*g * *g);
    if (!k.is_constant()) return std::nullopt;
    Rational kc = k.num().constant_term() / k.den().constant_term(), r;
    if (kc.sign() < 0 || !exact_root(kc, 2, r)) return std::nullopt;
    return *g * RatFunc(r);
}

RatFunc curve_norm(const RatFunc& T, const CurveSpec& curve) {
    RatFunc r = curve_reduce(T, curve);
    auto c = r.num().coefficients(Var::xi);
    MultiPoly A = c.empty() ? MultiPoly() : c[0];
    MultiPoly B = c.size() > 1 ? c[1] : MultiPoly();
    return RatFunc(A * A - B * B * curve.q, r.den() * r.den());
}

bool has_xi(const RatFunc& r) { return r.num().depends_on(Var::xi) || r.den().depends_on(Var::xi); }

// S with S^p proportional to T on the curve, p prime.
std::optional<RatFunc> curve_root_prime(const RatFunc& T0, unsigned p, const CurveSpec& curve) {
    RatFunc T = curve_reduce(T0, curve);
    if (!has_xi(T)) {
        if (auto r = ratfunc_root(T, p)) return *r;
        if (p == 2 && !curve.is_rational())
            if (auto s = ratfunc_root(T / RatFunc(curve.q), 2))
                return curve_reduce(*s * RatFunc::variable(Var::xi), curve);
        return std::nullopt;
    }
    if (p != 2) return std::nullopt;
    // T = k (a + b xi)^2: with nu = +-k N(a + b xi), T + nu = 2 k a (a + b xi).
    auto nu0 = exact_sqrt(curve_norm(T, curve));
    if (!nu0) return std::nullopt;
    for (int sgn : {1, -1}) {
        RatFunc nu = *nu0 * RatFunc(sgn);
        RatFunc W = curve_reduce(T + nu, curve);
        if (W.is_zero()) continue;
        RatFunc U = curve_norm(W, curve) / (RatFunc(4) * nu);
        if (has_xi(U)) continue;
        auto a = ratfunc_root(U, 2);
        if (!a) continue;
        RatFunc S = curve_reduce(W / *a, curve);
        RatFunc check = curve_reduce(S * S / T, curve);
        if (check.is_constant()) return S;
    }
    return std::nullopt;
}

std::optional<RatFunc> curve_root(RatFunc T, unsigned long n, const CurveSpec& curve) {
    for (unsigned long p = 2; n > 1; ++p)
        while (n % p == 0) {
            auto r = curve_root_prime(T, static_cast<unsigned>(p), curve);
            if (!r) return std::nullopt;
            T = *r;
            n /= p;
        }
    return T;
}

MultiPoly normalize_base(const MultiPoly& b, const CurveSpec& curve) {
    MultiPoly r = curve_reduce(b, curve);
    if (r.is_zero()) throw std::runtime_error("radical base vanishes on the curve");
    if (r.is_constant()) return MultiPoly(1);
    return r.primitive_integer();
}

RatFunc normalize_relation(const RatFunc& r) {
    return RatFunc(r.num().primitive_integer(), r.den().primitive_integer());
}

// ---------------------------------------------------------------- Laurent series

// t^v * sum_{k < c.size()} c_k t^k, exact in all listed coefficients.
struct Laurent {
    long v = 0;
    std::vector<Rational> c;

    static Laurent constant(const Rational& r, std::size_t n) {
        Laurent l;
        l.c.assign(n, Rational(0));
        if (n) l.c[0] = r;
        return l;
    }
    static Laurent from(const RatSeries& s) {
        if (!s.offset().is_integer()) throw std::logic_error("fractional t-offset in elimination");
        return {s.offset().num().get_si(), s.coeffs()};
    }
    long top() const { return v + static_cast<long>(c.size()); }

    void normalize() {
        std::size_t k = 0;
        while (k < c.size() && c[k].is_zero()) ++k;
        c.erase(c.begin(), c.begin() + static_cast<long>(k));
        v += static_cast<long>(k);
    }
    Rational at(long power) const {
        long i = power - v;
        if (i < 0) return Rational(0);
        if (i >= static_cast<long>(c.size())) throw std::logic_error("Laurent coefficient beyond precision");
        return c[i];
    }
};

Laurent operator*(const Laurent& a, const Laurent& b) {
    std::size_t n = std::min(a.c.size(), b.c.size());
    Laurent r;
    r.v = a.v + b.v;
    r.c.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r;
    r.v = std::min(a.v, b.v);
    long top = std::min(a.top(), b.top());
    if (top < r.v) top = r.v;
    r.c.assign(static_cast<std::size_t>(top - r.v), Rational(0));
    for (long p = r.v; p < top; ++p) r.c[p - r.v] = a.at(p) + b.at(p);
    return r;
}

Laurent operator*(Laurent a, const Rational& s) {
    for (auto& x : a.c) x *= s;
    return a;
}

Laurent inverse(Laurent a) {
    a.normalize();
    if (a.c.empty()) throw std::runtime_error("elimination series lost all precision");
    RatSeries s(a.c);
    RatSeries inv = s.inverse();
    return {-a.v, inv.coeffs()};
}

Laurent laurent_of(const RatFunc& r, const CurveSpec& curve, std::size_t order) {
    Laurent n = Laurent::from(puiseux_expand(r.num(), curve, order));
    Laurent d = Laurent::from(puiseux_expand(r.den(), curve, order));
    return n * inverse(d);
}

Laurent horner(const MultiPoly& p, Var v, const Laurent& z, std::size_t big) {
    auto coeffs = p.coefficients(v);
    Laurent r = Laurent::constant(Rational(0), big);
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        r = r * z + Laurent::constant(coeffs[k].constant_term(), big);
        r.normalize();
    }
    return r;
}

// ---------------------------------------------------------------- linear algebra

// Nullspace of a dense rational matrix (rows x cols).
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> M, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < M.size(); ++col) {
        std::size_t piv = row;
        while (piv < M.size() && M[piv][col].is_zero()) ++piv;
        if (piv == M.size()) continue;
        std::swap(M[row], M[piv]);
        Rational inv = M[row][col].inverse();
        for (auto& x : M[row]) x *= inv;
        for (std::size_t r = 0; r < M.size(); ++r) {
            if (r == row || M[r][col].is_zero()) continue;
            Rational f = M[r][col];
            for (std::size_t k = col; k < cols; ++k) M[r][k] -= f * M[row][k];
        }
        pivots.push_back(col);
        ++row;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t fcol = 0; fcol < cols; ++fcol) {
        if (std::find(pivots.begin(), pivots.end(), fcol) != pivots.end()) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[fcol] = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -M[i][fcol];
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------- orbit resolution

std::optional<HGParams> orient_to(const HGParams& p, const HGParams& base) {
    for (const HGParams& q : {p, HGParams{p.b, p.a, p.c}})
        if ((q.a - base.a).is_integer() && (q.b - base.b).is_integer() && (q.c - base.c).is_integer()) return q;
    return std::nullopt;
}

HGParams companion(const HGParams& p) {
    return {Rational(1) + p.a - p.c, Rational(1) + p.b - p.c, Rational(2) - p.c};
}

RatFunc at_phi(const RatFunc& r, const DarbouxEntry& e) {
    return curve_reduce(substitute(r, {{Var::X, e.phi}}), e.curve);
}

// 2F1(target; phi) as a radical expression, through the database pair (i, j).
RadicalExpr express_via_pair(const HGParams& target, int i, int j, const DarbouxEntry& e,
                             std::vector<ContiguityUse>& uses) {
    const Evaluation& Ei = e.evaluations[i];
    const Evaluation& Ej = e.evaluations[j];
    auto oj = orient_to(Ej.params, Ei.params);
    if (!oj) throw std::logic_error("database pair is not contiguous");
    ContiguousRelation R = contiguous_express(target, Ei.params);
    ContiguousRelation C = contiguous_express(*oj, Ei.params);
    uses.push_back({target, Ei.params, R});
    uses.push_back({*oj, Ei.params, C});
    if (C.r1.is_zero()) throw std::runtime_error("database pair is linearly dependent");
    RatFunc A = R.r0 - R.r1 * C.r0 / C.r1;
    RatFunc B = R.r1 / C.r1;
    RadicalExpr ratio = radical_mul(Ej.value, radical_inverse(Ei.value), e.curve);
    if (!ratio.factors.empty())
        throw std::runtime_error("radical parts of " + Ei.name + " and " + Ej.name + " differ by a fractional power");
    RadicalExpr out = Ei.value;
    out.rational = curve_reduce(Ei.value.rational * (at_phi(A, e) + at_phi(B, e) * ratio.rational), e.curve);
    return out;
}

// (1 - X)^lambda at X = phi, constants dropped.
std::vector<RadicalFactor> one_minus_phi_power(const DarbouxEntry& e, const Rational& lambda) {
    MultiPoly N = e.phi.num(), D = e.phi.den();
    return {{D - N, lambda}, {D, -lambda}};
}

// X^lambda at X = phi, constants dropped.
std::vector<RadicalFactor> phi_power(const DarbouxEntry& e, const Rational& lambda) {
    std::vector<RadicalFactor> out;
    for (const auto& f : e.phi_factors) out.push_back({f.base, f.exponent * lambda});
    return out;
}

struct OrbitChoice {
    RadicalExpr G1, G2;
    RatFunc relation;
    std::vector<ContiguityUse> uses;
};

OrbitChoice resolve_orbits(const HGParams& p1, const DarbouxEntry& e, const SchwarzType& t) {
    const std::array<std::pair<std::array<int, 2>, std::array<int, 2>>, 2> pairings = {
        {{{0, 1}, {2, 3}}, {{2, 3}, {0, 1}}}};
    const std::array<std::pair<bool, bool>, 4> flags = {{{false, false}, {true, true}, {false, true}, {true, false}}};
    HGParams eu = euler_transform(p1).first;
    Rational lambda = p1.c - p1.a - p1.b;
    std::string failures;
    for (const auto& [pa, pb] : pairings)
        for (const auto& [f1, f2] : flags) {
            HGParams q1 = f1 ? eu : p1;
            HGParams q2 = companion(f2 ? eu : p1);
            auto o1 = orient_to(q1, e.evaluations[pa[0]].params);
            auto o2 = orient_to(q2, e.evaluations[pb[0]].params);
            if (!o1 || !o2) continue;
            try {
                OrbitChoice s;
                s.G1 = express_via_pair(*o1, pa[0], pa[1], e, s.uses);
                s.G2 = express_via_pair(*o2, pb[0], pb[1], e, s.uses);
                if (f1)
                    for (auto& f : one_minus_phi_power(e, lambda)) s.G1.factors.push_back(f);
                if (f2)
                    for (auto& f : one_minus_phi_power(e, lambda)) s.G2.factors.push_back(f);
                for (auto& f : phi_power(e, Rational(1) - p1.c)) s.G2.factors.push_back(f);
                s.relation = schwarz_quotient(s.G1, s.G2, t, e.curve);
                return s;
            } catch (const std::exception& ex) {
                failures += std::string(failures.empty() ? "" : "; ") + ex.what();
            }
        }
    throw std::runtime_error("no contiguity orbit of " + e.label + " matches " + p1.str() +
                             (failures.empty() ? "" : ": " + failures));
}

// ---------------------------------------------------------------- elimination

Rational rational_w(const QuadExt& w) {
    if (!w.is_rational()) throw std::runtime_error("constant w = " + w.pretty() + " is irrational");
    return w.rational_part();
}

RatFunc eliminate_resultant(const DarbouxEntry& e, const RatFunc& Phi, const Rational& w, int m) {
    RatFunc phi0 = standard_covering(m);
    MultiPoly Z = MultiPoly::variable(Var::Z), X = MultiPoly::variable(Var::X), z = MultiPoly::variable(Var::z);
    MultiPoly A = Z * phi0.den() - phi0.num();
    MultiPoly lin = z * Phi.den() - Phi.num() * w;
    MultiPoly P1 = resultant(A, lin, Var::z);
    MultiPoly P = resultant(P1, X * e.phi.den() - e.phi.num(), Var::x);
    return extract_linear_factor(P, Var::X, Var::Z);
}

// The symmetric route for entries with x -> -1/x: alpha = x - 1/x, beta = z - 1/z.
RatFunc eliminate_symmetric(const DarbouxEntry& e, const RatFunc& Phi, const Rational& w, int m) {
    RatFunc phi0 = standard_covering(m);
    MultiPoly x = MultiPoly::variable(Var::x), z = MultiPoly::variable(Var::z);
    MultiPoly al = MultiPoly::variable(Var::alpha), be = MultiPoly::variable(Var::beta);
    MultiPoly X = MultiPoly::variable(Var::X), Z = MultiPoly::variable(Var::Z);
    MultiPoly qx = x * x - al * x - MultiPoly(1);
    MultiPoly qz = z * z - be * z - MultiPoly(1);
    RatFunc Xa = extract_linear_factor(resultant(qx, X * e.phi.den() - e.phi.num(), Var::x), Var::alpha, Var::X);
    RatFunc Zb = extract_linear_factor(resultant(qz, Z * phi0.den() - phi0.num(), Var::z), Var::beta, Var::Z);
    const MultiPoly &Pn = Phi.num(), &Pd = Phi.den();
    MultiPoly rel = be * Pn * Pd * w - (Pn * Pn * (w * w) - Pd * Pd);
    RatFunc Ba = extract_linear_factor(resultant(qx, rel, Var::x), Var::alpha, Var::beta);
    MultiPoly P1 = resultant(Z * Zb.den() - Zb.num(), be * Ba.den() - Ba.num(), Var::beta);
    MultiPoly P = resultant(P1, X * Xa.den() - Xa.num(), Var::alpha);
    return extract_linear_factor(P, Var::X, Var::Z);
}

// Undetermined coefficients for psi = sum a_i X^i / sum b_i X^i of degree d,
// matched on the t-expansions of X and Z at x = 0.
RatFunc eliminate_series(const DarbouxEntry& e, const RatFunc& Phi, const Rational& w, int m, unsigned d) {
    RatFunc phi0 = standard_covering(m);
    for (std::size_t extra = 24;; extra *= 2) {
        Laurent Xs = laurent_of(e.phi, e.curve, 8);
        Xs.normalize();
        if (Xs.v <= 0) throw std::runtime_error("X does not vanish at the expansion point");
        std::size_t N = (2 * d + 2) * static_cast<std::size_t>(Xs.v) + extra;
        Xs = laurent_of(e.phi, e.curve, N);
        Laurent zs = laurent_of(Phi, e.curve, N) * w;
        zs.normalize();
        std::size_t big = N + 1;
        Laurent Zn = horner(phi0.num(), Var::z, zs, big);
        Laurent Zd = horner(phi0.den(), Var::z, zs, big);
        Laurent Zs = Zn * inverse(Zd);
        std::vector<Laurent> cols;
        Laurent Xi = Laurent::constant(Rational(1), big);
        for (unsigned i = 0; i <= d; ++i) {
            cols.push_back(Xi * Rational(-1));
            Xi = Xi * Xs;
        }
        Xi = Laurent::constant(Rational(1), big);
        for (unsigned i = 0; i <= d; ++i) {
            cols.push_back(Xi * Zs);
            Xi = Xi * Xs;
        }
        long lo = cols.front().v, hi = cols.front().top();
        for (const auto& c : cols) {
            lo = std::min(lo, c.v);
            hi = std::min(hi, c.top());
        }
        std::size_t unknowns = cols.size();
        if (hi - lo < static_cast<long>(unknowns) + 8) {
            if (extra > 800) throw std::runtime_error("series elimination: not enough precision");
            continue;
        }
        std::vector<std::vector<Rational>> M;
        for (long p = lo; p < hi; ++p) {
            std::vector<Rational> row(unknowns);
            for (std::size_t k = 0; k < unknowns; ++k) row[k] = cols[k].at(p);
            M.push_back(std::move(row));
        }
        auto ns = nullspace(std::move(M), unknowns);
        if (ns.size() != 1) {
            if (extra > 800) throw std::runtime_error("series elimination: nullspace dimension " + std::to_string(ns.size()));
            continue;
        }
        MultiPoly A, B;
        for (unsigned i = 0; i <= d; ++i) {
            A += MultiPoly::variable(Var::X, i) * ns[0][i];
            B += MultiPoly::variable(Var::X, i) * ns[0][d + 1 + i];
        }
        if (B.is_zero()) throw std::runtime_error("series elimination produced no Klein factor");
        return RatFunc(A, B);
    }
}

ZPoint zpoint_of(const std::optional<Rational>& v) {
    if (!v) return ZPoint::Infinity;
    if (v->is_zero()) return ZPoint::Zero;
    if (v->is_one()) return ZPoint::One;
    throw std::runtime_error("covering maps a singular point to Z = " + v->str());
}

std::string w_list(const std::vector<WCandidate>& c) {
    std::string s;
    for (const auto& k : c) s += (s.empty() ? "" : ", ") + k.w.pretty();
    return "{" + s + "}";
}

}  // namespace

// ---------------------------------------------------------------- Schwarz quotient

RatFunc schwarz_quotient(const RadicalExpr& G1, const RadicalExpr& G2, const SchwarzType& t, const CurveSpec& curve) {
    std::vector<std::pair<MultiPoly, Rational>> bag;
    auto add = [&](const MultiPoly& base, const Rational& e) {
        MultiPoly b = normalize_base(base, curve);
        if (b.is_constant() || e.is_zero()) return;
        for (auto& [bb, ee] : bag)
            if (bb == b) {
                ee += e;
                return;
            }
        bag.emplace_back(b, e);
    };
    for (const auto& f : G1.factors) add(f.base, f.exponent);
    for (const auto& f : G2.factors) add(f.base, -f.exponent);
    Rational mm(static_cast<long>(-t.m));
    RatFunc Phi = curve_reduce(G1.rational / G2.rational, curve).pow(-t.m);
    mpz_class L = 1;
    std::vector<std::pair<MultiPoly, Rational>> frac;
    for (const auto& [b, e] : bag) {
        Rational E = e * mm;
        if (E.is_zero()) continue;
        if (E.is_integer()) {
            Phi = curve_reduce(Phi * RatFunc(b).pow(E.num().get_si()), curve);
        } else {
            frac.emplace_back(b, E);
            mpz_class den = E.den();
            mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), den.get_mpz_t());
        }
    }
    if (!frac.empty()) {
        RatFunc T(1);
        for (const auto& [b, E] : frac) T = curve_reduce(T * RatFunc(b).pow((E * Rational(L)).num().get_si()), curve);
        auto S = curve_root(T, L.get_ui(), curve);
        if (!S) throw std::runtime_error("fractional powers of the Schwarz quotient do not cancel");
        Phi = curve_reduce(Phi * *S, curve);
    }
    if (Phi.num().is_constant() && Phi.den().is_constant()) throw std::runtime_error("constant Schwarz quotient");
    return normalize_relation(Phi);
}

// ---------------------------------------------------------------- Schwarzian

RatFunc schwarzian_derivative(const RatFunc& psi, Var v) {
    RatFunc d1 = psi.derivative(v);
    if (d1.is_zero()) throw std::domain_error("Schwarzian derivative of a constant");
    RatFunc d2 = d1.derivative(v), d3 = d2.derivative(v);
    RatFunc r = d2 / d1;
    return d3 / d1 - RatFunc(Rational(3, 2)) * r * r;
}

RatFunc pullback_residual(const ExponentTriple& e, int m, const RatFunc& psi) {
    RatFunc Q1 = schwarzian_data(e);
    RatFunc Q0 = schwarzian_data(standard_exponents(m), Var::Z);
    RatFunc d1 = psi.derivative(Var::X);
    RatFunc pulled = substitute(Q0, {{Var::Z, psi}}) * d1 * d1 + schwarzian_derivative(psi);
    return Q1 - pulled;
}

std::optional<Rational> pullback_residual_at(const ExponentTriple& e, int m, const RatFunc& psi, const Rational& x0) {
    if (x0.is_zero() || x0.is_one()) return std::nullopt;
    // Taylor coefficients at x0 up to h^3
    auto taylor = [&](MultiPoly p) {
        RatSeries s(4);
        Rational fact(1);
        for (long k = 0; k < 4; ++k) {
            if (k) fact *= Rational(k);
            s[k] = p.evaluate(Var::X, x0).constant_term() / fact;
            p = p.derivative(Var::X);
        }
        return s;
    };
    RatSeries d = taylor(psi.den());
    if (d[0].is_zero()) return std::nullopt;
    RatSeries f = taylor(psi.num()) * d.inverse();
    const Rational& z0 = f[0];
    Rational d1 = f[1], d2 = f[2] * Rational(2), d3 = f[3] * Rational(6);
    if (d1.is_zero() || z0.is_zero() || z0.is_one()) return std::nullopt;
    Rational q = d2 / d1;
    Rational schwarzian = d3 / d1 - Rational(3, 2) * q * q;
    Rational q0 = schwarzian_data(standard_exponents(m), Var::Z).evaluate({{Var::Z, QuadExt(z0)}}).rational_part();
    Rational q1 = schwarzian_data(e).evaluate({{Var::X, QuadExt(x0)}}).rational_part();
    return q1 - (q0 * d1 * d1 + schwarzian);
}

// ---------------------------------------------------------------- pipeline

PullbackResult compute_covering(const ExponentTriple& e) {
    Classification cls = classify(e);
    if (cls.rejection != Rejection::None) throw std::domain_error(cls.reason);
    const SchwarzType& t = *cls.type;
    PullbackResult res;
    res.input = e;
    res.type = t;
    res.degree = covering_degree(e, t.m);
    res.assignment = assign_points(e, t);
    const DarbouxEntry& entry = lookup(t);
    res.curve = entry.curve;
    HGParams p1 = params_from_exponents(res.assignment.exponents);

    OrbitChoice s5 = resolve_orbits(p1, entry, t);
    res.relation = s5.relation;
    res.contiguity = std::move(s5.uses);

    // The constant w from the anchor point.
    QuadExt Phi_a = evaluate_at_anchor(res.relation, entry.anchor);
    if (Phi_a.is_zero()) throw std::domain_error("anchor unusable: relation vanishes at x = " + entry.anchor.x.pretty());
    std::optional<QuadExt> sigma_product;
    if (entry.automorphism) {
        RatFunc Ps = curve_reduce(substitute(res.relation, {{Var::x, entry.automorphism->x_map},
                                                           {Var::xi, entry.automorphism->xi_map}}),
                                  res.curve);
        RatFunc prod = curve_reduce(res.relation * Ps, res.curve);
        if (!prod.is_constant())
            throw std::runtime_error("relation is not compatible with the automorphism of " + entry.label);
        sigma_product = QuadExt(prod.num().constant_term() / prod.den().constant_term());
    }
    for (const QuadExt& za : entry.z_anchors) {
        WCandidate c{za, za / Phi_a, true};
        if (sigma_product) c.accepted = c.w * c.w * *sigma_product == QuadExt(-1);
        res.w_candidates.push_back(c);
    }
    auto chosen = std::find_if(res.w_candidates.begin(), res.w_candidates.end(),
                               [](const WCandidate& c) { return c.accepted; });
    if (chosen == res.w_candidates.end())
        throw std::runtime_error("no z-anchor is compatible with the automorphism; candidates " +
                                 w_list(res.w_candidates));
    res.w = chosen->w;

    // Eliminate x between the curve and z = w * Phi.
    Rational w = rational_w(res.w);
    try {
        if (!res.curve.is_rational()) {
            res.elimination = "series";
            res.psi = eliminate_series(entry, res.relation, w, t.m, res.degree);
        } else if (entry.automorphism) {
            res.elimination = "resultant-symmetric";
            res.psi = eliminate_symmetric(entry, res.relation, w, t.m);
        } else {
            res.elimination = "resultant";
            res.psi = eliminate_resultant(entry, res.relation, w, t.m);
        }
    } catch (const std::runtime_error& ex) {
        throw std::runtime_error(std::string(ex.what()) + " (w candidates " + w_list(res.w_candidates) + ")");
    }

    if (map_degree(res.psi) != res.degree)
        throw std::runtime_error("covering has degree " + std::to_string(map_degree(res.psi)) + ", expected " +
                                 std::to_string(res.degree));
    if (!pullback_residual(res.assignment.exponents, t.m, res.psi).is_zero())
        throw std::runtime_error("Schwarzian pull-back check failed for psi = " + res.psi.str());

    res.ramification = {ramification_pattern(res.psi, Rational(0)), ramification_pattern(res.psi, Rational(1)),
                        ramification_pattern(res.psi, std::nullopt)};
    res.fiber = {zpoint_of(local_behaviour(res.psi, Rational(0)).value),
                 zpoint_of(local_behaviour(res.psi, Rational(1)).value),
                 zpoint_of(local_behaviour(res.psi, std::nullopt).value)};
    return res;
}

// ---------------------------------------------------------------- identities

std::string TransformationIdentity::str() const {
    auto f = [](const HGParams& p, const std::string& arg) {
        return "2F1(" + p.a.str() + ", " + p.b.str() + "; " + p.c.str() + "; " + arg + ")";
    };
    std::string th;
    for (const auto& r : theta.factors) th += "(" + r.base.str() + ")^(" + r.exponent.str() + ") * ";
    return f(lhs_params, "X") + " = " + th + f(rhs_params, "Z") + ",  Z = " + render_factored(psi);
}

TransformationIdentity derive_identity(const ExponentTriple& e, std::size_t order) {
    return derive_identity(compute_covering(e), order);
}

TransformationIdentity derive_identity(const PullbackResult& r, std::size_t order) {
    if (order < 4) throw std::domain_error("identity order must be at least 4");
    TransformationIdentity id;
    id.lhs_params = params_from_exponents(r.assignment.exponents);
    id.rhs_params = params_from_exponents(standard_exponents(r.type.m));
    id.psi = r.psi;
    if (!r.psi.num().constant_term().is_zero() || r.psi.den().constant_term().is_zero())
        throw std::domain_error("X = 0 does not lie above Z = 0");

    // Candidate factors, normalized to f(0) = 1.
    std::vector<MultiPoly> cands;
    auto collect = [&](const MultiPoly& p) {
        if (p.is_constant()) return;
        for (const auto& [f, k] : factor_univariate(p, Var::X).factors) {
            if (f == MultiPoly::variable(Var::X)) continue;
            MultiPoly g = f / f.constant_term();
            if (std::find(cands.begin(), cands.end(), g) == cands.end()) cands.push_back(g);
        }
    };
    collect(r.psi.num());
    collect(r.psi.den());
    collect((r.psi - RatFunc(1)).num());

    std::size_t N = order;
    RatSeries lhs = series_2f1(id.lhs_params, N);
    RatSeries rhs = series_2f1_at(id.rhs_params, series_of(r.psi, Var::X, N));
    RatSeries ratio = lhs * rhs.inverse();
    RatSeries target = ratio.derivative() * ratio.inverse();
    std::vector<RatSeries> logd;
    for (const auto& f : cands) {
        RatSeries s = series_of(f, Var::X, N);
        logd.push_back(s.derivative() * s.inverse());
    }
    // sum eps_k logd_k = target on the coefficients below N - 1.
    std::size_t n = cands.size();
    std::vector<std::vector<Rational>> M;
    for (std::size_t j = 0; j + 1 < N; ++j) {
        std::vector<Rational> row(n + 1);
        for (std::size_t k = 0; k < n; ++k) row[k] = logd[k][j];
        row[n] = -target[j];
        M.push_back(std::move(row));
    }
    auto ns = nullspace(M, n + 1);
    std::optional<std::vector<Rational>> eps;
    for (const auto& v : ns)
        if (!v[n].is_zero()) {
            std::vector<Rational> sol(n);
            for (std::size_t k = 0; k < n; ++k) sol[k] = v[k] / v[n];
            eps = sol;
            break;
        }
    if (!eps) {
        bool zero = true;
        for (std::size_t j = 0; j + 1 < N; ++j) zero = zero && target[j].is_zero();
        if (!zero) throw std::runtime_error("prefactor not of assumed form");
        eps = std::vector<Rational>(n, Rational(0));
    }
    RatSeries theta(N, Rational(1));
    for (std::size_t k = 0; k < n; ++k) {
        if ((*eps)[k].is_zero()) continue;
        id.theta.factors.push_back({cands[k], (*eps)[k]});
        theta *= series_of(cands[k], Var::X, N).pow((*eps)[k]);
    }
    if (!(theta * rhs == lhs)) throw std::runtime_error("prefactor not of assumed form");
    return id;
}

// ---------------------------------------------------------------- rendering

std::string render_factored(const RatFunc& r, Var v) {
    Factored fn = factor_univariate(r.num(), v);
    Factored fd = r.den().is_constant() ? Factored{r.den().constant_term(), {}} : factor_univariate(r.den(), v);
    Rational c = fn.unit / fd.unit;
    auto order = [v](const std::pair<MultiPoly, unsigned>& a, const std::pair<MultiPoly, unsigned>& b) {
        bool ma = a.first.size() == 1, mb = b.first.size() == 1;
        if (ma != mb) return ma;
        if (a.first.degree(v) != b.first.degree(v)) return a.first.degree(v) < b.first.degree(v);
        if (a.first.lc() != b.first.lc()) return a.first.lc() < b.first.lc();
        return a.first.str() < b.first.str();
    };
    std::sort(fn.factors.begin(), fn.factors.end(), order);
    std::sort(fd.factors.begin(), fd.factors.end(), order);
    auto factor_str = [](const std::pair<MultiPoly, unsigned>& f) {
        std::string s = f.first.size() == 1 ? f.first.str() : "(" + f.first.str() + ")";
        if (f.second > 1) s += "^" + std::to_string(f.second);
        return s;
    };
    auto product = [&](const mpz_class& k, const std::vector<std::pair<MultiPoly, unsigned>>& fs, int* count) {
        std::string s;
        *count = 0;
        if (k != 1 || fs.empty()) {
            s = k.get_str();
            ++*count;
        }
        for (const auto& f : fs) {
            s += (s.empty() ? "" : "*") + factor_str(f);
            ++*count;
        }
        return s;
    };
    if (c.is_zero()) return "0";
    int cn = 0, cd = 0;
    std::string num = product(abs(c.num()), fn.factors, &cn);
    std::string out = (c.sign() < 0 ? "-" : "") + num;
    if (c.den() != 1 || !fd.factors.empty()) {
        std::string den = product(c.den(), fd.factors, &cd);
        out += " / " + (cd == 1 ? den : "(" + den + ")");
    }
    return out;
}

}  // namespace klein
