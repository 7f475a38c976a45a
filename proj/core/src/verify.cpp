#include "klein/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace klein {

bool VerificationReport::overall() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void VerificationReport::add(std::string name, bool pass, std::string witness) {
    checks.push_back({std::move(name), pass, std::move(witness)});
}

std::string VerificationReport::render_text() const {
    std::ostringstream os;
    os << "subject: " << subject << "\n";
    for (const auto& c : checks) {
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.witness.empty()) os << ": " << c.witness;
        os << "\n";
    }
    os << "overall: " << (overall() ? "pass" : "fail") << "\n";
    return os.str();
}

std::string VerificationReport::render_json() const {
    nlohmann::ordered_json j;
    j["subject"] = subject;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks)
        j["checks"].push_back({{"check", c.name}, {"status", c.pass ? "pass" : "fail"}, {"witness", c.witness}});
    j["status"] = overall() ? "pass" : "fail";
    return j.dump(2);
}

namespace {

std::string first_mismatch(const RatSeries& a, const RatSeries& b, const char* var) {
    if (!(a.offset() == b.offset())) return "offsets " + a.offset().str() + " and " + b.offset().str();
    std::size_t n = std::min(a.order(), b.order());
    for (std::size_t k = 0; k < n; ++k)
        if (!(a[k] == b[k]))
            return std::string(var) + "^" + std::to_string(k) + ": " + a[k].str() + " vs " + b[k].str();
    return {};
}

std::string clip(std::string s) {
    if (s.size() > 240) s = s.substr(0, 240) + "...";
    return s;
}

}  // namespace

VerificationReport check_database(std::size_t order) {
    VerificationReport rep;
    rep.subject = "database (order " + std::to_string(order) + ")";
    for (const auto& e : database()) {
        for (const auto& ev : e.evaluations) {
            std::string witness;
            try {
                RatSeries lhs = series_2f1_at(ev.params, as_power_series(puiseux_expand(e.phi, e.curve, order)));
                RatSeries rhs = puiseux_expand(ev.value, e.curve, order);
                witness = first_mismatch(lhs, rhs, "t");
            } catch (const std::exception& ex) {
                witness = ex.what();
            }
            rep.add(ev.name, witness.empty(), witness);
        }
    }
    return rep;
}

namespace {

std::vector<ExponentTriple> placements(const ExponentTriple& e) {
    std::array<Rational, 3> a = {e.e0.abs(), e.e1.abs(), e.einf.abs()};
    std::sort(a.begin(), a.end());
    std::vector<ExponentTriple> out;
    do out.push_back({a[0], a[1], a[2]});
    while (std::next_permutation(a.begin(), a.end()));
    return out;
}

std::string pattern_str(const std::vector<unsigned>& p) {
    std::string s;
    for (unsigned k : p) s += (s.empty() ? "" : "+") + std::to_string(k);
    return s.empty() ? "-" : s;
}

// Each point above Z in {0, 1, inf} of multiplicity k carries exponent k/n
// (n = m, 2, 3); it must be 1 away from X in {0, 1, inf} and |e| there.
std::string ramification_witness(const ExponentTriple& e, int m, const RatFunc& psi) {
    const std::array<std::optional<Rational>, 3> zs = {Rational(0), Rational(1), std::nullopt};
    const std::array<long, 3> n = {m, 2, 3};
    std::array<std::vector<unsigned>, 3> pats;
    for (int i = 0; i < 3; ++i) pats[i] = ramification_pattern(psi, zs[i]);
    const std::array<std::optional<Rational>, 3> xs = {Rational(0), Rational(1), std::nullopt};
    for (int i = 0; i < 3; ++i) {
        LocalBehaviour lb = local_behaviour(psi, xs[i]);
        int zi = !lb.value ? 2 : (lb.value->is_zero() ? 0 : (lb.value->is_one() ? 1 : -1));
        if (zi < 0) return "X = " + std::string(i == 2 ? "inf" : std::to_string(i)) + " maps to Z = " + lb.value->str();
        Rational got(static_cast<long>(lb.multiplicity), n[zi]);
        if (got != e[i])
            return "exponent " + got.str() + " at X = " + (i == 2 ? std::string("inf") : std::to_string(i)) +
                   ", expected " + e[i].str();
        auto& p = pats[zi];
        auto it = std::find(p.begin(), p.end(), lb.multiplicity);
        if (it == p.end()) return "inconsistent fiber data";
        p.erase(it);
    }
    const char* names[] = {"0", "1", "inf"};
    for (int i = 0; i < 3; ++i)
        for (unsigned k : pats[i])
            if (static_cast<long>(k) != n[i])
                return "extra branching " + std::to_string(k) + " over Z = " + names[i] + " (pattern " +
                       pattern_str(ramification_pattern(psi, zs[i])) + ")";
    return {};
}

}  // namespace

VerificationReport check_covering(const ExponentTriple& e, const RatFunc& psi) {
    VerificationReport rep;
    rep.subject = "covering " + e.str() + " Z = " + clip(psi.str());
    if (psi.num().is_constant() && psi.den().is_constant()) {
        rep.add("nonconstant", false, "psi is constant");
        return rep;
    }
    Classification cls = classify(e);
    if (!cls.type) {
        rep.add("classification", false, cls.reason);
        return rep;
    }
    int m = cls.type->m;
    unsigned deg = map_degree(psi);
    std::string dw;
    try {
        unsigned expect = covering_degree(e, m);
        if (deg != expect) dw = "degree " + std::to_string(deg) + " != " + std::to_string(expect);
    } catch (const std::exception& ex) {
        dw = ex.what();
    }
    rep.add("degree", dw.empty(), dw);

    // Exact samples reject most wrong placements before the symbolic residual.
    const Rational samples[] = {Rational(1, 7), Rational(-3, 11), Rational(5, 13), Rational(17, 5)};
    std::optional<ExponentTriple> placed;
    std::string residual;
    for (const auto& p : placements(e)) {
        std::string w;
        for (const Rational& x0 : samples) {
            auto v = pullback_residual_at(p, m, psi, x0);
            if (v && !v->is_zero()) {
                w = "at X = " + x0.str() + ": " + clip(v->str());
                break;
            }
        }
        if (w.empty()) {
            RatFunc r = pullback_residual(p, m, psi);
            if (r.is_zero()) {
                placed = p;
                break;
            }
            w = clip(r.str());
        }
        if (residual.empty()) residual = w;
    }
    ExponentTriple used = placed ? *placed : assign_points(e, *cls.type).exponents;
    rep.add("ramification", ramification_witness(used, m, psi).empty(), ramification_witness(used, m, psi));
    rep.add("schwarzian", placed.has_value(), placed ? "" : "residual " + residual);
    return rep;
}

VerificationReport check_identity(const TransformationIdentity& id, std::size_t order) {
    VerificationReport rep;
    rep.subject = "identity " + id.str();
    std::string witness;
    try {
        RatSeries lhs = series_2f1(id.lhs_params, order);
        RatSeries rhs = series_2f1_at(id.rhs_params, series_of(id.psi, Var::X, order));
        for (const auto& f : id.theta.factors) rhs *= series_of(f.base, Var::X, order).pow(f.exponent);
        rhs *= series_of(id.theta.rational, Var::X, order);
        witness = first_mismatch(lhs, rhs, "X");
    } catch (const std::exception& ex) {
        witness = ex.what();
    }
    rep.add("series to order " + std::to_string(order), witness.empty(), witness);
    return rep;
}

Check check_contiguity(const ContiguityUse& use, std::size_t order) {
    Check c;
    c.name = use.base.str() + " -> " + use.target.str() + " [" + use.relation.path + "]";
    try {
        // Clear denominators: D F_t = (D r0) F + (D r1) F'.
        MultiPoly D = use.relation.r0.den() * use.relation.r1.den();
        RatSeries F = series_2f1(use.base, order + 1);
        RatSeries dF = F.derivative().truncated(order);
        F = F.truncated(order);
        RatSeries lhs = series_of(D, Var::X, order) * series_2f1(use.target, order);
        RatSeries rhs = series_of(use.relation.r0 * RatFunc(D), Var::X, order) * F +
                        series_of(use.relation.r1 * RatFunc(D), Var::X, order) * dF;
        c.witness = first_mismatch(lhs, rhs, "X");
    } catch (const std::exception& ex) {
        c.witness = ex.what();
    }
    c.pass = c.witness.empty();
    return c;
}

}  // namespace klein
