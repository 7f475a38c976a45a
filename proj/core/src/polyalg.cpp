#include "klein/polyalg.hpp"

#include <cctype>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

namespace klein {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {"X",     "Z",    "x",    "z", "xi",
                                                              "alpha", "beta", "zeta", "s", "t"};

std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

}  // namespace

std::string_view var_name(Var v) { return kVarNames[idx(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (kVarNames[i] == name) return static_cast<Var>(i);
    return std::nullopt;
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + o.e[i]);
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kNumVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - o.e[i]);
    return r;
}

bool GrlexDesc::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::variable(Var v, unsigned power) {
    Monomial m;
    m.at(v) = static_cast<std::uint16_t>(power);
    return monomial(m, Rational(1));
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rational MultiPoly::constant_term() const { return coefficient(Monomial{}); }

Rational MultiPoly::lc() const { return terms_.empty() ? Rational(0) : terms_.begin()->second; }

Monomial MultiPoly::lm() const { return terms_.empty() ? Monomial{} : terms_.begin()->first; }

Rational MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::degree(Var v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
}

unsigned MultiPoly::low_degree(Var v) const {
    if (terms_.empty()) return 0;
    unsigned d = ~0u;
    for (const auto& [m, c] : terms_) d = std::min(d, m[v]);
    return d;
}

unsigned MultiPoly::total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

std::vector<Var> MultiPoly::variables() const {
    std::array<bool, kNumVars> used{};
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < kNumVars; ++i)
            if (m.e[i]) used[i] = true;
    std::vector<Var> r;
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (used[i]) r.push_back(static_cast<Var>(i));
    return r;
}

std::vector<MultiPoly> MultiPoly::coefficients(Var v) const {
    std::vector<MultiPoly> r(degree(v) + 1);
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        unsigned k = mm[v];
        mm.at(v) = 0;
        r[k].terms_.emplace(mm, c);
    }
    return r;
}

MultiPoly MultiPoly::from_coefficients(Var v, const std::vector<MultiPoly>& c) {
    MultiPoly r;
    for (std::size_t k = 0; k < c.size(); ++k)
        for (const auto& [m, a] : c[k].terms_) {
            Monomial mm = m;
            mm.at(v) = static_cast<std::uint16_t>(mm[v] + k);
            r.add_term(mm, a);
        }
    return r;
}

MultiPoly MultiPoly::lead_coeff(Var v) const {
    unsigned d = degree(v);
    MultiPoly r;
    for (const auto& [m, c] : terms_)
        if (m[v] == d) {
            Monomial mm = m;
            mm.at(v) = 0;
            r.terms_.emplace(mm, c);
        }
    return r;
}

MultiPoly MultiPoly::derivative(Var v) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        unsigned k = m[v];
        if (k == 0) continue;
        Monomial mm = m;
        mm.at(v) = static_cast<std::uint16_t>(k - 1);
        r.add_term(mm, c * Rational(static_cast<long>(k)));
    }
    return r;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& p) const {
    if (!depends_on(v)) return *this;
    auto c = coefficients(v);
    MultiPoly r = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) r = r * p + c[k];
    return r;
}

MultiPoly MultiPoly::evaluate(Var v, const Rational& a) const {
    if (!depends_on(v)) return *this;
    MultiPoly r;
    std::vector<Rational> pw{Rational(1)};
    for (const auto& [m, c] : terms_) {
        unsigned k = m[v];
        while (pw.size() <= k) pw.push_back(pw.back() * a);
        Monomial mm = m;
        mm.at(v) = 0;
        r.add_term(mm, c * pw[k]);
    }
    return r;
}

QuadExt MultiPoly::evaluate(const std::map<Var, QuadExt>& point) const {
    std::map<Var, std::vector<QuadExt>> pw;
    QuadExt sum;
    for (const auto& [m, c] : terms_) {
        QuadExt t(c);
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (!m.e[i]) continue;
            Var v = static_cast<Var>(i);
            auto it = point.find(v);
            if (it == point.end())
                throw std::domain_error("no value for symbol " + std::string(var_name(v)));
            auto& table = pw[v];
            if (table.empty()) table.push_back(QuadExt(1));
            while (table.size() <= m.e[i]) table.push_back(table.back() * it->second);
            t *= table[m.e[i]];
        }
        sum += t;
    }
    return sum;
}

MultiPoly MultiPoly::rename(Var from, Var to) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        unsigned k = mm[from];
        mm.at(from) = 0;
        mm.at(to) = static_cast<std::uint16_t>(mm[to] + k);
        r.add_term(mm, c);
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Rational MultiPoly::integer_content() const {
    if (terms_.empty()) return Rational(1);
    mpz_class g = 0, l = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    }
    Rational r(g, l);
    return lc().sign() < 0 ? -r : r;
}

MultiPoly MultiPoly::primitive_integer() const {
    if (terms_.empty()) return *this;
    return *this / integer_content();
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    return *this / lc();
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    if (b.is_constant()) return a * b.lc();
    if (a.is_constant()) return b * a.lc();
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, a] : terms_) a *= c;
    return *this;
}

MultiPoly& MultiPoly::operator/=(const Rational& c) {
    if (c.is_zero()) throw std::domain_error("division by zero");
    for (auto& [m, a] : terms_) a /= c;
    return *this;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c.sign() < 0;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        Rational a = c.abs();
        std::string mono;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (!m.e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += kVarNames[i];
            if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
        }
        if (mono.empty())
            out += a.str();
        else if (a.is_one())
            out += mono;
        else
            out += a.str() + "*" + mono;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    RatFunc parse() {
        RatFunc r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument(what + " at position " + std::to_string(pos_) + " in '" +
                                    std::string(s_) + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool peek_pow() {
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') return true;
        return pos_ + 1 < s_.size() && s_[pos_] == '*' && s_[pos_ + 1] == '*';
    }

    RatFunc expr() {
        RatFunc r;
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        r = term();
        if (neg) r = -r;
        for (;;) {
            if (accept('+'))
                r += term();
            else if (accept('-'))
                r -= term();
            else
                return r;
        }
    }

    RatFunc term() {
        RatFunc r = unary();
        for (;;) {
            skip();
            if (pos_ + 1 < s_.size() && s_[pos_] == '*' && s_[pos_ + 1] == '*') return r;
            if (accept('*'))
                r *= unary();
            else if (accept('/')) {
                RatFunc d = unary();
                if (d.is_zero()) fail("division by zero");
                r /= d;
            } else
                return r;
        }
    }

    RatFunc unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    long integer_exponent() {
        bool neg = accept('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        long e = std::stol(std::string(s_.substr(start, pos_ - start)));
        return neg ? -e : e;
    }

    RatFunc power() {
        RatFunc base = atom();
        if (peek_pow()) {
            if (s_[pos_] == '^')
                ++pos_;
            else
                pos_ += 2;
            bool paren = accept('(');
            long e = integer_exponent();
            if (paren && !accept(')')) fail("expected ')'");
            return base.pow(e);
        }
        return base;
    }

    RatFunc atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RatFunc(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            auto name = s_.substr(start, pos_ - start);
            auto v = var_from_name(name);
            if (!v) {
                pos_ = start;
                fail("unknown symbol '" + std::string(name) + "'");
            }
            return RatFunc::variable(*v);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) {
    RatFunc r = Parser(text).parse();
    if (!r.is_polynomial()) throw std::invalid_argument("not a polynomial: '" + std::string(text) + "'");
    return r.num() / r.den().lc();
}

RatFunc RatFunc::parse(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------- division

namespace {

// p -= c * m * q
void sub_scaled(MultiPoly::Terms& p, const Monomial& m, const Rational& c, const MultiPoly& q) {
    for (const auto& [mq, cq] : q.terms()) {
        Monomial mm = m * mq;
        Rational d = c * cq;
        auto [it, inserted] = p.try_emplace(mm, -d);
        if (!inserted) {
            it->second -= d;
            if (it->second.is_zero()) p.erase(it);
        }
    }
}

MultiPoly from_terms(MultiPoly::Terms t) {
    MultiPoly r;
    for (auto& [m, c] : t) r += MultiPoly::monomial(m, c);
    return r;
}

}  // namespace

std::pair<MultiPoly, MultiPoly> divmod(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_zero()) throw std::domain_error("division by zero polynomial");
    MultiPoly::Terms rest = p.terms(), quo, rem;
    Monomial lq = q.lm();
    Rational cq = q.lc();
    while (!rest.empty()) {
        auto [m, c] = *rest.begin();
        if (lq.divides(m)) {
            Monomial t = m / lq;
            Rational a = c / cq;
            quo.emplace(t, a);
            sub_scaled(rest, t, a, q);
        } else {
            rem.emplace(m, c);
            rest.erase(rest.begin());
        }
    }
    return {from_terms(std::move(quo)), from_terms(std::move(rem))};
}

namespace {

bool try_exact_div(const MultiPoly& p, const MultiPoly& q, MultiPoly* out) {
    if (q.is_zero()) throw std::domain_error("division by zero polynomial");
    if (q.is_constant()) {
        if (out) *out = p / q.lc();
        return true;
    }
    MultiPoly::Terms rest = p.terms(), quo;
    Monomial lq = q.lm();
    Rational cq = q.lc();
    while (!rest.empty()) {
        auto [m, c] = *rest.begin();
        if (!lq.divides(m)) return false;
        Monomial t = m / lq;
        Rational a = c / cq;
        quo.emplace(t, a);
        sub_scaled(rest, t, a, q);
    }
    if (out) *out = from_terms(std::move(quo));
    return true;
}

}  // namespace

MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q) {
    MultiPoly r;
    if (!try_exact_div(p, q, &r)) throw std::domain_error("inexact polynomial division");
    return r;
}

bool divides(const MultiPoly& q, const MultiPoly& p) { return try_exact_div(p, q, nullptr); }

MultiPoly prem(const MultiPoly& a, const MultiPoly& b, Var v) {
    auto A = a.coefficients(v);
    auto B = b.coefficients(v);
    std::size_t n = B.size() - 1;
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
    if (A.size() - 1 < n || a.is_zero()) return a;
    int e = static_cast<int>(A.size() - 1 - n) + 1;
    const MultiPoly& lb = B[n];
    while (!A.empty() && A.size() - 1 >= n) {
        std::size_t d = A.size() - 1;
        MultiPoly la = A[d];
        if (la.is_zero()) {
            A.pop_back();
            continue;
        }
        for (std::size_t i = 0; i < d; ++i) A[i] = A[i] * lb;
        for (std::size_t j = 0; j < n; ++j) A[d - n + j] -= la * B[j];
        A.pop_back();
        while (!A.empty() && A.back().is_zero()) A.pop_back();
        --e;
    }
    MultiPoly r = MultiPoly::from_coefficients(v, A);
    if (e > 0) r *= lb.pow(static_cast<unsigned>(e));
    return r;
}

// ---------------------------------------------------------------- gcd

namespace {

bool only_var(const MultiPoly& p, Var v) {
    for (const auto& [m, c] : p.terms())
        for (std::size_t i = 0; i < kNumVars; ++i)
            if (m.e[i] && i != idx(v)) return false;
    return true;
}

std::optional<Var> first_var(const MultiPoly& p, const MultiPoly& q) {
    auto a = p.variables(), b = q.variables();
    std::optional<Var> r;
    for (Var v : a)
        if (!r || idx(v) < idx(*r)) r = v;
    for (Var v : b)
        if (!r || idx(v) < idx(*r)) r = v;
    return r;
}

}  // namespace

MultiPoly content(const MultiPoly& p, Var v) {
    if (p.is_zero()) return MultiPoly(0);
    if (only_var(p, v)) return MultiPoly(1);
    auto c = p.coefficients(v);
    MultiPoly g(0);
    for (const auto& ci : c) {
        if (ci.is_zero()) continue;
        g = poly_gcd(g, ci);
        if (g.is_constant()) return MultiPoly(1);
    }
    return g.monic();
}

MultiPoly primitive_part(const MultiPoly& p, Var v) {
    if (p.is_zero()) return p;
    MultiPoly c = content(p, v);
    MultiPoly r = c.is_constant() ? p : exact_div(p, c);
    return r.primitive_integer();
}

namespace {

// Sound coprimality test: if the images under an integer specialization of the
// other variables keep their v-degrees and are coprime, so are a and b.
bool coprime_by_specialization(const MultiPoly& a, const MultiPoly& b, Var v) {
    std::vector<Var> others;
    for (Var u : a.variables())
        if (u != v) others.push_back(u);
    for (Var u : b.variables())
        if (u != v && std::find(others.begin(), others.end(), u) == others.end()) others.push_back(u);
    if (others.empty()) return false;
    static const long points[] = {2, -3, 5, 7, -11, 13};
    for (int attempt = 0; attempt < 3; ++attempt) {
        MultiPoly sa = a, sb = b;
        for (std::size_t i = 0; i < others.size(); ++i) {
            Rational val(points[(i + 2 * attempt) % 6] + attempt);
            sa = sa.evaluate(others[i], val);
            sb = sb.evaluate(others[i], val);
        }
        if (sa.degree(v) != a.degree(v) || sb.degree(v) != b.degree(v)) continue;
        return poly_gcd(sa, sb, v).is_constant();
    }
    return false;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q) {
    auto v = first_var(p, q);
    return poly_gcd(p, q, v.value_or(Var::X));
}

MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q, Var var) {
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    if (p.is_constant() || q.is_constant()) return MultiPoly(1);
    Var v = var;
    if (!p.depends_on(v) && !q.depends_on(v)) v = *first_var(p, q);
    if (!p.depends_on(v)) return poly_gcd(p, content(q, v));
    if (!q.depends_on(v)) return poly_gcd(content(p, v), q);

    MultiPoly c = poly_gcd(content(p, v), content(q, v));
    MultiPoly a = primitive_part(p, v), b = primitive_part(q, v);
    if (a.degree(v) < b.degree(v)) std::swap(a, b);
    if (coprime_by_specialization(a, b, v)) return c.monic();
    for (;;) {
        MultiPoly r = prem(a, b, v);
        if (r.is_zero()) break;
        if (r.degree(v) == 0) {
            b = MultiPoly(1);
            break;
        }
        a = std::move(b);
        b = primitive_part(r, v);
    }
    MultiPoly g = b.is_constant() ? c : primitive_part(b, v) * c;
    return g.monic();
}

namespace {

MultiPoly resultant_prs(const MultiPoly& p, const MultiPoly& q, Var v) {
    unsigned m = p.degree(v), n = q.degree(v);
    if (m == 0 || n == 0) throw std::domain_error("resultant needs positive degree in the eliminated variable");
    MultiPoly A = p, B = q;
    int s = 1;
    if (m < n) {
        std::swap(A, B);
        if ((m * n) % 2 == 1) s = -1;
    }
    MultiPoly g(1), h(1);
    for (;;) {
        unsigned dA = A.degree(v), dB = B.degree(v);
        unsigned delta = dA - dB;
        if (dA % 2 == 1 && dB % 2 == 1) s = -s;
        MultiPoly R = prem(A, B, v);
        A = std::move(B);
        if (R.is_zero()) return MultiPoly(0);
        B = exact_div(R, g * h.pow(delta));
        g = A.lead_coeff(v);
        if (delta > 0) h = exact_div(g.pow(delta), h.pow(delta - 1));
        if (B.degree(v) == 0) break;
    }
    unsigned dA = A.degree(v);
    MultiPoly res = exact_div(B.pow(dA), h.pow(dA - 1));
    return s < 0 ? -res : res;
}

std::vector<Var> other_variables(const MultiPoly& p, const MultiPoly& q, Var v) {
    std::vector<Var> out;
    for (const MultiPoly* f : {&p, &q})
        for (Var u : f->variables())
            if (u != v && std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
    return out;
}

// Newton interpolation through (pts[k], vals[k]) in the symbol y.
MultiPoly newton_interpolate(const std::vector<Rational>& pts, std::vector<MultiPoly> vals, Var y) {
    std::size_t n = pts.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t k = n - 1; k >= j; --k) {
            vals[k] = (vals[k] - vals[k - 1]) / (pts[k] - pts[k - j]);
            if (k == j) break;
        }
    MultiPoly r = vals[n - 1];
    MultiPoly Y = MultiPoly::variable(y);
    for (std::size_t k = n - 1; k-- > 0;) r = r * (Y - MultiPoly(pts[k])) + vals[k];
    return r;
}

}  // namespace

// Evaluation at integer points of one parameter, recursion on the rest, and
// Newton interpolation up to the Sylvester degree bound.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Var v) {
    unsigned m = p.degree(v), n = q.degree(v);
    if (m == 0 || n == 0) throw std::domain_error("resultant needs positive degree in the eliminated variable");
    auto others = other_variables(p, q, v);
    if (others.empty()) return resultant_prs(p, q, v);
    Var y = others.front();
    unsigned bound = m * q.degree(y) + n * p.degree(y);
    MultiPoly lp = p.lead_coeff(v), lq = q.lead_coeff(v);
    std::vector<Rational> pts;
    std::vector<MultiPoly> vals;
    for (long k = 0; pts.size() <= bound; k = k > 0 ? -k : 1 - k) {
        Rational yk(k);
        if (lp.evaluate(y, yk).is_zero() || lq.evaluate(y, yk).is_zero()) continue;
        pts.push_back(yk);
        vals.push_back(resultant(p.evaluate(y, yk), q.evaluate(y, yk), v));
    }
    return newton_interpolate(pts, std::move(vals), y);
}

std::vector<SqfFactor> squarefree(const MultiPoly& p, Var v, MultiPoly* unit) {
    std::vector<SqfFactor> out;
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    MultiPoly pp = primitive_part(p, v);
    if (pp.degree(v) == 0) {
        if (unit) *unit = p;
        return out;
    }
    MultiPoly d = pp.derivative(v);
    MultiPoly a = poly_gcd(pp, d, v);
    MultiPoly b = exact_div(pp, a);
    MultiPoly c = exact_div(d, a);
    MultiPoly e = c - b.derivative(v);
    unsigned i = 1;
    while (b.degree(v) > 0) {
        MultiPoly g = poly_gcd(b, e, v);
        if (g.degree(v) > 0) out.push_back({g.primitive_integer(), i});
        b = exact_div(b, g);
        c = exact_div(e, g);
        e = c - b.derivative(v);
        ++i;
    }
    if (unit) {
        MultiPoly prod(1);
        for (const auto& f : out) prod *= f.factor.pow(f.multiplicity);
        *unit = exact_div(p, prod);
    }
    return out;
}

// ---------------------------------------------------------------- roots & factoring

namespace {

std::vector<mpz_class> divisors(const mpz_class& n0, bool* ok) {
    mpz_class n = abs(n0);
    std::vector<mpz_class> small, large;
    *ok = true;
    if (n > mpz_class("1000000000000")) {
        *ok = false;
        return {mpz_class(1)};
    }
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

std::vector<Rational> rational_roots(const MultiPoly& p0, Var v) {
    std::set<Rational> roots;
    if (p0.is_zero() || p0.degree(v) == 0) return {};
    MultiPoly p = p0.primitive_integer();
    if (p.low_degree(v) > 0) {
        roots.insert(Rational(0));
        std::vector<MultiPoly> c = p.coefficients(v);
        c.erase(c.begin(), c.begin() + p.low_degree(v));
        p = MultiPoly::from_coefficients(v, c);
    }
    auto is_root = [&](const Rational& r) { return p.evaluate(v, r).is_zero(); };
    for (long k : {1L, -1L})
        if (is_root(Rational(k))) roots.insert(Rational(k));
    if (p.degree(v) > 0) {
        mpz_class a0 = p.constant_term().num(), an = p.lead_coeff(v).lc().num();
        bool ok0 = false, okn = false;
        auto dn = divisors(a0, &ok0);
        auto dd = divisors(an, &okn);
        if (ok0 && okn && dn.size() * dd.size() <= 40000) {
            for (const auto& a : dn)
                for (const auto& b : dd)
                    for (int sgn : {1, -1}) {
                        Rational r(a * sgn, b);
                        if (!roots.count(r) && is_root(r)) roots.insert(r);
                    }
        }
    }
    return {roots.begin(), roots.end()};
}

Factored factor_univariate(const MultiPoly& p, Var v) {
    Factored f;
    if (p.is_zero()) throw std::domain_error("factorisation of zero");
    MultiPoly unit;
    auto sqf = squarefree(p, v, &unit);
    MultiPoly prod(1);
    for (auto& [g0, k] : sqf) {
        MultiPoly g = g0;
        for (const auto& r : rational_roots(g, v)) {
            MultiPoly lin = MultiPoly::variable(v) * Rational(r.den()) - MultiPoly(Rational(r.num()));
            lin = lin.primitive_integer();
            g = exact_div(g, lin);
            f.factors.emplace_back(lin, k);
        }
        if (g.degree(v) > 0) f.factors.emplace_back(g.primitive_integer(), k);
    }
    for (const auto& [g, k] : f.factors) prod *= g.pow(k);
    MultiPoly u = exact_div(p, prod);
    if (!u.is_constant()) throw std::logic_error("univariate factorisation left a non-constant unit");
    f.unit = u.lc();
    auto key = [v](const MultiPoly& g) {
        bool mono = g.size() == 1;
        return std::make_tuple(mono ? 0 : 1, g.degree(v), g.lc());
    };
    std::stable_sort(f.factors.begin(), f.factors.end(), [&](const auto& a, const auto& b) {
        auto ka = key(a.first), kb = key(b.first);
        if (ka != kb) return ka < kb;
        return a.first.str() < b.first.str();
    });
    return f;
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const MultiPoly& n, const MultiPoly& d) : num_(n), den_(d) {
    if (d.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly(1);
        return;
    }
    if (!den_.is_constant()) {
        MultiPoly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    Rational c = den_.lc();
    if (!c.is_one()) {
        num_ /= c;
        den_ /= c;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_constant()) normalize();
        else if (num_.is_zero()) den_ = MultiPoly(1);
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero() || o.is_zero()) {
        num_ = MultiPoly(0);
        den_ = MultiPoly(1);
        return *this;
    }
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ = num_ * o.num_;
        return *this;
    }
    MultiPoly g1 = o.den_.is_constant() ? MultiPoly(1) : poly_gcd(num_, o.den_);
    MultiPoly g2 = den_.is_constant() ? MultiPoly(1) : poly_gcd(o.num_, den_);
    MultiPoly n1 = g1.is_constant() ? num_ : exact_div(num_, g1);
    MultiPoly d2 = g1.is_constant() ? o.den_ : exact_div(o.den_, g1);
    MultiPoly n2 = g2.is_constant() ? o.num_ : exact_div(o.num_, g2);
    MultiPoly d1 = g2.is_constant() ? den_ : exact_div(den_, g2);
    num_ = n1 * n2;
    den_ = d1 * d2;
    Rational c = den_.lc();
    num_ /= c;
    den_ /= c;
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    Rational c = r.den_.lc();
    r.num_ /= c;
    r.den_ /= c;
    return r;
}

std::pair<MultiPoly, MultiPoly> integer_cleared(const RatFunc& r) {
    Rational cd = r.den().integer_content();
    MultiPoly num = r.num() / cd, den = r.den() / cd;
    mpz_class l = 1;
    for (const auto& [m, c] : num.terms()) {
        mpz_class d = c.den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return {num * Rational(l), den * Rational(l)};
}

std::string cleared_str(const RatFunc& r) {
    auto [n, d] = integer_cleared(r);
    if (d == MultiPoly(1)) return n.str();
    return "(" + n.str() + ") / (" + d.str() + ")";
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r;
    r.num_ = num_.pow(static_cast<unsigned>(e));
    r.den_ = den_.pow(static_cast<unsigned>(e));
    return r;
}

RatFunc RatFunc::derivative(Var v) const {
    if (den_.is_constant()) return RatFunc(num_.derivative(v) / den_.lc());
    return RatFunc(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

QuadExt RatFunc::evaluate(const std::map<Var, QuadExt>& point) const {
    QuadExt d = den_.evaluate(point);
    if (d.is_zero()) throw std::domain_error("rational function has a pole at the evaluation point");
    return num_.evaluate(point) / d;
}

std::string RatFunc::str() const {
    if (den_.is_constant() && den_.lc().is_one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.str(); }

RatFunc substitute(const MultiPoly& p, const std::map<Var, RatFunc>& bindings) {
    std::vector<Var> bound;
    for (const auto& [v, r] : bindings)
        if (p.depends_on(v)) bound.push_back(v);
    if (bound.empty()) return RatFunc(p);
    std::map<Var, unsigned> top;
    std::map<Var, std::vector<MultiPoly>> npow, dpow;
    for (Var v : bound) {
        unsigned E = p.degree(v);
        top[v] = E;
        const RatFunc& r = bindings.at(v);
        auto& np = npow[v];
        auto& dp = dpow[v];
        np.push_back(MultiPoly(1));
        dp.push_back(MultiPoly(1));
        for (unsigned k = 1; k <= E; ++k) {
            np.push_back(np.back() * r.num());
            dp.push_back(r.den().is_constant() ? dp.back() * r.den().lc() : dp.back() * r.den());
        }
    }
    // group terms by their exponents in the bound symbols
    std::map<std::vector<unsigned>, MultiPoly> groups;
    for (const auto& [m, c] : p.terms()) {
        std::vector<unsigned> key;
        Monomial rest = m;
        for (Var v : bound) {
            key.push_back(m[v]);
            rest.at(v) = 0;
        }
        groups[key] += MultiPoly::monomial(rest, c);
    }
    MultiPoly num(0);
    for (const auto& [key, rest] : groups) {
        MultiPoly t = rest;
        for (std::size_t i = 0; i < bound.size(); ++i) {
            Var v = bound[i];
            t *= npow[v][key[i]];
            t *= dpow[v][top[v] - key[i]];
        }
        num += t;
    }
    MultiPoly den(1);
    for (Var v : bound) den *= dpow[v][top[v]];
    return RatFunc(num, den);
}

RatFunc substitute(const RatFunc& r, const std::map<Var, RatFunc>& bindings) {
    RatFunc d = substitute(r.den(), bindings);
    if (d.is_zero()) throw std::domain_error("substitution makes the denominator vanish");
    return substitute(r.num(), bindings) / d;
}

// ---------------------------------------------------------------- elimination helpers

RatFunc extract_linear_factor(const MultiPoly& P, Var xv, Var zv) {
    if (P.is_zero()) throw std::domain_error("extract_linear_factor of zero");
    unsigned k = P.degree(zv);
    if (k == 0) throw std::domain_error("extract_linear_factor needs positive degree in the covering variable");
    auto C = P.coefficients(zv);
    if (k == 1) return RatFunc(-C[0], C[1]);
    // pure power L(x) * (z - psi)^k
    RatFunc psi(-C[k - 1], C[k] * Rational(static_cast<long>(k)));
    MultiPoly lin = psi.den() * MultiPoly::variable(zv) - psi.num();
    if (P * psi.den().pow(k) == C[k] * lin.pow(k)) return psi;
    // general case: linear factors among the squarefree parts, highest multiplicity first
    auto sqf = squarefree(P, zv);
    std::stable_sort(sqf.begin(), sqf.end(),
                     [](const SqfFactor& a, const SqfFactor& b) { return a.multiplicity > b.multiplicity; });
    for (const auto& f : sqf) {
        if (f.factor.degree(zv) != 1) continue;
        auto c = f.factor.coefficients(zv);
        RatFunc r(-c[0], c[1]);
        bool ok = true;
        for (Var v : r.num().variables()) ok = ok && v == xv;
        for (Var v : r.den().variables()) ok = ok && v == xv;
        if (ok) return r;
    }
    throw std::runtime_error("elimination produced no Klein factor");
}

unsigned map_degree(const RatFunc& psi, Var v) { return std::max(psi.num().degree(v), psi.den().degree(v)); }

std::vector<unsigned> ramification_pattern(const RatFunc& psi, const std::optional<Rational>& value, Var v) {
    unsigned d = map_degree(psi, v);
    if (d == 0) throw std::domain_error("ramification pattern of a constant map");
    MultiPoly F = value ? psi.num() - psi.den() * (*value) : psi.den();
    std::vector<unsigned> out;
    if (!F.is_zero() && F.degree(v) > 0) {
        for (const auto& f : squarefree(F, v))
            for (unsigned i = 0; i < f.factor.degree(v); ++i) out.push_back(f.multiplicity);
    }
    unsigned finite = F.is_zero() ? 0 : F.degree(v);
    if (d > finite) out.push_back(d - finite);
    std::sort(out.rbegin(), out.rend());
    return out;
}

namespace {

unsigned order_at(MultiPoly f, const Rational& a, Var v) {
    MultiPoly lin = MultiPoly::variable(v) * Rational(a.den()) - MultiPoly(Rational(a.num()));
    unsigned k = 0;
    MultiPoly q;
    while (!f.is_zero() && try_exact_div(f, lin, &q)) {
        f = q;
        ++k;
    }
    return k;
}

}  // namespace

LocalBehaviour local_behaviour(const RatFunc& psi, const std::optional<Rational>& at, Var v) {
    const MultiPoly& N = psi.num();
    const MultiPoly& D = psi.den();
    if (at) {
        Rational dv = D.evaluate(v, *at).constant_term();
        if (dv.is_zero()) return {std::nullopt, order_at(D, *at, v)};
        Rational val = N.evaluate(v, *at).constant_term() / dv;
        return {val, order_at(N - D * val, *at, v)};
    }
    unsigned dn = N.degree(v), dd = D.degree(v);
    if (dn > dd) return {std::nullopt, dn - dd};
    if (dn < dd) return {Rational(0), dd - dn};
    Rational val = N.lead_coeff(v).constant_term() / D.lead_coeff(v).constant_term();
    MultiPoly F = N - D * val;
    return {val, dn - (F.is_zero() ? 0 : F.degree(v))};
}

}  // namespace klein
