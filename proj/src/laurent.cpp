#include "clorb/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace clorb {

LaurentPoly LaurentPoly::zero(const std::vector<std::string>& vars) {
    return LaurentPoly(vars);
}

LaurentPoly LaurentPoly::constant(const std::vector<std::string>& vars, const Int& c) {
    LaurentPoly p(vars);
    p.add_term(Exps(vars.size(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(const std::vector<std::string>& vars, std::size_t index) {
    if (index >= vars.size()) throw IndexOutOfRange("variable index out of range");
    Exps e(vars.size(), 0);
    e[index] = 1;
    return monomial(vars, e);
}

LaurentPoly LaurentPoly::monomial(const std::vector<std::string>& vars, const Exps& e,
                                  const Int& c) {
    if (e.size() != vars.size()) throw IndexOutOfRange("exponent vector length mismatch");
    LaurentPoly p(vars);
    p.add_term(e, c);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                       [](int a) { return a == 0; });
}

bool LaurentPoly::is_polynomial() const {
    for (const auto& [e, c] : terms_)
        for (int a : e)
            if (a < 0) return false;
    return true;
}

Int LaurentPoly::coefficient(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(const Exps& e, const Int& c) {
    if (e.size() != vars_.size()) throw IndexOutOfRange("exponent vector length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::check_same_vars(const LaurentPoly& o) const {
    if (vars_ != o.vars_) throw AlgebraMismatch("Laurent polynomials over different variables");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_same_vars(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_same_vars(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_same_vars(o);
    LaurentPoly r(vars_);
    Exps e(vars_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly operator*(const Int& c, const LaurentPoly& p) {
    LaurentPoly r(p.vars());
    for (const auto& [e, a] : p.terms()) r.add_term(e, c * a);
    return r;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    check_same_vars(o);
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return it->first < jt->first;
        if (it->second != jt->second) return it->second < jt->second;
    }
    return jt != o.terms_.end();
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& divisor) const {
    check_same_vars(divisor);
    if (divisor.is_zero()) throw DivNotExact("division by zero");
    LaurentPoly q(vars_);
    LaurentPoly r = *this;
    // Cancel from the lex-smallest end: trailing terms multiply without
    // cancellation, so for an exact quotient the trailing term of r is
    // always divisible by the trailing term of the divisor.
    const auto& dt = *divisor.terms_.begin();
    std::size_t guard = 16 + 8 * (terms_.size() + 1) * (divisor.terms_.size() + 1);
    while (!r.is_zero()) {
        if (guard-- == 0) throw DivNotExact("division does not terminate");
        const auto& rt = *r.terms_.begin();
        Int c;
        mpz_tdiv_qr(c.get_mpz_t(), Int().get_mpz_t(), rt.second.get_mpz_t(),
                    dt.second.get_mpz_t());
        if (c * dt.second != rt.second) throw DivNotExact();
        Exps e(vars_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = rt.first[i] - dt.first[i];
        LaurentPoly t = monomial(vars_, e, c);
        q = q + t;
        r = r - t * divisor;
    }
    return q;
}

LaurentPoly LaurentPoly::pow(long e) const {
    if (e == 0) return constant(vars_, 1);
    if (e < 0) {
        if (!is_monomial()) throw DivNotExact("negative power of a non-monomial");
        const auto& [ex, c] = *terms_.begin();
        if (c != 1 && c != -1) throw DivNotExact("negative power of a non-unit");
        Exps inv(ex.size());
        for (std::size_t i = 0; i < ex.size(); ++i) inv[i] = -ex[i];
        return monomial(vars_, inv, c).pow(-e);
    }
    LaurentPoly r = constant(vars_, 1);
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

LaurentPoly LaurentPoly::substitute(const std::map<std::string, LaurentPoly>& bindings) const {
    if (bindings.empty()) throw UnboundVariable("no bindings");
    const auto& ambient = bindings.begin()->second.vars();
    std::vector<const LaurentPoly*> bound(vars_.size(), nullptr);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = bindings.find(vars_[i]);
        if (it == bindings.end()) throw UnboundVariable("unbound variable " + vars_[i]);
        if (it->second.vars() != ambient)
            throw AlgebraMismatch("bindings over different ambient variables");
        bound[i] = &it->second;
    }
    LaurentPoly r = zero(ambient);
    for (const auto& [e, c] : terms_) {
        LaurentPoly t = constant(ambient, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t = t * bound[i]->pow(e[i]);
        r = r + t;
    }
    return r;
}

LaurentPoly LaurentPoly::project_onto(const std::vector<std::string>& keep) const {
    std::vector<int> pos(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(keep.begin(), keep.end(), vars_[i]);
        if (it != keep.end()) pos[i] = static_cast<int>(it - keep.begin());
    }
    LaurentPoly r(keep);
    for (const auto& [e, c] : terms_) {
        Exps pe(keep.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (pos[i] >= 0)
                pe[static_cast<std::size_t>(pos[i])] += e[i];
        }
        r.add_term(pe, c);
    }
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << mono;
        }
    }
    return out.str();
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::vector<std::string>& vars, const std::string& text) {
    LaurentPoly r = zero(vars);
    Lexer lx{text};
    if (lx.eof()) throw ParseError("empty polynomial text");
    bool expect_term = true;
    int sign = 1;
    while (!lx.eof()) {
        char c = lx.peek();
        if (c == '+' || c == '-') {
            if (expect_term && c == '-') {
                sign = -sign;
                ++lx.i;
                continue;
            }
            if (expect_term) throw ParseError("unexpected sign");
            sign = (c == '-') ? -1 : 1;
            ++lx.i;
            expect_term = true;
            continue;
        }
        if (!expect_term) throw ParseError("missing operator between terms");
        // one term: factors separated by '*'
        Int coeff = sign;
        Exps e(vars.size(), 0);
        bool any_factor = false;
        while (true) {
            lx.skip_ws();
            if (lx.i >= lx.s.size()) break;
            char f = lx.s[lx.i];
            if (std::isdigit(static_cast<unsigned char>(f))) {
                std::size_t j = lx.i;
                while (j < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[j]))) ++j;
                coeff *= Int(lx.s.substr(lx.i, j - lx.i));
                lx.i = j;
                any_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(f)) || f == '_') {
                std::size_t j = lx.i;
                while (j < lx.s.size() &&
                       (std::isalnum(static_cast<unsigned char>(lx.s[j])) || lx.s[j] == '_'))
                    ++j;
                std::string name = lx.s.substr(lx.i, j - lx.i);
                lx.i = j;
                auto it = std::find(vars.begin(), vars.end(), name);
                if (it == vars.end()) throw UnboundVariable("unknown variable " + name);
                long exp = 1;
                lx.skip_ws();
                if (lx.i < lx.s.size() && lx.s[lx.i] == '^') {
                    ++lx.i;
                    lx.skip_ws();
                    std::size_t k = lx.i;
                    if (k < lx.s.size() && (lx.s[k] == '-' || lx.s[k] == '+')) ++k;
                    std::size_t d = k;
                    while (d < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[d])))
                        ++d;
                    if (d == k) throw ParseError("missing exponent");
                    exp = std::stol(lx.s.substr(lx.i, d - lx.i));
                    lx.i = d;
                }
                e[static_cast<std::size_t>(it - vars.begin())] += static_cast<int>(exp);
                any_factor = true;
            } else {
                break;
            }
            lx.skip_ws();
            if (lx.i < lx.s.size() && lx.s[lx.i] == '*') {
                ++lx.i;
                continue;
            }
            break;
        }
        if (!any_factor) throw ParseError("malformed term");
        r.add_term(e, coeff);
        sign = 1;
        expect_term = false;
    }
    if (expect_term) throw ParseError("trailing operator");
    return r;
}

std::vector<int> tropical_eval(const LaurentPoly& f,
                               const std::vector<std::vector<int>>& bindings) {
    if (f.is_zero()) throw NegativeCoefficient("tropical evaluation of zero");
    if (bindings.size() != f.nvars()) throw IndexOutOfRange("binding count mismatch");
    std::size_t n = bindings.empty() ? 0 : bindings.front().size();
    for (const auto& b : bindings)
        if (b.size() != n) throw IndexOutOfRange("binding length mismatch");
    bool first = true;
    std::vector<int> best(n, 0);
    for (const auto& [e, c] : f.terms()) {
        if (c < 0) throw NegativeCoefficient();
        for (int a : e)
            if (a < 0) throw NegativeCoefficient("tropical evaluation needs a polynomial");
        std::vector<int> v(n, 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) v[j] += e[i] * bindings[i][j];
        if (first) {
            best = v;
            first = false;
        } else {
            for (std::size_t j = 0; j < n; ++j) best[j] = std::min(best[j], v[j]);
        }
    }
    return best;
}

LaurentPoly interpolate_int_poly(const std::vector<std::pair<long, Int>>& samples,
                                 const std::string& var) {
    const std::size_t m = samples.size();
    if (m == 0) throw NonIntegerCoefficient("no samples");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (samples[i].first == samples[j].first)
                throw IndexOutOfRange("repeated sample point");
    // Newton's divided differences over exact rationals.
    std::vector<Rat> coef(m);
    for (std::size_t i = 0; i < m; ++i) coef[i] = Rat(samples[i].second);
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / Rat(samples[i].first - samples[i - level].first);
            if (i == level) break;
        }
    // Expand the Newton form into monomial coefficients.
    std::vector<Rat> poly;  // poly[d] = coefficient of q^d
    for (std::size_t i = m; i-- > 0;) {
        // poly = poly * (q - x_i) + coef[i]
        std::vector<Rat> next(poly.size() + 1);
        for (std::size_t d = 0; d < poly.size(); ++d) {
            next[d + 1] += poly[d];
            next[d] -= Rat(samples[i].first) * poly[d];
        }
        if (next.empty()) next.resize(1);
        next[0] += coef[i];
        poly = std::move(next);
    }
    LaurentPoly r = LaurentPoly::zero({var});
    for (std::size_t d = 0; d < poly.size(); ++d) {
        poly[d].canonicalize();
        if (poly[d] == 0) continue;
        if (poly[d].get_den() != 1)
            throw NonIntegerCoefficient("interpolant has non-integer coefficient");
        r.add_term({static_cast<int>(d)}, poly[d].get_num());
    }
    return r;
}

Int eval_univariate(const LaurentPoly& p, const Int& x) {
    if (p.nvars() != 1) throw IndexOutOfRange("univariate evaluation of multivariate poly");
    Int r = 0;
    for (const auto& [e, c] : p.terms()) {
        if (e[0] < 0) throw NotPolynomial();
        Int t;
        mpz_pow_ui(t.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e[0]));
        r += c * t;
    }
    return r;
}

}  // namespace clorb
