#ifndef CLORB_LAURENT_HPP
#define CLORB_LAURENT_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "clorb/errors.hpp"

namespace clorb {

using Int = mpz_class;
using Rat = mpq_class;

/// Multivariate Laurent polynomial with exact integer coefficients.
///
/// Terms are kept in a map ordered lexicographically by exponent vector,
/// which fixes the canonical term order used everywhere (printing, seed
/// canonicalization, golden tests). No zero coefficient is ever stored.
class LaurentPoly {
public:
    using Exps = std::vector<int>;
    using TermMap = std::map<Exps, Int>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static LaurentPoly zero(const std::vector<std::string>& vars);
    static LaurentPoly constant(const std::vector<std::string>& vars, const Int& c);
    static LaurentPoly variable(const std::vector<std::string>& vars, std::size_t index);
    static LaurentPoly monomial(const std::vector<std::string>& vars, const Exps& e,
                                const Int& c = 1);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t nvars() const { return vars_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// True if every exponent is >= 0 (i.e. the value is a genuine polynomial).
    bool is_polynomial() const;
    /// True if there is exactly one term.
    bool is_monomial() const { return terms_.size() == 1; }

    Int coefficient(const Exps& e) const;
    Int constant_term() const { return coefficient(Exps(nvars(), 0)); }

    void add_term(const Exps& e, const Int& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    /// Total order used for canonical sorting of clusters: lexicographic
    /// comparison of the term maps (exponent vector, then coefficient).
    bool operator<(const LaurentPoly& o) const;

    /// Exact division in the Laurent ring; throws DivNotExact otherwise.
    LaurentPoly div_exact(const LaurentPoly& divisor) const;

    /// Integer power; negative powers require a single-term (unit) base.
    LaurentPoly pow(long e) const;

    /// Substitute every variable by a Laurent polynomial over a common
    /// ambient variable list. Negative exponents require monomial values.
    LaurentPoly substitute(const std::map<std::string, LaurentPoly>& bindings) const;

    /// Keep only the variables in `keep` (in that order); the dropped
    /// variables are evaluated at 1.
    LaurentPoly project_onto(const std::vector<std::string>& keep) const;

    std::string str() const;
    static LaurentPoly parse(const std::vector<std::string>& vars, const std::string& text);

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void check_same_vars(const LaurentPoly& o) const;
};

LaurentPoly operator*(const Int& c, const LaurentPoly& p);

/// Evaluate a subtraction-free polynomial tropically: each variable is bound
/// to an integer exponent vector, monomials map to sums of those vectors and
/// addition becomes componentwise min. Throws NegativeCoefficient if some
/// coefficient is negative, IndexOutOfRange on a malformed binding.
std::vector<int> tropical_eval(const LaurentPoly& f,
                               const std::vector<std::vector<int>>& bindings);

/// Lagrange interpolation of integer point counts (q_i, c_i) into a
/// univariate integer polynomial in `var`. Throws NonIntegerCoefficient if
/// the interpolant fails to have integer coefficients.
LaurentPoly interpolate_int_poly(const std::vector<std::pair<long, Int>>& samples,
                                 const std::string& var = "q");

/// Evaluate a univariate polynomial at an integer point.
Int eval_univariate(const LaurentPoly& p, const Int& x);

}  // namespace clorb

#endif
