#pragma once

#include "normclass/arith/gaussian.hpp"
#include "normclass/poly/monomial.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace normclass {

struct Term {
    Monomial m;
    GaussianRational c;
};

/// Sparse multivariate polynomial over Q(i) in a fixed number of variables.
///
/// Terms are kept sorted in descending graded reverse lexicographic order with
/// no zero coefficients, so equality is structural.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(std::size_t nvars);

    static MultiPoly constant(std::size_t nvars, const GaussianRational& c);
    static MultiPoly variable(std::size_t nvars, std::size_t index);
    static MultiPoly monomial(std::size_t nvars, const Monomial& m, const GaussianRational& c);
    /// Builds from arbitrary terms; like monomials are combined, zeros dropped.
    static MultiPoly from_terms(std::size_t nvars, std::vector<Term> terms);

    std::size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    /// Constant coefficient (zero when absent).
    GaussianRational constant_term() const;

    /// Highest total degree; -1 for the zero polynomial.
    int total_degree() const;
    /// Lowest total degree among terms; -1 for zero.
    int low_degree() const;
    unsigned degree_in(std::size_t var) const;
    bool is_homogeneous() const;
    bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

    const Term& leading_term() const { return terms_.front(); }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const GaussianRational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const GaussianRational& c) { return a *= c; }
    friend MultiPoly operator*(const GaussianRational& c, MultiPoly a) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(unsigned e) const;
    /// Multiplies by a monomial times a scalar.
    MultiPoly mul_term(const Monomial& m, const GaussianRational& c) const;

    /// Formal partial derivative with respect to variable `var`.
    MultiPoly derivative(std::size_t var) const;
    /// Homogeneous component of total degree k.
    MultiPoly homogeneous_part(unsigned k) const;

    /// Composes with `assignment[v]` for every variable v. The result lives in
    /// the ring of the assigned polynomials (all must share one arity).
    MultiPoly substitute(std::span<const MultiPoly> assignment) const;
    /// Replaces a single variable by a polynomial of the same arity.
    MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
    GaussianRational evaluate(std::span<const GaussianRational> point) const;

    /// Same polynomial viewed in a ring with `nvars` variables (identity on
    /// exponents). Shrinking requires the dropped variables to be absent.
    MultiPoly with_arity(std::size_t nvars) const;
    /// Moves variable `from[k]` to index `to[k]` in a ring of arity `nvars`.
    MultiPoly remap(std::size_t nvars, std::span<const std::size_t> target_index) const;

    /// Coefficients with respect to `var`: result[j] multiplies var^j.
    std::vector<MultiPoly> coefficients_in(std::size_t var) const;

    /// Divides every coefficient so the grevlex leading coefficient becomes 1.
    MultiPoly monic() const;

    /// Exact quotient a / b, or nullopt when b does not divide a.
    static std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

    std::string to_string(std::span<const std::string> names) const;
    std::string to_string() const;

private:
    void normalize();

    std::size_t nvars_ = 0;
    std::vector<Term> terms_;
};

/// Variable names for an ambient tuple: (x,y,z) for 3, (x,y,z,t) for 4.
std::vector<std::string> default_variable_names(std::size_t nvars);

/// True iff sum_v v * dF/dv == deg(F) * F. Throws HypothesisViolation for
/// non-homogeneous input.
bool euler_check(const MultiPoly& f);

/// Greatest common divisor by recursive content extraction and primitive
/// pseudo-remainder sequences; result is monic (grevlex) or zero.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// Parses the polynomial grammar over the given variable names.
MultiPoly parse_polynomial(std::string_view text, std::span<const std::string> names);
/// Parses over (x,y,z,t) when the arity is 4 or (x,y,z) when it is 3.
MultiPoly parse_polynomial(std::string_view text, std::size_t nvars);

} // namespace normclass
