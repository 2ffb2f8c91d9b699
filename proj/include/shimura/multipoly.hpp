#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shimura/rational.hpp"

namespace shimura {

using Exponents = std::vector<int>;

/// Sparse multivariate polynomial over Q.
///
/// Each polynomial carries its own ordered variable list; binary operations
/// align operands on the union of their lists (left operand's variables
/// first). Exponent vectors are nonnegative and never stored with a zero
/// coefficient. Terms iterate in increasing lexicographic exponent order, so
/// the leading term in lex order is the last entry.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars);
    MultiPoly(std::vector<std::string> vars, TermMap terms);

    static MultiPoly constant(const Rational& c, std::vector<std::string> vars = {});
    static MultiPoly variable(const std::string& name);
    static MultiPoly monomial(const Rational& c, std::vector<std::string> vars, Exponents e);

    const std::vector<std::string>& vars() const noexcept { return vars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    std::optional<Rational> constant_value() const;

    /// Index of a variable, or -1.
    int index_of(std::string_view var) const;
    bool has_var(std::string_view var) const { return index_of(var) >= 0; }
    /// Variables that actually occur with positive exponent, in list order.
    std::vector<std::string> used_vars() const;

    /// Degree in one variable (-1 for the zero polynomial, 0 if absent).
    int degree(std::string_view var) const;
    int total_degree() const;
    /// Smallest exponent of var over all terms; the zero polynomial throws.
    int min_degree(std::string_view var) const;

    /// Coefficient of a monomial given by named exponents; absent names are 0.
    Rational coeff(const std::map<std::string, int>& named) const;

    /// Coefficient of var^k as a polynomial on the same variable list.
    MultiPoly coefficient(std::string_view var, int k) const;
    /// Coefficients c_0..c_d with f = sum c_k var^k (same variable list).
    std::vector<MultiPoly> coefficients_in(std::string_view var) const;
    static MultiPoly from_coefficients(std::string_view var, const std::vector<MultiPoly>& cs,
                                       std::vector<std::string> vars);
    MultiPoly leading_coefficient(std::string_view var) const;

    /// Lex-leading term (with respect to this polynomial's variable order).
    std::pair<Exponents, Rational> leading_term() const;

    MultiPoly with_vars(const std::vector<std::string>& vars) const;
    /// Removes variables that do not occur.
    MultiPoly compacted() const;
    /// Removes one variable; throws if it occurs.
    MultiPoly drop_var(std::string_view var) const;
    MultiPoly rename(const std::map<std::string, std::string>& names) const;

    MultiPoly derivative(std::string_view var) const;
    /// Sets var = value; the variable stays in the list with exponent 0.
    MultiPoly evaluate(std::string_view var, const Rational& value) const;
    /// Polynomial substitution var -> p for any subset of variables.
    MultiPoly compose(const std::map<std::string, MultiPoly>& assignments) const;
    /// Multiplies by var^k (k may be negative if every exponent allows it).
    MultiPoly shift(std::string_view var, int k) const;
    /// Applies a function to every coefficient, dropping zeros.
    MultiPoly map_coefficients(const std::function<Rational(const Rational&)>& fn) const;

    /// Scales so that the lex-leading coefficient is 1.
    MultiPoly monic() const;
    /// Lcm of coefficient denominators times f, divided by the gcd of the
    /// resulting integers; sign chosen so the lex-leading coefficient is positive.
    MultiPoly primitive_integer() const;

    MultiPoly pow(unsigned e) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator-(const MultiPoly& a);

    /// Equality as polynomials: variable lists are aligned first.
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    /// Canonical text: terms in decreasing lex order of this variable list.
    std::string to_string() const;

    /// Parses an expression with + - * / ^ ** and parentheses. Division and
    /// negative powers are allowed only when the result is a polynomial.
    /// With `vars` given, parsing fails on undeclared identifiers and the
    /// result uses exactly that list; otherwise variables appear in order of
    /// first occurrence.
    static MultiPoly parse(std::string_view text,
                           const std::optional<std::vector<std::string>>& vars = std::nullopt);

private:
    void align_with(const MultiPoly& o);
    void add_term(const Exponents& e, const Rational& c);

    std::vector<std::string> vars_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Union of variable lists, left first.
std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

/// Quotient of two polynomials, kept unreduced.
struct RationalFunction {
    MultiPoly num;
    MultiPoly den;

    static RationalFunction parse(std::string_view text);
    std::string to_string() const;
};

/// Exact division a / b. Returns nullopt when b does not divide a.
std::optional<MultiPoly> try_divide(const MultiPoly& a, const MultiPoly& b);
/// Exact division; throws InvariantViolation if not exact.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

} // namespace shimura
