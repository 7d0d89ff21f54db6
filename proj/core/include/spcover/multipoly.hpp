#pragma once

#include "spcover/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spcover::exactalg {

/// Orders variable names naturally: alphabetic prefix first, then the numeric
/// suffix as a number, so Q2 < Q4 < Q10 < t < x.
bool variable_less(std::string_view a, std::string_view b);

using Exponents = std::vector<std::uint32_t>;

/// Graded-lexicographic comparison: true when a sorts strictly above b.
bool graded_lex_greater(const Exponents& a, const Exponents& b);

struct Term {
    Exponents exponents;
    Rational coefficient;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Canonical form: the variable list holds exactly the variables that occur
/// with a positive exponent, sorted by variable_less; terms are sorted
/// descending in graded-lex order and carry nonzero coefficients. Two
/// polynomials are equal iff their canonical forms are identical, which makes
/// equality independent of how the inputs listed their variables.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    MultiPoly(int c) : MultiPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

    static MultiPoly variable(const std::string& name);
    /// Builds from arbitrary (unsorted, possibly duplicated or zero) terms.
    static MultiPoly from_terms(std::vector<std::string> vars, std::vector<Term> terms);

    [[nodiscard]] const std::vector<std::string>& variables() const { return vars_; }
    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const { return vars_.empty(); }
    /// Constant term value; only meaningful when is_constant().
    [[nodiscard]] Rational constant_value() const;
    [[nodiscard]] bool has_variable(std::string_view name) const;

    [[nodiscard]] const Term& leading_term() const;
    [[nodiscard]] unsigned total_degree() const;
    [[nodiscard]] unsigned degree_in(std::string_view name) const;

    /// Coefficient list w.r.t. `name`: result[k] multiplies name^k.
    [[nodiscard]] std::vector<MultiPoly> coefficients_in(std::string_view name) const;

    [[nodiscard]] MultiPoly derivative(std::string_view name) const;
    [[nodiscard]] MultiPoly substitute(std::string_view name, const MultiPoly& value) const;
    [[nodiscard]] MultiPoly evaluate(std::string_view name, const Rational& value) const;
    /// Full evaluation; throws if a variable is left unassigned.
    [[nodiscard]] Rational evaluate_all(const std::map<std::string, Rational>& point) const;

    [[nodiscard]] MultiPoly pow(unsigned exponent) const;
    [[nodiscard]] MultiPoly scaled(const Rational& factor) const;

    /// Exact quotient this / divisor, or nullopt when divisor does not divide.
    [[nodiscard]] std::optional<MultiPoly> try_divide(const MultiPoly& divisor) const;
    /// Exact quotient; throws std::domain_error when the division leaves a remainder.
    [[nodiscard]] MultiPoly exact_divide(const MultiPoly& divisor) const;

    [[nodiscard]] std::string to_string() const;

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a);

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    void canonicalize();
    [[nodiscard]] std::vector<Term> aligned_terms(const std::vector<std::string>& universe) const;

    std::vector<std::string> vars_;
    std::vector<Term> terms_;
};

std::vector<std::string> union_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

/// Least exponent of `name` over the terms of p.
/// Throws std::domain_error("order undefined") when p is zero.
unsigned order_at_zero(const MultiPoly& p, std::string_view name);

// Ring hooks used by the generic fraction-free elimination.
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) { return a.exact_divide(b); }
inline std::size_t pivot_weight(const MultiPoly& p) { return p.size(); }

}  // namespace spcover::exactalg
