#pragma once

#include "spcover/multipoly.hpp"

#include <map>
#include <optional>
#include <string>

namespace spcover::exactalg {

/// Quotient of two MultiPoly.
///
/// Canonical form is content-only: the denominator's leading term (graded
/// lex) has coefficient 1, a zero numerator forces denominator 1, and a
/// denominator that divides the numerator exactly is cancelled. No
/// multivariate GCD is taken, so equal values may have different
/// representations; equality is decided by cross-multiplication.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const MultiPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const Rational& c) : num_(c), den_(1) {}   // NOLINT(google-explicit-constructor)
    RatFunc(long c) : num_(c), den_(1) {}              // NOLINT(google-explicit-constructor)
    RatFunc(int c) : num_(c), den_(1) {}               // NOLINT(google-explicit-constructor)
    /// Throws std::domain_error on a zero denominator.
    RatFunc(MultiPoly numerator, MultiPoly denominator);

    static RatFunc variable(const std::string& name) { return RatFunc(MultiPoly::variable(name)); }

    [[nodiscard]] const MultiPoly& numerator() const { return num_; }
    [[nodiscard]] const MultiPoly& denominator() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }

    [[nodiscard]] RatFunc substitute(std::string_view name, const RatFunc& value) const;
    /// nullopt when the denominator vanishes at the point.
    [[nodiscard]] std::optional<Rational> evaluate(const std::map<std::string, Rational>& point) const;
    [[nodiscard]] RatFunc pow(unsigned exponent) const;

    /// "num" when the denominator is 1, otherwise "(num)/(den)".
    [[nodiscard]] std::string to_string() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

    /// Same value (cross-multiplication), not same representation.
    friend bool operator==(const RatFunc& a, const RatFunc& b);

private:
    void normalize();

    MultiPoly num_;
    MultiPoly den_;
};

/// a.num * b.den == b.num * a.den.
bool ratfunc_equal(const RatFunc& a, const RatFunc& b);

}  // namespace spcover::exactalg
