#pragma once

#include "spcover/multipoly.hpp"

#include <string>
#include <vector>

namespace spcover::exactalg {

/// Polynomial in one distinguished variable whose coefficients are MultiPoly
/// in the remaining variables. coefficients()[k] multiplies main^k.
class UniPoly {
public:
    explicit UniPoly(std::string main_variable) : main_(std::move(main_variable)) {}
    UniPoly(std::string main_variable, std::vector<MultiPoly> coefficients);

    /// Splits a MultiPoly along `main_variable`.
    static UniPoly from_multipoly(const MultiPoly& p, const std::string& main_variable);
    /// x^degree in the main variable.
    static UniPoly monomial(const std::string& main_variable, unsigned degree,
                            const MultiPoly& coefficient = MultiPoly(1));

    [[nodiscard]] const std::string& main_variable() const { return main_; }
    [[nodiscard]] const std::vector<MultiPoly>& coefficients() const { return coeffs_; }
    /// Coefficient of main^k, zero past the degree.
    [[nodiscard]] MultiPoly coefficient(std::size_t k) const;

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const MultiPoly& leading_coefficient() const;
    [[nodiscard]] bool is_monic() const;

    [[nodiscard]] UniPoly derivative() const;
    [[nodiscard]] MultiPoly evaluate(const MultiPoly& value) const;
    /// Substitutes inside the coefficients (never the main variable).
    [[nodiscard]] UniPoly substitute_coefficients(std::string_view name, const MultiPoly& value) const;
    [[nodiscard]] MultiPoly to_multipoly() const;
    [[nodiscard]] std::string to_string() const;

    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const MultiPoly& c, const UniPoly& a);

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void trim();
    void require_same_main(const UniPoly& other) const;

    std::string main_;
    std::vector<MultiPoly> coeffs_;
};

/// Determinant of the (deg f + deg g)-square Sylvester matrix, by fraction-free
/// elimination. Throws std::invalid_argument when both inputs are constants.
MultiPoly resultant(const UniPoly& f, const UniPoly& g);

/// (-1)^{d(d-1)/2} * resultant(f, f') for monic f of degree d >= 2.
MultiPoly discriminant(const UniPoly& f);

/// (-1)^{d(d-1)/2} * resultant(f, f') without the monic requirement, which
/// equals lc(f) times the discriminant. Degree must be >= 1.
MultiPoly scaled_discriminant(const UniPoly& f);

}  // namespace spcover::exactalg
