#include "spcover/bareiss.hpp"
#include "spcover/unipoly.hpp"

#include <stdexcept>

namespace spcover::exactalg {

namespace {

Matrix<MultiPoly> sylvester_matrix(const UniPoly& f, const UniPoly& g) {
    const auto m = static_cast<std::size_t>(f.degree());
    const auto n = static_cast<std::size_t>(g.degree());
    Matrix<MultiPoly> s(m + n, m + n);
    // n shifted copies of f, then m shifted copies of g, highest power first.
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k <= m; ++k) {
            s(r, r + k) = f.coefficients()[m - k];
        }
    }
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t k = 0; k <= n; ++k) {
            s(n + r, r + k) = g.coefficients()[n - k];
        }
    }
    return s;
}

MultiPoly discriminant_sign(int d) {
    return (static_cast<long>(d) * (d - 1) / 2) % 2 == 0 ? MultiPoly(1) : MultiPoly(-1);
}

}  // namespace

MultiPoly resultant(const UniPoly& f, const UniPoly& g) {
    if (f.main_variable() != g.main_variable()) {
        throw std::invalid_argument("resultant of polynomials in different main variables");
    }
    if (f.is_zero() || g.is_zero()) {
        return MultiPoly{};
    }
    if (f.degree() < 1 && g.degree() < 1) {
        throw std::invalid_argument("resultant undefined for two constants");
    }
    return bareiss_determinant(sylvester_matrix(f, g));
}

MultiPoly discriminant(const UniPoly& f) {
    if (f.degree() < 2) {
        throw std::invalid_argument("discriminant requires degree >= 2");
    }
    if (!f.is_monic()) {
        throw std::invalid_argument("discriminant requires a monic polynomial");
    }
    return discriminant_sign(f.degree()) * resultant(f, f.derivative());
}

MultiPoly scaled_discriminant(const UniPoly& f) {
    if (f.degree() < 1) {
        throw std::invalid_argument("discriminant requires degree >= 1");
    }
    return discriminant_sign(f.degree()) * resultant(f, f.derivative());
}

}  // namespace spcover::exactalg
