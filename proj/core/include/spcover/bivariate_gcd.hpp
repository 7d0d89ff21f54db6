#pragma once

#include "spcover/multipoly.hpp"

#include <string>

namespace spcover::exactalg {

// GCD machinery for polynomials in a main variable plus at most one other
// variable (Q[t][x]). Only the local-family detectors need it, where the
// discriminant of a product carries squared resultant factors.

/// Monic-normalized GCD of univariate polynomials over Q (zero or one variable).
MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b);

/// GCD in Q[t][x] via the primitive pseudo-remainder sequence in `main`.
/// The result is normalized so its leading term has coefficient 1.
/// Throws std::invalid_argument when an input uses more than two variables.
MultiPoly bivariate_gcd(const MultiPoly& a, const MultiPoly& b, const std::string& main);

struct SquarefreeSplit {
    MultiPoly squarefree;  ///< p / repeated
    MultiPoly repeated;    ///< gcd(p, dp/dmain)
};

/// Removes repeated factors of p (as a polynomial in `main`).
SquarefreeSplit squarefree_split(const MultiPoly& p, const std::string& main);

}  // namespace spcover::exactalg
