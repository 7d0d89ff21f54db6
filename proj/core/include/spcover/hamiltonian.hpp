#pragma once

#include "spcover/bareiss.hpp"
#include "spcover/spectral.hpp"

#include <random>

namespace spcover::spectral {

/// X = [[A, B], [C, -A^T]] with B and C symmetric, i.e. an element of sp(2n).
class HamiltonianMatrix {
public:
    /// Throws std::invalid_argument unless the blocks are n x n and B, C are symmetric.
    HamiltonianMatrix(exactalg::Matrix<MultiPoly> a, exactalg::Matrix<MultiPoly> b,
                      exactalg::Matrix<MultiPoly> c);

    [[nodiscard]] int n() const { return static_cast<int>(a_.rows()); }
    [[nodiscard]] const exactalg::Matrix<MultiPoly>& a() const { return a_; }
    [[nodiscard]] const exactalg::Matrix<MultiPoly>& b() const { return b_; }
    [[nodiscard]] const exactalg::Matrix<MultiPoly>& c() const { return c_; }

    [[nodiscard]] exactalg::Matrix<MultiPoly> full() const;
    /// (J X)^T == J X with J = [[0, I], [-I, 0]].
    [[nodiscard]] bool is_hamiltonian() const;

private:
    exactalg::Matrix<MultiPoly> a_;
    exactalg::Matrix<MultiPoly> b_;
    exactalg::Matrix<MultiPoly> c_;
};

/// Integer entries uniform in [-bound, bound]; B and C are R + R^T.
HamiltonianMatrix random_hamiltonian(int n, std::mt19937_64& rng, int bound = 5);

struct CharacteristicPolynomial {
    UniPoly poly;       ///< det(v I - X)
    SpectralData data;  ///< Q_2j read off the even coefficients
};

/// det(vI - X) by fraction-free elimination. Throws std::logic_error if an odd
/// coefficient survives, which the type's invariants rule out.
CharacteristicPolynomial char_poly_hamiltonian(const HamiltonianMatrix& x);

}  // namespace spcover::spectral
