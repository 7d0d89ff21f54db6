#include "spcover/hamiltonian.hpp"

namespace spcover::spectral {

using exactalg::Matrix;

namespace {

bool is_symmetric(const Matrix<MultiPoly>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            if (m(i, j) != m(j, i)) {
                return false;
            }
        }
    }
    return true;
}

bool is_square_of(const Matrix<MultiPoly>& m, std::size_t n) { return m.rows() == n && m.cols() == n; }

}  // namespace

HamiltonianMatrix::HamiltonianMatrix(Matrix<MultiPoly> a, Matrix<MultiPoly> b, Matrix<MultiPoly> c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    const std::size_t n = a_.rows();
    if (n == 0 || !is_square_of(a_, n) || !is_square_of(b_, n) || !is_square_of(c_, n)) {
        throw std::invalid_argument("Hamiltonian blocks must be nonempty n x n matrices");
    }
    if (!is_symmetric(b_) || !is_symmetric(c_)) {
        throw std::invalid_argument("Hamiltonian blocks B and C must be symmetric");
    }
}

Matrix<MultiPoly> HamiltonianMatrix::full() const {
    const std::size_t n = a_.rows();
    Matrix<MultiPoly> x(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            x(i, j) = a_(i, j);
            x(i, n + j) = b_(i, j);
            x(n + i, j) = c_(i, j);
            x(n + i, n + j) = -a_(j, i);
        }
    }
    return x;
}

bool HamiltonianMatrix::is_hamiltonian() const {
    const auto x = full();
    const std::size_t n = a_.rows();
    // J X: top rows are the bottom rows of X, bottom rows are minus the top rows.
    Matrix<MultiPoly> jx(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < 2 * n; ++j) {
            jx(i, j) = x(n + i, j);
            jx(n + i, j) = -x(i, j);
        }
    }
    return jx.transposed() == jx;
}

HamiltonianMatrix random_hamiltonian(int n, std::mt19937_64& rng, int bound) {
    if (n < 1) {
        throw std::invalid_argument("random Hamiltonian needs n >= 1");
    }
    std::uniform_int_distribution<int> dist(-bound, bound);
    const auto sz = static_cast<std::size_t>(n);
    auto random_block = [&] {
        Matrix<MultiPoly> m(sz, sz);
        for (std::size_t i = 0; i < sz; ++i) {
            for (std::size_t j = 0; j < sz; ++j) {
                m(i, j) = MultiPoly(dist(rng));
            }
        }
        return m;
    };
    auto symmetrize = [](const Matrix<MultiPoly>& r) {
        Matrix<MultiPoly> s = r;
        const auto t = r.transposed();
        for (std::size_t i = 0; i < r.rows(); ++i) {
            for (std::size_t j = 0; j < r.cols(); ++j) {
                s(i, j) = r(i, j) + t(i, j);
            }
        }
        return s;
    };
    auto a = random_block();
    auto b = symmetrize(random_block());
    auto c = symmetrize(random_block());
    return HamiltonianMatrix(std::move(a), std::move(b), std::move(c));
}

CharacteristicPolynomial char_poly_hamiltonian(const HamiltonianMatrix& x) {
    auto m = x.full();
    const MultiPoly v = MultiPoly::variable(kSpectralVariable);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).has_variable(kSpectralVariable)) {
                throw std::invalid_argument("matrix entries must not mention the spectral variable");
            }
            m(i, j) = (i == j ? v : MultiPoly{}) - m(i, j);
        }
    }
    const auto det = exactalg::bareiss_determinant(std::move(m));
    UniPoly poly = UniPoly::from_multipoly(det, kSpectralVariable);
    const int n = x.n();
    std::map<int, MultiPoly> q;
    for (int k = 0; k <= 2 * n; ++k) {
        const auto c = poly.coefficient(static_cast<std::size_t>(k));
        if (k % 2 == 1 && !c.is_zero()) {
            throw std::logic_error("odd coefficient of v^" + std::to_string(k) +
                                   " is nonzero: matrix is not Hamiltonian");
        }
    }
    for (int j = 1; j <= n; ++j) {
        q.emplace(2 * j, poly.coefficient(static_cast<std::size_t>(2 * n - 2 * j)));
    }
    return {std::move(poly), SpectralData::from_coefficients(n, std::move(q))};
}

}  // namespace spcover::spectral
