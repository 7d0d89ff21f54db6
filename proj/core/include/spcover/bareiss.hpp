#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spcover::exactalg {

/// Dense row-major square-or-rectangular matrix of ring elements.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) {
            std::swap((*this)(a, j), (*this)(b, j));
        }
    }

    [[nodiscard]] Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/*
 * Bareiss fraction-free determinant over an integral domain.
 *
 * Each step replaces M(i,j) by (M(i,j)*M(k,k) - M(i,k)*M(k,j)) / prev, where
 * prev is the previous pivot; Sylvester's identity guarantees the division is
 * exact, so entries stay in the ring and every intermediate entry is a minor
 * of the input. Row swaps pick the nonzero candidate with the smallest
 * pivot_weight and flip the sign.
 *
 * The ring type must provide, via ADL:
 *   bool is_zero(const T&);
 *   T exact_quotient(const T&, const T&);
 *   std::size_t pivot_weight(const T&);
 */
template <typename T>
T bareiss_determinant(Matrix<T> m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    if (n == 0) {
        return T(1);
    }
    bool negate = false;
    T prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t best = n;
        for (std::size_t i = k; i < n; ++i) {
            if (!is_zero(m(i, k)) && (best == n || pivot_weight(m(i, k)) < pivot_weight(m(best, k)))) {
                best = i;
            }
        }
        if (best == n) {
            return T(0);
        }
        if (best != k) {
            m.swap_rows(best, k);
            negate = !negate;
        }
        const T& pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const bool lead_zero = is_zero(m(i, k));
            for (std::size_t j = k + 1; j < n; ++j) {
                T next = m(i, j) * pivot;
                if (!lead_zero) {
                    next = next - m(i, k) * m(k, j);
                }
                m(i, j) = exact_quotient(next, prev);
            }
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    T det = m(n - 1, n - 1);
    return negate ? T(0) - det : det;
}

}  // namespace spcover::exactalg
