#pragma once

#include "spcover/multipoly.hpp"
#include "spcover/unipoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace spcover::spectral {

using exactalg::MultiPoly;
using exactalg::Rational;
using exactalg::UniPoly;

inline constexpr const char* kSpectralVariable = "v";
inline constexpr const char* kHalfVariable = "q";

/// Name of the abstract coefficient symbol for index 2j, e.g. "Q4".
std::string coefficient_symbol(int index);

/// Spectral data (Q_2, Q_4, ..., Q_2n) of an even characteristic polynomial.
/// Odd-index coefficients are absent by construction.
struct SpectralData {
    int n = 1;
    int g = 2;
    std::map<int, MultiPoly> q;

    /// Q_2j = the symbol "Q2j" for every j.
    static SpectralData symbolic(int n, int g = 2);
    /// Validates indices and that no coefficient mentions v or q.
    static SpectralData from_coefficients(int n, std::map<int, MultiPoly> q, int g = 2);

    void validate() const;
    [[nodiscard]] const MultiPoly& coefficient(int index) const { return q.at(index); }
    [[nodiscard]] const MultiPoly& top() const { return q.at(2 * n); }
};

struct SpectralPolynomials {
    UniPoly p;       ///< v^{2n} + Q_2 v^{2n-2} + ... + Q_2n
    UniPoly ptilde;  ///< q^n + Q_2 q^{n-1} + ... + Q_2n
};

/// Builds P-tilde from the data and P from P-tilde by q -> v^2.
SpectralPolynomials build_P(const SpectralData& data);

/// Maps f(q) to f(v^2) by spreading coefficients to even exponents.
UniPoly even_lift(const UniPoly& f, const std::string& new_main);

/// Thrown when W is not a constant multiple of Q_2n * Delta^2.
class FactorizationError : public std::runtime_error {
public:
    FactorizationError(const std::string& what, MultiPoly residual)
        : std::runtime_error(what), residual_(std::move(residual)) {}
    [[nodiscard]] const MultiPoly& residual() const { return residual_; }

private:
    MultiPoly residual_;
};

struct Factorization {
    MultiPoly w;       ///< disc_v(P)
    MultiPoly delta;   ///< disc_q(P-tilde), 1 when n = 1
    MultiPoly wprime;  ///< c * Q_2n * Delta
    Rational constant; ///< c with W = c * Q_2n * Delta^2
};

/// W = c * Q_2n * Delta^2 with |c| = 4^n. Throws FactorizationError
/// ("factorization violated") otherwise.
Factorization factorize_discriminant(const SpectralData& data);
inline Factorization factorize_discriminant(int n) { return factorize_discriminant(SpectralData::symbolic(n)); }

struct ScalingReport {
    bool polynomial_matches = false;  ///< xi^{2n} P(xi^{-1} v) == P built from xi^{2j} Q_2j
    std::optional<int> delta_weight;  ///< weighted degree of Delta (nullopt: not homogeneous)
    std::optional<int> w_weight;
    bool delta_scales = false;        ///< Delta(xi^{2j} Q_2j) == xi^{2n(n-1)} Delta
    bool w_scales = false;            ///< W(xi^{2j} Q_2j) == xi^{2n(2n-1)} W
    MultiPoly residual;               ///< first nonzero residual, zero when all pass

    [[nodiscard]] bool ok() const { return polynomial_matches && delta_scales && w_scales; }
};

/// Checks the C* action on symbolic spectral data of half-rank n, reusing a
/// factorization of the same symbolic data.
ScalingReport scaling_action(int n, const Factorization& symbolic);

/// Weighted degree of p when Q_2j carries weight 2j; nullopt if p is not
/// weighted-homogeneous or mentions other variables.
std::optional<int> spectral_weight(const MultiPoly& p);

struct CoverNumerics {
    std::int64_t n = 0;
    std::int64_t g = 0;
    std::int64_t N = 0;              ///< 2n(2n-1), degree of W
    std::int64_t simple_zeros = 0;   ///< 4n(g-1), zeros of Q_2n
    std::int64_t double_zeros = 0;   ///< 4n(n-1)(g-1), zeros of Delta
    std::int64_t r = 0;              ///< 4n^2(g-1)
    std::int64_t branch_with_mult = 0;  ///< 2N(g-1)
    std::int64_t genus_hat = 0;      ///< (2n)^2(g-1) + 1
    std::int64_t N1 = 0;             ///< 2n, degree of Q_2n
    std::int64_t N2 = 0;             ///< 2n^2, degree of W'
    std::int64_t N3 = 0;             ///< 2n(n-1), degree of Delta

    [[nodiscard]] bool consistent() const;
};

/// Throws std::invalid_argument unless n >= 1 and g >= 2.
CoverNumerics cover_numerics(int n, int g);

struct RiemannHurwitz {
    std::int64_t rhs = 0;               ///< sheets(2g-2) + sum(b_p - 1) = 2g_hat - 2
    std::optional<std::int64_t> genus;  ///< nullopt when rhs is odd
};

/// Solves 2 g_hat - 2 = sheets (2g - 2) + sum(b_p - 1). Orders must be >= 1.
RiemannHurwitz riemann_hurwitz(int sheets, int g, std::span<const int> ramification_orders);

/// Ramification orders of a generic Sp(2n) cover: one order-2 point over each
/// zero of Q_2n and two over each zero of Delta.
std::vector<int> generic_ramification_profile(int n, int g);

enum class GroupType { GL, A, B, C, D };

struct GroupDimensions {
    std::string label;
    GroupType type = GroupType::C;
    int rank = 0;
    std::vector<int> degrees;       ///< fundamental degrees
    std::int64_t dim = 0;           ///< dim G
    std::int64_t degree_sum = 0;    ///< sum(2 d_j - 1)
    bool semisimple = true;
    std::int64_t fixed_base_dim = 0;     ///< sum_j h0(K^{d_j})
    std::int64_t variable_base_dim = 0;  ///< fixed + 3(g-1)

    /// degree_sum == dim, and for semisimple groups fixed = (g-1)dim and
    /// variable = (dim + 3)(g-1).
    [[nodiscard]] bool consistent(int g) const;
};

/// Parses "GL", "A", "B", "C", "D" or "Sp" (alias for C).
GroupType parse_group_type(const std::string& label);
GroupDimensions dims_and_degrees(GroupType type, int rank, int g);

}  // namespace spcover::spectral
