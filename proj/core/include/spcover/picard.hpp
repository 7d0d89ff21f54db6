#pragma once

#include "spcover/ratfunc.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace spcover::picard {

using exactalg::Rational;
using exactalg::RatFunc;

inline constexpr const char* kRankVariable = "n";
inline constexpr const char* kGenusVariable = "g";

RatFunc n_var();
RatFunc g_var();

/// a * lambda + b * phi + c * delta with coefficients in Q(n, g).
struct PicClass {
    RatFunc lambda;
    RatFunc phi;
    RatFunc delta;

    static PicClass generator_lambda() { return {1, 0, 0}; }
    static PicClass generator_phi() { return {0, 1, 0}; }
    static PicClass generator_delta() { return {0, 0, 1}; }

    [[nodiscard]] bool is_zero() const { return lambda.is_zero() && phi.is_zero() && delta.is_zero(); }
    [[nodiscard]] PicClass substitute(const std::string& name, const RatFunc& value) const;
    /// nullopt when a coefficient's denominator vanishes at (n, g).
    [[nodiscard]] std::optional<std::array<Rational, 3>> evaluate(const Rational& n, const Rational& g) const;

    friend PicClass operator+(const PicClass& a, const PicClass& b);
    friend PicClass operator-(const PicClass& a, const PicClass& b);
    friend PicClass operator-(const PicClass& a);
    friend PicClass operator*(const RatFunc& s, const PicClass& a);
    /// Componentwise ratfunc_equal.
    friend bool operator==(const PicClass& a, const PicClass& b);
};

/// {"lambda": "...", "phi": "...", "delta": "..."}
nlohmann::json to_json(const PicClass& c);

/// N((N + 1)(12 lambda - delta) - 2(g - 1)(2N + 1) phi).
PicClass star_class(const RatFunc& N);

/// The three Hitchin discriminant classes as stated, in n and g.
PicClass pd1_class();
PicClass pd2_class();
PicClass pd3_class();

/// The GL(n) universal discriminant class n(n-1)((n^2-n+1)(12 lambda - delta) - 2(g-1)(2n^2-2n+1) phi).
PicClass gl_discriminant_class();

/// lambda = weight * [PD_i] + phi_coefficient * phi + delta / 12.
struct HodgeLine {
    int index = 1;
    RatFunc weight;
    RatFunc phi_coefficient;

    /// The line solved for [PD_i].
    [[nodiscard]] PicClass solved_for_pd() const;
    /// Right-hand side with [PD_i] replaced by `pd`.
    [[nodiscard]] PicClass rhs(const PicClass& pd) const;
};
std::array<HodgeLine, 3> hodge_lines();

/// Per-(g - 1) values of kappa_B as rational functions of n.
struct KappaSpec {
    RatFunc sum_form;      ///< 1/(12N^2) sum m(m + 2N)/(m + N) over the zero multiset
    RatFunc poly_form;     ///< the closed quotient of polynomials in n
    RatFunc radical_form;  ///< (4N^2 + 8N + sqrt(4N + 1) + 5)/(12N(N + 1)(N + 2)), sqrt(4N + 1) = 4n - 1
};
KappaSpec kappa_spec();
/// kappa_B / (g - 1) at a concrete n >= 1.
Rational kappa_B(int n);

/// N = 2n(2n - 1) and the coefficients c_1, c_2, c_3 as functions of n.
RatFunc cover_degree();
std::array<RatFunc, 3> coarse_coefficients();

/// An equality (or, with expect_equal = false, an inequality) between two
/// lists of rational functions in n and g.
struct Identity {
    std::string name;
    std::vector<std::string> components;
    std::vector<RatFunc> lhs;
    std::vector<RatFunc> rhs;
    bool expect_equal = true;
};

Identity class_identity(std::string name, const PicClass& lhs, const PicClass& rhs);
Identity scalar_identity(std::string name, const RatFunc& lhs, const RatFunc& rhs);

struct Grid {
    int min_n = 1;
    int max_n = 12;
    int min_g = 2;
    int max_g = 12;
};

struct IdentityResult {
    std::string name;
    bool expect_equal = true;
    bool symbolic = false;  ///< verdict matches expect_equal symbolically
    bool grid = false;      ///< verdict matches expect_equal on the grid
    int grid_points = 0;
    int grid_skipped = 0;   ///< points where a denominator vanishes
    int grid_equal = 0;     ///< evaluated points where both sides agree
    std::string first_mismatch;
    std::vector<std::string> components;
    std::vector<RatFunc> residual;  ///< lhs - rhs per component

    [[nodiscard]] bool holds() const { return symbolic && grid; }
};

/// Symbolic check plus evaluation at every grid point. For an equality the
/// grid verdict needs agreement at every evaluable point; for an inequality
/// it needs disagreement at one point at least.
IdentityResult check_identity(const Identity& id, const Grid& grid = {});

/// PD_1 = (*)(2n), PD_3 = (*)(2n^2 - 2n), PD_1 + PD_2 + PD_3 = (*)(2n^2),
/// (*)(2n^2) - (*)(2n) - (*)(2n^2 - 2n) = PD_2, and each Hodge line against
/// its PD expression both ways.
std::vector<Identity> discriminant_class_identities();
/// The GL(n) class against (*)(n(n - 1)).
std::vector<Identity> gl_identities();
/// Pairwise agreement of the kappa_B forms and (4n - 1)^2 = 4N + 1.
std::vector<Identity> kappa_identities();
/// The coarse relation, the c_2 split and psi = N phi.
std::vector<Identity> coarse_identities();
/// (*)(N_1 + N_3) != (*)(N_1) + (*)(N_3).
Identity star_nonadditivity();

nlohmann::json to_json(const IdentityResult& r);

}  // namespace spcover::picard
