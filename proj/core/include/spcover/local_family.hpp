#pragma once

#include "spcover/spectral.hpp"
#include "spcover/stratum.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spcover::spectral {

using spcover::Stratum;
using spcover::kAllStrata;
using spcover::to_string;
using spcover::parse_stratum;
using spcover::min_half_rank;

inline constexpr const char* kBaseVariable = "x";
inline constexpr const char* kArcVariable = "t";

/// One-parameter arc (parameter t) of spectral data in a base coordinate x,
/// crossing the named discriminant component at (x, t) = (0, 0).
struct LocalFamily {
    Stratum label = Stratum::b;
    int n = 1;
    std::map<int, MultiPoly> q;

    [[nodiscard]] SpectralData data() const { return SpectralData::from_coefficients(n, q); }
};

/// {"label": "cc", "n": 3, "Q": {"2": <poly>, "4": <poly>, ...}}
LocalFamily family_from_json(const nlohmann::json& j);
nlohmann::json to_json(const LocalFamily& family);

/// Generic constants of the shipped fixture for `s`.
std::vector<Rational> default_constants(Stratum s);
/// The shipped fixture for `s` evaluated at the given generic constants.
LocalFamily builtin_family(Stratum s, const std::vector<Rational>& constants);
inline LocalFamily builtin_family(Stratum s) { return builtin_family(s, default_constants(s)); }

/// Conditions that place the family in the generic part of its component.
struct Genericity {
    std::vector<std::string> failures;
    [[nodiscard]] bool ok() const { return failures.empty(); }
};
Genericity check_genericity(const LocalFamily& family);

class DegenerateFamily : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Multiplicity {
    Stratum label = Stratum::b;
    unsigned order = 0;
    std::string detector;      ///< e.g. "disc_x(Q_2n)"
    MultiPoly detector_value;  ///< detector as a polynomial in t
    MultiPoly delta;           ///< Delta(x, t) of the family
    MultiPoly repeated_factor; ///< factor removed from Delta before the detector, 1 if none
    int attempts = 1;          ///< fixture constants tried (builtin_multiplicity only)
};

/// Vanishing order in t of the component's detector along the family.
/// Throws DegenerateFamily when genericity fails or the detector vanishes
/// identically ("family degenerate, choose different generic constants").
Multiplicity stratum_multiplicity(const LocalFamily& family);

/// stratum_multiplicity on the shipped fixture, retrying with every constant
/// increased by 1 (at most 5 retries) when the family is degenerate.
Multiplicity builtin_multiplicity(Stratum s);

/// Delta restricted to Q_2n = 0 versus Q_{2n-2}^2 times the discriminant of
/// the deflated polynomial P-tilde(q)/q, checked symbolically.
struct DeflationCheck {
    int n = 0;
    MultiPoly restricted_delta;  ///< Delta with Q_2n = 0
    MultiPoly deflated_disc;     ///< disc of q^{n-1} + Q_2 q^{n-2} + ... + Q_{2n-2}
    bool holds = false;          ///< restricted_delta == Q_{2n-2}^2 * deflated_disc
};

/// Requires n >= 2.
DeflationCheck ac_perfect_square_check(int n);

}  // namespace spcover::spectral
