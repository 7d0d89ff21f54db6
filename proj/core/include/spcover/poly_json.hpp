#pragma once

#include "spcover/multipoly.hpp"

#include <nlohmann/json.hpp>

namespace spcover::exactalg {

/// Encodes p as {"vars": [...], "terms": [[num, den, e1, e2, ...], ...]}.
///
/// Variables and terms appear in canonical order, so equal polynomials
/// encode to identical JSON. num/den are JSON integers when they fit in a
/// signed 64-bit integer and decimal strings otherwise.
nlohmann::json to_json(const MultiPoly& p);

/// Inverse of to_json. Accepts num/den as integers or decimal strings, terms
/// in any order, and variables that do not occur. Throws
/// std::invalid_argument on malformed input.
MultiPoly multipoly_from_json(const nlohmann::json& j);

}  // namespace spcover::exactalg
