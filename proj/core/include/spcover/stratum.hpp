#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace spcover {

/// Components of the Hitchin discriminants. b: two zeros of Q_2n merge;
/// ac, bm: Q_2n and Delta acquire a common zero; bb, cc, mm: two zeros of
/// Delta merge.
enum class Stratum { b, ac, bm, bb, cc, mm };

inline constexpr std::array<Stratum, 6> kAllStrata = {Stratum::b,  Stratum::ac, Stratum::bm,
                                                      Stratum::bb, Stratum::cc, Stratum::mm};

constexpr std::string_view to_string(Stratum s) {
    switch (s) {
    case Stratum::b: return "b";
    case Stratum::ac: return "ac";
    case Stratum::bm: return "bm";
    case Stratum::bb: return "bb";
    case Stratum::cc: return "cc";
    case Stratum::mm: return "mm";
    }
    return "?";
}

constexpr std::optional<Stratum> parse_stratum(std::string_view label) {
    for (auto s : kAllStrata) {
        if (to_string(s) == label) return s;
    }
    return std::nullopt;
}

/// Smallest half-rank n at which the component exists.
constexpr int min_half_rank(Stratum s) {
    switch (s) {
    case Stratum::b: return 1;
    case Stratum::ac:
    case Stratum::bb: return 2;
    case Stratum::bm:
    case Stratum::cc: return 3;
    case Stratum::mm: return 4;
    }
    return 1;
}

/// Index of [PD_{W,i}] the component belongs to (1, 2 or 3).
constexpr int divisor_index(Stratum s) {
    switch (s) {
    case Stratum::b: return 1;
    case Stratum::ac:
    case Stratum::bm: return 2;
    default: return 3;
    }
}

}  // namespace spcover
