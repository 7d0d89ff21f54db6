#pragma once

#include "spcover/permutation.hpp"
#include "spcover/stratum.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace spcover::monodromy {

enum class ZeroKind { QZero, DeltaZero };

std::string_view to_string(ZeroKind kind);

/// Monodromy around a simple zero of Q_2n (a transposition of one conjugate
/// pair) or of Delta (a (2,2)-permutation (a c)(sigma a sigma c) exchanging
/// two conjugate pairs).
class LocalMonodromy {
public:
    /// Throws std::invalid_argument when `perm` does not have the shape
    /// required by `kind` for the pairing (1 2)(3 4)...
    LocalMonodromy(ZeroKind kind, Permutation perm);

    [[nodiscard]] ZeroKind kind() const { return kind_; }
    [[nodiscard]] const Permutation& perm() const { return perm_; }
    [[nodiscard]] int n() const { return perm_.size() / 2; }
    /// 0-based indices of the conjugate pairs moved by the permutation.
    [[nodiscard]] std::set<int> pairs() const;
    /// Same kind, permutation conjugated by h (h must commute with sigma).
    [[nodiscard]] LocalMonodromy conjugated_by(const Permutation& h) const;

    friend bool operator==(const LocalMonodromy&, const LocalMonodromy&) = default;

private:
    ZeroKind kind_;
    Permutation perm_;
};

/// Qzero: the n transpositions (2k-1 2k). DeltaZero: the n(n-1) elements
/// (a c)(sigma a sigma c) with a the smaller sheet of its pair.
std::vector<LocalMonodromy> enumerate_local_monodromies(int n, ZeroKind kind);

struct DegenerationClass {
    Stratum label = Stratum::b;
    int min_n = 1;
    std::vector<int> cycle_type;            ///< of the product, fixed points included
    std::vector<int> ramification_profile;  ///< cycle lengths >= 2 of the product, descending
    int nodes = 0;
    int genus_delta = 0;
    int branching_before = 0;  ///< sum of (b - 1) over the two separate zeros
    int branching_after = 0;   ///< sum of (b - 1) over the profile, plus one per node
    int fiber_size = 0;        ///< points of the cover over the merge point

    [[nodiscard]] int total_branching() const { return branching_after; }
};

enum class MergeVerdict { Class, Excluded, Inadmissible };

std::string_view to_string(MergeVerdict verdict);

struct MergeResult {
    MergeVerdict verdict = MergeVerdict::Class;
    Permutation product;
    std::optional<DegenerationClass> degeneration;  ///< set iff verdict == Class
    std::string reason;
};

/// Number of cycles of length >= 2 of p mapped onto themselves by sigma.
int sigma_invariant_cycles(const Permutation& p);

/// Merges two zeros with local monodromies s1, s2 into one point with
/// monodromy p = s1 * s2. Throws std::invalid_argument on different sheet counts.
MergeResult classify_merge(const LocalMonodromy& s1, const LocalMonodromy& s2);

struct MergeTable {
    int n = 0;
    std::map<Stratum, int> class_orbits;
    std::map<Stratum, std::pair<LocalMonodromy, LocalMonodromy>> representatives;
    std::map<Stratum, DegenerationClass> classes;
    int excluded_pairs = 0;   ///< ordered pairs
    int excluded_orbits = 0;  ///< unordered pairs up to conjugation
    int inadmissible_pairs = 0;
    int ordered_pairs = 0;

    [[nodiscard]] std::set<Stratum> realizable() const;
};

/// Classifies every ordered pair of local monodromies on 2n sheets and counts
/// orbits of unordered pairs under simultaneous conjugation by the centralizer
/// of sigma. Requires 1 <= n <= 6.
MergeTable enumerate_all_merges(int n);

/// The class set expected for n: b from 1, ac and bb from 2, bm and cc from 3, mm from 4.
std::set<Stratum> expected_realizable(int n);

/// {"n": 3, "classes": {"b": 1, ...}, "excluded_pairs": k}
nlohmann::json to_json(const MergeTable& table);

struct GlobalMonodromyReport {
    bool relation = false;
    bool transitive = false;
    bool sigma_compatible = false;
    std::optional<bool> generic_counts;  ///< set when a genus was supplied
    Permutation relation_product;
    std::string first_violation;  ///< empty when everything holds

    [[nodiscard]] bool ok() const { return first_violation.empty(); }
};

/// Checks gamma_1 ... gamma_r * prod alpha_i beta_i alpha_i^-1 beta_i^-1 = id,
/// transitivity and sigma-compatibility; with `generic_genus` also checks
/// 4n(g-1) Qzero and 4n(n-1)(g-1) DeltaZero gammas and g handle pairs.
/// Throws std::invalid_argument on empty input, mismatched sizes or
/// len(alphas) != len(betas).
GlobalMonodromyReport validate_global_monodromy(const std::vector<LocalMonodromy>& gammas,
                                                const std::vector<Permutation>& alphas,
                                                const std::vector<Permutation>& betas,
                                                std::optional<int> generic_genus = std::nullopt);

struct GlobalMonodromyWitness {
    int n = 0;
    int g = 0;
    std::vector<LocalMonodromy> gammas;
    std::vector<Permutation> alphas;
    std::vector<Permutation> betas;
};

/// Deterministic generic monodromy data: the gammas cycle through the local
/// monodromies in enumeration order and one commutator from the centralizer
/// of sigma closes the relation. Requires 1 <= n <= 3 and g >= 2.
GlobalMonodromyWitness generic_cover_witness(int n, int g);

nlohmann::json to_json(const GlobalMonodromyWitness& w);

}  // namespace spcover::monodromy
