#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spcover::cli {

enum class Status { Pass, Fail, ReportOnly };

std::string_view to_string(Status s);

struct VerificationReport {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    Status status = Status::Pass;
    std::string detail;
    std::optional<nlohmann::json> witness;
};

enum class Scope { All, Factorization, Monodromy, Multiplicity, Picard, Numerics };

std::optional<Scope> parse_scope(std::string_view text);
std::string_view to_string(Scope s);

struct SuiteOptions {
    Scope scope = Scope::All;
    int min_n = 1;
    int max_n = 4;
    int min_g = 2;
    int max_g = 5;
    std::uint64_t seed = 0;
    std::optional<std::filesystem::path> family;
};

/// Invalid ranges or inputs; the tool exits with status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Largest n a scope accepts. `all` clamps each section to its own cap.
int n_cap(Scope s);
inline constexpr int kHamiltonianCap = 5;
inline constexpr int kWitnessCap = 3;
inline constexpr int kMaxGenus = 100;

/// Every check identifier, sorted.
const std::vector<std::string>& check_registry();
/// Throws std::logic_error when the check is unregistered or a fail record
/// carries no witness.
void validate_record(const VerificationReport& r);
/// Check identifiers a scope can emit.
std::vector<std::string> checks_in_scope(Scope s);

struct SuiteResult {
    std::vector<VerificationReport> reports;
    /// 0 iff no record has status fail, 1 otherwise.
    [[nodiscard]] int exit_code() const;
};

/// Runs the selected checks. Records are sorted by check, then params.
/// Throws UsageError on invalid options and std::logic_error on a fail
/// record without a witness or an unregistered check identifier.
SuiteResult run_suite(const SuiteOptions& options);

/// Stable JSON array; "[]" when empty.
std::string format_json(const std::vector<VerificationReport>& reports);
/// Fixed-width table with a summary line.
std::string format_text(const std::vector<VerificationReport>& reports);

}  // namespace spcover::cli
