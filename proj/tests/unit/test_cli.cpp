#include "spcover/cli/suite.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace spcover::cli;

namespace {

const std::vector<Scope> kScopes = {Scope::Factorization, Scope::Monodromy, Scope::Multiplicity, Scope::Picard,
                                    Scope::Numerics};

const SuiteResult& default_run() {
    static const SuiteResult r = run_suite(SuiteOptions{});
    return r;
}

SuiteOptions scoped(Scope s) {
    SuiteOptions o;
    o.scope = s;
    return o;
}

}  // namespace

TEST_CASE("scope names") {
    for (auto s : kScopes) CHECK(parse_scope(to_string(s)) == s);
    CHECK(parse_scope("all") == Scope::All);
    CHECK_FALSE(parse_scope("everything").has_value());
    CHECK(to_string(Status::ReportOnly) == "report-only");
    CHECK(n_cap(Scope::Factorization) == 4);
    CHECK(n_cap(Scope::Monodromy) == 6);
}

TEST_CASE("registry is sorted and covered by the scopes") {
    const auto& reg = check_registry();
    CHECK(std::is_sorted(reg.begin(), reg.end()));
    CHECK(std::adjacent_find(reg.begin(), reg.end()) == reg.end());
    std::set<std::string> covered;
    for (auto s : kScopes) {
        const auto ids = checks_in_scope(s);
        covered.insert(ids.begin(), ids.end());
    }
    CHECK(covered == std::set<std::string>(reg.begin(), reg.end()));
    CHECK(checks_in_scope(Scope::All) == reg);
}

TEST_CASE("record validation") {
    VerificationReport r{"spectral.cover_numerics", nlohmann::json::object(), Status::Fail, "broken", std::nullopt};
    CHECK_THROWS_AS(validate_record(r), std::logic_error);
    r.witness = nlohmann::json{{"n", 1}};
    CHECK_NOTHROW(validate_record(r));
    r.check = "spectral.nothing";
    CHECK_THROWS_AS(validate_record(r), std::logic_error);
}

TEST_CASE("default run passes and covers every check") {
    const auto& r = default_run();
    CHECK(r.exit_code() == 0);
    std::set<std::string> seen;
    for (const auto& rep : r.reports) {
        seen.insert(rep.check);
        CHECK(rep.status != Status::Fail);
        CHECK(rep.params.is_object());
        CHECK_FALSE(rep.detail.empty());
    }
    const auto& reg = check_registry();
    CHECK(seen == std::set<std::string>(reg.begin(), reg.end()));
}

TEST_CASE("records are sorted by check") {
    const auto& reps = default_run().reports;
    CHECK(std::is_sorted(reps.begin(), reps.end(),
                         [](const auto& a, const auto& b) { return a.check < b.check; }));
}

TEST_CASE("scoped runs emit only their checks") {
    for (auto s : kScopes) {
        CAPTURE(to_string(s));
        const auto ids = checks_in_scope(s);
        const auto r = run_suite(scoped(s));
        CHECK(r.exit_code() == 0);
        CHECK_FALSE(r.reports.empty());
        for (const auto& rep : r.reports) CHECK(std::find(ids.begin(), ids.end(), rep.check) != ids.end());
    }
}

TEST_CASE("json output is deterministic and parseable") {
    const auto a = format_json(default_run().reports);
    const auto b = format_json(run_suite(SuiteOptions{}).reports);
    CHECK(a == b);
    const auto j = nlohmann::json::parse(a);
    REQUIRE(j.is_array());
    CHECK(j.size() == default_run().reports.size());
    for (const auto& rec : j) {
        CHECK(rec.contains("check"));
        CHECK(rec.contains("params"));
        CHECK(rec.contains("status"));
        CHECK(rec.contains("detail"));
    }
    CHECK(format_json({}) == "[]\n");
}

TEST_CASE("seed changes samples, not verdicts") {
    SuiteOptions o = scoped(Scope::Numerics);
    o.seed = 99;
    const auto r = run_suite(o);
    CHECK(r.exit_code() == 0);
    CHECK(r.reports.size() == run_suite(scoped(Scope::Numerics)).reports.size());
}

TEST_CASE("text output has a summary") {
    std::vector<VerificationReport> reps = {
        {"picard.kappa_B", {{"n", 1}}, Status::Pass, "ok", std::nullopt},
        {"picard.kappa_B", {{"n", 2}}, Status::Fail, "bad", nlohmann::json{{"n", 2}}},
        {"monodromy.resolution_orbits", {{"n", 3}}, Status::ReportOnly, "info", std::nullopt},
    };
    const auto text = format_text(reps);
    CHECK(text.find("CHECK") != std::string::npos);
    CHECK(text.find("3 records: 1 pass, 1 fail, 1 report-only") != std::string::npos);
    CHECK(SuiteResult{reps}.exit_code() == 1);
}

TEST_CASE("usage errors") {
    auto o = scoped(Scope::Factorization);
    o.max_n = 5;
    CHECK_THROWS_AS(run_suite(o), UsageError);

    o = SuiteOptions{};
    o.min_n = 3;
    o.max_n = 2;
    CHECK_THROWS_AS(run_suite(o), UsageError);

    o = SuiteOptions{};
    o.min_g = 1;
    CHECK_THROWS_AS(run_suite(o), UsageError);

    o = SuiteOptions{};
    o.max_g = kMaxGenus + 1;
    CHECK_THROWS_AS(run_suite(o), UsageError);

    o = scoped(Scope::Multiplicity);
    o.family = std::string(SPCOVER_TEST_DATA) + "/missing.json";
    CHECK_THROWS_AS(run_suite(o), UsageError);
}

TEST_CASE("family file ingestion") {
    auto o = scoped(Scope::Multiplicity);
    o.family = std::string(SPCOVER_TEST_DATA) + "/cc_family.json";
    const auto r = run_suite(o);
    CHECK(r.exit_code() == 0);
    const auto it = std::find_if(r.reports.begin(), r.reports.end(), [](const auto& rep) {
        return rep.check == "spectral.stratum_multiplicity" && rep.params.value("source", "") == "cc_family.json";
    });
    REQUIRE(it != r.reports.end());
    CHECK(it->status == Status::Pass);
    CHECK(it->params.at("label") == "cc");
}
