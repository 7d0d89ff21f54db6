#include "spcover/local_family.hpp"
#include "spcover/poly_json.hpp"

#include <doctest.h>

#include <fstream>

using namespace spcover::spectral;

namespace {

const MultiPoly x = MultiPoly::variable("x");
const MultiPoly t = MultiPoly::variable("t");

// a == c * b for some nonzero rational c.
bool proportional(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return false;
    const auto q = a.try_divide(b);
    return q && q->is_constant() && !q->is_zero();
}

nlohmann::json load_fixture(const std::string& name) {
    std::ifstream in(std::string(SPCOVER_TEST_DATA) + "/" + name);
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("stratum labels") {
    CHECK(kAllStrata.size() == 6);
    for (auto s : kAllStrata) CHECK(parse_stratum(to_string(s)) == s);
    CHECK_FALSE(parse_stratum("xx").has_value());
    CHECK(min_half_rank(Stratum::b) == 1);
    CHECK(min_half_rank(Stratum::ac) == 2);
    CHECK(min_half_rank(Stratum::bb) == 2);
    CHECK(min_half_rank(Stratum::bm) == 3);
    CHECK(min_half_rank(Stratum::cc) == 3);
    CHECK(min_half_rank(Stratum::mm) == 4);
}

TEST_CASE("builtin fixtures are generic") {
    for (auto s : kAllStrata) {
        CAPTURE(to_string(s));
        const auto f = builtin_family(s);
        CHECK(f.label == s);
        CHECK(f.n >= min_half_rank(s));
        const auto gen = check_genericity(f);
        CHECK(gen.ok());
    }
}

TEST_CASE("vanishing orders of the detectors") {
    const std::pair<Stratum, unsigned> expected[] = {{Stratum::b, 1},  {Stratum::ac, 2}, {Stratum::bm, 1},
                                                     {Stratum::bb, 1}, {Stratum::cc, 3}, {Stratum::mm, 2}};
    for (const auto& [s, order] : expected) {
        CAPTURE(to_string(s));
        const auto m = builtin_multiplicity(s);
        CHECK(m.label == s);
        CHECK(m.order == order);
        CHECK(m.attempts == 1);
    }
}

TEST_CASE("detector polynomials") {
    CHECK(builtin_multiplicity(Stratum::b).detector_value == MultiPoly(4) * t);

    const auto bb = builtin_multiplicity(Stratum::bb);
    CHECK(proportional(bb.delta, x * x - t));
    CHECK(proportional(bb.detector_value, t));

    const auto cc = builtin_multiplicity(Stratum::cc);
    CHECK(proportional(cc.detector_value, t.pow(3) * (t - MultiPoly(1))));
    CHECK(cc.repeated_factor.is_constant());

    const auto mm = builtin_multiplicity(Stratum::mm);
    CHECK(proportional(mm.delta, (x - t) * (x + t) * (t * t - MultiPoly(4) * x + MultiPoly(4)).pow(2)));
    CHECK(proportional(mm.repeated_factor, t * t - MultiPoly(4) * x + MultiPoly(4)));

    CHECK(proportional(builtin_multiplicity(Stratum::ac).detector_value, t * t));

    const auto bm = builtin_multiplicity(Stratum::bm);
    CHECK(proportional(bm.delta, (x - t) * (t + x * x + x + MultiPoly(1)).pow(2)));
    CHECK(bm.detector_value ==
          MultiPoly(16) * t * (t + MultiPoly(1)).pow(4) * (t + MultiPoly(3)).pow(2));
}

TEST_CASE("other generic constants give the same orders") {
    CHECK(stratum_multiplicity(builtin_family(Stratum::b, {Rational(5)})).order == 1);
    CHECK(stratum_multiplicity(builtin_family(Stratum::cc, {Rational(2)})).order == 3);
    CHECK(stratum_multiplicity(builtin_family(Stratum::mm, {Rational(2), Rational(7)})).order == 2);
    CHECK_THROWS_AS(builtin_family(Stratum::mm, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("degenerate families are rejected") {
    // Both double zeros coincide: the mm fixture with equal constants.
    CHECK_THROWS_AS(stratum_multiplicity(builtin_family(Stratum::mm, {Rational(1), Rational(1)})),
                    DegenerateFamily);
    LocalFamily off;
    off.label = Stratum::b;
    off.n = 2;
    off.q = {{2, MultiPoly(1) + x}, {4, x * x + MultiPoly(1) - t}};
    CHECK_FALSE(check_genericity(off).ok());
    CHECK_THROWS_AS(stratum_multiplicity(off), DegenerateFamily);
}

TEST_CASE("family json fixture") {
    const auto f = family_from_json(load_fixture("cc_family.json"));
    CHECK(f.label == Stratum::cc);
    CHECK(f.n == 3);
    CHECK(f.q.at(2) == MultiPoly(-3));
    CHECK(f.q.at(4) == MultiPoly(3) + x + t);
    CHECK(f.q.at(6) == t - MultiPoly(1));
    const auto m = stratum_multiplicity(f);
    CHECK(m.order == 3);
    CHECK(m.detector_value.try_divide(t.pow(3) * (t - MultiPoly(1))).has_value());
}

TEST_CASE("property: family json round trip") {
    for (auto s : kAllStrata) {
        const auto f = builtin_family(s);
        const auto j = to_json(f);
        const auto back = family_from_json(j);
        CHECK(back.label == f.label);
        CHECK(back.n == f.n);
        CHECK(back.q == f.q);
        CHECK(to_json(back) == j);
    }
}

TEST_CASE("malformed family json") {
    CHECK_THROWS(family_from_json(nlohmann::json::parse(R"({"label": "zz", "n": 2, "Q": {}})")));
    CHECK_THROWS(family_from_json(nlohmann::json::parse(R"({"label": "b", "n": 2})")));
    auto j = load_fixture("cc_family.json");
    j["Q"].erase("6");
    CHECK_THROWS(family_from_json(j));
}

TEST_CASE("perfect square of Delta on Q_2n = 0") {
    for (int n = 2; n <= 4; ++n) {
        CAPTURE(n);
        const auto c = ac_perfect_square_check(n);
        CHECK(c.holds);
        CHECK(c.n == n);
    }
    CHECK_THROWS(ac_perfect_square_check(1));
}
