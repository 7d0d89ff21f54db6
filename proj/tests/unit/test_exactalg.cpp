#include "spcover/bareiss.hpp"
#include "spcover/bivariate_gcd.hpp"
#include "spcover/poly_json.hpp"
#include "spcover/ratfunc.hpp"
#include "spcover/unipoly.hpp"

#include <doctest.h>

#include <random>

using namespace spcover::exactalg;

namespace {

MultiPoly var(const char* name) { return MultiPoly::variable(name); }

UniPoly uni(const MultiPoly& p, const char* main) { return UniPoly::from_multipoly(p, main); }

MultiPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int terms, unsigned max_deg) {
    std::uniform_int_distribution<int> coeff(-7, 7);
    std::uniform_int_distribution<unsigned> deg(0, max_deg);
    MultiPoly p;
    for (int k = 0; k < terms; ++k) {
        MultiPoly t(coeff(rng));
        for (const auto& v : vars) t = t * MultiPoly::variable(v).pow(deg(rng));
        p += t;
    }
    return p;
}

UniPoly random_monic(std::mt19937_64& rng, int degree) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::vector<MultiPoly> c;
    for (int k = 0; k < degree; ++k) c.emplace_back(coeff(rng));
    c.emplace_back(1);
    return UniPoly("x", std::move(c));
}

}  // namespace

TEST_CASE("rational arithmetic and parsing") {
    CHECK(Rational(10, 72) == Rational(5, 36));
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational::parse("7").is_integer());
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(-2, 3).abs() == Rational(2, 3));
    CHECK(Rational(2, 3).inverse() == Rational(3, 2));
    CHECK(Rational(-4).pow(3) == Rational(-64));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5, 10).to_string() == "-1/2");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS(Rational::parse("1/x"));
}

TEST_CASE("multipoly basics") {
    const auto x = var("x");
    const auto t = var("t");
    CHECK((x + MultiPoly(1)) * (x - MultiPoly(1)) == x * x - MultiPoly(1));
    CHECK((x - x).is_zero());
    CHECK((x - x).variables().empty());
    CHECK((x * t + MultiPoly(3)).total_degree() == 2);
    CHECK((x.pow(3) * t).degree_in("x") == 3);
    CHECK((x * x * t).evaluate_all({{"x", Rational(2)}, {"t", Rational(3)}}) == Rational(12));
    CHECK_THROWS((void)x.evaluate_all({{"t", Rational(1)}}));
    CHECK((x * x + t).substitute("x", t + MultiPoly(1)) == t * t + MultiPoly(3) * t + MultiPoly(1));
    CHECK((x * x * t).derivative("x") == MultiPoly(2) * x * t);
}

TEST_CASE("multipoly printing follows graded-lex order") {
    const auto q2 = var("Q2");
    const auto q4 = var("Q4");
    const auto delta = q2 * q2 - MultiPoly(4) * q4;
    const auto w = MultiPoly(16) * q4 * delta * delta;
    CHECK(w.to_string() == "16*Q2^4*Q4 - 128*Q2^2*Q4^2 + 256*Q4^3");
    CHECK(MultiPoly().to_string() == "0");
    CHECK(MultiPoly(Rational(-1, 4)).to_string() == "-1/4");
}

TEST_CASE("exact division") {
    const auto x = var("x");
    const auto y = var("y");
    const auto a = x * x + MultiPoly(3) * x * y - y;
    const auto b = x - MultiPoly(2) * y + MultiPoly(1);
    CHECK((a * b).exact_divide(b) == a);
    CHECK_FALSE((a * b + MultiPoly(1)).try_divide(b).has_value());
    CHECK_THROWS_WITH((void)(a * b + MultiPoly(1)).exact_divide(b), "inexact polynomial division");
}

TEST_CASE("univariate view and derivative") {
    const auto v = var("v");
    const auto q2 = var("Q2");
    const auto q4 = var("Q4");
    const auto p = uni(v.pow(4) + q2 * v * v + q4, "v");
    CHECK(p.degree() == 4);
    CHECK(p.is_monic());
    CHECK(p.derivative().to_multipoly() == MultiPoly(4) * v.pow(3) + MultiPoly(2) * q2 * v);
    CHECK(uni(v * v, "v").substitute_coefficients("Q2", MultiPoly(1)).to_multipoly() == v * v);
    CHECK(UniPoly("v").degree() == -1);
}

TEST_CASE("resultant examples") {
    const auto x = var("x");
    const auto a = var("a");
    const auto b = var("b");
    const auto v = var("v");
    CHECK(resultant(uni(x - a, "x"), uni(x - b, "x")) == a - b);
    CHECK(resultant(uni(v * v - MultiPoly(1), "v"), uni(v * v - MultiPoly(4), "v")) == MultiPoly(9));
    CHECK(resultant(uni(v, "v"), uni(v, "v")).is_zero());
    CHECK_THROWS(resultant(uni(MultiPoly(2), "v"), uni(MultiPoly(3), "v")));
}

TEST_CASE("discriminant examples") {
    const auto v = var("v");
    const auto q = var("q");
    const auto a = var("a");
    const auto q2 = var("Q2");
    const auto q4 = var("Q4");
    CHECK(discriminant(uni(v * v + a, "v")) == MultiPoly(-4) * a);
    CHECK(discriminant(uni(q * q + q2 * q + q4, "q")) == q2 * q2 - MultiPoly(4) * q4);
    CHECK(discriminant(uni(v * v - MultiPoly(2) * v + MultiPoly(1), "v")).is_zero());
    CHECK_THROWS(discriminant(uni(MultiPoly(2) * v * v + MultiPoly(1), "v")));
    CHECK(scaled_discriminant(uni(MultiPoly(2) * v * v + MultiPoly(1), "v")) == MultiPoly(-16));
}

TEST_CASE("cubic discriminant matches the classical formula") {
    const auto x = var("x");
    const auto p = var("p");
    const auto q = var("q");
    CHECK(discriminant(uni(x.pow(3) + p * x + q, "x")) ==
          MultiPoly(-4) * p.pow(3) - MultiPoly(27) * q * q);
}

TEST_CASE("order at zero") {
    const auto t = var("t");
    const auto x = var("x");
    CHECK(order_at_zero(MultiPoly(4) * t, "t") == 1);
    CHECK(order_at_zero(t * t + t.pow(3), "t") == 2);
    CHECK(order_at_zero(MultiPoly(5), "t") == 0);
    CHECK(order_at_zero(t * t * x + t.pow(3), "t") == 2);
    CHECK_THROWS(order_at_zero(MultiPoly(), "t"));
}

TEST_CASE("bareiss determinant over the rationals") {
    Matrix<MultiPoly> m(3, 3);
    const int vals[3][3] = {{0, 2, 1}, {3, 1, 4}, {5, 9, 2}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = MultiPoly(vals[i][j]);
    // 0*(2-36) - 2*(6-20) + 1*(27-5)
    CHECK(bareiss_determinant(m) == MultiPoly(50));
    CHECK(bareiss_determinant(m.transposed()) == MultiPoly(50));
}

TEST_CASE("bivariate gcd and squarefree split") {
    const auto x = var("x");
    const auto t = var("t");
    const auto f = x - t;
    const auto g = x * x + t + MultiPoly(1);
    const auto h = x + MultiPoly(2) * t;
    const auto gcd = bivariate_gcd(f * g * g, f * h, "x");
    CHECK(gcd.exact_divide(f).is_constant());
    CHECK(gcd.leading_term().coefficient == Rational(1));
    const auto split = squarefree_split(f * g * g, "x");
    CHECK(split.repeated == g);
    CHECK(split.squarefree * split.repeated == f * g * g);
    CHECK(univariate_gcd(x * x - MultiPoly(1), x * x + MultiPoly(2) * x + MultiPoly(1)) == x + MultiPoly(1));
    CHECK_THROWS(bivariate_gcd(x * t * var("y"), x, "x"));
}

TEST_CASE("ratfunc equality and normalization") {
    const auto N = RatFunc::variable("N");
    const RatFunc one(1);
    CHECK(ratfunc_equal(RatFunc(Rational(10, 72)), RatFunc(Rational(5, 36))));
    CHECK(ratfunc_equal((RatFunc(2) * N + RatFunc(3)) / (RatFunc(12) * N * (N + one) * (N + RatFunc(2))),
                        one / (RatFunc(6) * (N + one) * (N + RatFunc(2))) +
                            one / (RatFunc(4) * N * (N + one) * (N + RatFunc(2)))));
    CHECK_FALSE(ratfunc_equal(one / (N + one), one / (N + RatFunc(2))));
    CHECK(((N * N - one) / (N - one)).denominator() == MultiPoly(1));
    CHECK((N / N).to_string() == "1");
    CHECK_THROWS_AS(one / RatFunc(0), std::domain_error);
    const auto r = one / (N - RatFunc(2));
    CHECK_FALSE(r.evaluate({{"N", Rational(2)}}).has_value());
    CHECK(*r.evaluate({{"N", Rational(4)}}) == Rational(1, 2));
    CHECK(r.substitute("N", one / N) == N / (one - RatFunc(2) * N));
}

TEST_CASE("multipoly json round trip") {
    const auto x = var("x");
    const auto t = var("t");
    const auto p = MultiPoly(Rational(3, 4)) * x * x * t - x + MultiPoly(Rational(-7));
    const auto j = to_json(p);
    CHECK(multipoly_from_json(j) == p);
    CHECK(to_json(multipoly_from_json(j)) == j);
    // Big coefficients travel as strings.
    const auto big = MultiPoly(Rational::parse("123456789012345678901234567890/7")) * x;
    CHECK(multipoly_from_json(to_json(big)) == big);
    CHECK_THROWS_AS(multipoly_from_json(nlohmann::json::parse(R"({"vars": ["x"], "terms": [[1, 0, 2]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(multipoly_from_json(nlohmann::json::parse(R"({"vars": ["x"], "terms": [[1, 1]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(multipoly_from_json(nlohmann::json::parse(R"([1, 2])")), std::invalid_argument);
}

TEST_CASE("property: ring axioms on random polynomials") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_poly(rng, {"x", "y", "t"}, 4, 3);
        const auto b = random_poly(rng, {"x", "y", "t"}, 4, 3);
        const auto c = random_poly(rng, {"x", "y", "t"}, 4, 3);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == MultiPoly());
        if (!b.is_zero()) CHECK((a * b).exact_divide(b) == a);
    }
}

TEST_CASE("property: resultant symmetry and multiplicativity") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> deg(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        const auto f = random_monic(rng, deg(rng));
        const auto g = random_monic(rng, deg(rng));
        const auto h = random_monic(rng, deg(rng));
        const int sign = (f.degree() * g.degree()) % 2 == 0 ? 1 : -1;
        CHECK(resultant(f, g) == MultiPoly(sign) * resultant(g, f));
        CHECK(resultant(f * g, h) == resultant(f, h) * resultant(g, h));
    }
}

TEST_CASE("property: disc(fg) = disc(f) disc(g) Res(f, g)^2") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> deg(2, 4);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = random_monic(rng, deg(rng));
        const auto g = random_monic(rng, deg(rng));
        const auto r = resultant(f, g);
        CHECK(discriminant(f * g) == discriminant(f) * discriminant(g) * r * r);
    }
}

TEST_CASE("property: discriminant from known roots") {
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<int> root(-9, 9);
    std::uniform_int_distribution<int> deg(2, 6);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<int> roots(static_cast<std::size_t>(deg(rng)));
        for (auto& r : roots) r = root(rng);
        UniPoly f("x", {MultiPoly(1)});
        for (int r : roots) f = f * UniPoly("x", {MultiPoly(-r), MultiPoly(1)});
        Rational want(1);
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = i + 1; j < roots.size(); ++j)
                want *= Rational(roots[i] - roots[j]).pow(2);
        CHECK(discriminant(f) == MultiPoly(want));
    }
}

TEST_CASE("property: equivalent rational functions compare equal") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_poly(rng, {"n", "g"}, 3, 2);
        auto b = random_poly(rng, {"n", "g"}, 3, 2);
        auto c = random_poly(rng, {"n", "g"}, 3, 2);
        if (b.is_zero()) b = MultiPoly(1);
        if (c.is_zero()) c = MultiPoly(2);
        const RatFunc r(a, b);
        CHECK(r == RatFunc(a * c, b * c));
        CHECK(r + RatFunc(c, b) == RatFunc(a + c, b));
        CHECK((r * RatFunc(b, c)) == RatFunc(a, c));
    }
}
