#include "spcover/hamiltonian.hpp"
#include "spcover/spectral.hpp"

#include <doctest.h>

#include <random>

using namespace spcover::spectral;
using spcover::exactalg::discriminant;

namespace {

MultiPoly sym(int index) { return MultiPoly::variable(coefficient_symbol(index)); }

}  // namespace

TEST_CASE("coefficient symbols") {
    CHECK(coefficient_symbol(2) == "Q2");
    CHECK(coefficient_symbol(12) == "Q12");
}

TEST_CASE("spectral data validation") {
    CHECK_NOTHROW(SpectralData::symbolic(3));
    CHECK_THROWS_AS(SpectralData::from_coefficients(2, {{2, MultiPoly(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(SpectralData::from_coefficients(1, {{2, MultiPoly::variable("v")}}), std::invalid_argument);
    CHECK_THROWS_AS(SpectralData::from_coefficients(1, {{3, MultiPoly(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(SpectralData::symbolic(0), std::invalid_argument);
}

TEST_CASE("build_P is the even lift of P-tilde") {
    const auto polys = build_P(SpectralData::symbolic(2));
    const auto v = MultiPoly::variable("v");
    const auto q = MultiPoly::variable("q");
    CHECK(polys.p.to_multipoly() == v.pow(4) + sym(2) * v * v + sym(4));
    CHECK(polys.ptilde.to_multipoly() == q * q + sym(2) * q + sym(4));
    CHECK(even_lift(polys.ptilde, "v") == polys.p);
}

TEST_CASE("discriminant factorization constants and sizes") {
    const std::size_t w_terms[] = {1, 3, 13, 76};
    const std::size_t delta_terms[] = {1, 2, 5, 16};
    const long constants[] = {-4, 16, -64, 256};
    for (int n = 1; n <= 4; ++n) {
        CAPTURE(n);
        const auto f = factorize_discriminant(n);
        CHECK(f.constant == Rational(constants[n - 1]));
        CHECK(f.w.size() == w_terms[n - 1]);
        CHECK(f.delta.size() == delta_terms[n - 1]);
        CHECK(f.w == MultiPoly(f.constant) * sym(2 * n) * f.delta * f.delta);
        CHECK(f.wprime == MultiPoly(f.constant) * sym(2 * n) * f.delta);
        CHECK(spectral_weight(f.w) == 2 * n * (2 * n - 1));
        CHECK(spectral_weight(f.delta) == 2 * n * (n - 1));
    }
}

TEST_CASE("half-rank 2 discriminant in closed form") {
    const auto f = factorize_discriminant(2);
    const auto d = sym(2) * sym(2) - MultiPoly(4) * sym(4);
    CHECK(f.delta == d);
    CHECK(f.w == MultiPoly(16) * sym(4) * d * d);
}

TEST_CASE("factorization on specialized data") {
    const auto x = MultiPoly::variable("x");
    const auto data = SpectralData::from_coefficients(2, {{2, MultiPoly(1) + x}, {4, x * x - MultiPoly(3)}});
    const auto f = factorize_discriminant(data);
    CHECK(f.constant == Rational(16));
    CHECK(f.delta == (MultiPoly(1) + x).pow(2) - MultiPoly(4) * (x * x - MultiPoly(3)));
}

TEST_CASE("factorization of a degenerate top coefficient") {
    // Q_2n = 0 makes W vanish identically; 0 = c * 0 * Delta^2 still holds.
    const auto data = SpectralData::from_coefficients(2, {{2, MultiPoly(1)}, {4, MultiPoly(0)}});
    const auto f = factorize_discriminant(data);
    CHECK(f.w.is_zero());
    CHECK(f.constant == Rational(16));
}

TEST_CASE("scaling action") {
    for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        const auto report = scaling_action(n, factorize_discriminant(n));
        CHECK(report.ok());
        CHECK(report.delta_weight == 2 * n * (n - 1));
        CHECK(report.w_weight == 2 * n * (2 * n - 1));
        CHECK(report.residual.is_zero());
    }
}

TEST_CASE("spectral weight") {
    CHECK(spectral_weight(sym(2) * sym(4)) == 6);
    CHECK_FALSE(spectral_weight(sym(2) + sym(4)).has_value());
    CHECK_FALSE(spectral_weight(MultiPoly::variable("x")).has_value());
    CHECK(spectral_weight(MultiPoly(3)) == 0);
}

TEST_CASE("cover numerics") {
    const auto c = cover_numerics(2, 3);
    CHECK(c.N == 12);
    CHECK(c.simple_zeros == 16);
    CHECK(c.double_zeros == 16);
    CHECK(c.r == 32);
    CHECK(c.branch_with_mult == 48);
    CHECK(c.genus_hat == 33);
    CHECK(c.N1 == 4);
    CHECK(c.N2 == 8);
    CHECK(c.N3 == 4);
    CHECK(c.consistent());
    CHECK_THROWS_AS(cover_numerics(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(cover_numerics(1, 1), std::invalid_argument);
}

TEST_CASE("property: cover numerics identities over a grid") {
    for (int n = 1; n <= 10; ++n) {
        for (int g = 2; g <= 10; ++g) {
            const auto c = cover_numerics(n, g);
            CHECK(c.consistent());
            CHECK(c.N1 + 2 * c.N3 == c.N);
            CHECK(c.N1 + c.N3 == c.N2);
            CHECK(c.simple_zeros + 2 * c.double_zeros == c.branch_with_mult);
            CHECK(c.simple_zeros + c.double_zeros == c.r);
        }
    }
}

TEST_CASE("riemann-hurwitz for generic covers") {
    for (int n = 1; n <= 4; ++n) {
        for (int g = 2; g <= 5; ++g) {
            CAPTURE(n);
            CAPTURE(g);
            const auto profile = generic_ramification_profile(n, g);
            CHECK(profile.size() == static_cast<std::size_t>(4 * n * (g - 1) + 8 * n * (n - 1) * (g - 1)));
            const auto rh = riemann_hurwitz(2 * n, g, profile);
            REQUIRE(rh.genus.has_value());
            CHECK(*rh.genus == cover_numerics(n, g).genus_hat);
        }
    }
    const std::vector<int> odd = {2};
    CHECK_FALSE(riemann_hurwitz(2, 2, odd).genus.has_value());
    const std::vector<int> bad = {0};
    CHECK_THROWS(riemann_hurwitz(2, 2, bad));
}

TEST_CASE("group dimensions") {
    const auto sp = dims_and_degrees(GroupType::C, 2, 3);
    CHECK(sp.dim == 10);
    CHECK(sp.degrees == std::vector<int>{2, 4});
    CHECK(sp.fixed_base_dim == 20);
    CHECK(sp.variable_base_dim == 26);
    CHECK(sp.consistent(3));
    CHECK(dims_and_degrees(GroupType::A, 2, 2).dim == 8);
    CHECK(dims_and_degrees(GroupType::B, 3, 2).dim == 21);
    CHECK(dims_and_degrees(GroupType::D, 4, 2).degrees == std::vector<int>{2, 4, 4, 6});
    CHECK(dims_and_degrees(GroupType::GL, 2, 2).dim == 4);
    CHECK_FALSE(dims_and_degrees(GroupType::GL, 2, 2).semisimple);
    CHECK(parse_group_type("Sp") == GroupType::C);
    CHECK_THROWS(parse_group_type("E"));
    for (auto type : {GroupType::A, GroupType::B, GroupType::C, GroupType::D, GroupType::GL}) {
        for (int rank = type == GroupType::D ? 2 : 1; rank <= 8; ++rank) {
            for (int g = 2; g <= 6; ++g) CHECK(dims_and_degrees(type, rank, g).consistent(g));
        }
    }
}

TEST_CASE("property: characteristic polynomials of random hamiltonians are even") {
    std::mt19937_64 rng(2024);
    for (int n = 1; n <= 3; ++n) {
        for (int sample = 0; sample < 20; ++sample) {
            const auto x = random_hamiltonian(n, rng);
            CHECK(x.is_hamiltonian());
            const auto cp = char_poly_hamiltonian(x);
            CHECK(cp.poly.degree() == 2 * n);
            CHECK(cp.poly.is_monic());
            for (int k = 1; k < 2 * n; k += 2) CHECK(cp.poly.coefficient(static_cast<std::size_t>(k)).is_zero());
            CHECK(build_P(cp.data).p == cp.poly);
            const auto f = factorize_discriminant(cp.data);
            CHECK(discriminant(cp.poly) == f.w);
        }
    }
}

TEST_CASE("hamiltonian block validation") {
    spcover::exactalg::Matrix<MultiPoly> a(1, 1), b(1, 1), c(2, 2);
    CHECK_THROWS_AS(HamiltonianMatrix(a, b, c), std::invalid_argument);
    spcover::exactalg::Matrix<MultiPoly> s(2, 2), z(2, 2), a2(2, 2);
    s(0, 1) = MultiPoly(1);
    CHECK_THROWS_AS(HamiltonianMatrix(a2, s, z), std::invalid_argument);
}
