#include "spcover/picard.hpp"

#include <map>
#include <sstream>

namespace spcover::picard {

namespace {

RatFunc constant(long num, long den = 1) { return RatFunc(Rational(num, den)); }

RatFunc gm1() { return g_var() - constant(1); }

const std::vector<std::string>& class_components() {
    static const std::vector<std::string> names{"lambda", "phi", "delta"};
    return names;
}

std::vector<RatFunc> components_of(const PicClass& c) { return {c.lambda, c.phi, c.delta}; }

/// c * (a(12 lambda - delta) - b(g - 1) phi)
PicClass pattern(const RatFunc& c, const RatFunc& a, const RatFunc& b) {
    return {c * a * constant(12), -(c * b * gm1()), -(c * a)};
}

}  // namespace

RatFunc n_var() { return RatFunc::variable(kRankVariable); }
RatFunc g_var() { return RatFunc::variable(kGenusVariable); }

PicClass PicClass::substitute(const std::string& name, const RatFunc& value) const {
    return {lambda.substitute(name, value), phi.substitute(name, value), delta.substitute(name, value)};
}

std::optional<std::array<Rational, 3>> PicClass::evaluate(const Rational& n, const Rational& g) const {
    const std::map<std::string, Rational> point{{kRankVariable, n}, {kGenusVariable, g}};
    const auto l = lambda.evaluate(point);
    const auto p = phi.evaluate(point);
    const auto d = delta.evaluate(point);
    if (!l || !p || !d) return std::nullopt;
    return std::array<Rational, 3>{*l, *p, *d};
}

PicClass operator+(const PicClass& a, const PicClass& b) {
    return {a.lambda + b.lambda, a.phi + b.phi, a.delta + b.delta};
}
PicClass operator-(const PicClass& a, const PicClass& b) {
    return {a.lambda - b.lambda, a.phi - b.phi, a.delta - b.delta};
}
PicClass operator-(const PicClass& a) { return {-a.lambda, -a.phi, -a.delta}; }
PicClass operator*(const RatFunc& s, const PicClass& a) { return {s * a.lambda, s * a.phi, s * a.delta}; }
bool operator==(const PicClass& a, const PicClass& b) {
    return exactalg::ratfunc_equal(a.lambda, b.lambda) && exactalg::ratfunc_equal(a.phi, b.phi) &&
           exactalg::ratfunc_equal(a.delta, b.delta);
}

nlohmann::json to_json(const PicClass& c) {
    return {{"lambda", c.lambda.to_string()}, {"phi", c.phi.to_string()}, {"delta", c.delta.to_string()}};
}

PicClass star_class(const RatFunc& N) {
    return pattern(N, N + constant(1), constant(2) * (constant(2) * N + constant(1)));
}

PicClass pd1_class() {
    const RatFunc n = n_var();
    return pattern(constant(2) * n, constant(2) * n + constant(1), constant(2) * (constant(4) * n + constant(1)));
}

PicClass pd2_class() {
    const RatFunc n = n_var();
    return pattern(constant(8) * n * n * (n - constant(1)), constant(1), constant(4));
}

PicClass pd3_class() {
    const RatFunc n = n_var();
    const RatFunc m = constant(2) * n * n - constant(2) * n;
    return pattern(m, m + constant(1), constant(2) * (constant(4) * n * n - constant(4) * n + constant(1)));
}

PicClass gl_discriminant_class() {
    const RatFunc n = n_var();
    return pattern(n * (n - constant(1)), n * n - n + constant(1),
                   constant(2) * (constant(2) * n * n - constant(2) * n + constant(1)));
}

PicClass HodgeLine::solved_for_pd() const {
    const RatFunc inv = constant(1) / weight;
    return {inv, -(inv * phi_coefficient), -(inv * constant(1, 12))};
}

PicClass HodgeLine::rhs(const PicClass& pd) const {
    return weight * pd + PicClass{0, phi_coefficient, constant(1, 12)};
}

std::array<HodgeLine, 3> hodge_lines() {
    const RatFunc n = n_var();
    const RatFunc one = constant(1);
    const RatFunc two_n1 = constant(2) * n + one;
    const RatFunc m = constant(2) * n * n - constant(2) * n;
    return {
        HodgeLine{1, one / (constant(12) * constant(2) * n * two_n1),
                  gm1() * (constant(4) * n + one) / (constant(6) * two_n1)},
        HodgeLine{2, one / (constant(12) * constant(8) * n * n * (n - one)), gm1() / constant(3)},
        HodgeLine{3, one / (constant(12) * m * (m + one)),
                  gm1() * (constant(4) * n * n - constant(4) * n + one) / (constant(6) * (m + one))},
    };
}

RatFunc cover_degree() {
    const RatFunc n = n_var();
    return constant(2) * n * (constant(2) * n - constant(1));
}

KappaSpec kappa_spec() {
    const RatFunc n = n_var();
    const RatFunc N = cover_degree();
    const RatFunc one = constant(1);
    const RatFunc two = constant(2);
    // Zero multiset: 4n(g - 1) simple zeros and 4n(n - 1)(g - 1) double zeros, per (g - 1).
    auto term = [&](const RatFunc& m) { return m * (m + two * N) / (m + N); };
    KappaSpec k;
    k.sum_form = (constant(4) * n * term(one) + constant(4) * n * (n - one) * term(two)) /
                 (constant(12) * N * N);
    const RatFunc n2 = n * n;
    const RatFunc n3 = n2 * n;
    const RatFunc n4 = n3 * n;
    const RatFunc n5 = n4 * n;
    const RatFunc n6 = n5 * n;
    k.poly_form = (constant(16) * n4 - constant(16) * n3 + constant(12) * n2 - constant(3) * n + one) /
                  (constant(192) * n6 - constant(288) * n5 + constant(288) * n4 - constant(168) * n3 +
                   constant(60) * n2 - constant(12) * n);
    const RatFunc root = constant(4) * n - one;
    k.radical_form = (constant(4) * N * N + constant(8) * N + root + constant(5)) /
                     (constant(12) * N * (N + one) * (N + two));
    return k;
}

Rational kappa_B(int n) {
    if (n < 1) {
        throw std::invalid_argument("kappa_B needs n >= 1");
    }
    const auto v = kappa_spec().sum_form.evaluate({{kRankVariable, Rational(n)}});
    if (!v) {
        throw std::logic_error("kappa_B denominator vanishes");
    }
    return *v;
}

std::array<RatFunc, 3> coarse_coefficients() {
    const RatFunc N = cover_degree();
    const RatFunc one = constant(1);
    const RatFunc two = constant(2);
    return {
        one / (constant(12) * N * (N + one)),
        (two * N + constant(3)) / (constant(12) * N * (N + one) * (N + two)),
        one / (constant(3) * N * (N + two)),
    };
}

Identity class_identity(std::string name, const PicClass& lhs, const PicClass& rhs) {
    return Identity{std::move(name), class_components(), components_of(lhs), components_of(rhs), true};
}

Identity scalar_identity(std::string name, const RatFunc& lhs, const RatFunc& rhs) {
    return Identity{std::move(name), {"value"}, {lhs}, {rhs}, true};
}

IdentityResult check_identity(const Identity& id, const Grid& grid) {
    if (id.lhs.size() != id.rhs.size() || id.lhs.size() != id.components.size()) {
        throw std::invalid_argument("identity '" + id.name + "' has mismatched component lists");
    }
    IdentityResult r;
    r.name = id.name;
    r.expect_equal = id.expect_equal;
    r.components = id.components;
    bool all_equal = true;
    for (std::size_t i = 0; i < id.lhs.size(); ++i) {
        r.residual.push_back(id.lhs[i] - id.rhs[i]);
        all_equal = all_equal && r.residual.back().is_zero();
    }
    r.symbolic = all_equal == id.expect_equal;

    for (int n = grid.min_n; n <= grid.max_n; ++n) {
        for (int g = grid.min_g; g <= grid.max_g; ++g) {
            ++r.grid_points;
            const std::map<std::string, Rational> point{{kRankVariable, Rational(n)},
                                                        {kGenusVariable, Rational(g)}};
            bool evaluable = true;
            bool equal_here = true;
            std::string mismatch;
            for (std::size_t i = 0; i < id.lhs.size() && evaluable; ++i) {
                const auto a = id.lhs[i].evaluate(point);
                const auto b = id.rhs[i].evaluate(point);
                if (!a || !b) {
                    evaluable = false;
                } else if (*a != *b && equal_here) {
                    equal_here = false;
                    std::ostringstream os;
                    os << "n=" << n << " g=" << g << " " << id.components[i] << ": " << a->to_string()
                       << " vs " << b->to_string();
                    mismatch = os.str();
                }
            }
            if (!evaluable) {
                ++r.grid_skipped;
                continue;
            }
            if (equal_here) {
                ++r.grid_equal;
            } else if (r.first_mismatch.empty()) {
                r.first_mismatch = mismatch;
            }
        }
    }
    const int evaluated = r.grid_points - r.grid_skipped;
    r.grid = id.expect_equal ? evaluated > 0 && r.grid_equal == evaluated : r.grid_equal < evaluated;
    return r;
}

std::vector<Identity> discriminant_class_identities() {
    const RatFunc n = n_var();
    const RatFunc one = constant(1);
    const RatFunc two = constant(2);
    const RatFunc N1 = two * n;
    const RatFunc N2 = two * n * n;
    const RatFunc N3 = two * n * n - two * n;
    std::vector<Identity> out{
        class_identity("PD1 = star(2n)", pd1_class(), star_class(N1)),
        class_identity("PD3 = star(2n^2-2n)", pd3_class(), star_class(N3)),
        class_identity("PD1 + PD2 + PD3 = star(2n^2)", pd1_class() + pd2_class() + pd3_class(), star_class(N2)),
        class_identity("star(2n^2) - star(2n) - star(2n^2-2n) = PD2",
                       star_class(N2) - star_class(N1) - star_class(N3), pd2_class()),
    };
    const std::array<PicClass, 3> pds{pd1_class(), pd2_class(), pd3_class()};
    for (const auto& line : hodge_lines()) {
        const auto i = std::to_string(line.index);
        const auto& pd = pds[static_cast<std::size_t>(line.index - 1)];
        out.push_back(class_identity("hodge line " + i + " solved = PD" + i, line.solved_for_pd(), pd));
        out.push_back(class_identity("hodge line " + i + " with PD" + i + " = lambda", line.rhs(pd),
                                     PicClass::generator_lambda()));
        out.push_back(class_identity("hodge line " + i + " round trip", line.rhs(line.solved_for_pd()),
                                     PicClass::generator_lambda()));
    }
    return out;
}

std::vector<Identity> gl_identities() {
    const RatFunc n = n_var();
    return {class_identity("GL class = star(n(n-1))", gl_discriminant_class(),
                           star_class(n * (n - constant(1))))};
}

std::vector<Identity> kappa_identities() {
    const auto k = kappa_spec();
    const RatFunc n = n_var();
    const RatFunc root = constant(4) * n - constant(1);
    return {
        scalar_identity("kappa sum form = polynomial form", k.sum_form, k.poly_form),
        scalar_identity("kappa sum form = radical form", k.sum_form, k.radical_form),
        scalar_identity("(4n-1)^2 = 4N+1", root * root, constant(4) * cover_degree() + constant(1)),
    };
}

std::vector<Identity> coarse_identities() {
    const RatFunc N = cover_degree();
    const RatFunc one = constant(1);
    const RatFunc two = constant(2);
    const auto c = coarse_coefficients();
    const RatFunc kappa = kappa_spec().sum_form * gm1();
    const PicClass sum = c[0] * pd1_class() + c[1] * pd2_class() + c[2] * pd3_class();
    const PicClass rhs = PicClass{0, N * kappa, constant(1, 12)} + sum;
    // psi = c_1(L^N) enters the relation as kappa_B psi.
    const PicClass psi = N * PicClass::generator_phi();
    const PicClass rhs_psi = kappa * psi + sum + constant(1, 12) * PicClass::generator_delta();
    return {
        class_identity("lambda = N kappa_B phi + sum c_i PD_i + delta/12", PicClass::generator_lambda(), rhs),
        scalar_identity("c2 split", c[1],
                        one / (constant(6) * (N + one) * (N + two)) +
                            one / (constant(4) * N * (N + one) * (N + two))),
        class_identity("kappa_B psi with psi = N phi", rhs_psi, rhs),
    };
}

Identity star_nonadditivity() {
    const RatFunc n = n_var();
    const RatFunc two = constant(2);
    const RatFunc N1 = two * n;
    const RatFunc N3 = two * n * n - two * n;
    auto id = class_identity("star(N1 + N3) != star(N1) + star(N3)", star_class(N1 + N3),
                             star_class(N1) + star_class(N3));
    id.expect_equal = false;
    return id;
}

nlohmann::json to_json(const IdentityResult& r) {
    nlohmann::json residual = nlohmann::json::object();
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        residual[r.components[i]] = r.residual[i].to_string();
    }
    nlohmann::json j{{"identity", r.name},
                     {"expect_equal", r.expect_equal},
                     {"symbolic", r.symbolic},
                     {"grid", r.grid},
                     {"grid_points", r.grid_points},
                     {"grid_skipped", r.grid_skipped},
                     {"residual", std::move(residual)}};
    if (!r.first_mismatch.empty()) j["first_mismatch"] = r.first_mismatch;
    return j;
}

}  // namespace spcover::picard
