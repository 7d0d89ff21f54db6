#include "spcover/local_family.hpp"

#include "spcover/bivariate_gcd.hpp"
#include "spcover/poly_json.hpp"

#include <sstream>

namespace spcover::spectral {

namespace {

MultiPoly var(const char* name) { return MultiPoly::variable(name); }

const std::map<std::string, Rational>& origin() {
    static const std::map<std::string, Rational> point{{kBaseVariable, Rational(0)}, {kArcVariable, Rational(0)}};
    return point;
}

Rational at_origin(const MultiPoly& p) { return p.evaluate_all(origin()); }

// Reads Q_2j off a monic polynomial in q of degree n.
std::map<int, MultiPoly> coefficients_of_ptilde(int n, const MultiPoly& ptilde) {
    const auto u = UniPoly::from_multipoly(ptilde, kHalfVariable);
    if (u.degree() != n || !u.is_monic()) {
        throw std::logic_error("fixture P-tilde must be monic of degree n");
    }
    std::map<int, MultiPoly> q;
    for (int j = 1; j <= n; ++j) {
        q.emplace(2 * j, u.coefficient(static_cast<std::size_t>(n - j)));
    }
    return q;
}

MultiPoly delta_of(const SpectralData& data) {
    if (data.n == 1) {
        return MultiPoly(1);
    }
    return exactalg::discriminant(build_P(data).ptilde);
}

struct Analysis {
    SpectralData data;
    MultiPoly delta;
    exactalg::SquarefreeSplit split;  // of delta in x, only for the Delta-Delta strata
    Genericity genericity;
};

void require_leading_unit(const MultiPoly& f, const std::string& what, Genericity& g) {
    const auto u = UniPoly::from_multipoly(f, kBaseVariable);
    if (u.degree() < 1) {
        g.failures.push_back(what + " does not depend on x");
        return;
    }
    if (u.leading_coefficient().evaluate(kArcVariable, Rational(0)).is_zero()) {
        g.failures.push_back("leading x-coefficient of " + what + " vanishes at t = 0");
    }
}

void check_ac_deflation(const SpectralData& data, Genericity& g) {
    const auto pt = build_P(data).ptilde;
    std::vector<Rational> c;
    for (const auto& coeff : pt.coefficients()) {
        c.push_back(at_origin(coeff));
    }
    if (!c[0].is_zero() || !c[1].is_zero()) {
        g.failures.push_back("0 is not a double root of P-tilde at the merge point");
        return;
    }
    if (c[2].is_zero()) {
        g.failures.push_back("0 is a root of order > 2 of P-tilde at the merge point");
        return;
    }
    std::vector<MultiPoly> deflated;
    for (std::size_t k = 2; k < c.size(); ++k) {
        deflated.emplace_back(c[k]);
    }
    const UniPoly h(kHalfVariable, std::move(deflated));
    if (h.degree() >= 2 && exactalg::discriminant(h).is_zero()) {
        g.failures.push_back("deflated discriminant vanishes at the merge point");
    }
}

Analysis analyse(const LocalFamily& family) {
    Analysis a{family.data(), {}, {}, {}};
    auto& g = a.genericity;
    for (const auto& [idx, c] : family.q) {
        for (const auto& v : c.variables()) {
            if (v != kBaseVariable && v != kArcVariable) {
                g.failures.push_back("coefficient Q" + std::to_string(idx) + " mentions '" + v +
                                     "'; only x and t are allowed");
            }
        }
    }
    if (family.n < min_half_rank(family.label)) {
        g.failures.push_back("component " + std::string(to_string(family.label)) + " needs n >= " +
                             std::to_string(min_half_rank(family.label)));
    }
    if (!g.ok()) {
        return a;
    }
    a.delta = delta_of(a.data);
    const MultiPoly& top = a.data.top();
    const Rational top0 = at_origin(top);
    const Rational delta0 = at_origin(a.delta);

    switch (family.label) {
    case Stratum::b:
        if (!top0.is_zero()) g.failures.push_back("Q_2n(0,0) != 0");
        if (delta0.is_zero()) g.failures.push_back("Delta(0,0) = 0");
        require_leading_unit(top, "Q_2n", g);
        break;
    case Stratum::ac:
        check_ac_deflation(a.data, g);
        require_leading_unit(top, "Q_2n", g);
        require_leading_unit(a.delta, "Delta", g);
        break;
    case Stratum::bm:
        if (!top0.is_zero()) g.failures.push_back("Q_2n(0,0) != 0");
        if (at_origin(a.data.coefficient(2 * family.n - 2)).is_zero()) {
            g.failures.push_back("Q_{2n-2}(0,0) = 0 (that is the ac component)");
        }
        if (!delta0.is_zero()) g.failures.push_back("Delta(0,0) != 0");
        require_leading_unit(top, "Q_2n", g);
        require_leading_unit(a.delta, "Delta", g);
        break;
    case Stratum::bb:
    case Stratum::cc:
    case Stratum::mm:
        if (top0.is_zero()) g.failures.push_back("Q_2n(0,0) = 0");
        if (!delta0.is_zero()) g.failures.push_back("Delta(0,0) != 0");
        if (a.delta.is_zero()) {
            g.failures.push_back("Delta vanishes identically");
            break;
        }
        a.split = exactalg::squarefree_split(a.delta, kBaseVariable);
        if (at_origin(a.split.repeated).is_zero()) {
            g.failures.push_back("a repeated factor of Delta passes through the merge point");
        }
        require_leading_unit(a.split.squarefree, "squarefree part of Delta", g);
        break;
    }
    return a;
}

std::string join(const std::vector<std::string>& parts) {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        os << (i ? "; " : "") << parts[i];
    }
    return os.str();
}

}  // namespace

LocalFamily family_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("label") || !j.contains("n") || !j.contains("Q")) {
        throw std::invalid_argument("family JSON needs \"label\", \"n\" and \"Q\"");
    }
    const auto label = parse_stratum(j.at("label").get<std::string>());
    if (!label) {
        throw std::invalid_argument("unknown family label " + j.at("label").dump());
    }
    LocalFamily f;
    f.label = *label;
    f.n = j.at("n").get<int>();
    if (f.n < 1) {
        throw std::invalid_argument("family needs n >= 1");
    }
    for (const auto& [key, poly] : j.at("Q").items()) {
        int idx = 0;
        try {
            idx = std::stoi(key);
        } catch (const std::exception&) {
            throw std::invalid_argument("coefficient key must be an even index, got '" + key + "'");
        }
        f.q.emplace(idx, exactalg::multipoly_from_json(poly));
    }
    (void)f.data();  // validates the index set
    return f;
}

nlohmann::json to_json(const LocalFamily& family) {
    nlohmann::json q = nlohmann::json::object();
    for (const auto& [idx, c] : family.q) {
        q[std::to_string(idx)] = exactalg::to_json(c);
    }
    return {{"label", std::string(to_string(family.label))}, {"n", family.n}, {"Q", std::move(q)}};
}

std::vector<Rational> default_constants(Stratum s) {
    switch (s) {
    case Stratum::mm: return {Rational(1), Rational(3)};
    default: return {Rational(1)};
    }
}

LocalFamily builtin_family(Stratum s, const std::vector<Rational>& constants) {
    if (constants.size() != default_constants(s).size()) {
        throw std::invalid_argument("wrong number of fixture constants for " + std::string(to_string(s)));
    }
    const MultiPoly x = var(kBaseVariable);
    const MultiPoly t = var(kArcVariable);
    const MultiPoly q = var(kHalfVariable);
    const MultiPoly c0(constants[0]);
    const Rational quarter(1, 4);
    LocalFamily f;
    f.label = s;
    switch (s) {
    case Stratum::b:
        f.n = 2;
        f.q = {{2, c0 + x}, {4, x * x - t}};
        break;
    case Stratum::ac:
        f.n = 2;
        f.q = {{2, x - c0 * t}, {4, x}};
        break;
    case Stratum::bm:
        f.n = 3;
        f.q = coefficients_of_ptilde(3, (q + x) * ((q - c0).pow(2) - (x - t)));
        break;
    case Stratum::bb:
        f.n = 2;
        f.q = {{2, c0 + x}, {4, (c0 * c0 + MultiPoly(2) * c0 * x + t).scaled(quarter)}};
        break;
    case Stratum::cc:
        f.n = 3;
        f.q = coefficients_of_ptilde(3, (q - c0).pow(3) + (x + t) * (q - c0) + (x + MultiPoly(2) * t));
        break;
    case Stratum::mm: {
        f.n = 4;
        const MultiPoly c1(constants[1]);
        const MultiPoly a = (c0 * c0 - (x - t)).scaled(quarter);
        const MultiPoly b = (c1 * c1 - (x + t)).scaled(quarter);
        f.q = coefficients_of_ptilde(4, (q * q + c0 * q + a) * (q * q + c1 * q + b));
        break;
    }
    }
    return f;
}

Genericity check_genericity(const LocalFamily& family) { return analyse(family).genericity; }

Multiplicity stratum_multiplicity(const LocalFamily& family) {
    const Analysis a = analyse(family);
    if (!a.genericity.ok()) {
        throw DegenerateFamily("family degenerate, choose different generic constants: " +
                               join(a.genericity.failures));
    }
    Multiplicity m;
    m.label = family.label;
    m.delta = a.delta;
    m.repeated_factor = MultiPoly(1);
    const MultiPoly& top = a.data.top();
    switch (family.label) {
    case Stratum::b:
        m.detector = "disc_x(Q_2n)";
        m.detector_value = exactalg::scaled_discriminant(UniPoly::from_multipoly(top, kBaseVariable));
        break;
    case Stratum::ac:
    case Stratum::bm:
        m.detector = "Res_x(Q_2n, Delta)";
        m.detector_value = exactalg::resultant(UniPoly::from_multipoly(top, kBaseVariable),
                                               UniPoly::from_multipoly(a.delta, kBaseVariable));
        break;
    case Stratum::bb:
    case Stratum::cc:
    case Stratum::mm:
        m.detector = "disc_x(sqfree(Delta))";
        m.repeated_factor = a.split.repeated;
        m.detector_value =
            exactalg::scaled_discriminant(UniPoly::from_multipoly(a.split.squarefree, kBaseVariable));
        break;
    }
    if (m.detector_value.is_zero()) {
        throw DegenerateFamily("family degenerate, choose different generic constants: " + m.detector +
                               " vanishes identically");
    }
    m.order = exactalg::order_at_zero(m.detector_value, kArcVariable);
    return m;
}

Multiplicity builtin_multiplicity(Stratum s) {
    auto constants = default_constants(s);
    constexpr int kMaxRetries = 5;
    for (int attempt = 0;; ++attempt) {
        try {
            auto m = stratum_multiplicity(builtin_family(s, constants));
            m.attempts = attempt + 1;
            return m;
        } catch (const DegenerateFamily&) {
            if (attempt == kMaxRetries) {
                throw;
            }
            for (auto& c : constants) {
                c += Rational(1);
            }
        }
    }
}

DeflationCheck ac_perfect_square_check(int n) {
    if (n < 2) {
        throw std::invalid_argument("deflation check needs n >= 2");
    }
    const auto data = SpectralData::symbolic(n);
    DeflationCheck out;
    out.n = n;
    out.restricted_delta = delta_of(data).substitute(coefficient_symbol(2 * n), MultiPoly(0));
    std::vector<MultiPoly> h(static_cast<std::size_t>(n));
    h[static_cast<std::size_t>(n - 1)] = MultiPoly(1);
    for (int j = 1; j <= n - 1; ++j) {
        h[static_cast<std::size_t>(n - 1 - j)] = data.coefficient(2 * j);
    }
    const UniPoly deflated(kHalfVariable, std::move(h));
    out.deflated_disc = deflated.degree() >= 2 ? exactalg::discriminant(deflated) : MultiPoly(1);
    const MultiPoly sub = data.coefficient(2 * n - 2);
    out.holds = out.restricted_delta == sub * sub * out.deflated_disc;
    return out;
}

}  // namespace spcover::spectral
