#include "spcover/spectral.hpp"

namespace spcover::spectral {

std::string coefficient_symbol(int index) { return "Q" + std::to_string(index); }

SpectralData SpectralData::symbolic(int n, int g) {
    std::map<int, MultiPoly> q;
    for (int j = 1; j <= n; ++j) {
        q.emplace(2 * j, MultiPoly::variable(coefficient_symbol(2 * j)));
    }
    return from_coefficients(n, std::move(q), g);
}

SpectralData SpectralData::from_coefficients(int n, std::map<int, MultiPoly> q, int g) {
    SpectralData d;
    d.n = n;
    d.g = g;
    d.q = std::move(q);
    d.validate();
    return d;
}

void SpectralData::validate() const {
    if (n < 1) {
        throw std::invalid_argument("spectral data needs n >= 1");
    }
    if (static_cast<int>(q.size()) != n) {
        throw std::invalid_argument("spectral data needs exactly the coefficients Q2..Q" + std::to_string(2 * n));
    }
    for (int j = 1; j <= n; ++j) {
        const auto it = q.find(2 * j);
        if (it == q.end()) {
            throw std::invalid_argument("missing coefficient " + coefficient_symbol(2 * j));
        }
        if (it->second.has_variable(kSpectralVariable) || it->second.has_variable(kHalfVariable)) {
            throw std::invalid_argument("coefficient " + coefficient_symbol(2 * j) +
                                        " mentions a spectral variable");
        }
    }
}

UniPoly even_lift(const UniPoly& f, const std::string& new_main) {
    std::vector<MultiPoly> c(f.coefficients().empty() ? 0 : 2 * f.coefficients().size() - 1);
    for (std::size_t k = 0; k < f.coefficients().size(); ++k) {
        c[2 * k] = f.coefficients()[k];
    }
    return UniPoly(new_main, std::move(c));
}

SpectralPolynomials build_P(const SpectralData& data) {
    data.validate();
    std::vector<MultiPoly> half(static_cast<std::size_t>(data.n) + 1);
    half[static_cast<std::size_t>(data.n)] = MultiPoly(1);
    for (int j = 1; j <= data.n; ++j) {
        half[static_cast<std::size_t>(data.n - j)] = data.coefficient(2 * j);
    }
    UniPoly ptilde(kHalfVariable, std::move(half));
    UniPoly p = even_lift(ptilde, kSpectralVariable);
    return {std::move(p), std::move(ptilde)};
}

Factorization factorize_discriminant(const SpectralData& data) {
    const auto polys = build_P(data);
    Factorization f;
    f.w = exactalg::discriminant(polys.p);
    f.delta = data.n == 1 ? MultiPoly(1) : exactalg::discriminant(polys.ptilde);

    const MultiPoly& top = data.top();
    const MultiPoly base = top * f.delta * f.delta;
    const Rational expected_abs = Rational(4).pow(static_cast<unsigned>(data.n));
    const Rational guess = (data.n % 2 == 0) ? expected_abs : -expected_abs;
    if (base.is_zero()) {
        if (!f.w.is_zero()) {
            throw FactorizationError("factorization violated: Q_2n * Delta^2 vanishes identically", f.w);
        }
        // 0 = c * 0: any c works, report the universal one.
        f.constant = guess;
        f.wprime = MultiPoly();
        return f;
    }
    const auto quotient = f.w.try_divide(base);
    if (!quotient || !quotient->is_constant()) {
        throw FactorizationError("factorization violated: W is not a constant multiple of Q_2n * Delta^2",
                                 f.w - base.scaled(guess));
    }
    f.constant = quotient->constant_value();
    if (f.constant.abs() != expected_abs) {
        throw FactorizationError("factorization violated: |c| = " + f.constant.abs().to_string() +
                                     " but 4^n = " + expected_abs.to_string(),
                                 f.w - base.scaled(guess));
    }
    f.wprime = top.scaled(f.constant) * f.delta;
    return f;
}

std::optional<int> spectral_weight(const MultiPoly& p) {
    std::vector<int> weights;
    for (const auto& v : p.variables()) {
        if (v.size() < 2 || v[0] != 'Q') {
            return std::nullopt;
        }
        weights.push_back(std::stoi(v.substr(1)));
    }
    std::optional<int> weight;
    for (const auto& t : p.terms()) {
        int w = 0;
        for (std::size_t k = 0; k < weights.size(); ++k) {
            w += weights[k] * static_cast<int>(t.exponents[k]);
        }
        if (weight && *weight != w) {
            return std::nullopt;
        }
        weight = w;
    }
    return weight;
}

namespace {

MultiPoly weighted_substitution(MultiPoly p, int n, const MultiPoly& xi) {
    for (int j = 1; j <= n; ++j) {
        const auto sym = coefficient_symbol(2 * j);
        p = p.substitute(sym, xi.pow(static_cast<unsigned>(2 * j)) * MultiPoly::variable(sym));
    }
    return p;
}

}  // namespace

ScalingReport scaling_action(int n, const Factorization& symbolic) {
    const auto data = SpectralData::symbolic(n);
    const MultiPoly xi = MultiPoly::variable("xi");
    ScalingReport report;

    // xi^{2n} P(xi^{-1} v): the coefficient of v^k picks up xi^{2n-k}.
    const auto p = build_P(data).p;
    std::vector<MultiPoly> rescaled;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        rescaled.push_back(p.coefficients()[k] * xi.pow(static_cast<unsigned>(2 * n) - static_cast<unsigned>(k)));
    }
    const UniPoly lhs(kSpectralVariable, std::move(rescaled));

    std::map<int, MultiPoly> scaled_q;
    for (const auto& [idx, c] : data.q) {
        scaled_q.emplace(idx, xi.pow(static_cast<unsigned>(idx)) * c);
    }
    const auto rhs = build_P(SpectralData::from_coefficients(n, std::move(scaled_q))).p;
    report.polynomial_matches = lhs == rhs;
    if (!report.polynomial_matches) {
        report.residual = lhs.to_multipoly() - rhs.to_multipoly();
    }

    report.delta_weight = spectral_weight(symbolic.delta);
    report.w_weight = spectral_weight(symbolic.w);

    const auto delta_deg = static_cast<unsigned>(2 * n * (n - 1));
    const auto w_deg = static_cast<unsigned>(2 * n * (2 * n - 1));
    const MultiPoly delta_res = weighted_substitution(symbolic.delta, n, xi) - xi.pow(delta_deg) * symbolic.delta;
    const MultiPoly w_res = weighted_substitution(symbolic.w, n, xi) - xi.pow(w_deg) * symbolic.w;
    report.delta_scales = delta_res.is_zero();
    report.w_scales = w_res.is_zero();
    if (report.residual.is_zero()) {
        report.residual = !delta_res.is_zero() ? delta_res : w_res;
    }
    return report;
}

}  // namespace spcover::spectral
