#include "spcover/bivariate_gcd.hpp"

#include "spcover/unipoly.hpp"

#include <stdexcept>

namespace spcover::exactalg {

namespace {

std::string other_variable(const MultiPoly& a, const MultiPoly& b, const std::string& main) {
    std::string other;
    for (const auto& v : union_variables(a.variables(), b.variables())) {
        if (v == main) {
            continue;
        }
        if (!other.empty()) {
            throw std::invalid_argument("bivariate gcd supports at most one variable besides '" + main + "'");
        }
        other = v;
    }
    return other;
}

MultiPoly normalize_leading(const MultiPoly& p) {
    if (p.is_zero()) {
        return p;
    }
    return p.scaled(p.leading_term().coefficient.inverse());
}

// Remainder of a by b over Q[var]; both are univariate (or constant).
MultiPoly field_remainder(MultiPoly a, const MultiPoly& b, const std::string& var) {
    const auto bu = UniPoly::from_multipoly(b, var);
    const Rational lead_inv = bu.leading_coefficient().constant_value().inverse();
    while (!a.is_zero()) {
        const auto au = UniPoly::from_multipoly(a, var);
        if (au.degree() < bu.degree()) {
            break;
        }
        const auto shift = static_cast<unsigned>(au.degree() - bu.degree());
        const Rational factor = au.leading_coefficient().constant_value() * lead_inv;
        a -= (UniPoly::monomial(var, shift, MultiPoly(factor)) * bu).to_multipoly();
    }
    return a;
}

MultiPoly content(const UniPoly& f) {
    MultiPoly c;
    for (const auto& x : f.coefficients()) {
        c = univariate_gcd(c, x);
        if (c.is_constant() && !c.is_zero()) {
            break;
        }
    }
    return c;
}

UniPoly primitive_part(const UniPoly& f) {
    if (f.is_zero()) {
        return f;
    }
    const MultiPoly c = content(f);
    std::vector<MultiPoly> out;
    for (const auto& x : f.coefficients()) {
        out.push_back(x.exact_divide(c));
    }
    return UniPoly(f.main_variable(), std::move(out));
}

UniPoly pseudo_remainder(UniPoly r, const UniPoly& b) {
    const MultiPoly& lb = b.leading_coefficient();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const auto shift = static_cast<unsigned>(r.degree() - b.degree());
        const MultiPoly lr = r.leading_coefficient();
        r = lb * r - UniPoly::monomial(b.main_variable(), shift, lr) * b;
    }
    return r;
}

}  // namespace

MultiPoly univariate_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) {
        return normalize_leading(b);
    }
    if (b.is_zero()) {
        return normalize_leading(a);
    }
    const auto vars = union_variables(a.variables(), b.variables());
    if (vars.size() > 1) {
        throw std::invalid_argument("univariate gcd of multivariate input");
    }
    if (vars.empty()) {
        return MultiPoly(1);
    }
    MultiPoly x = a;
    MultiPoly y = b;
    while (!y.is_zero()) {
        MultiPoly r = field_remainder(x, y, vars.front());
        x = std::move(y);
        y = std::move(r);
    }
    return normalize_leading(x);
}

MultiPoly bivariate_gcd(const MultiPoly& a, const MultiPoly& b, const std::string& main) {
    const std::string other = other_variable(a, b, main);
    if (a.is_zero()) {
        return normalize_leading(b);
    }
    if (b.is_zero()) {
        return normalize_leading(a);
    }
    if (other.empty()) {
        return univariate_gcd(a, b);
    }
    UniPoly f = UniPoly::from_multipoly(a, main);
    UniPoly g = UniPoly::from_multipoly(b, main);
    const MultiPoly cont = univariate_gcd(content(f), content(g));
    f = primitive_part(f);
    g = primitive_part(g);
    if (f.degree() < g.degree()) {
        std::swap(f, g);
    }
    while (!g.is_zero()) {
        UniPoly r = primitive_part(pseudo_remainder(f, g));
        f = std::move(g);
        g = std::move(r);
    }
    return normalize_leading(cont * primitive_part(f).to_multipoly());
}

SquarefreeSplit squarefree_split(const MultiPoly& p, const std::string& main) {
    if (p.is_zero()) {
        throw std::domain_error("squarefree part of zero");
    }
    MultiPoly repeated = bivariate_gcd(p, p.derivative(main), main);
    MultiPoly squarefree = p.exact_divide(repeated);
    return {std::move(squarefree), std::move(repeated)};
}

}  // namespace spcover::exactalg
