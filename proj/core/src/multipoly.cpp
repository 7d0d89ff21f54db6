#include "spcover/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spcover::exactalg {

namespace {

struct GradedGreater {
    bool operator()(const Exponents& a, const Exponents& b) const { return graded_lex_greater(a, b); }
};

unsigned degree_of(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0U);
}

// Sorts descending, merges equal monomials and drops zero coefficients.
void sort_and_combine(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return graded_lex_greater(a.exponents, b.exponents);
    });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().exponents == t.exponents) {
            out.back().coefficient += t.coefficient;
        } else {
            if (!out.empty() && out.back().coefficient.is_zero()) {
                out.pop_back();
            }
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coefficient.is_zero()) {
        out.pop_back();
    }
    terms = std::move(out);
}

}  // namespace

bool variable_less(std::string_view a, std::string_view b) {
    auto split = [](std::string_view s) {
        std::size_t i = s.size();
        while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) {
            --i;
        }
        return std::pair{s.substr(0, i), s.substr(i)};
    };
    const auto [pa, sa] = split(a);
    const auto [pb, sb] = split(b);
    if (pa != pb) {
        return pa < pb;
    }
    // Compare numeric suffixes as numbers: shorter digit strings are smaller.
    if (sa.size() != sb.size()) {
        return sa.size() < sb.size();
    }
    return sa < sb;
}

bool graded_lex_greater(const Exponents& a, const Exponents& b) {
    const unsigned da = degree_of(a);
    const unsigned db = degree_of(b);
    if (da != db) {
        return da > db;
    }
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::string> union_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                   [](const std::string& x, const std::string& y) { return variable_less(x, y); });
    return out;
}

MultiPoly::MultiPoly(const Rational& c) {
    if (!c.is_zero()) {
        terms_.push_back(Term{{}, c});
    }
}

MultiPoly MultiPoly::variable(const std::string& name) {
    if (name.empty()) {
        throw std::invalid_argument("empty variable name");
    }
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.push_back(Term{{1}, Rational(1)});
    return p;
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> vars, std::vector<Term> terms) {
    for (const auto& t : terms) {
        if (t.exponents.size() != vars.size()) {
            throw std::invalid_argument("exponent vector length does not match variable count");
        }
    }
    std::vector<std::size_t> order(vars.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return variable_less(vars[i], vars[j]); });
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (vars[order[k]] == vars[order[k - 1]]) {
            throw std::invalid_argument("duplicate variable '" + vars[order[k]] + "'");
        }
    }
    MultiPoly p;
    p.vars_.reserve(vars.size());
    for (auto i : order) {
        p.vars_.push_back(vars[i]);
    }
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        Exponents e(order.size());
        for (std::size_t k = 0; k < order.size(); ++k) {
            e[k] = t.exponents[order[k]];
        }
        p.terms_.push_back(Term{std::move(e), std::move(t.coefficient)});
    }
    sort_and_combine(p.terms_);
    p.canonicalize();
    return p;
}

void MultiPoly::canonicalize() {
    // Terms are already sorted and combined; drop variables that never occur.
    std::vector<bool> used(vars_.size(), false);
    for (const auto& t : terms_) {
        for (std::size_t k = 0; k < vars_.size(); ++k) {
            if (t.exponents[k] != 0) {
                used[k] = true;
            }
        }
    }
    if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) {
        return;
    }
    std::vector<std::string> kept;
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < vars_.size(); ++k) {
        if (used[k]) {
            kept.push_back(vars_[k]);
            idx.push_back(k);
        }
    }
    for (auto& t : terms_) {
        Exponents e(idx.size());
        for (std::size_t k = 0; k < idx.size(); ++k) {
            e[k] = t.exponents[idx[k]];
        }
        t.exponents = std::move(e);
    }
    vars_ = std::move(kept);
}

std::vector<Term> MultiPoly::aligned_terms(const std::vector<std::string>& universe) const {
    if (universe == vars_) {
        return terms_;
    }
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t k = 0; k < vars_.size(); ++k) {
        pos[k] = static_cast<std::size_t>(std::find(universe.begin(), universe.end(), vars_[k]) -
                                          universe.begin());
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Exponents e(universe.size(), 0);
        for (std::size_t k = 0; k < vars_.size(); ++k) {
            e[pos[k]] = t.exponents[k];
        }
        out.push_back(Term{std::move(e), t.coefficient});
    }
    return out;
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) {
        return Rational(0);
    }
    if (!is_constant()) {
        throw std::logic_error("constant_value of a non-constant polynomial");
    }
    return terms_.front().coefficient;
}

bool MultiPoly::has_variable(std::string_view name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

const Term& MultiPoly::leading_term() const {
    if (terms_.empty()) {
        throw std::domain_error("leading term of zero polynomial");
    }
    return terms_.front();
}

unsigned MultiPoly::total_degree() const {
    return terms_.empty() ? 0U : degree_of(terms_.front().exponents);
}

unsigned MultiPoly::degree_in(std::string_view name) const {
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
        return 0;
    }
    const auto k = static_cast<std::size_t>(it - vars_.begin());
    unsigned d = 0;
    for (const auto& t : terms_) {
        d = std::max(d, t.exponents[k]);
    }
    return d;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::string_view name) const {
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
        return {*this};
    }
    const auto k = static_cast<std::size_t>(it - vars_.begin());
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i != k) {
            rest.push_back(vars_[i]);
        }
    }
    std::vector<std::vector<Term>> buckets(degree_in(name) + 1);
    for (const auto& t : terms_) {
        Exponents e;
        e.reserve(rest.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (i != k) {
                e.push_back(t.exponents[i]);
            }
        }
        buckets[t.exponents[k]].push_back(Term{std::move(e), t.coefficient});
    }
    std::vector<MultiPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) {
        out.push_back(from_terms(rest, std::move(b)));
    }
    return out;
}

MultiPoly MultiPoly::derivative(std::string_view name) const {
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
        return MultiPoly{};
    }
    const auto k = static_cast<std::size_t>(it - vars_.begin());
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.exponents[k] == 0) {
            continue;
        }
        Term d = t;
        d.coefficient *= Rational(static_cast<long>(t.exponents[k]));
        d.exponents[k] -= 1;
        out.push_back(std::move(d));
    }
    return from_terms(vars_, std::move(out));
}

MultiPoly MultiPoly::substitute(std::string_view name, const MultiPoly& value) const {
    if (!has_variable(name)) {
        return *this;
    }
    const auto coeffs = coefficients_in(name);
    MultiPoly acc = coeffs.back();
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
        acc = acc * value + coeffs[k];
    }
    return acc;
}

MultiPoly MultiPoly::evaluate(std::string_view name, const Rational& value) const {
    return substitute(name, MultiPoly(value));
}

Rational MultiPoly::evaluate_all(const std::map<std::string, Rational>& point) const {
    std::vector<Rational> values;
    values.reserve(vars_.size());
    for (const auto& v : vars_) {
        const auto it = point.find(v);
        if (it == point.end()) {
            throw std::invalid_argument("no value supplied for variable '" + v + "'");
        }
        values.push_back(it->second);
    }
    Rational sum(0);
    for (const auto& t : terms_) {
        Rational term = t.coefficient;
        for (std::size_t k = 0; k < values.size(); ++k) {
            if (t.exponents[k] != 0) {
                term *= values[k].pow(t.exponents[k]);
            }
        }
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
    MultiPoly result(1);
    MultiPoly base = *this;
    while (exponent != 0) {
        if ((exponent & 1U) != 0) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            base *= base;
        }
    }
    return result;
}

MultiPoly MultiPoly::scaled(const Rational& factor) const {
    if (factor.is_zero()) {
        return MultiPoly{};
    }
    MultiPoly p = *this;
    for (auto& t : p.terms_) {
        t.coefficient *= factor;
    }
    return p;
}

std::optional<MultiPoly> MultiPoly::try_divide(const MultiPoly& divisor) const {
    if (divisor.is_zero()) {
        throw std::domain_error("division by zero polynomial");
    }
    if (is_zero()) {
        return MultiPoly{};
    }
    if (divisor.is_constant()) {
        return scaled(divisor.constant_value().inverse());
    }
    const auto universe = union_variables(vars_, divisor.vars_);
    const auto dterms = divisor.aligned_terms(universe);
    const Term& lead = dterms.front();
    const Rational lead_inv = lead.coefficient.inverse();

    std::map<Exponents, Rational, GradedGreater> rem;
    for (auto& t : aligned_terms(universe)) {
        rem.emplace(std::move(t.exponents), std::move(t.coefficient));
    }
    std::vector<Term> quotient;
    Exponents qe(universe.size());
    Exponents prod(universe.size());
    while (!rem.empty()) {
        const auto top = rem.begin();
        for (std::size_t k = 0; k < universe.size(); ++k) {
            if (top->first[k] < lead.exponents[k]) {
                return std::nullopt;
            }
            qe[k] = top->first[k] - lead.exponents[k];
        }
        const Rational qc = top->second * lead_inv;
        for (const auto& d : dterms) {
            for (std::size_t k = 0; k < universe.size(); ++k) {
                prod[k] = qe[k] + d.exponents[k];
            }
            auto [it, inserted] = rem.try_emplace(prod, Rational(0));
            it->second -= qc * d.coefficient;
            if (it->second.is_zero()) {
                rem.erase(it);
            }
        }
        quotient.push_back(Term{qe, qc});
    }
    MultiPoly q;
    q.vars_ = universe;
    q.terms_ = std::move(quotient);  // generated in descending order
    q.canonicalize();
    return q;
}

MultiPoly MultiPoly::exact_divide(const MultiPoly& divisor) const {
    auto q = try_divide(divisor);
    if (!q) {
        throw std::domain_error("inexact polynomial division");
    }
    return *std::move(q);
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coefficient;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        c = c.abs();
        const bool monomial_is_one = degree_of(t.exponents) == 0;
        bool need_star = false;
        if (!c.is_one() || monomial_is_one) {
            os << c.to_string();
            need_star = true;
        }
        for (std::size_t k = 0; k < vars_.size(); ++k) {
            if (t.exponents[k] == 0) {
                continue;
            }
            if (need_star) {
                os << "*";
            }
            os << vars_[k];
            if (t.exponents[k] > 1) {
                os << "^" << t.exponents[k];
            }
            need_star = true;
        }
        first = false;
    }
    return os.str();
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    if (rhs.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = rhs;
    }
    const auto universe = union_variables(vars_, rhs.vars_);
    auto a = aligned_terms(universe);
    auto b = rhs.aligned_terms(universe);
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && graded_lex_greater(a[i].exponents, b[j].exponents))) {
            out.push_back(std::move(a[i++]));
        } else if (i == a.size() || graded_lex_greater(b[j].exponents, a[i].exponents)) {
            out.push_back(std::move(b[j++]));
        } else {
            a[i].coefficient += b[j].coefficient;
            if (!a[i].coefficient.is_zero()) {
                out.push_back(std::move(a[i]));
            }
            ++i;
            ++j;
        }
    }
    vars_ = universe;
    terms_ = std::move(out);
    canonicalize();
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) { return *this += -rhs; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return MultiPoly{};
    }
    if (a.is_constant()) {
        return b.scaled(a.constant_value());
    }
    if (b.is_constant()) {
        return a.scaled(b.constant_value());
    }
    const auto universe = union_variables(a.vars_, b.vars_);
    const auto ta = a.aligned_terms(universe);
    const auto tb = b.aligned_terms(universe);
    std::vector<Term> out;
    out.reserve(ta.size() * tb.size());
    for (const auto& x : ta) {
        for (const auto& y : tb) {
            Exponents e(universe.size());
            for (std::size_t k = 0; k < e.size(); ++k) {
                e[k] = x.exponents[k] + y.exponents[k];
            }
            out.push_back(Term{std::move(e), x.coefficient * y.coefficient});
        }
    }
    sort_and_combine(out);
    MultiPoly p;
    p.vars_ = universe;
    p.terms_ = std::move(out);
    p.canonicalize();
    return p;
}

MultiPoly operator-(const MultiPoly& a) {
    MultiPoly p = a;
    for (auto& t : p.terms_) {
        t.coefficient = -t.coefficient;
    }
    return p;
}

unsigned order_at_zero(const MultiPoly& p, std::string_view name) {
    if (p.is_zero()) {
        throw std::domain_error("order undefined");
    }
    const auto& vars = p.variables();
    const auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) {
        return 0;
    }
    const auto k = static_cast<std::size_t>(it - vars.begin());
    unsigned order = p.terms().front().exponents[k];
    for (const auto& t : p.terms()) {
        order = std::min(order, t.exponents[k]);
    }
    return order;
}

}  // namespace spcover::exactalg
