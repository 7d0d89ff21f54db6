#include "spcover/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace spcover::exactalg {

UniPoly::UniPoly(std::string main_variable, std::vector<MultiPoly> coefficients)
    : main_(std::move(main_variable)), coeffs_(std::move(coefficients)) {
    for (const auto& c : coeffs_) {
        if (c.has_variable(main_)) {
            throw std::invalid_argument("coefficient mentions the main variable '" + main_ + "'");
        }
    }
    trim();
}

UniPoly UniPoly::from_multipoly(const MultiPoly& p, const std::string& main_variable) {
    if (p.is_zero()) {
        return UniPoly(main_variable);
    }
    return UniPoly(main_variable, p.coefficients_in(main_variable));
}

UniPoly UniPoly::monomial(const std::string& main_variable, unsigned degree, const MultiPoly& coefficient) {
    std::vector<MultiPoly> c(degree + 1);
    c[degree] = coefficient;
    return UniPoly(main_variable, std::move(c));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

void UniPoly::require_same_main(const UniPoly& other) const {
    if (main_ != other.main_) {
        throw std::invalid_argument("main variables differ: '" + main_ + "' vs '" + other.main_ + "'");
    }
}

MultiPoly UniPoly::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : MultiPoly{};
}

const MultiPoly& UniPoly::leading_coefficient() const {
    if (coeffs_.empty()) {
        throw std::domain_error("leading coefficient of zero polynomial");
    }
    return coeffs_.back();
}

bool UniPoly::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == MultiPoly(1);
}

UniPoly UniPoly::derivative() const {
    std::vector<MultiPoly> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d.push_back(coeffs_[k].scaled(Rational(static_cast<long>(k))));
    }
    return UniPoly(main_, std::move(d));
}

MultiPoly UniPoly::evaluate(const MultiPoly& value) const {
    MultiPoly acc;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * value + coeffs_[k];
    }
    return acc;
}

UniPoly UniPoly::substitute_coefficients(std::string_view name, const MultiPoly& value) const {
    std::vector<MultiPoly> c;
    c.reserve(coeffs_.size());
    for (const auto& x : coeffs_) {
        c.push_back(x.substitute(name, value));
    }
    return UniPoly(main_, std::move(c));
}

MultiPoly UniPoly::to_multipoly() const {
    return evaluate(MultiPoly::variable(main_));
}

std::string UniPoly::to_string() const {
    return to_multipoly().to_string();
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    require_same_main(rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
    require_same_main(rhs);
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] -= rhs.coeffs_[k];
    }
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    a.require_same_main(b);
    if (a.is_zero() || b.is_zero()) {
        return UniPoly(a.main_);
    }
    std::vector<MultiPoly> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return UniPoly(a.main_, std::move(c));
}

UniPoly operator*(const MultiPoly& c, const UniPoly& a) {
    std::vector<MultiPoly> out;
    out.reserve(a.coeffs_.size());
    for (const auto& x : a.coeffs_) {
        out.push_back(c * x);
    }
    return UniPoly(a.main_, std::move(out));
}

}  // namespace spcover::exactalg
