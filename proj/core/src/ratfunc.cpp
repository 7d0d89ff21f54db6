#include "spcover/ratfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace spcover::exactalg {

RatFunc::RatFunc(MultiPoly numerator, MultiPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) {
        throw std::domain_error("rational function with zero denominator");
    }
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = MultiPoly(1);
        return;
    }
    if (!den_.is_constant()) {
        if (auto q = num_.try_divide(den_)) {
            num_ = *std::move(q);
            den_ = MultiPoly(1);
            return;
        }
    }
    const Rational lead = den_.leading_term().coefficient;
    if (!lead.is_one()) {
        const Rational inv = lead.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFunc RatFunc::substitute(std::string_view name, const RatFunc& value) const {
    // Homogenize: p(v = a/b) = (sum c_k a^k b^(d-k)) / b^d.
    auto apply = [&](const MultiPoly& p, unsigned d) {
        const auto coeffs = p.coefficients_in(name);
        MultiPoly acc;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            acc += coeffs[k] * value.num_.pow(static_cast<unsigned>(k)) *
                   value.den_.pow(d - static_cast<unsigned>(k));
        }
        return acc;
    };
    const unsigned dn = num_.degree_in(name);
    const unsigned dd = den_.degree_in(name);
    const unsigned d = std::max(dn, dd);
    return RatFunc(apply(num_, d), apply(den_, d));
}

std::optional<Rational> RatFunc::evaluate(const std::map<std::string, Rational>& point) const {
    const Rational d = den_.evaluate_all(point);
    if (d.is_zero()) {
        return std::nullopt;
    }
    return num_.evaluate_all(point) / d;
}

RatFunc RatFunc::pow(unsigned exponent) const {
    return RatFunc(num_.pow(exponent), den_.pow(exponent));
}

std::string RatFunc::to_string() const {
    if (den_ == MultiPoly(1)) {
        return num_.to_string();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) {
        return RatFunc(a.num_ + b.num_, a.den_);
    }
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) {
        throw std::domain_error("division by zero rational function");
    }
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFunc& a, const RatFunc& b) { return ratfunc_equal(a, b); }

bool ratfunc_equal(const RatFunc& a, const RatFunc& b) {
    return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

}  // namespace spcover::exactalg
