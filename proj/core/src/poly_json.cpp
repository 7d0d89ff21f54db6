#include "spcover/poly_json.hpp"

#include <limits>
#include <stdexcept>

namespace spcover::exactalg {

namespace {

nlohmann::json encode_integer(const mpz_class& z) {
    if (z.fits_slong_p() && sizeof(long) == sizeof(std::int64_t)) {
        return z.get_si();
    }
    return z.get_str();
}

mpz_class decode_integer(const nlohmann::json& j) {
    if (j.is_number_integer()) {
        return mpz_class(j.get<long>());
    }
    if (j.is_string()) {
        try {
            return mpz_class(j.get<std::string>(), 10);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad integer literal in polynomial term: " + j.dump());
        }
    }
    throw std::invalid_argument("polynomial coefficient must be an integer or a decimal string");
}

}  // namespace

nlohmann::json to_json(const MultiPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : p.terms()) {
        nlohmann::json row = nlohmann::json::array();
        row.push_back(encode_integer(t.coefficient.numerator()));
        row.push_back(encode_integer(t.coefficient.denominator()));
        for (auto e : t.exponents) {
            row.push_back(e);
        }
        terms.push_back(std::move(row));
    }
    nlohmann::json out = nlohmann::json::object();
    out["vars"] = p.variables();
    out["terms"] = std::move(terms);
    return out;
}

MultiPoly multipoly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms")) {
        throw std::invalid_argument("polynomial JSON needs \"vars\" and \"terms\"");
    }
    const auto& jv = j.at("vars");
    const auto& jt = j.at("terms");
    if (!jv.is_array() || !jt.is_array()) {
        throw std::invalid_argument("polynomial \"vars\" and \"terms\" must be arrays");
    }
    std::vector<std::string> vars;
    for (const auto& v : jv) {
        if (!v.is_string()) {
            throw std::invalid_argument("variable names must be strings");
        }
        vars.push_back(v.get<std::string>());
    }
    std::vector<Term> terms;
    for (const auto& row : jt) {
        if (!row.is_array() || row.size() != vars.size() + 2) {
            throw std::invalid_argument("each term must be [num, den, e_1..e_k] with k = len(vars)");
        }
        const mpz_class num = decode_integer(row[0]);
        const mpz_class den = decode_integer(row[1]);
        if (den == 0) {
            throw std::invalid_argument("zero denominator in polynomial term");
        }
        Exponents e;
        for (std::size_t k = 2; k < row.size(); ++k) {
            if (!row[k].is_number_unsigned() &&
                !(row[k].is_number_integer() && row[k].get<long>() >= 0)) {
                throw std::invalid_argument("exponents must be nonnegative integers");
            }
            const auto value = row[k].get<long>();
            if (value > std::numeric_limits<std::uint32_t>::max()) {
                throw std::invalid_argument("exponent out of range");
            }
            e.push_back(static_cast<std::uint32_t>(value));
        }
        terms.push_back(Term{std::move(e), Rational(num, den)});
    }
    return MultiPoly::from_terms(std::move(vars), std::move(terms));
}

}  // namespace spcover::exactalg
