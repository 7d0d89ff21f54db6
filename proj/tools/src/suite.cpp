#include "spcover/cli/suite.hpp"

#include "spcover/hamiltonian.hpp"
#include "spcover/local_family.hpp"
#include "spcover/monodromy.hpp"
#include "spcover/picard.hpp"
#include "spcover/poly_json.hpp"
#include "spcover/spectral.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>

namespace spcover::cli {

namespace {

using exactalg::MultiPoly;
using exactalg::RatFunc;
using exactalg::Rational;
using exactalg::UniPoly;
using nlohmann::json;

const std::map<Scope, std::vector<std::string>>& scope_checks() {
    static const std::map<Scope, std::vector<std::string>> table{
        {Scope::Factorization,
         {"exactalg.discriminant", "exactalg.poly_arith", "exactalg.resultant", "spectral.build_P",
          "spectral.factorization_sign", "spectral.factorize_discriminant", "spectral.scaling_action"}},
        {Scope::Numerics,
         {"spectral.char_poly_hamiltonian", "spectral.cover_numerics", "spectral.dims_and_degrees",
          "spectral.riemann_hurwitz"}},
        {Scope::Multiplicity,
         {"exactalg.order_at_zero", "spectral.ac_perfect_square", "spectral.stratum_multiplicity"}},
        {Scope::Monodromy,
         {"monodromy.classify_merge", "monodromy.enumerate_all_merges", "monodromy.enumerate_local_monodromies",
          "monodromy.resolution_orbits", "monodromy.validate_global_monodromy"}},
        {Scope::Picard,
         {"exactalg.ratfunc_equal", "picard.coarse_identity_check", "picard.gl_theorem_check", "picard.kappa_B",
          "picard.star_class", "picard.theorem3_check"}},
    };
    return table;
}

}  // namespace

void validate_record(const VerificationReport& r) {
    const auto& reg = check_registry();
    if (!std::binary_search(reg.begin(), reg.end(), r.check)) {
        throw std::logic_error("unregistered check identifier '" + r.check + "'");
    }
    if (r.status == Status::Fail && !r.witness) {
        throw std::logic_error("fail record for '" + r.check + "' has no witness");
    }
}

namespace {

class Recorder {
public:
    void pass(std::string check, json params, std::string detail, std::optional<json> witness = std::nullopt) {
        add({std::move(check), std::move(params), Status::Pass, std::move(detail), std::move(witness)});
    }
    void fail(std::string check, json params, std::string detail, json witness) {
        add({std::move(check), std::move(params), Status::Fail, std::move(detail), std::move(witness)});
    }
    void report(std::string check, json params, std::string detail, std::optional<json> witness = std::nullopt) {
        add({std::move(check), std::move(params), Status::ReportOnly, std::move(detail), std::move(witness)});
    }
    void verdict(bool ok, std::string check, json params, std::string detail, json witness) {
        if (ok) {
            pass(std::move(check), std::move(params), std::move(detail), std::move(witness));
        } else {
            fail(std::move(check), std::move(params), std::move(detail), std::move(witness));
        }
    }

    void add(VerificationReport r) {
        validate_record(r);
        reports_.push_back(std::move(r));
    }

    /// Runs body; an escaping exception becomes a fail record.
    void guarded(const std::string& check, const json& params, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            fail(check, params, std::string("exception: ") + e.what(), json{{"exception", e.what()}});
        }
    }

    std::vector<VerificationReport> take() { return std::move(reports_); }

private:
    std::vector<VerificationReport> reports_;
};

struct Ranges {
    int min_n;
    int max_n;
    int min_g;
    int max_g;
};

std::vector<int> span_of(int lo, int hi) {
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

// ---------------------------------------------------------------- exactalg

MultiPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, unsigned max_degree) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    MultiPoly p;
    for (int k = 0; k < 4; ++k) {
        MultiPoly term(coeff(rng));
        for (const auto& v : vars) term = term * MultiPoly::variable(v).pow(deg(rng));
        p += term;
    }
    return p;
}

UniPoly random_uni(std::mt19937_64& rng, const std::string& main, int degree) {
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::vector<MultiPoly> c;
    for (int k = 0; k < degree; ++k) c.emplace_back(coeff(rng));
    int lead = 0;
    while (lead == 0) lead = coeff(rng);
    c.emplace_back(lead);
    return UniPoly(main, std::move(c));
}

void check_poly_arith(Recorder& rec, std::uint64_t seed) {
    const json params{{"seed", seed}};
    rec.guarded("exactalg.poly_arith", params, [&] {
        std::mt19937_64 rng(seed);
        const MultiPoly x = MultiPoly::variable("x");
        const MultiPoly v = MultiPoly::variable("v");
        if ((x + MultiPoly(1)) * (x - MultiPoly(1)) != x * x - MultiPoly(1)) {
            rec.fail("exactalg.poly_arith", params, "(x+1)(x-1) != x^2-1", json{{"case", "difference of squares"}});
            return;
        }
        const auto p = UniPoly::from_multipoly(
            v.pow(4) + MultiPoly::variable("Q2") * v * v + MultiPoly::variable("Q4"), "v");
        const auto expected = MultiPoly(4) * v.pow(3) + MultiPoly(2) * MultiPoly::variable("Q2") * v;
        if (p.derivative().to_multipoly() != expected) {
            rec.fail("exactalg.poly_arith", params, "derivative of v^4 + Q2 v^2 + Q4 is wrong",
                     json{{"got", p.derivative().to_string()}});
            return;
        }
        constexpr int kTrials = 50;
        for (int trial = 0; trial < kTrials; ++trial) {
            const auto a = random_poly(rng, {"x", "y"}, 3);
            const auto b = random_poly(rng, {"x", "y"}, 3);
            const auto c = random_poly(rng, {"x", "y"}, 3);
            const bool ok = (a + b) * c == a * c + b * c && (a * b) * c == a * (b * c) && a * b == b * a &&
                            (b.is_zero() || (a * b).exact_divide(b) == a) && a - a == MultiPoly();
            if (!ok) {
                rec.fail("exactalg.poly_arith", params, "ring axiom violated",
                         json{{"trial", trial}, {"a", a.to_string()}, {"b", b.to_string()}, {"c", c.to_string()}});
                return;
            }
        }
        rec.pass("exactalg.poly_arith", params,
                 "examples hold; ring axioms and exact division on " + std::to_string(kTrials) + " random triples");
    });
}

void check_resultant(Recorder& rec, std::uint64_t seed) {
    const json params{{"seed", seed}};
    rec.guarded("exactalg.resultant", params, [&] {
        const MultiPoly x = MultiPoly::variable("x");
        const MultiPoly a = MultiPoly::variable("a");
        const MultiPoly b = MultiPoly::variable("b");
        const MultiPoly v = MultiPoly::variable("v");
        struct Example {
            const char* name;
            MultiPoly got;
            MultiPoly want;
        };
        const std::vector<Example> examples{
            {"Res_x(x-a, x-b)",
             exactalg::resultant(UniPoly::from_multipoly(x - a, "x"), UniPoly::from_multipoly(x - b, "x")), a - b},
            {"Res_v(v^2-1, v^2-4)",
             exactalg::resultant(UniPoly::from_multipoly(v * v - MultiPoly(1), "v"),
                                 UniPoly::from_multipoly(v * v - MultiPoly(4), "v")),
             MultiPoly(9)},
            {"Res_v(v, v)", exactalg::resultant(UniPoly::from_multipoly(v, "v"), UniPoly::from_multipoly(v, "v")),
             MultiPoly()},
        };
        for (const auto& e : examples) {
            if (e.got != e.want) {
                rec.fail("exactalg.resultant", params, std::string(e.name) + " mismatch",
                         json{{"got", e.got.to_string()}, {"want", e.want.to_string()}});
                return;
            }
        }
        std::mt19937_64 rng(seed + 1);
        std::uniform_int_distribution<int> deg(1, 4);
        constexpr int kTrials = 30;
        for (int trial = 0; trial < kTrials; ++trial) {
            const auto f = random_uni(rng, "x", deg(rng));
            const auto g = random_uni(rng, "x", deg(rng));
            const auto h = random_uni(rng, "x", deg(rng));
            const int sign = (f.degree() * g.degree()) % 2 == 0 ? 1 : -1;
            const bool symmetric = exactalg::resultant(f, g) == MultiPoly(sign) * exactalg::resultant(g, f);
            const bool multiplicative =
                exactalg::resultant(f * g, h) == exactalg::resultant(f, h) * exactalg::resultant(g, h);
            if (!symmetric || !multiplicative) {
                rec.fail("exactalg.resultant", params,
                         symmetric ? "multiplicativity violated" : "antisymmetry violated",
                         json{{"trial", trial}, {"f", f.to_string()}, {"g", g.to_string()}, {"h", h.to_string()}});
                return;
            }
        }
        rec.pass("exactalg.resultant", params,
                 "examples hold; symmetry and multiplicativity on " + std::to_string(kTrials) + " random triples");
    });
}

void check_discriminant(Recorder& rec, std::uint64_t seed) {
    const json params{{"seed", seed}};
    rec.guarded("exactalg.discriminant", params, [&] {
        const MultiPoly v = MultiPoly::variable("v");
        const MultiPoly q = MultiPoly::variable("q");
        const MultiPoly a = MultiPoly::variable("a");
        const MultiPoly q2 = MultiPoly::variable("Q2");
        const MultiPoly q4 = MultiPoly::variable("Q4");
        struct Example {
            const char* name;
            MultiPoly got;
            MultiPoly want;
        };
        const std::vector<Example> examples{
            {"disc(v^2 + a)", exactalg::discriminant(UniPoly::from_multipoly(v * v + a, "v")), MultiPoly(-4) * a},
            {"disc(q^2 + Q2 q + Q4)", exactalg::discriminant(UniPoly::from_multipoly(q * q + q2 * q + q4, "q")),
             q2 * q2 - MultiPoly(4) * q4},
            {"disc(v^2 - 2v + 1)",
             exactalg::discriminant(UniPoly::from_multipoly(v * v - MultiPoly(2) * v + MultiPoly(1), "v")),
             MultiPoly()},
        };
        for (const auto& e : examples) {
            if (e.got != e.want) {
                rec.fail("exactalg.discriminant", params, std::string(e.name) + " mismatch",
                         json{{"got", e.got.to_string()}, {"want", e.want.to_string()}});
                return;
            }
        }
        std::mt19937_64 rng(seed + 2);
        std::uniform_int_distribution<int> root(-6, 6);
        std::uniform_int_distribution<int> deg(2, 5);
        constexpr int kTrials = 30;
        for (int trial = 0; trial < kTrials; ++trial) {
            std::vector<int> roots(static_cast<std::size_t>(deg(rng)));
            for (auto& r : roots) r = root(rng);
            UniPoly f("x", {MultiPoly(1)});
            for (int r : roots) f = f * UniPoly("x", {MultiPoly(-r), MultiPoly(1)});
            Rational want(1);
            for (std::size_t i = 0; i < roots.size(); ++i) {
                for (std::size_t j = i + 1; j < roots.size(); ++j) {
                    want *= Rational(roots[i] - roots[j]) * Rational(roots[i] - roots[j]);
                }
            }
            const auto got = exactalg::discriminant(f);
            if (got != MultiPoly(want)) {
                rec.fail("exactalg.discriminant", params, "discriminant differs from the root-difference product",
                         json{{"roots", roots}, {"got", got.to_string()}, {"want", want.to_string()}});
                return;
            }
        }
        rec.pass("exactalg.discriminant", params,
                 "examples hold; root-difference product on " + std::to_string(kTrials) + " random polynomials");
    });
}

void check_order_at_zero(Recorder& rec) {
    rec.guarded("exactalg.order_at_zero", json::object(), [&] {
        const MultiPoly t = MultiPoly::variable("t");
        const std::vector<std::pair<MultiPoly, unsigned>> cases{
            {MultiPoly(4) * t, 1}, {t * t + t.pow(3), 2}, {MultiPoly(5), 0}};
        json got = json::array();
        bool ok = true;
        for (const auto& [p, want] : cases) {
            const auto o = exactalg::order_at_zero(p, "t");
            got.push_back(o);
            ok = ok && o == want;
        }
        rec.verdict(ok, "exactalg.order_at_zero", json::object(), "orders of 4t, t^2 + t^3, 5 are 1, 2, 0",
                    json{{"orders", got}});
    });
}

void check_ratfunc_equal(Recorder& rec) {
    rec.guarded("exactalg.ratfunc_equal", json::object(), [&] {
        const RatFunc N = RatFunc::variable("N");
        const RatFunc one(1);
        const bool constants = exactalg::ratfunc_equal(RatFunc(Rational(10, 72)), RatFunc(Rational(5, 36)));
        const bool split = exactalg::ratfunc_equal(
            (RatFunc(2) * N + RatFunc(3)) / (RatFunc(12) * N * (N + one) * (N + RatFunc(2))),
            one / (RatFunc(6) * (N + one) * (N + RatFunc(2))) +
                one / (RatFunc(4) * N * (N + one) * (N + RatFunc(2))));
        const bool distinct = !exactalg::ratfunc_equal(one / (N + one), one / (N + RatFunc(2)));
        rec.verdict(constants && split && distinct, "exactalg.ratfunc_equal", json::object(),
                    "10/72 = 5/36; partial-fraction split of (2N+3)/(12N(N+1)(N+2)); 1/(N+1) != 1/(N+2)",
                    json{{"constants", constants}, {"split", split}, {"distinct", distinct}});
    });
}

// ---------------------------------------------------------------- spectral

void check_factorization(Recorder& rec, int n) {
    const json params{{"n", n}};
    std::optional<spectral::Factorization> fact;
    rec.guarded("spectral.build_P", params, [&] {
        const auto data = spectral::SpectralData::symbolic(n);
        const auto polys = spectral::build_P(data);
        bool ok = polys.p.degree() == 2 * n && polys.p.is_monic() && polys.ptilde.degree() == n &&
                  polys.p == spectral::even_lift(polys.ptilde, spectral::kSpectralVariable);
        for (int k = 1; k < 2 * n; k += 2) ok = ok && polys.p.coefficient(static_cast<std::size_t>(k)).is_zero();
        rec.verdict(ok, "spectral.build_P", params, "P is monic of degree 2n, even, and the lift of P-tilde",
                    json{{"P", polys.p.to_string()}, {"P_tilde", polys.ptilde.to_string()}});
    });
    rec.guarded("spectral.factorize_discriminant", params, [&] {
        try {
            fact = spectral::factorize_discriminant(n);
        } catch (const spectral::FactorizationError& e) {
            rec.fail("spectral.factorize_discriminant", params, e.what(),
                     json{{"residual", e.residual().to_string()}});
            return;
        }
        Rational four_n(1);
        for (int k = 0; k < n; ++k) four_n *= Rational(4);
        const bool ok = fact->constant.abs() == four_n;
        rec.verdict(ok, "spectral.factorize_discriminant", params,
                    "W - c Q_2n Delta^2 = 0 with c = " + fact->constant.to_string() + ", |c| = 4^" + std::to_string(n),
                    json{{"constant", fact->constant.to_string()},
                         {"W_terms", fact->w.size()},
                         {"Delta_terms", fact->delta.size()}});
    });
    if (!fact) return;
    Rational minus_four_n(1);
    for (int k = 0; k < n; ++k) minus_four_n *= Rational(-4);
    rec.report("spectral.factorization_sign", params,
               "observed c = " + fact->constant.to_string() +
                   (fact->constant == minus_four_n ? ", equal to (-4)^n" : ", differs from (-4)^n"),
               json{{"constant", fact->constant.to_string()}, {"minus_four_to_n", minus_four_n.to_string()}});
    rec.guarded("spectral.scaling_action", params, [&] {
        const auto s = spectral::scaling_action(n, *fact);
        json w{{"polynomial_matches", s.polynomial_matches},
               {"delta_scales", s.delta_scales},
               {"w_scales", s.w_scales},
               {"delta_weight", s.delta_weight ? json(*s.delta_weight) : json(nullptr)},
               {"w_weight", s.w_weight ? json(*s.w_weight) : json(nullptr)}};
        if (!s.ok()) w["residual"] = s.residual.to_string();
        rec.verdict(s.ok(), "spectral.scaling_action", params,
                    "Q_2j has weight 2j; Delta scales by xi^" + std::to_string(2 * n * (n - 1)) + ", W by xi^" +
                        std::to_string(2 * n * (2 * n - 1)),
                    w);
    });
}

void check_hamiltonian(Recorder& rec, int n, std::uint64_t seed) {
    const json params{{"n", n}, {"seed", seed}};
    rec.guarded("spectral.char_poly_hamiltonian", params, [&] {
        std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(n));
        constexpr int kSamples = 100;
        for (int k = 0; k < kSamples; ++k) {
            const auto x = spectral::random_hamiltonian(n, rng);
            try {
                const auto cp = spectral::char_poly_hamiltonian(x);
                (void)cp;
            } catch (const std::logic_error& e) {
                rec.fail("spectral.char_poly_hamiltonian", params, e.what(), json{{"sample", k}});
                return;
            }
        }
        rec.pass("spectral.char_poly_hamiltonian", params,
                 std::to_string(kSamples) + " random sp(2n) matrices have even characteristic polynomials");
    });
}

void check_cover_numerics(Recorder& rec, int n, int g) {
    const json params{{"g", g}, {"n", n}};
    rec.guarded("spectral.cover_numerics", params, [&] {
        const auto c = spectral::cover_numerics(n, g);
        const std::int64_t nn = n;
        const std::int64_t gm1 = g - 1;
        const bool ok = c.consistent() && c.N == 2 * nn * (2 * nn - 1) && c.simple_zeros == 4 * nn * gm1 &&
                        c.double_zeros == 4 * nn * (nn - 1) * gm1 && c.r == 4 * nn * nn * gm1 &&
                        c.branch_with_mult == 2 * c.N * gm1 && c.genus_hat == 4 * nn * nn * gm1 + 1;
        rec.verdict(ok, "spectral.cover_numerics", params,
                    "N=" + std::to_string(c.N) + " zeros " + std::to_string(c.simple_zeros) + "+" +
                        std::to_string(c.double_zeros) + "=" + std::to_string(c.r) + " genus " +
                        std::to_string(c.genus_hat),
                    json{{"N", c.N},
                         {"simple_zeros", c.simple_zeros},
                         {"double_zeros", c.double_zeros},
                         {"r", c.r},
                         {"branch_with_mult", c.branch_with_mult},
                         {"genus_hat", c.genus_hat},
                         {"N1", c.N1},
                         {"N2", c.N2},
                         {"N3", c.N3}});
    });
}

void check_riemann_hurwitz(Recorder& rec, int n, int g) {
    const json params{{"g", g}, {"n", n}};
    rec.guarded("spectral.riemann_hurwitz", params, [&] {
        const auto c = spectral::cover_numerics(n, g);
        auto profile = spectral::generic_ramification_profile(n, g);
        const auto generic = spectral::riemann_hurwitz(2 * n, g, profile);
        json w{{"generic_genus", generic.genus ? json(*generic.genus) : json(nullptr)},
               {"expected", c.genus_hat}};
        bool ok = generic.genus && *generic.genus == c.genus_hat;
        if (n >= 2) {
            // ac: the order-2 point over a zero of Q_2n and the two over a zero of
            // Delta become one order-4 point.
            auto ac = profile;
            ac.resize(ac.size() - 3);
            ac.push_back(4);
            const auto rac = spectral::riemann_hurwitz(2 * n, g, ac);
            // bb: the four order-2 points over two zeros of Delta become two
            // nodes, each counted as one unit of branching.
            auto bb = profile;
            bb.resize(bb.size() - 2);
            const auto rbb = spectral::riemann_hurwitz(2 * n, g, bb);
            w["ac_genus"] = rac.genus ? json(*rac.genus) : json(nullptr);
            w["bb_genus"] = rbb.genus ? json(*rbb.genus) : json(nullptr);
            ok = ok && rac.genus == generic.genus && rbb.genus && generic.genus && *rbb.genus == *generic.genus - 1;
        }
        rec.verdict(ok, "spectral.riemann_hurwitz", params,
                    n >= 2 ? "generic genus 4n^2(g-1)+1; ac keeps it; bb lowers it by 1"
                           : "generic genus 4n^2(g-1)+1",
                    w);
    });
}

void check_dims(Recorder& rec, int max_rank_sp, int g) {
    using spectral::GroupType;
    const std::vector<std::pair<GroupType, const char*>> types{
        {GroupType::A, "A"}, {GroupType::B, "B"}, {GroupType::C, "C"}, {GroupType::D, "D"}, {GroupType::GL, "GL"}};
    for (const auto& [type, name] : types) {
        const json params{{"g", g}, {"group", name}};
        rec.guarded("spectral.dims_and_degrees", params, [&, type = type] {
            constexpr int kMaxRank = 8;
            const int top = type == GroupType::C ? std::max(kMaxRank, max_rank_sp) : kMaxRank;
            json failures = json::array();
            for (int rank = type == GroupType::D ? 2 : 1; rank <= top; ++rank) {
                const auto d = spectral::dims_and_degrees(type, rank, g);
                bool ok = d.consistent(g);
                if (type == GroupType::C) {
                    const std::int64_t k = rank;
                    ok = ok && d.fixed_base_dim == k * (2 * k + 1) * (g - 1) &&
                         d.variable_base_dim == (d.dim + 3) * (g - 1);
                }
                if (!ok) failures.push_back(d.label);
            }
            rec.verdict(failures.empty(), "spectral.dims_and_degrees", params,
                        "sum(2d_j - 1) = dim G and base dimensions for ranks up to " + std::to_string(top),
                        json{{"failures", failures}});
        });
    }
}

const std::map<Stratum, unsigned>& expected_orders() {
    static const std::map<Stratum, unsigned> orders{{Stratum::b, 1},  {Stratum::ac, 2}, {Stratum::bm, 1},
                                                    {Stratum::bb, 1}, {Stratum::cc, 3}, {Stratum::mm, 2}};
    return orders;
}

void record_multiplicity(Recorder& rec, const json& params, const spectral::Multiplicity& m) {
    const unsigned want = expected_orders().at(m.label);
    json w{{"order", m.order},
           {"detector", m.detector},
           {"detector_value", m.detector_value.to_string()},
           {"delta", m.delta.to_string()},
           {"attempts", m.attempts}};
    if (!m.repeated_factor.is_constant()) w["repeated_factor"] = m.repeated_factor.to_string();
    const std::string detail = m.detector + " vanishes to order " + std::to_string(m.order);
    if (m.label == Stratum::ac) {
        rec.report("spectral.stratum_multiplicity", params,
                   detail + "; Delta restricted to Q_2n = 0 is Q_{2n-2}^2 times a discriminant, so the "
                            "resultant is a perfect square along the family",
                   w);
        return;
    }
    rec.verdict(m.order == want, "spectral.stratum_multiplicity", params,
                detail + (m.order == want ? "" : ", expected " + std::to_string(want)), w);
}

void check_multiplicities(Recorder& rec, const std::optional<std::filesystem::path>& family) {
    for (auto s : spcover::kAllStrata) {
        const json params{{"label", std::string(spcover::to_string(s))}, {"source", "builtin"}};
        rec.guarded("spectral.stratum_multiplicity", params,
                    [&] { record_multiplicity(rec, params, spectral::builtin_multiplicity(s)); });
    }
    if (family) {
        const auto f = [&] {
            std::ifstream in(*family);
            if (!in) throw UsageError("cannot read family file " + family->string());
            try {
                return spectral::family_from_json(json::parse(in));
            } catch (const json::exception& e) {
                throw UsageError("family file " + family->string() + ": " + e.what());
            } catch (const std::invalid_argument& e) {
                throw UsageError("family file " + family->string() + ": " + e.what());
            }
        }();
        const json params{{"label", std::string(spcover::to_string(f.label))},
                          {"source", family->filename().string()}};
        rec.guarded("spectral.stratum_multiplicity", params,
                    [&] { record_multiplicity(rec, params, spectral::stratum_multiplicity(f)); });
    }
    for (int n = 2; n <= 4; ++n) {
        const json params{{"n", n}};
        rec.guarded("spectral.ac_perfect_square", params, [&] {
            const auto d = spectral::ac_perfect_square_check(n);
            rec.verdict(d.holds, "spectral.ac_perfect_square", params,
                        "Delta at Q_2n = 0 equals Q_{2n-2}^2 times the deflated discriminant",
                        json{{"restricted_delta_terms", d.restricted_delta.size()},
                             {"deflated_disc_terms", d.deflated_disc.size()}});
        });
    }
}

// ---------------------------------------------------------------- monodromy

void check_local_monodromies(Recorder& rec, int n) {
    using namespace spcover::monodromy;
    const json params{{"n", n}};
    rec.guarded("monodromy.enumerate_local_monodromies", params, [&] {
        const auto qs = enumerate_local_monodromies(n, ZeroKind::QZero);
        const auto ds = enumerate_local_monodromies(n, ZeroKind::DeltaZero);
        const SheetInvolution inv(n);
        bool commute = true;
        for (const auto& s : qs) commute = commute && s.perm().commutes_with(inv.sigma());
        for (const auto& s : ds) commute = commute && s.perm().commutes_with(inv.sigma());
        const bool ok = static_cast<int>(qs.size()) == n && static_cast<int>(ds.size()) == n * (n - 1) && commute;
        json w{{"qzero", qs.size()}, {"deltazero", ds.size()}, {"commute_with_sigma", commute}};
        rec.verdict(ok, "monodromy.enumerate_local_monodromies", params,
                    std::to_string(qs.size()) + " Qzero and " + std::to_string(ds.size()) +
                        " DeltaZero monodromies, all commuting with sigma",
                    w);
    });
}

void check_classify_examples(Recorder& rec) {
    using namespace spcover::monodromy;
    rec.guarded("monodromy.classify_merge", json::object(), [&] {
        struct Example {
            int n;
            ZeroKind k1;
            const char* s1;
            ZeroKind k2;
            const char* s2;
            MergeVerdict verdict;
            std::optional<Stratum> label;
            const char* product;
        };
        const std::vector<Example> examples{
            {1, ZeroKind::QZero, "(12)", ZeroKind::QZero, "(12)", MergeVerdict::Class, Stratum::b, "()"},
            {2, ZeroKind::QZero, "(12)", ZeroKind::DeltaZero, "(13)(24)", MergeVerdict::Class, Stratum::ac,
             "(1 4 2 3)"},
            {2, ZeroKind::DeltaZero, "(13)(24)", ZeroKind::DeltaZero, "(14)(23)", MergeVerdict::Excluded,
             std::nullopt, "(1 2)(3 4)"},
            {3, ZeroKind::DeltaZero, "(13)(24)", ZeroKind::DeltaZero, "(15)(26)", MergeVerdict::Class, Stratum::cc,
             "(1 3 5)(2 4 6)"},
            {2, ZeroKind::QZero, "(12)", ZeroKind::QZero, "(34)", MergeVerdict::Inadmissible, std::nullopt,
             "(1 2)(3 4)"},
        };
        json got = json::array();
        bool ok = true;
        for (const auto& e : examples) {
            const LocalMonodromy s1(e.k1, Permutation::parse(e.s1, 2 * e.n));
            const LocalMonodromy s2(e.k2, Permutation::parse(e.s2, 2 * e.n));
            const auto r = classify_merge(s1, s2);
            const bool label_ok =
                e.label ? (r.degeneration && r.degeneration->label == *e.label) : !r.degeneration.has_value();
            const bool this_ok = r.verdict == e.verdict && label_ok && r.product.to_cycle_string() == e.product;
            ok = ok && this_ok;
            got.push_back({{"s1", e.s1},
                           {"s2", e.s2},
                           {"verdict", std::string(to_string(r.verdict))},
                           {"label", r.degeneration ? json(std::string(spcover::to_string(r.degeneration->label)))
                                                    : json(nullptr)},
                           {"product", r.product.to_cycle_string()}});
        }
        rec.verdict(ok, "monodromy.classify_merge", json::object(),
                    "b, ac, Excluded, cc and Inadmissible examples classify as stated", json{{"cases", got}});
    });
}

void check_all_merges(Recorder& rec, int n, std::map<int, monodromy::MergeTable>& tables) {
    using namespace spcover::monodromy;
    const json params{{"n", n}};
    rec.guarded("monodromy.enumerate_all_merges", params, [&] {
        const auto table = enumerate_all_merges(n);
        tables.emplace(n, table);
        std::vector<std::string> problems;
        if (table.realizable() != expected_realizable(n)) problems.emplace_back("realizable set");
        for (const auto& [label, count] : table.class_orbits) {
            if (count != 1) problems.push_back(std::string(spcover::to_string(label)) + " has several orbits");
        }
        for (const auto& [label, cls] : table.classes) {
            if (cls.genus_delta != (label == Stratum::bb ? -1 : 0)) {
                problems.push_back(std::string(spcover::to_string(label)) + " genus change");
            }
            if (label == Stratum::ac && cls.fiber_size != 2 * n - 3) problems.emplace_back("ac fibre size");
        }
        // Excluded exactly for distinct Delta monodromies on the same two pairs.
        int expected_excluded = 0;
        const auto ds = enumerate_local_monodromies(n, ZeroKind::DeltaZero);
        for (const auto& a : ds) {
            for (const auto& b : ds) {
                if (a != b && a.pairs() == b.pairs()) ++expected_excluded;
            }
        }
        if (table.excluded_pairs != expected_excluded) problems.emplace_back("excluded pair count");
        json w = to_json(table);
        w["excluded_orbits"] = table.excluded_orbits;
        w["inadmissible_pairs"] = table.inadmissible_pairs;
        if (table.classes.count(Stratum::ac)) w["ac_fiber_size"] = table.classes.at(Stratum::ac).fiber_size;
        std::string detail;
        for (const auto& [label, count] : table.class_orbits) {
            detail += (detail.empty() ? "" : " ") + std::string(spcover::to_string(label)) + ":" +
                      std::to_string(count);
        }
        detail += "; excluded ordered pairs " + std::to_string(table.excluded_pairs);
        if (!problems.empty()) {
            w["problems"] = problems;
            detail += "; problems: " + problems.front();
        }
        rec.verdict(problems.empty(), "monodromy.enumerate_all_merges", params, detail, w);
    });
}

void report_resolution_orbits(Recorder& rec, const std::map<int, monodromy::MergeTable>& tables) {
    for (const auto& [n, table] : tables) {
        const json params{{"n", n}};
        json orbits = json::object();
        json orders = json::object();
        for (const auto& [label, count] : table.class_orbits) {
            orbits[std::string(spcover::to_string(label))] = count;
            orders[std::string(spcover::to_string(label))] = expected_orders().at(label);
        }
        rec.report("monodromy.resolution_orbits", params,
                   "centralizer orbits per class, next to the detector vanishing orders; no identification asserted",
                   json{{"orbits", orbits}, {"vanishing_orders", orders}});
    }
}

void check_global(Recorder& rec, int n, int g) {
    using namespace spcover::monodromy;
    const json params{{"g", g}, {"n", n}};
    rec.guarded("monodromy.validate_global_monodromy", params, [&] {
        const auto w = generic_cover_witness(n, g);
        const auto r = validate_global_monodromy(w.gammas, w.alphas, w.betas, g);
        json witness = to_json(w);
        witness["relation_product"] = r.relation_product.to_cycle_string();
        if (!r.ok()) witness["violation"] = r.first_violation;
        rec.verdict(r.ok(), "monodromy.validate_global_monodromy", params,
                    r.ok() ? "relation, transitivity, sigma-compatibility and generic counts hold"
                           : r.first_violation,
                    witness);
    });
}

// ---------------------------------------------------------------- picard

void record_identities(Recorder& rec, const std::string& check, const std::vector<picard::Identity>& ids,
                       const picard::Grid& grid) {
    for (const auto& id : ids) {
        const json params{{"identity", id.name}};
        rec.guarded(check, params, [&] {
            const auto r = picard::check_identity(id, grid);
            std::string detail = r.expect_equal ? "holds" : "differs";
            detail += r.symbolic ? " symbolically" : " NOT symbolically";
            detail += r.grid ? " and on " : " but not on ";
            detail += std::to_string(r.grid_points - r.grid_skipped) + " grid points";
            if (r.grid_skipped) detail += " (" + std::to_string(r.grid_skipped) + " poles skipped)";
            rec.verdict(r.holds(), check, params, detail, picard::to_json(r));
        });
    }
}

void check_picard(Recorder& rec, const Ranges& r) {
    const picard::Grid grid{r.min_n, r.max_n, r.min_g, r.max_g};
    rec.guarded("picard.star_class", json::object(), [&] {
        using picard::PicClass;
        const RatFunc gm1 = picard::g_var() - RatFunc(1);
        const bool two = picard::star_class(RatFunc(2)) == PicClass{RatFunc(72), RatFunc(-20) * gm1, RatFunc(-6)};
        const bool zero = picard::star_class(RatFunc(0)).is_zero();
        const auto nonadd = picard::check_identity(picard::star_nonadditivity(), grid);
        const bool ok = two && zero && nonadd.holds();
        rec.verdict(ok, "picard.star_class", json::object(),
                    "(*)(2) = 72 lambda - 20(g-1) phi - 6 delta; (*)(0) = 0; (*) is not additive in N",
                    json{{"star_2", picard::to_json(picard::star_class(RatFunc(2)))},
                         {"nonadditivity", picard::to_json(nonadd)}});
    });
    record_identities(rec, "picard.theorem3_check", picard::discriminant_class_identities(), grid);
    record_identities(rec, "picard.gl_theorem_check", picard::gl_identities(), grid);
    record_identities(rec, "picard.kappa_B", picard::kappa_identities(), grid);
    rec.guarded("picard.kappa_B", json{{"identity", "values"}}, [&] {
        const auto k1 = picard::kappa_B(1);
        const auto k2 = picard::kappa_B(2);
        const bool ok = k1 == Rational(5, 36) && k2 == Rational(19, 728);
        rec.verdict(ok, "picard.kappa_B", json{{"identity", "values"}},
                    "kappa_B/(g-1) = " + k1.to_string() + " at n=1 and " + k2.to_string() + " at n=2",
                    json{{"n1", k1.to_string()}, {"n2", k2.to_string()}});
    });
    record_identities(rec, "picard.coarse_identity_check", picard::coarse_identities(), grid);
}

// Keys in sorted order; numbers compare numerically, everything else by its dump.
bool params_less(const json& a, const json& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (ia.key() != ib.key()) return ia.key() < ib.key();
        const json& va = ia.value();
        const json& vb = ib.value();
        if (va.is_number() && vb.is_number()) {
            if (va.get<double>() != vb.get<double>()) return va.get<double>() < vb.get<double>();
        } else if (va.is_string() && vb.is_string()) {
            if (va.get<std::string>() != vb.get<std::string>()) return va.get<std::string>() < vb.get<std::string>();
        } else if (va.dump() != vb.dump()) {
            return va.dump() < vb.dump();
        }
    }
    return ib != b.end();
}

Ranges resolve(const SuiteOptions& o, Scope section, bool explicit_scope) {
    const int cap = n_cap(section);
    Ranges r{o.min_n, o.max_n, o.min_g, o.max_g};
    if (o.max_n > cap) {
        if (explicit_scope) {
            throw UsageError("--max-n " + std::to_string(o.max_n) + " exceeds the " +
                             std::string(to_string(section)) + " cap of " + std::to_string(cap));
        }
        r.max_n = cap;
    }
    return r;
}

}  // namespace

std::string_view to_string(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::ReportOnly: return "report-only";
    }
    return "?";
}

std::optional<Scope> parse_scope(std::string_view text) {
    for (auto s : {Scope::All, Scope::Factorization, Scope::Monodromy, Scope::Multiplicity, Scope::Picard,
                   Scope::Numerics}) {
        if (to_string(s) == text) return s;
    }
    return std::nullopt;
}

std::string_view to_string(Scope s) {
    switch (s) {
    case Scope::All: return "all";
    case Scope::Factorization: return "factorization";
    case Scope::Monodromy: return "monodromy";
    case Scope::Multiplicity: return "multiplicity";
    case Scope::Picard: return "picard";
    case Scope::Numerics: return "numerics";
    }
    return "?";
}

int n_cap(Scope s) {
    switch (s) {
    case Scope::Factorization: return 4;
    case Scope::Monodromy: return 6;
    case Scope::Numerics: return 10;
    case Scope::Picard: return 12;
    case Scope::Multiplicity:
    case Scope::All: return std::numeric_limits<int>::max();
    }
    return 1;
}

const std::vector<std::string>& check_registry() {
    static const std::vector<std::string> reg = [] {
        std::vector<std::string> all;
        for (const auto& [scope, checks] : scope_checks()) all.insert(all.end(), checks.begin(), checks.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        return all;
    }();
    return reg;
}

std::vector<std::string> checks_in_scope(Scope s) {
    if (s == Scope::All) return check_registry();
    return scope_checks().at(s);
}

int SuiteResult::exit_code() const {
    return std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.status == Status::Fail; }) ? 1
                                                                                                             : 0;
}

SuiteResult run_suite(const SuiteOptions& o) {
    if (o.min_n < 1 || o.min_n > o.max_n) {
        throw UsageError("need 1 <= --min-n <= --max-n");
    }
    if (o.min_g < 2 || o.min_g > o.max_g) {
        throw UsageError("need 2 <= --min-g <= --max-g");
    }
    if (o.max_g > kMaxGenus) {
        throw UsageError("--max-g is limited to " + std::to_string(kMaxGenus));
    }
    if (o.family && !std::filesystem::is_regular_file(*o.family)) {
        throw UsageError("family file " + o.family->string() + " does not exist");
    }
    const bool everything = o.scope == Scope::All;
    auto wants = [&](Scope s) { return everything || o.scope == s; };
    // Resolve every range first so a usage error leaves no partial work behind.
    std::map<Scope, Ranges> ranges;
    for (auto s : {Scope::Factorization, Scope::Numerics, Scope::Monodromy, Scope::Picard}) {
        if (wants(s)) ranges.emplace(s, resolve(o, s, !everything));
    }

    Recorder rec;
    if (wants(Scope::Factorization)) {
        const auto& r = ranges.at(Scope::Factorization);
        check_poly_arith(rec, o.seed);
        check_resultant(rec, o.seed);
        check_discriminant(rec, o.seed);
        for (int n : span_of(r.min_n, r.max_n)) check_factorization(rec, n);
    }
    if (wants(Scope::Numerics)) {
        const auto& r = ranges.at(Scope::Numerics);
        for (int n : span_of(r.min_n, std::min(r.max_n, kHamiltonianCap))) check_hamiltonian(rec, n, o.seed);
        for (int n : span_of(r.min_n, r.max_n)) {
            for (int g : span_of(r.min_g, r.max_g)) {
                check_cover_numerics(rec, n, g);
                check_riemann_hurwitz(rec, n, g);
            }
        }
        for (int g : span_of(r.min_g, r.max_g)) check_dims(rec, r.max_n, g);
    }
    if (wants(Scope::Multiplicity)) {
        check_order_at_zero(rec);
        check_multiplicities(rec, o.family);
    }
    if (wants(Scope::Monodromy)) {
        const auto& r = ranges.at(Scope::Monodromy);
        check_classify_examples(rec);
        std::map<int, monodromy::MergeTable> tables;
        for (int n : span_of(r.min_n, r.max_n)) {
            check_local_monodromies(rec, n);
            check_all_merges(rec, n, tables);
        }
        report_resolution_orbits(rec, tables);
        for (int n : span_of(r.min_n, std::min(r.max_n, kWitnessCap))) {
            for (int g : span_of(r.min_g, r.max_g)) check_global(rec, n, g);
        }
    }
    if (wants(Scope::Picard)) {
        check_ratfunc_equal(rec);
        check_picard(rec, ranges.at(Scope::Picard));
    }

    SuiteResult out;
    out.reports = rec.take();
    std::stable_sort(out.reports.begin(), out.reports.end(), [](const auto& a, const auto& b) {
        if (a.check != b.check) return a.check < b.check;
        return params_less(a.params, b.params);
    });
    return out;
}

}  // namespace spcover::cli
