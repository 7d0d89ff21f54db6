#include "spcover/monodromy.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace spcover::monodromy {

namespace {

bool is_conjugate_pair(int a, int b) { return a / 2 == b / 2 && a != b; }

std::vector<int> lengths_at_least_two(const Permutation& p) {
    std::vector<int> out;
    for (int len : p.cycle_type()) {
        if (len >= 2) out.push_back(len);
    }
    return out;
}

int branching_of(const std::vector<int>& profile) {
    int total = 0;
    for (int len : profile) total += len - 1;
    return total;
}

int branching_of(ZeroKind kind) { return kind == ZeroKind::QZero ? 1 : 2; }

}  // namespace

std::string_view to_string(ZeroKind kind) { return kind == ZeroKind::QZero ? "Qzero" : "DeltaZero"; }

std::string_view to_string(MergeVerdict verdict) {
    switch (verdict) {
    case MergeVerdict::Class: return "class";
    case MergeVerdict::Excluded: return "excluded";
    case MergeVerdict::Inadmissible: return "inadmissible";
    }
    return "?";
}

LocalMonodromy::LocalMonodromy(ZeroKind kind, Permutation perm) : kind_(kind), perm_(std::move(perm)) {
    if (perm_.size() < 2 || perm_.size() % 2 != 0) {
        throw std::invalid_argument("local monodromy needs an even, positive number of sheets");
    }
    const auto cs = perm_.cycles();
    if (kind_ == ZeroKind::QZero) {
        if (cs.size() != 1 || cs[0].size() != 2 || !is_conjugate_pair(cs[0][0] - 1, cs[0][1] - 1)) {
            throw std::invalid_argument("Qzero monodromy must swap one conjugate pair, got " +
                                        perm_.to_cycle_string());
        }
    } else {
        if (cs.size() != 2 || cs[0].size() != 2 || cs[1].size() != 2) {
            throw std::invalid_argument("DeltaZero monodromy must have cycle type (2,2), got " +
                                        perm_.to_cycle_string());
        }
        const int a = cs[0][0] - 1;
        const int c = cs[0][1] - 1;
        if (a / 2 == c / 2) {
            throw std::invalid_argument("DeltaZero monodromy must join two distinct conjugate pairs, got " +
                                        perm_.to_cycle_string());
        }
    }
    const SheetInvolution inv(n());
    if (!perm_.commutes_with(inv.sigma())) {
        throw std::invalid_argument("local monodromy " + perm_.to_cycle_string() + " does not commute with sigma");
    }
}

std::set<int> LocalMonodromy::pairs() const {
    std::set<int> out;
    for (const auto& c : perm_.cycles()) {
        for (int p : c) out.insert(SheetInvolution::pair_of(p - 1));
    }
    return out;
}

LocalMonodromy LocalMonodromy::conjugated_by(const Permutation& h) const {
    return LocalMonodromy(kind_, perm_.conjugated_by(h));
}

std::vector<LocalMonodromy> enumerate_local_monodromies(int n, ZeroKind kind) {
    if (n < 1) {
        throw std::invalid_argument("local monodromies need n >= 1");
    }
    std::vector<LocalMonodromy> out;
    const int sheets = 2 * n;
    if (kind == ZeroKind::QZero) {
        for (int k = 1; k <= n; ++k) {
            out.emplace_back(kind, Permutation::from_cycles({{2 * k - 1, 2 * k}}, sheets));
        }
        return out;
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const int a = 2 * i - 1;
            const int b = 2 * i;
            const int c = 2 * j - 1;
            const int d = 2 * j;
            out.emplace_back(kind, Permutation::from_cycles({{a, c}, {b, d}}, sheets));
            out.emplace_back(kind, Permutation::from_cycles({{a, d}, {b, c}}, sheets));
        }
    }
    return out;
}

int sigma_invariant_cycles(const Permutation& p) {
    const SheetInvolution inv(p.size() / 2);
    int count = 0;
    for (const auto& c : p.cycles()) {
        if (inv.preserves(c)) ++count;
    }
    return count;
}

MergeResult classify_merge(const LocalMonodromy& s1, const LocalMonodromy& s2) {
    if (s1.perm().size() != s2.perm().size()) {
        throw std::invalid_argument("merged monodromies act on different sheet counts");
    }
    MergeResult r;
    r.product = s1.perm() * s2.perm();
    const bool q1 = s1.kind() == ZeroKind::QZero;
    const bool q2 = s2.kind() == ZeroKind::QZero;

    if (q1 && q2 && s1 != s2) {
        r.verdict = MergeVerdict::Inadmissible;
        r.reason = "merging zeros of Q_2n must both swap the pair vanishing at the merge point";
        return r;
    }
    if (sigma_invariant_cycles(r.product) > 1) {
        r.verdict = MergeVerdict::Excluded;
        r.reason = "product " + r.product.to_cycle_string() +
                   " has more than one sigma-invariant cycle, but sigma has one fixed point";
        return r;
    }

    DegenerationClass d;
    const auto shared = [&] {
        std::vector<int> common;
        const auto p1 = s1.pairs();
        const auto p2 = s2.pairs();
        std::set_intersection(p1.begin(), p1.end(), p2.begin(), p2.end(), std::back_inserter(common));
        return common.size();
    }();
    std::vector<int> expected_profile;
    if (q1 && q2) {
        d.label = Stratum::b;
        d.nodes = 1;
    } else if (q1 != q2) {
        d.label = shared > 0 ? Stratum::ac : Stratum::bm;
        expected_profile = shared > 0 ? std::vector<int>{4} : std::vector<int>{2, 2, 2};
    } else if (s1 == s2) {
        d.label = Stratum::bb;
        d.nodes = 2;
    } else if (shared == 1) {
        d.label = Stratum::cc;
        expected_profile = {3, 3};
    } else if (shared == 0) {
        d.label = Stratum::mm;
        expected_profile = {2, 2, 2, 2};
    } else {
        throw std::logic_error("two distinct Delta monodromies on the same pairs passed the filter");
    }
    d.min_n = min_half_rank(d.label);
    d.cycle_type = r.product.cycle_type();
    d.ramification_profile = lengths_at_least_two(r.product);
    if (d.ramification_profile != expected_profile) {
        throw std::logic_error("merge product " + r.product.to_cycle_string() + " has an unexpected profile for " +
                               std::string(spcover::to_string(d.label)));
    }
    d.branching_before = branching_of(s1.kind()) + branching_of(s2.kind());
    // Each node contributes one unit, as a pair of branches glued into one point.
    d.branching_after = branching_of(d.ramification_profile) + d.nodes;
    // A node joins two branches into one point of the fibre.
    d.fiber_size = r.product.cycle_count() - d.nodes;
    // The boundary node keeps the branching simple; its genus change is left to the caller.
    d.genus_delta = d.label == Stratum::b ? 0 : (d.branching_after - d.branching_before) / 2;
    r.degeneration = d;
    return r;
}

std::set<Stratum> MergeTable::realizable() const {
    std::set<Stratum> out;
    for (const auto& [label, count] : class_orbits) {
        if (count > 0) out.insert(label);
    }
    return out;
}

std::set<Stratum> expected_realizable(int n) {
    std::set<Stratum> out;
    for (auto s : kAllStrata) {
        if (n >= min_half_rank(s)) out.insert(s);
    }
    return out;
}

MergeTable enumerate_all_merges(int n) {
    if (n < 1 || n > 6) {
        throw std::invalid_argument("merge enumeration supports 1 <= n <= 6");
    }
    std::vector<LocalMonodromy> elems = enumerate_local_monodromies(n, ZeroKind::QZero);
    for (auto& d : enumerate_local_monodromies(n, ZeroKind::DeltaZero)) {
        elems.push_back(std::move(d));
    }
    const auto m = elems.size();
    std::map<Permutation, std::size_t> index;
    for (std::size_t i = 0; i < m; ++i) {
        index.emplace(elems[i].perm(), i);
    }
    const auto gens = SheetInvolution(n).centralizer_generators();
    // action[g][i]: index of elems[i] conjugated by gens[g]
    std::vector<std::vector<std::size_t>> action(gens.size(), std::vector<std::size_t>(m));
    for (std::size_t g = 0; g < gens.size(); ++g) {
        for (std::size_t i = 0; i < m; ++i) {
            action[g][i] = index.at(elems[i].perm().conjugated_by(gens[g]));
        }
    }

    MergeTable table;
    table.n = n;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            ++table.ordered_pairs;
            const auto r = classify_merge(elems[i], elems[j]);
            if (r.verdict == MergeVerdict::Excluded) ++table.excluded_pairs;
            if (r.verdict == MergeVerdict::Inadmissible) ++table.inadmissible_pairs;
        }
    }

    auto key_less = [&](std::pair<std::size_t, std::size_t> a, std::pair<std::size_t, std::size_t> b) {
        const auto ka = std::make_pair(elems[a.first].perm().images(), elems[a.second].perm().images());
        const auto kb = std::make_pair(elems[b.first].perm().images(), elems[b.second].perm().images());
        return ka < kb;
    };
    std::vector<bool> seen(m * m, false);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            if (seen[i * m + j]) continue;
            seen[i * m + j] = true;
            std::deque<std::pair<std::size_t, std::size_t>> queue{{i, j}};
            std::pair<std::size_t, std::size_t> best{i, j};
            while (!queue.empty()) {
                const auto [a, b] = queue.front();
                queue.pop_front();
                for (const auto& act : action) {
                    auto na = act[a];
                    auto nb = act[b];
                    if (na > nb) std::swap(na, nb);
                    if (!seen[na * m + nb]) {
                        seen[na * m + nb] = true;
                        queue.emplace_back(na, nb);
                        if (key_less({na, nb}, best)) best = {na, nb};
                    }
                }
            }
            const auto r = classify_merge(elems[best.first], elems[best.second]);
            if (r.verdict == MergeVerdict::Excluded) ++table.excluded_orbits;
            if (r.verdict != MergeVerdict::Class) continue;
            const auto label = r.degeneration->label;
            if (table.class_orbits[label]++ == 0) {
                table.representatives.emplace(label, std::make_pair(elems[best.first], elems[best.second]));
                table.classes.emplace(label, *r.degeneration);
            }
        }
    }
    return table;
}

nlohmann::json to_json(const MergeTable& table) {
    nlohmann::json classes = nlohmann::json::object();
    for (const auto& [label, count] : table.class_orbits) {
        classes[std::string(spcover::to_string(label))] = count;
    }
    return {{"n", table.n}, {"classes", std::move(classes)}, {"excluded_pairs", table.excluded_pairs}};
}

GlobalMonodromyReport validate_global_monodromy(const std::vector<LocalMonodromy>& gammas,
                                                const std::vector<Permutation>& alphas,
                                                const std::vector<Permutation>& betas,
                                                std::optional<int> generic_genus) {
    if (gammas.empty()) {
        throw std::invalid_argument("global monodromy needs at least one local monodromy");
    }
    if (alphas.size() != betas.size()) {
        throw std::invalid_argument("alphas and betas must have the same length");
    }
    const int sheets = gammas.front().perm().size();
    for (const auto& gm : gammas) {
        if (gm.perm().size() != sheets) throw std::invalid_argument("gammas act on different sheet counts");
    }
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (alphas[i].size() != sheets || betas[i].size() != sheets) {
            throw std::invalid_argument("handle generators act on a different sheet count");
        }
    }
    const int n = sheets / 2;
    const SheetInvolution inv(n);
    GlobalMonodromyReport rep;
    auto fail = [&](const std::string& what) {
        if (rep.first_violation.empty()) rep.first_violation = what;
    };

    Permutation prod(sheets);
    for (const auto& gm : gammas) prod = prod * gm.perm();
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        prod = prod * alphas[i] * betas[i] * alphas[i].inverse() * betas[i].inverse();
    }
    rep.relation_product = prod;
    rep.relation = prod.is_identity();
    if (!rep.relation) fail("relation: product is " + prod.to_cycle_string() + ", not the identity");

    std::vector<Permutation> gens;
    for (const auto& gm : gammas) gens.push_back(gm.perm());
    gens.insert(gens.end(), alphas.begin(), alphas.end());
    gens.insert(gens.end(), betas.begin(), betas.end());
    std::vector<bool> reached(static_cast<std::size_t>(sheets), false);
    std::deque<int> queue{0};
    reached[0] = true;
    while (!queue.empty()) {
        const int p = queue.front();
        queue.pop_front();
        for (const auto& gp : gens) {
            const int q = gp[p];
            if (!reached[static_cast<std::size_t>(q)]) {
                reached[static_cast<std::size_t>(q)] = true;
                queue.push_back(q);
            }
        }
    }
    rep.transitive = std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
    if (!rep.transitive) fail("transitivity: the generated subgroup does not act transitively");

    rep.sigma_compatible = std::all_of(gens.begin(), gens.end(),
                                       [&](const Permutation& gp) { return gp.commutes_with(inv.sigma()); });
    if (!rep.sigma_compatible) fail("sigma: a generator does not commute with the sheet involution");

    if (generic_genus) {
        const long g = *generic_genus;
        const long qz = std::count_if(gammas.begin(), gammas.end(),
                                      [](const LocalMonodromy& x) { return x.kind() == ZeroKind::QZero; });
        const long dz = static_cast<long>(gammas.size()) - qz;
        rep.generic_counts = qz == 4L * n * (g - 1) && dz == 4L * n * (n - 1) * (g - 1) &&
                             static_cast<long>(alphas.size()) == g;
        if (!*rep.generic_counts) {
            fail("counts: expected " + std::to_string(4L * n * (g - 1)) + " Qzero and " +
                 std::to_string(4L * n * (n - 1) * (g - 1)) + " DeltaZero gammas and " + std::to_string(g) +
                 " handles, got " + std::to_string(qz) + ", " + std::to_string(dz) + " and " +
                 std::to_string(alphas.size()));
        }
    }
    return rep;
}

GlobalMonodromyWitness generic_cover_witness(int n, int g) {
    if (n < 1 || n > 3) {
        throw std::invalid_argument("witness search supports 1 <= n <= 3");
    }
    if (g < 2) {
        throw std::invalid_argument("witness search needs g >= 2");
    }
    GlobalMonodromyWitness w;
    w.n = n;
    w.g = g;
    const int sheets = 2 * n;
    const auto qs = enumerate_local_monodromies(n, ZeroKind::QZero);
    const auto ds = enumerate_local_monodromies(n, ZeroKind::DeltaZero);
    const long q_count = 4L * n * (g - 1);
    const long d_count = 4L * n * (n - 1) * (g - 1);
    for (long k = 0; k < q_count; ++k) w.gammas.push_back(qs[static_cast<std::size_t>(k) % qs.size()]);
    for (long k = 0; k < d_count; ++k) w.gammas.push_back(ds[static_cast<std::size_t>(k) % ds.size()]);

    Permutation prod(sheets);
    for (const auto& gm : w.gammas) prod = prod * gm.perm();
    const Permutation target = prod.inverse();

    const Permutation id(sheets);
    w.alphas.assign(static_cast<std::size_t>(g), id);
    w.betas.assign(static_cast<std::size_t>(g), id);
    if (target.is_identity()) return w;

    // First commutator [a, b] = a b a^-1 b^-1 found in enumeration order; a second one if needed.
    const auto elems = SheetInvolution(n).centralizer_elements();
    std::map<Permutation, std::pair<Permutation, Permutation>> commutators;
    for (const auto& a : elems) {
        for (const auto& b : elems) {
            commutators.emplace(a * b * a.inverse() * b.inverse(), std::make_pair(a, b));
        }
    }
    if (const auto it = commutators.find(target); it != commutators.end()) {
        w.alphas[0] = it->second.first;
        w.betas[0] = it->second.second;
        return w;
    }
    for (const auto& [c1, ab1] : commutators) {
        const auto it = commutators.find(c1.inverse() * target);
        if (it != commutators.end()) {
            w.alphas[0] = ab1.first;
            w.betas[0] = ab1.second;
            w.alphas[1] = it->second.first;
            w.betas[1] = it->second.second;
            return w;
        }
    }
    throw std::runtime_error("no commutator witness closes the monodromy relation");
}

nlohmann::json to_json(const GlobalMonodromyWitness& w) {
    nlohmann::json gammas = nlohmann::json::array();
    for (const auto& gm : w.gammas) gammas.push_back(gm.perm().to_cycle_string());
    nlohmann::json alphas = nlohmann::json::array();
    nlohmann::json betas = nlohmann::json::array();
    for (std::size_t i = 0; i < w.alphas.size(); ++i) {
        alphas.push_back(w.alphas[i].to_cycle_string());
        betas.push_back(w.betas[i].to_cycle_string());
    }
    return {{"n", w.n}, {"g", w.g}, {"gammas", std::move(gammas)}, {"alphas", std::move(alphas)},
            {"betas", std::move(betas)}};
}

}  // namespace spcover::monodromy
