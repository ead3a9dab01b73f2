#include "toroidal/suite.hpp"

#include "toroidal/autos.hpp"
#include "toroidal/charseries.hpp"
#include "toroidal/presentation.hpp"
#include "toroidal/vrep.hpp"
#include "toroidal/weylmod.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace toroidal {

namespace {

using Clock = std::chrono::steady_clock;

void compare(Report& rep, const CharSeries& got, const CharSeries& want, const std::string& what) {
    std::map<Label, std::pair<long long, long long>> all;
    for (const auto& [l, c] : got.coeffs) all[l].first = c;
    for (const auto& [l, c] : want.coeffs) all[l].second = c;
    for (const auto& [l, gw] : all)
        rep.expect(gw.first == gw.second, what + " at " + to_string(l) + ": " + std::to_string(gw.first) +
                                              " vs " + std::to_string(gw.second));
    if (all.empty()) rep.expect(true, what);
}

TorElt random_element(std::mt19937& rng, const std::vector<TorBasis>& box) {
    std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
    std::uniform_int_distribution<int> terms(1, 3), num(-3, 3), den(1, 2);
    TorElt x;
    for (int t = terms(rng); t > 0; --t) {
        int n = num(rng);
        x.add(box[pick(rng)], frac(n == 0 ? 1 : n, den(rng)));
    }
    return x;
}

TorElt jacobi(const TorLie& alg, const TorElt& x, const TorElt& y, const TorElt& z) {
    TorElt j = alg.bracket(x, alg.bracket(y, z));
    j += alg.bracket(y, alg.bracket(z, x));
    j += alg.bracket(z, alg.bracket(x, y));
    return j;
}

Report bracket_soundness(unsigned seed) {
    TorLie alg(RootSystem::build("A1"));
    Report rep{"bracket", 0, {}};
    auto box1 = basis_box(alg.rs(), 1), box2 = basis_box(alg.rs(), 2), box3 = basis_box(alg.rs(), 3);
    for (const auto& a : box2)
        for (const auto& b : box2)
            rep.expect(alg.bracket(a, b) == -alg.bracket(b, a),
                       "antisymmetry " + alg.format(TorElt(a)) + ", " + alg.format(TorElt(b)));
    for (const auto& a : box1)
        for (const auto& b : box1)
            for (const auto& c : box1)
                rep.expect(jacobi(alg, TorElt(a), TorElt(b), TorElt(c)).is_zero(),
                           "Jacobi " + alg.format(TorElt(a)) + ", " + alg.format(TorElt(b)) + ", " +
                               alg.format(TorElt(c)));
    std::mt19937 rng(seed);
    for (int trial = 0; trial < 500; ++trial) {
        TorElt x = random_element(rng, box3), y = random_element(rng, box3), z = random_element(rng, box3);
        rep.expect(jacobi(alg, x, y, z).is_zero(), "Jacobi on random triple " + std::to_string(trial));
        rep.expect(alg.bracket(x, y) == -alg.bracket(y, x), "antisymmetry on random pair " + std::to_string(trial));
    }
    return rep;
}

Report presentation_theorem() {
    Report rep{"presentation", 0, {}};
    for (const char* name : {"A1", "A2"}) rep.merge(verify_presentation(TorLie(RootSystem::build(name)), 3));
    return rep;
}

Report automorphisms() {
    Report rep{"automorphisms", 0, {}};
    {
        TorLie alg(RootSystem::build("A1"));
        auto box = basis_box(alg.rs(), 2);
        std::vector<TorBasis> plus;
        for (const auto& b : box)
            if (alg.member(Subalgebra::Plus, b)) plus.push_back(b);
        rep.merge(check_homomorphism(alg, [](const TorElt& x) { return apply_S(x, 1); }, box, "S"));
        rep.merge(check_homomorphism(alg, [](const TorElt& x) { return apply_S(x, -1); }, box, "S^-1"));
        rep.merge(check_homomorphism(alg, [&](const TorElt& x) { return apply_T0(alg, x); }, box, "T_0"));
        rep.merge(check_homomorphism(alg, [&](const TorElt& x) { return apply_Ttheta(alg, x); }, box, "T_theta"));
        rep.merge(check_homomorphism(alg, [&](const TorElt& x) { return tau_shift(alg, 1, x); }, plus, "tau_1"));
    }
    for (const char* name : {"A1", "A2"}) {
        TorLie alg(RootSystem::build(name));
        const auto& rs = alg.rs();
        for (int k = -2; k <= 2; ++k)
            for (int l = -4; l <= 2; ++l) {
                TorElt lhs = alg.gten(rs.e_theta(), k, l);
                TorElt rhs = apply_T0(alg, apply_Ttheta(alg, alg.gten(rs.e_theta(), k, l + 2)));
                rep.expect(lhs == rhs, std::string(name) + ": T_0 T_theta(e_theta s^" + std::to_string(k) + " t^" +
                                           std::to_string(l + 2) + ") = e_theta s^" + std::to_string(k) + " t^" +
                                           std::to_string(l));
            }
    }
    return rep;
}

Report module_axiom(const SuiteConfig& cfg) {
    auto rs = RootSystem::build(cfg.type);
    TorLie alg(rs);
    VertexModule vm(rs);
    return check_module_axiom(alg, vm, basis_box(*rs, 2), Window{cfg.window, -cfg.tau, cfg.tau});
}

Report highest_weight(const SuiteConfig& cfg) {
    Report rep{"highest weight", 0, {}};
    std::vector<std::string> types{"A1", "A2"};
    if (std::find(types.begin(), types.end(), cfg.type) == types.end()) types.push_back(cfg.type);
    for (const auto& name : types) {
        auto rs = RootSystem::build(name);
        TorLie alg(rs);
        VertexModule vm(rs);
        rep.merge(check_vacuum_relations(alg, vm, 3));
        PresentedWeyl pw(alg, 3, cfg.budget);
        rep.merge(verify_hw_relations(alg, vm, pw));
        rep.merge(verify_induction_transport(alg, vm, enumerate_basis(*rs, Window{2, -1, 1})));
    }
    return rep;
}

Report character_p(const SuiteConfig& cfg) {
    Report rep{"character p", 0, {}};
    auto rs = RootSystem::build(cfg.type);
    VertexModule vm(rs);
    Caps caps{cfg.max_delta, 0};
    auto formula = formula_dims(*rs, caps, false);
    WeylConfig wc{rs, 1, caps, cfg.max_delta + 1, cfg.budget};
    auto at1 = rank_spanning(vm, wc);
    compare(rep, at1.dims, formula.dims, "rank in V_1 vs formula");
    wc.a = 2;
    auto at2 = rank_spanning(vm, wc);
    compare(rep, at2.dims, at1.dims, "rank in V_2 vs V_1");
    return rep;
}

Report character_pq(const SuiteConfig& cfg) {
    Report rep{"character pq", 0, {}};
    auto rs = RootSystem::build(cfg.type);
    TorLie alg(rs);
    Caps caps{cfg.max_delta_q, cfg.max_s};
    WeylConfig wc{rs, 0, caps, cfg.max_delta_q + 1, cfg.budget};
    compare(rep, presented_weyl_dims(alg, wc).dims, formula_dims(*rs, caps, true).dims, "presented vs formula");
    return rep;
}

Report rewriting(const SuiteConfig& cfg) {
    auto rs = RootSystem::build(cfg.type);
    TorLie alg(rs);
    PresentedWeyl pw(alg, 3, cfg.budget);
    Report rep = verify_rewriting(pw, {1, 2}, cfg.rewrite_l);
    rep.merge(verify_spanning(pw, cfg.max_delta_q, cfg.max_delta_q + 1));
    return rep;
}

Report factorization(const SuiteConfig& cfg) {
    Report rep{"factorization", 0, {}};
    std::vector<std::string> types{"A1", "A2"};
    if (std::find(types.begin(), types.end(), cfg.type) == types.end()) types.push_back(cfg.type);
    for (const auto& name : types) {
        auto rs = RootSystem::build(name);
        int dmax = name == "A1" ? cfg.window : std::min(cfg.window, 4);
        for (int d = 0; d <= dmax; ++d)
            for (auto [lo, hi] : {std::pair{0, 0}, std::pair{-1, 1}, std::pair{-2, 2}, std::pair{0, 3}}) {
                Window w{d, lo, hi};
                std::size_t got = enumerate_basis(*rs, w).size(), want = factor_counts(*rs, w).product();
                rep.expect(got == want, name + " window D=" + std::to_string(d) + " tau in [" + std::to_string(lo) +
                                            "," + std::to_string(hi) + "]: " + std::to_string(got) + " vs " +
                                            std::to_string(want));
            }
    }
    return rep;
}

Report inequality_chain(const SuiteConfig& cfg) {
    Report rep{"inequality chain", 0, {}};
    auto rs = RootSystem::build(cfg.type);
    TorLie alg(rs);
    VertexModule vm(rs);
    int m = std::min(cfg.max_delta, cfg.max_delta_q);
    // All s-degrees up to m are needed for the q-collapse to be complete.
    Caps caps{m, m};
    auto presented = presented_weyl_dims(alg, WeylConfig{rs, 0, caps, m + 1, cfg.budget});
    auto rank = rank_spanning(vm, WeylConfig{rs, 1, Caps{m, 0}, m + 1, cfg.budget});
    auto formula = formula_dims(*rs, caps, true);
    rep.expect(char_leq(rank.dims, collapse_q(presented.dims)), "ch_p V_1 <= ch_p W(Lambda_0)");
    rep.expect(char_leq(presented.dims, formula.dims), "ch_pq W(Lambda_0) <= formula");
    for (const auto& [l, c] : rank.dims.coeffs)
        rep.expect(collapse_q(presented.dims).at(l) >= c, "label " + to_string(l));
    return rep;
}

} // namespace

std::vector<CriterionResult> run_suite(const SuiteConfig& cfg, const std::vector<int>& only,
                                       const std::function<void(const CriterionResult&)>& on_done) {
    struct Entry {
        int id;
        const char* name;
        double limit;
        std::function<Report()> run;
    };
    const std::vector<Entry> entries{
        {1, "bracket soundness", 60, [&] { return bracket_soundness(cfg.seed); }},
        {2, "presentation theorem", 60, [] { return presentation_theorem(); }},
        {3, "automorphisms", 60, [] { return automorphisms(); }},
        {4, "vertex module axiom", 300, [&] { return module_axiom(cfg); }},
        {5, "highest-weight relations", 60, [&] { return highest_weight(cfg); }},
        {6, "character, p-part", 600, [&] { return character_p(cfg); }},
        {7, "character, (p,q)-part", 600, [&] { return character_pq(cfg); }},
        {8, "rewriting identities", 300, [&] { return rewriting(cfg); }},
        {9, "basis factorization", 60, [&] { return factorization(cfg); }},
        {10, "inequality chain", 600, [&] { return inequality_chain(cfg); }},
    };
    std::vector<CriterionResult> out;
    for (const auto& e : entries) {
        if (!only.empty() && std::find(only.begin(), only.end(), e.id) == only.end()) continue;
        auto t0 = Clock::now();
        Report rep = e.run();
        CriterionResult r;
        r.id = e.id;
        r.name = e.name;
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        r.limit_seconds = e.limit;
        r.checked = rep.checked;
        r.failures = rep.failures;
        if (r.seconds > r.limit_seconds) r.failures.push_back("time limit exceeded");
        r.passed = r.failures.empty() && r.checked > 0;
        if (on_done) on_done(r);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace toroidal
