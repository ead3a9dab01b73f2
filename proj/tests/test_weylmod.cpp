#include <doctest.h>

#include "toroidal/weylmod.hpp"

#include <functional>
#include <set>

using namespace toroidal;

namespace {

struct A1 {
    RootSystemPtr rs = RootSystem::build("A1");
    TorLie alg{rs};
    VertexModule vm{rs};
    GSym e = rs->root_sym({1}), f = rs->root_sym({-1}), h = rs->cartan_sym(0);
};

} // namespace

TEST_CASE("monomial order and labels") {
    A1 s;
    auto& rs = *s.rs;
    CHECK(pbw_less(TorBasis::gten(s.e, 0, -1), TorBasis::gten(s.f, 0, 0)));
    CHECK(pbw_less(TorBasis::gten(s.e, 0, -1), TorBasis::gten(s.e, 1, -1)));
    CHECK(pbw_less(TorBasis::gten(s.h, 0, -1), TorBasis::gten(s.e, 0, -1)));
    CHECK(pbw_less(TorBasis::gten(s.e, 1, -1), TorBasis::c(1, -1)));
    CHECK(shift(rs, TorBasis::gten(s.e, 2, -3)) == Label{LatticeVec{1}, 3, 2});
    CHECK(shift(rs, TorBasis::c(1, -2)) == Label{LatticeVec{0}, 2, 1});
    PBWMonomial m{{TorBasis::gten(s.e, 0, -1), 2}, {TorBasis::gten(s.f, 0, 0), 1}};
    CHECK(label_of(rs, m) == Label{LatticeVec{1}, 2, 0});
    CHECK(weight_ball(rs, 1) == std::vector<LatticeVec>{{-1}, {0}, {1}});
    CHECK(weight_ball(rs, 4).size() == 5);
    CHECK(weight_ball(*RootSystem::build("A2"), 1).size() == 7);
}

TEST_CASE("pullback module and specialization") {
    A1 s;
    using GK = TorLie::GenKind;
    VElt vac(vacuum(*s.rs));
    CHECK(pullback_act(s.vm, TorElt(TorBasis::ct()), vac) == vac);
    for (int k = -3; k <= 3; ++k) {
        CHECK(pullback_act(s.vm, s.alg.generator(1, k, GK::H), vac).is_zero());
        FockState t = vacuum(*s.rs);
        t.tau = -k;
        CHECK(pullback_act(s.vm, s.alg.generator(0, k, GK::H), vac) == VElt(t));
    }
    FockState t1 = vacuum(*s.rs);
    t1.tau = 1;
    CHECK(specialize(VElt(t1), 1) == vac);
    CHECK(specialize(VElt(t1), 2) == frac(1, 2) * vac);
    CHECK(specialize(vac, 5) == vac);
    CHECK(specialize(pullback_act(s.vm, s.alg.generator(0, 1, GK::H), vac), 2) == Rational(2) * vac);
    CHECK_THROWS_AS(specialize(vac, 0), std::invalid_argument);
}

TEST_CASE("spanning monomials") {
    A1 s;
    auto& rs = *s.rs;
    LatticeVec z{0};
    auto m11 = spanning_monomials(rs, Label{z, 1, 1});
    REQUIRE(m11.size() == 1);
    CHECK(m11[0] == PBWMonomial{{TorBasis::c(1, -1), 1}});

    auto m10 = spanning_monomials(rs, Label{z, 1, 0});
    std::vector<PBWMonomial> expect{
        {{TorBasis::gten(s.h, 0, -1), 1}},
        {{TorBasis::gten(s.e, 0, -1), 1}, {TorBasis::gten(s.f, 0, 0), 1}},
    };
    std::sort(expect.begin(), expect.end());
    CHECK(m10 == expect);

    auto m00 = spanning_monomials(rs, Label{z, 0, 0});
    REQUIRE(m00.size() == 1);
    CHECK(m00[0].empty());
    CHECK(spanning_monomials(rs, Label{LatticeVec{-2}, 0, 0}).size() == 1);
    CHECK(spanning_monomials(rs, Label{LatticeVec{3}, 1, 0}).empty());

    // Brute force: all words over the generators of depth <= 2, sorted and
    // deduplicated, grouped by label.
    std::vector<TorBasis> gens{TorBasis::c(1, -1), TorBasis::c(1, -2), TorBasis::gten(s.f, 0, 0)};
    for (int l = 1; l <= 2; ++l)
        for (GSym g : {s.e, s.f, s.h}) gens.push_back(TorBasis::gten(g, 0, -l));
    std::map<Label, std::set<PBWMonomial>> brute;
    std::function<void(std::vector<TorBasis>&)> rec = [&](std::vector<TorBasis>& word) {
        Label lab{z, 0, 0};
        for (const auto& b : word) lab = lab + shift(rs, b);
        if (lab.m > 2 || word.size() > 5) return;
        auto sorted = word;
        std::sort(sorted.begin(), sorted.end(), pbw_less);
        PBWMonomial mono;
        for (const auto& b : sorted) {
            if (!mono.empty() && mono.back().first == b) ++mono.back().second;
            else mono.emplace_back(b, 1);
        }
        brute[lab].insert(mono);
        for (const auto& g : gens) {
            word.push_back(g);
            rec(word);
            word.pop_back();
        }
    };
    std::vector<TorBasis> word;
    rec(word);
    for (const auto& [lab, set] : brute) {
        if (lab.weight[0] < -1) continue; // words are too short to reach these
        auto got = spanning_monomials(rs, lab);
        CHECK(std::vector<PBWMonomial>(set.begin(), set.end()) == got);
    }
}

TEST_CASE("rank of the spanning set in V_a") {
    A1 s;
    WeylConfig cfg{s.rs, 1, Caps{3, 0}, 4, 20000};
    auto r1 = rank_spanning(s.vm, cfg);
    CHECK(r1.provenance == "rank-in-V");
    LatticeVec z{0}, a{1};
    CHECK(r1.dims.at(Label{z, 1, 0}) == 2);
    CHECK(r1.dims.at(Label{z, 0, 0}) == 1);
    CHECK(r1.dims.at(Label{a, 1, 0}) == 1);
    auto formula = formula_dims(*s.rs, cfg.caps, false);
    CHECK(r1.dims == formula.dims);
    cfg.a = 2;
    CHECK(rank_spanning(s.vm, cfg).dims == r1.dims);
    cfg.a = 0;
    CHECK_THROWS_AS(rank_spanning(s.vm, cfg), std::invalid_argument);

    auto a2 = RootSystem::build("A2");
    VertexModule vm2(a2);
    WeylConfig c2{a2, 1, Caps{2, 0}, 2, 20000};
    CHECK(rank_spanning(vm2, c2).dims == formula_dims(*a2, c2.caps, false).dims);
}

TEST_CASE("presented Weyl module") {
    A1 s;
    PresentedWeyl pw(s.alg, 2);
    LatticeVec z{0};
    CHECK(pw.dim(Label{z, 0, 0}) == 1);
    CHECK(pw.dim(Label{z, 1, 0}) == 1);
    CHECK(pw.dim(Label{z, 1, 1}) == 1);
    CHECK(pw.dim(Label{LatticeVec{-1}, 0, 0}) == 0);

    // Straightening inside U(nbar^+): f (e t^-1) = (e t^-1) f - h t^-1 ... up to the form.
    TorBasis et = TorBasis::gten(s.e, 0, -1), f = TorBasis::gten(s.f, 0, 0);
    MonoVec prod = pw.left_mul(f, PBWMonomial{{et, 1}});
    MonoVec expect(PBWMonomial{{et, 1}, {f, 1}});
    for (const auto& [b, c] : s.alg.bracket(f, et)) expect.add(PBWMonomial{{b, 1}}, c);
    CHECK(prod == expect);

    WeylConfig cfg{s.rs, 0, Caps{2, 2}, 3, 20000};
    auto presented = presented_weyl_dims(s.alg, cfg);
    CHECK(presented.provenance == "presented-quotient");
    auto formula = formula_dims(*s.rs, cfg.caps, true);
    CHECK(presented.dims == formula.dims);

    // The q-collapse of the presented module dominates the rank in V.
    WeylConfig rc{s.rs, 1, Caps{2, 0}, 3, 20000};
    auto rank = rank_spanning(s.vm, rc);
    CHECK(char_leq(rank.dims, collapse_q(presented.dims)));
    cfg.a = 1;
    CHECK_THROWS_AS(presented_weyl_dims(s.alg, cfg), std::invalid_argument);

    // Without f_0^2 v_0 = 0 the quotient is larger than the formula.
    PresentedWeyl loose(s.alg, 2, 20000, true);
    auto loose_dims = loose.dims(cfg.caps, 3);
    CHECK(char_leq(formula.dims, loose_dims.dims));
    CHECK(loose_dims.dims != formula.dims);
    CHECK(loose.dim(Label{LatticeVec{2}, 2, 0}) == 1);

    PresentedWeyl tiny(s.alg, 2, 5);
    CHECK_THROWS_AS(tiny.dim(Label{z, 2, 2}), BudgetExceeded);
}

TEST_CASE("relations, rewriting and spanning in the presented module") {
    A1 s;
    PresentedWeyl pw(s.alg, 3);
    auto hw = verify_hw_relations(s.alg, s.vm, pw);
    for (const auto& f : hw.failures) MESSAGE(f);
    CHECK(hw.passed());
    CHECK(hw.checked > 50);

    auto rw = verify_rewriting(pw, {1, 2}, 4);
    for (const auto& f : rw.failures) MESSAGE(f);
    CHECK(rw.passed());

    // The correction sum is needed: the bare vector is nonzero in W.
    auto& rs = *s.rs;
    MonoVec bare = pw.act(s.alg.gten(rs.e_theta(), 1, -3), pw.vacuum());
    CHECK_FALSE(pw.vanishes(bare, Label{rs.theta(), 3, 1}));
    CHECK(pw.vanishes(pw.act(s.alg.gten(rs.e_theta(), 2, -2), pw.vacuum()), Label{rs.theta(), 2, 2}));

    auto sp = verify_spanning(pw, 2, 2);
    for (const auto& f : sp.failures) MESSAGE(f);
    CHECK(sp.passed());

    auto states = enumerate_basis(*s.rs, Window{2, 0, 0});
    CHECK(verify_induction_transport(s.alg, s.vm, states).passed());
}
