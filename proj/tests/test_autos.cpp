#include <doctest.h>

#include "toroidal/autos.hpp"

using namespace toroidal;

namespace {

// The images of the central basis under S^{-1}, written out by hand.
TorElt s_inverse_central(const TorBasis& b) {
    using K = TorBasis::Kind;
    switch (b.kind) {
    case K::Cs: return TorElt(TorBasis::ct(), -1);
    case K::Ct: return TorElt(TorBasis::cs());
    default: break;
    }
    if (b.l == 0) return TorElt(TorBasis::c(0, -b.k));
    if (b.k == 0) return TorElt(TorBasis::c(b.l, 0), -1);
    return TorElt(TorBasis::c(b.l, -b.k), frac(b.k, b.l));
}

} // namespace

TEST_CASE("S and its inverse") {
    TorLie alg(RootSystem::build('A', 1));
    const auto& rs = alg.rs();
    CHECK(apply_S(alg.gten(rs.e(0), 2, -1), -1) == alg.gten(rs.e(0), -1, -2));
    CHECK(apply_S(alg.gten(rs.e(0), 2, -1), 1) == alg.gten(rs.e(0), 1, 2));
    CHECK(apply_S(TorElt(TorBasis::cs()), -1) == TorElt(TorBasis::ct(), -1));
    CHECK(apply_S(TorElt(TorBasis::ct()), -1) == TorElt(TorBasis::cs()));
    CHECK(apply_S(TorElt(TorBasis::c(3, 1)), -1) == TorElt(TorBasis::c(1, -3), 3));
    CHECK(apply_S(TorElt(TorBasis::c(2, 0)), -1) == TorElt(TorBasis::c(0, -2)));
    CHECK(apply_S(TorElt(TorBasis::ds()), -1) == TorElt(TorBasis::dt(), -1));

    for (int k = -4; k <= 4; ++k)
        for (int l = -4; l <= 4; ++l) {
            if (k == 0 && l == 0) continue;
            TorBasis c = TorBasis::c(k, l);
            CHECK(apply_S(TorElt(c), -1) == s_inverse_central(c));
        }
    for (const auto& b : basis_box(rs, 3)) {
        TorElt x(b);
        CHECK(apply_S(apply_S(x, 1), -1) == x);
        CHECK(apply_S(apply_S(x, -1), 1) == x);
    }
    CHECK_THROWS_AS(s_transform(2), std::invalid_argument);
}

TEST_CASE("reflections T_0 and T_theta") {
    TorLie alg(RootSystem::build('A', 1));
    const auto& rs = alg.rs();
    const TorElt e = alg.gten(rs.e(0), 0, 0), f = alg.gten(rs.f(0), 0, 0);

    // On sl2 the reflection maps e to -f and f to -e.
    CHECK(apply_Ttheta(alg, e) == -f);
    CHECK(apply_Ttheta(alg, f) == -e);
    CHECK(apply_Ttheta(alg, alg.gten(rs.h(0), 0, 0)) == -alg.gten(rs.h(0), 0, 0));

    // exp ad e_0 on f_0 = e (x) t^{-1}.
    TorElt e0 = alg.gten(rs.f_theta(), 0, 1), f0 = alg.gten(rs.e_theta(), 0, -1);
    TorElt expect = f0 + alg.bracket(e0, f0);
    expect += frac(1, 2) * alg.bracket(e0, alg.bracket(e0, f0));
    CHECK(exp_ad(alg, e0, f0) == expect);
    CHECK(alg.bracket(e0, f0) == -alg.gten(rs.h(0), 0, 0) + TorElt(TorBasis::ct()));

    CHECK_THROWS_AS(exp_ad(alg, alg.gten(rs.h(0), 0, 0), e), NotNilpotent);
    CHECK(apply_T0(alg, apply_T0(alg, apply_T0(alg, apply_T0(alg, e)))) == e);
}

TEST_CASE("shift automorphism on tor^+") {
    TorLie alg(RootSystem::build('A', 1));
    const auto& rs = alg.rs();
    const Rational a(3);
    for (int l = -2; l <= 2; ++l) {
        if (l == 0) continue;
        TorElt expect(TorBasis::c(2, l));
        expect.add(TorBasis::c(1, l), 2 * a);
        CHECK(tau_shift(alg, a, TorElt(TorBasis::c(2, l))) == expect);
    }
    TorElt expect0(TorBasis::c(2, 0));
    expect0.add(TorBasis::c(1, 0), 2 * a);
    expect0.add(TorBasis::ct(), a * a);
    CHECK(tau_shift(alg, a, TorElt(TorBasis::c(2, 0))) == expect0);

    TorElt e2 = alg.gten(rs.e(0), 2, 1);
    TorElt img = alg.gten(rs.e(0), 2, 1) + Rational(6) * alg.gten(rs.e(0), 1, 1) + Rational(9) * alg.gten(rs.e(0), 0, 1);
    CHECK(tau_shift(alg, a, e2) == img);
    CHECK_THROWS_AS(tau_shift(alg, a, alg.gten(rs.e(0), -1, 0)), std::invalid_argument);
    CHECK_THROWS_AS(tau_shift(alg, a, TorElt(TorBasis::ds())), std::invalid_argument);
    CHECK(tau_shift(alg, -a, tau_shift(alg, a, e2)) == e2);
}

TEST_CASE("automorphisms are homomorphisms") {
    TorLie alg(RootSystem::build('A', 1));
    auto box = basis_box(alg.rs(), 2);
    std::vector<TorBasis> plus;
    for (const auto& b : box)
        if (alg.member(Subalgebra::Plus, b)) plus.push_back(b);

    CHECK(check_homomorphism(alg, [](const TorElt& x) { return apply_S(x, 1); }, box, "S").passed());
    CHECK(check_homomorphism(alg, [](const TorElt& x) { return apply_S(x, -1); }, box, "S^-1").passed());
    CHECK(check_homomorphism(alg, [&](const TorElt& x) { return apply_T0(alg, x); }, box, "T0").passed());
    CHECK(check_homomorphism(alg, [&](const TorElt& x) { return apply_Ttheta(alg, x); }, box, "Ttheta").passed());
    for (int a : {1, 2})
        CHECK(check_homomorphism(alg, [&](const TorElt& x) { return tau_shift(alg, a, x); }, plus, "tau").passed());

    // Dropping the k/l factor from S^{-1}(c(k,l)) breaks the bracket.
    TorMap literal = [&](const TorElt& x) {
        TorElt r;
        for (const auto& [b, c] : x) {
            if (b.kind == TorBasis::Kind::C && b.k != 0 && b.l != 0) r.add(TorBasis::c(b.l, -b.k), c);
            else r.add(apply_S(TorElt(b), -1), c);
        }
        return r;
    };
    CHECK_FALSE(check_homomorphism(alg, literal, box, "literal").passed());
}

TEST_CASE("T_0 T_theta lowers the t-degree of e_theta by two") {
    for (const char* name : {"A1", "A2"}) {
        TorLie alg(RootSystem::build(name));
        const auto& rs = alg.rs();
        for (int k = -2; k <= 2; ++k)
            for (int l = -4; l <= 2; ++l) {
                TorElt lhs = alg.gten(rs.e_theta(), k, l);
                TorElt rhs = apply_T0(alg, apply_Ttheta(alg, alg.gten(rs.e_theta(), k, l + 2)));
                CHECK(lhs == rhs);
            }
        // Intermediate steps of the same computation.
        CHECK(apply_Ttheta(alg, alg.gten(rs.e_theta(), 1, 2)) == -alg.gten(rs.f_theta(), 1, 2));
        TorElt e0 = alg.gten(rs.f_theta(), 0, 1);
        CHECK(exp_ad(alg, e0, alg.gten(rs.f_theta(), 0, 2)) == alg.gten(rs.f_theta(), 0, 2));
    }
}
