#include "toroidal/presentation.hpp"

#include <sstream>

namespace toroidal {

std::vector<std::vector<int>> affine_cartan(const RootSystem& rs) {
    const int n = rs.rank();
    std::vector<std::vector<int>> a(n + 1, std::vector<int>(n + 1, 0));
    a[0][0] = 2;
    for (int i = 0; i < n; ++i) {
        LatticeVec ai = rs.zero();
        ai[i] = 1;
        a[0][i + 1] = a[i + 1][0] = -rs.form(rs.theta(), ai);
        for (int j = 0; j < n; ++j) a[i + 1][j + 1] = rs.cartan()[i][j];
    }
    return a;
}

namespace {

std::string gen_name(char kind, int i, int k) {
    std::ostringstream os;
    os << kind << "_{" << i << "," << k << "}";
    return os.str();
}

} // namespace

Report verify_presentation(const TorLie& alg, int range, const BracketFn& custom) {
    using GK = TorLie::GenKind;
    Report rep;
    rep.name = "presentation " + alg.rs().name() + " R=" + std::to_string(range);
    const int n = alg.rs().rank();
    const auto a = affine_cartan(alg.rs());
    BracketFn br = custom ? custom : BracketFn([&alg](const TorElt& x, const TorElt& y) { return alg.bracket(x, y); });

    auto E = [&](int i, int k) { return alg.generator(i, k, GK::E); };
    auto F = [&](int i, int k) { return alg.generator(i, k, GK::F); };
    auto H = [&](int i, int k) { return alg.generator(i, k, GK::H); };
    const TorElt cs(TorBasis::cs()), ds(TorBasis::ds()), dt(TorBasis::dt());

    auto check = [&](const TorElt& lhs, const TorElt& rhs, const std::string& what) {
        rep.expect(lhs == rhs, what + ": got " + alg.format(lhs) + ", expected " + alg.format(rhs));
    };

    check(br(ds, dt), TorElt(), "[d_s, d_t] = 0");
    check(br(cs, ds), TorElt(), "[c_s, d_s] = 0");
    check(br(cs, dt), TorElt(), "[c_s, d_t] = 0");

    for (int i = 0; i <= n; ++i) {
        for (int k = -range; k <= range; ++k) {
            const TorElt e = E(i, k), f = F(i, k), h = H(i, k);
            for (const auto& [x, nm] : {std::pair{e, 'e'}, std::pair{f, 'f'}, std::pair{h, 'h'}}) {
                check(br(cs, x), TorElt(), "[c_s, " + gen_name(nm, i, k) + "] = 0");
                check(br(ds, x), Rational(k) * x, "[d_s, " + gen_name(nm, i, k) + "]");
            }
            check(br(dt, e), (i == 0 ? 1 : 0) * e, "[d_t, " + gen_name('e', i, k) + "]");
            check(br(dt, f), (i == 0 ? -1 : 0) * f, "[d_t, " + gen_name('f', i, k) + "]");
            check(br(dt, h), TorElt(), "[d_t, " + gen_name('h', i, k) + "]");

            for (int j = 0; j <= n; ++j) {
                for (int l = -range; l <= range; ++l) {
                    const std::string ij = gen_name('h', i, k) + ", ";
                    TorElt hh;
                    if (k + l == 0 && k != 0) hh = Rational(a[i][j] * k) * cs;
                    check(br(h, H(j, l)), hh, "[" + ij + gen_name('h', j, l) + "]");

                    TorElt ef;
                    if (i == j) {
                        ef = H(i, k + l);
                        if (k + l == 0) ef.add(cs, k);
                    }
                    check(br(e, F(j, l)), ef, "[" + gen_name('e', i, k) + ", " + gen_name('f', j, l) + "]");

                    check(br(h, E(j, l)), Rational(a[i][j]) * E(j, k + l),
                          "[" + ij + gen_name('e', j, l) + "]");
                    check(br(h, F(j, l)), Rational(-a[i][j]) * F(j, k + l),
                          "[" + ij + gen_name('f', j, l) + "]");
                }
                if (i != j && k == 0) {
                    for (int l = -range; l <= range; ++l) {
                        TorElt xe = E(j, l), xf = F(j, l);
                        for (int p = 0; p < 1 - a[i][j]; ++p) {
                            xe = br(E(i, 0), xe);
                            xf = br(F(i, 0), xf);
                        }
                        check(xe, TorElt(), "Serre (ad " + gen_name('e', i, 0) + ")^" + std::to_string(1 - a[i][j]) +
                                                " " + gen_name('e', j, l));
                        check(xf, TorElt(), "Serre (ad " + gen_name('f', i, 0) + ")^" + std::to_string(1 - a[i][j]) +
                                                " " + gen_name('f', j, l));
                    }
                }
            }
            for (int l = -range; l <= range; ++l) {
                check(br(e, E(i, l)), TorElt(), "[" + gen_name('e', i, k) + ", " + gen_name('e', i, l) + "]");
                check(br(f, F(i, l)), TorElt(), "[" + gen_name('f', i, k) + ", " + gen_name('f', i, l) + "]");
            }
        }
    }

    // Presentation of tor^+: nonnegative modes, no central correction terms,
    // and the images must lie in tor^+.
    for (int i = 0; i <= n; ++i) {
        for (int k = 0; k <= range; ++k) {
            for (auto x : {E(i, k), F(i, k), H(i, k)})
                rep.expect(alg.member(Subalgebra::Plus, x), "generator image outside tor^+: " + alg.format(x));
            for (int j = 0; j <= n; ++j) {
                for (int l = 0; l <= range; ++l) {
                    check(br(H(i, k), H(j, l)), TorElt(),
                          "tor^+ [" + gen_name('h', i, k) + ", " + gen_name('h', j, l) + "]");
                    check(br(E(i, k), F(j, l)), i == j ? H(i, k + l) : TorElt(),
                          "tor^+ [" + gen_name('e', i, k) + ", " + gen_name('f', j, l) + "]");
                }
            }
        }
    }
    return rep;
}

} // namespace toroidal
