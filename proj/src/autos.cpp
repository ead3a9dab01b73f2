#include "toroidal/autos.hpp"

#include <stdexcept>

namespace toroidal {

namespace {

using Mono = std::pair<int, int>;

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) r.add({ma.first + mb.first, ma.second + mb.second}, ca * cb);
    return r;
}

LaurentPoly power(const LaurentPoly& p, int e) {
    if (e < 0) {
        if (p.size() != 1) throw std::invalid_argument("negative power of a non-monomial coordinate image");
        const auto& [m, c] = *p.begin();
        LaurentPoly inv(Mono{-m.first, -m.second}, Rational(1) / c);
        return power(inv, -e);
    }
    LaurentPoly r(Mono{0, 0});
    for (int i = 0; i < e; ++i) r = mul(r, p);
    return r;
}

// dP split into (coefficient of ds, coefficient of dt).
std::pair<LaurentPoly, LaurentPoly> differential(const LaurentPoly& p) {
    LaurentPoly ps, pt;
    for (const auto& [m, c] : p) {
        if (m.first != 0) ps.add({m.first - 1, m.second}, c * m.first);
        if (m.second != 0) pt.add({m.first, m.second - 1}, c * m.second);
    }
    return {ps, pt};
}

TorElt canonical(const LaurentPoly& ds_coeff, const LaurentPoly& dt_coeff) {
    TorElt r;
    for (const auto& [m, c] : ds_coeff) r.add(form_ds(m.first, m.second), c);
    for (const auto& [m, c] : dt_coeff) r.add(form_dt(m.first, m.second), c);
    return r;
}

// Pushes f * d(coord) through the map, coord = s (use_s) or t.
TorElt push_form(const RingMap& map, const LaurentPoly& f, bool use_s) {
    LaurentPoly image;
    for (const auto& [m, c] : f) {
        LaurentPoly term = mul(power(map.s_image, m.first), power(map.t_image, m.second));
        image.add(term, c);
    }
    auto [ds, dt] = differential(use_s ? map.s_image : map.t_image);
    return canonical(mul(image, ds), mul(image, dt));
}

} // namespace

RingMap s_transform(int power) {
    RingMap m;
    if (power == 1) {
        m.s_image = LaurentPoly(Mono{0, 1});
        m.t_image = LaurentPoly(Mono{-1, 0});
        m.ds_image = TorElt(TorBasis::dt());
        m.dt_image = TorElt(TorBasis::ds(), -1);
    } else if (power == -1) {
        m.s_image = LaurentPoly(Mono{0, -1});
        m.t_image = LaurentPoly(Mono{1, 0});
        m.ds_image = TorElt(TorBasis::dt(), -1);
        m.dt_image = TorElt(TorBasis::ds());
    } else {
        throw std::invalid_argument("S power must be +1 or -1");
    }
    return m;
}

RingMap shift_map(const Rational& a) {
    RingMap m;
    m.s_image = LaurentPoly(Mono{1, 0});
    m.s_image.add(Mono{0, 0}, a);
    m.t_image = LaurentPoly(Mono{0, 1});
    m.dt_image = TorElt(TorBasis::dt());
    m.ds_defined = false;
    return m;
}

TorElt apply_ring_map(const RingMap& map, const TorElt& x) {
    using K = TorBasis::Kind;
    TorElt r;
    for (const auto& [b, c] : x) {
        switch (b.kind) {
        case K::G: {
            LaurentPoly img = mul(power(map.s_image, b.k), power(map.t_image, b.l));
            for (const auto& [m, cm] : img) r.add(TorBasis::gten(b.g, m.first, m.second), c * cm);
            break;
        }
        case K::C:
            if (b.k != 0) r.add(push_form(map, LaurentPoly(Mono{b.k, b.l - 1}), false), c);
            else r.add(push_form(map, LaurentPoly(Mono{-1, b.l}), true), c);
            break;
        case K::Cs: r.add(push_form(map, LaurentPoly(Mono{-1, 0}), true), c); break;
        case K::Ct: r.add(push_form(map, LaurentPoly(Mono{0, -1}), false), c); break;
        case K::Ds:
            if (!map.ds_defined) throw std::invalid_argument("coordinate map is not defined on d_s");
            r.add(map.ds_image, c);
            break;
        case K::Dt: r.add(map.dt_image, c); break;
        }
    }
    return r;
}

TorElt apply_S(const TorElt& x, int power) { return apply_ring_map(s_transform(power), x); }

TorElt exp_ad(const TorLie& alg, const TorElt& n, const TorElt& x, int cap) {
    TorElt sum = x, term = x;
    for (int j = 1;; ++j) {
        term = alg.bracket(n, term);
        if (term.is_zero()) break;
        if (j > cap) {
            throw NotNilpotent("exp ad(" + alg.format(n) + ") does not terminate on " + alg.format(x) +
                               " within " + std::to_string(cap) + " steps");
        }
        term *= frac(1, j);
        sum += term;
    }
    return sum;
}

namespace {
TorElt reflect(const TorLie& alg, const TorElt& e, const TorElt& f, const TorElt& x, int cap) {
    TorElt y = exp_ad(alg, e, x, cap);
    y = exp_ad(alg, -f, y, cap);
    return exp_ad(alg, e, y, cap);
}
} // namespace

TorElt apply_T0(const TorLie& alg, const TorElt& x, int cap) {
    return reflect(alg, alg.gten(alg.rs().f_theta(), 0, 1), alg.gten(alg.rs().e_theta(), 0, -1), x, cap);
}

TorElt apply_Ttheta(const TorLie& alg, const TorElt& x, int cap) {
    return reflect(alg, alg.gten(alg.rs().e_theta(), 0, 0), alg.gten(alg.rs().f_theta(), 0, 0), x, cap);
}

TorElt tau_shift(const TorLie& alg, const Rational& a, const TorElt& x) {
    if (!alg.member(Subalgebra::Plus, x))
        throw std::invalid_argument("tau_a is only defined on tor^+: " + alg.format(x));
    return apply_ring_map(shift_map(a), x);
}

AutoReport check_homomorphism(const TorLie& alg, const TorMap& phi, const std::vector<TorBasis>& basis,
                              const std::string& name) {
    AutoReport rep;
    rep.name = name;
    std::vector<TorElt> images;
    images.reserve(basis.size());
    for (const auto& b : basis) images.push_back(phi(TorElt(b)));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            TorElt lhs = phi(alg.bracket(basis[i], basis[j]));
            TorElt rhs = alg.bracket(images[i], images[j]);
            if (lhs == rhs) {
                ++rep.checked;
            } else {
                TorElt diff = lhs - rhs;
                rep.expect(false, name + " on (" + alg.format(TorElt(basis[i])) + ", " +
                                      alg.format(TorElt(basis[j])) + "): difference " + alg.format(diff));
            }
        }
    }
    return rep;
}

std::vector<TorBasis> basis_box(const RootSystem& rs, int bound) {
    std::vector<TorBasis> out;
    for (int k = -bound; k <= bound; ++k)
        for (int l = -bound; l <= bound; ++l) {
            for (GSym g = 0; g < rs.dim_g(); ++g) out.push_back(TorBasis::gten(g, k, l));
            if (k != 0 || l != 0) out.push_back(TorBasis::c(k, l));
        }
    out.push_back(TorBasis::cs());
    out.push_back(TorBasis::ct());
    out.push_back(TorBasis::ds());
    out.push_back(TorBasis::dt());
    return out;
}

} // namespace toroidal
