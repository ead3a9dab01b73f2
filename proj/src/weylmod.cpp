#include "toroidal/weylmod.hpp"

#include "toroidal/autos.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <tuple>

namespace toroidal {

namespace {

int height(const LatticeVec& v) {
    int h = 0;
    for (int x : v) h += x;
    return h;
}

Rational rpow(const Rational& a, int p) {
    Rational r = 1;
    Rational base = p >= 0 ? a : Rational(1) / a;
    for (int i = 0; i < (p >= 0 ? p : -p); ++i) r *= base;
    return r;
}

bool is_zero_label(const Label& l) {
    return l.m == 0 && l.n == 0 && std::all_of(l.weight.begin(), l.weight.end(), [](int x) { return x == 0; });
}

// Monomials in the sorted generator list with total label equal to target.
std::vector<PBWMonomial> enumerate_monomials(const RootSystem& rs, const std::vector<TorBasis>& gens,
                                             const Label& target, std::size_t budget) {
    const int th = height(rs.theta());
    std::vector<Label> shifts;
    for (const auto& g : gens) shifts.push_back(shift(rs, g));
    auto feasible = [&](const Label& rem) { return rem.m >= 0 && rem.n >= 0 && height(rem.weight) <= rem.m * th; };

    std::vector<PBWMonomial> out;
    PBWMonomial cur;
    std::function<void(std::size_t, const Label&)> rec = [&](std::size_t i, const Label& rem) {
        if (is_zero_label(rem)) {
            out.push_back(cur);
            if (out.size() > budget)
                throw BudgetExceeded("more than " + std::to_string(budget) + " monomials at label " +
                                     to_string(target) + "; lower the caps or raise the budget");
            return;
        }
        if (i == gens.size()) return;
        rec(i + 1, rem);
        Label r = rem;
        for (int e = 1;; ++e) {
            r = r - shifts[i];
            if (!feasible(r)) break;
            cur.emplace_back(gens[i], e);
            rec(i + 1, r);
            cur.pop_back();
        }
    };
    if (feasible(target)) rec(0, target);
    std::sort(out.begin(), out.end());
    return out;
}

void sort_pbw(std::vector<TorBasis>& gens) { std::sort(gens.begin(), gens.end(), pbw_less); }

} // namespace

bool pbw_less(const TorBasis& a, const TorBasis& b) {
    return std::make_tuple(a.t_degree(), a.s_degree(), a.kind, a.g) <
           std::make_tuple(b.t_degree(), b.s_degree(), b.kind, b.g);
}

Label shift(const RootSystem& rs, const TorBasis& b) {
    switch (b.kind) {
    case TorBasis::Kind::G: return Label{rs.weight(b.g), -b.l, b.k};
    case TorBasis::Kind::C: return Label{rs.zero(), -b.l, b.k};
    default: return Label{rs.zero(), 0, 0};
    }
}

Label operator+(const Label& a, const Label& b) { return Label{a.weight + b.weight, a.m + b.m, a.n + b.n}; }
Label operator-(const Label& a, const Label& b) { return Label{a.weight - b.weight, a.m - b.m, a.n - b.n}; }

Label label_of(const RootSystem& rs, const PBWMonomial& m) {
    Label l{rs.zero(), 0, 0};
    for (const auto& [b, e] : m)
        for (int i = 0; i < e; ++i) l = l + shift(rs, b);
    return l;
}

std::string format_monomial(const TorLie& alg, const PBWMonomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (const auto& [b, e] : m) {
        if (!s.empty()) s += " ";
        s += "(" + alg.format(TorElt(b)) + ")";
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::vector<LatticeVec> weight_ball(const RootSystem& rs, int radius) {
    std::set<LatticeVec> seen{rs.zero()};
    std::deque<LatticeVec> queue{rs.zero()};
    while (!queue.empty()) {
        LatticeVec v = queue.front();
        queue.pop_front();
        for (const auto& a : rs.roots()) {
            LatticeVec w = v + a;
            if (rs.norm(w) / 2 > radius || seen.count(w)) continue;
            seen.insert(w);
            queue.push_back(w);
        }
    }
    return {seen.begin(), seen.end()};
}

VElt pullback_act(const VertexModule& vm, const TorElt& x, const VElt& v) { return vm.act(apply_S(x, -1), v); }

VElt specialize(const VElt& v, const Rational& a) {
    if (a == 0) throw std::invalid_argument("specialize: a = 0 is not a point of the spectrum");
    VElt r;
    for (const auto& [st, c] : v) {
        FockState s = st;
        s.tau = 0;
        r.add(s, c * rpow(a, -st.tau));
    }
    return r;
}

std::vector<PBWMonomial> spanning_monomials(const RootSystem& rs, const Label& target, std::size_t budget) {
    std::vector<TorBasis> gens;
    for (int l = 1; l <= target.m; ++l) {
        if (target.n >= 1) gens.push_back(TorBasis::c(1, -l));
        for (GSym g = 0; g < rs.dim_g(); ++g) gens.push_back(TorBasis::gten(g, 0, -l));
    }
    for (GSym g = 0; g < rs.dim_g(); ++g)
        if (rs.is_root_sym(g) && !rs.is_positive(rs.weight(g))) gens.push_back(TorBasis::gten(g, 0, 0));
    sort_pbw(gens);
    return enumerate_monomials(rs, gens, target, budget);
}

VElt apply_monomial(const VertexModule& vm, const PBWMonomial& m) {
    VElt v(vacuum(vm.rs()));
    for (auto it = m.rbegin(); it != m.rend(); ++it)
        for (int e = 0; e < it->second; ++e) v = pullback_act(vm, TorElt(it->first), v);
    return v;
}

DimTable rank_spanning(const VertexModule& vm, const WeylConfig& config) {
    if (config.a == 0) throw std::invalid_argument("rank_spanning needs a nonzero specialization point");
    const RootSystem& rs = vm.rs();
    DimTable t{CharSeries{Caps{config.caps.max_m, 0}, {}}, "rank-in-V"};
    for (int m = 0; m <= config.caps.max_m; ++m) {
        for (const auto& lam : weight_ball(rs, config.ball)) {
            Echelon<FockState> ech;
            for (int n = 0; n <= m; ++n) {
                for (const auto& mono : spanning_monomials(rs, Label{lam, m, n}, config.budget)) {
                    VElt v = specialize(apply_monomial(vm, mono), config.a);
                    for (const auto& [st, c] : v)
                        if (st.lat != lam || s_degree(rs, st) != m)
                            throw std::logic_error("spanning monomial left its weight space");
                    ech.insert(v);
                }
            }
            t.dims.add(Label{lam, m, 0}, static_cast<long long>(ech.rank()));
        }
    }
    return t;
}

DimTable formula_dims(const RootSystem& rs, const Caps& caps, bool with_q) {
    Caps c{caps.max_m, with_q ? caps.max_n : 0};
    return DimTable{product_expand(char_L0(rs, c), with_q ? ProductFactor::PQ : ProductFactor::P), "formula"};
}

// ---------------------------------------------------------------------------

PresentedWeyl::PresentedWeyl(const TorLie& alg, int max_n, std::size_t budget, bool drop_f0_squared)
    : alg_(alg), max_n_(max_n), budget_(budget), theta_height_(height(alg.rs().theta())),
      drop_f0_squared_(drop_f0_squared) {}

int PresentedWeyl::classify(const TorBasis& g) const {
    using K = TorBasis::Kind;
    if (!alg_.member(Subalgebra::Plus, g))
        throw std::invalid_argument("not an element of tor^+: " + alg_.format(TorElt(g)));
    if (g.kind == K::G || g.kind == K::C) return alg_.affine_sign(g);
    return 0;
}

bool PresentedWeyl::feasible(const Label& l) const {
    return l.m >= 0 && l.n >= 0 && height(l.weight) <= l.m * theta_height_;
}

std::vector<TorBasis> PresentedWeyl::lowering_ops(const Label& to) const {
    const RootSystem& rs = alg_.rs();
    std::vector<TorBasis> gens;
    for (int k = 0; k <= to.n; ++k) {
        for (int l = 1; l <= to.m; ++l) {
            if (k >= 1) gens.push_back(TorBasis::c(k, -l));
            for (GSym g = 0; g < rs.dim_g(); ++g) gens.push_back(TorBasis::gten(g, k, -l));
        }
        for (GSym g = 0; g < rs.dim_g(); ++g)
            if (rs.is_root_sym(g) && !rs.is_positive(rs.weight(g))) gens.push_back(TorBasis::gten(g, k, 0));
    }
    sort_pbw(gens);
    return gens;
}

std::vector<TorBasis> PresentedWeyl::raising_ops(const Label& from) const {
    const RootSystem& rs = alg_.rs();
    std::vector<TorBasis> ops;
    for (int k = 0; from.n + k <= max_n_; ++k) {
        for (GSym g = 0; g < rs.dim_g(); ++g) {
            bool positive = rs.is_root_sym(g) && rs.is_positive(rs.weight(g));
            if (positive || (rs.is_cartan(g) && k >= 1)) ops.push_back(TorBasis::gten(g, k, 0));
            for (int l = 1; l <= from.m; ++l) ops.push_back(TorBasis::gten(g, k, l));
        }
    }
    return ops;
}

const std::vector<PBWMonomial>& PresentedWeyl::monomials(const Label& l) {
    auto it = mono_cache_.find(l);
    if (it != mono_cache_.end()) return it->second;
    auto mons = feasible(l) ? enumerate_monomials(alg_.rs(), lowering_ops(l), l, budget_) : std::vector<PBWMonomial>{};
    return mono_cache_.emplace(l, std::move(mons)).first->second;
}

MonoVec PresentedWeyl::left_mul_vec(const TorBasis& g, const MonoVec& v) {
    MonoVec r;
    for (const auto& [m, c] : v) r.add(left_mul(g, m), c);
    return r;
}

const MonoVec& PresentedWeyl::left_mul(const TorBasis& g, const PBWMonomial& m) {
    auto key = std::make_pair(g, m);
    auto it = left_cache_.find(key);
    if (it != left_cache_.end()) return it->second;

    MonoVec r;
    if (m.empty() || pbw_less(g, m.front().first)) {
        PBWMonomial p{{g, 1}};
        p.insert(p.end(), m.begin(), m.end());
        r.add(p, 1);
    } else if (g == m.front().first) {
        PBWMonomial p = m;
        ++p.front().second;
        r.add(p, 1);
    } else {
        // g y Z = y (g Z) + [g, y] Z
        const TorBasis y = m.front().first;
        PBWMonomial z = m;
        if (--z.front().second == 0) z.erase(z.begin());
        MonoVec gz = left_mul(g, z);
        r = left_mul_vec(y, gz);
        for (const auto& [b, c] : alg_.bracket(g, y)) {
            if (classify(b) != -1) throw std::logic_error("negative part is not closed under the bracket");
            r.add(left_mul(b, z), c);
        }
    }
    return left_cache_.emplace(key, std::move(r)).first->second;
}

const MonoVec& PresentedWeyl::act(const TorBasis& g, const PBWMonomial& m) {
    auto key = std::make_pair(g, m);
    auto it = act_cache_.find(key);
    if (it != act_cache_.end()) return it->second;

    using K = TorBasis::Kind;
    MonoVec r;
    int cls = classify(g);
    if (cls == -1) {
        r = left_mul(g, m);
    } else if (g.kind == K::Ct) {
        r.add(m, 1);
    } else if (g.kind == K::Dt) {
        r.add(m, -label_of(alg_.rs(), m).m);
    } else if (g.kind == K::C || m.empty()) {
        // Central elements other than c_t, the Cartan part and the positive
        // part all kill v_0 at a = 0.
    } else {
        // g y Z v = y (g Z v) + [g, y] Z v
        const TorBasis y = m.front().first;
        PBWMonomial z = m;
        if (--z.front().second == 0) z.erase(z.begin());
        MonoVec gz = act(g, z);
        r = left_mul_vec(y, gz);
        for (const auto& [b, c] : alg_.bracket(g, y)) r.add(act(b, z), c);
    }
    return act_cache_.emplace(key, std::move(r)).first->second;
}

MonoVec PresentedWeyl::act(const TorElt& x, const MonoVec& v) {
    MonoVec r;
    for (const auto& [b, c] : x)
        for (const auto& [m, d] : v) r.add(act(b, m), c * d);
    return r;
}

void PresentedWeyl::build_closure() {
    if (closure_built_) return;
    closure_built_ = true;
    const RootSystem& rs = alg_.rs();
    using GK = TorLie::GenKind;

    std::deque<std::pair<Label, MonoVec>> queue;
    auto push = [&](const MonoVec& v) {
        if (v.is_zero()) return;
        Label l = label_of(rs, v.begin()->first);
        if (closure_[l].insert(v)) queue.emplace_back(l, v);
    };
    for (int i = 1; i <= rs.rank(); ++i) push(act(alg_.generator(i, 0, GK::F), vacuum()));
    TorElt f0 = alg_.generator(0, 0, GK::F);
    if (!drop_f0_squared_) push(act(f0, act(f0, vacuum())));

    while (!queue.empty()) {
        auto [from, v] = queue.front();
        queue.pop_front();
        for (const auto& g : raising_ops(from)) {
            Label to = from + shift(rs, g);
            if (!feasible(to) || monomials(to).empty()) continue;
            push(act(TorElt(g), v));
        }
    }
}

const Echelon<PBWMonomial>& PresentedWeyl::relations(const Label& l) {
    if (l.n > max_n_)
        throw std::invalid_argument("label " + to_string(l) + " exceeds the s-degree cap " + std::to_string(max_n_));
    auto it = relations_.find(l);
    if (it != relations_.end()) return it->second;
    build_closure();

    Echelon<PBWMonomial> e;
    if (feasible(l) && !monomials(l).empty()) {
        auto c = closure_.find(l);
        if (c != closure_.end())
            for (const auto& row : c->second.rows()) e.insert(row);
        for (const auto& g : lowering_ops(l)) {
            Label from = l - shift(alg_.rs(), g);
            if (!feasible(from) || monomials(from).empty()) continue;
            for (const auto& row : relations(from).rows()) e.insert(left_mul_vec(g, row));
        }
    }
    return relations_.emplace(l, std::move(e)).first->second;
}

std::size_t PresentedWeyl::dim(const Label& l) { return monomials(l).size() - relations(l).rank(); }

DimTable PresentedWeyl::dims(const Caps& caps, int ball) {
    DimTable t{CharSeries{caps, {}}, "presented-quotient"};
    for (int m = 0; m <= caps.max_m; ++m)
        for (int n = 0; n <= caps.max_n; ++n)
            for (const auto& lam : weight_ball(alg_.rs(), ball)) {
                Label l{lam, m, n};
                t.dims.add(l, static_cast<long long>(dim(l)));
            }
    return t;
}

DimTable presented_weyl_dims(const TorLie& alg, const WeylConfig& config) {
    if (config.a != 0) throw std::invalid_argument("the presented module is built at a = 0");
    PresentedWeyl pw(alg, config.caps.max_n, config.budget);
    return pw.dims(config.caps, config.ball);
}

// ---------------------------------------------------------------------------

Report verify_hw_relations(const TorLie& alg, const VertexModule& vm, PresentedWeyl& pw) {
    using GK = TorLie::GenKind;
    const RootSystem& rs = alg.rs();
    Report rep{"highest weight relations", 0, {}};
    const VElt vac(vacuum(rs));
    auto pb = [&](const TorElt& x, const VElt& v) { return pullback_act(vm, x, v); };

    for (int k = -3; k <= 3; ++k) {
        std::string ks = std::to_string(k);
        for (int i = 0; i <= rs.rank(); ++i) {
            std::string is = std::to_string(i);
            rep.expect(pb(alg.generator(i, k, GK::E), vac).is_zero(), "V: e_{" + is + "," + ks + "} v = 0");
            VElt h = pb(alg.generator(i, k, GK::H), vac);
            if (i == 0) {
                FockState s = vacuum(rs);
                s.tau = -k;
                rep.expect(h == VElt(s), "V: h_{0," + ks + "} v = tau^" + std::to_string(-k) + " v");
                rep.expect(specialize(h, 2) == rpow(2, k) * vac, "V_2: h_{0," + ks + "} v = 2^k v");
            } else {
                rep.expect(h.is_zero(), "V: h_{" + is + "," + ks + "} v = 0");
            }
        }
    }
    for (int i = 1; i <= rs.rank(); ++i)
        rep.expect(pb(alg.generator(i, 0, GK::F), vac).is_zero(), "V: f_" + std::to_string(i) + " v = 0");
    TorElt f0 = alg.generator(0, 0, GK::F);
    rep.expect(pb(f0, pb(f0, vac)).is_zero(), "V: f_0^2 v = 0");
    rep.expect(!pb(f0, vac).is_zero(), "V: f_0 v != 0");
    rep.expect(pb(TorElt(TorBasis::ct()), vac) == vac, "V: c_t v = v");
    rep.expect(pb(TorElt(TorBasis::cs()), vac).is_zero(), "V: c_s v = 0");
    rep.expect(pb(TorElt(TorBasis::ds()), vac).is_zero(), "V: d_s v = 0");
    rep.expect(pb(TorElt(TorBasis::dt()), vac).is_zero(), "V: d_t v = 0");

    const MonoVec v0 = pw.vacuum();
    for (int k = 0; k <= 3; ++k) {
        std::string ks = std::to_string(k);
        for (int i = 0; i <= rs.rank(); ++i) {
            std::string is = std::to_string(i);
            rep.expect(pw.act(alg.generator(i, k, GK::E), v0).is_zero(), "W: e_{" + is + "," + ks + "} v_0 = 0");
            MonoVec h = pw.act(alg.generator(i, k, GK::H), v0);
            rep.expect(h == (i == 0 && k == 0 ? v0 : MonoVec()), "W: h_{" + is + "," + ks + "} v_0");
            if (k >= 1) {
                MonoVec f = pw.act(alg.generator(i, k, GK::F), v0);
                Label l = f.is_zero() ? Label{} : label_of(rs, f.begin()->first);
                rep.expect(!f.is_zero() && pw.vanishes(f, l), "W: f_{" + is + "," + ks + "} v_0 = 0");
            }
        }
    }
    rep.expect(pw.act(TorElt(TorBasis::dt()), v0).is_zero(), "W: d_t v_0 = 0");
    rep.expect(pw.act(TorElt(TorBasis::ct()), v0) == v0, "W: c_t v_0 = v_0");
    return rep;
}

Report verify_rewriting(PresentedWeyl& pw, const std::vector<int>& ks, int max_l) {
    const TorLie& alg = pw.alg();
    const RootSystem& rs = alg.rs();
    Report rep{"rewriting identities", 0, {}};
    const MonoVec v0 = pw.vacuum();
    auto on_v0 = [&](const TorElt& x) { return pw.act(x, v0); };

    // (s^k t^{-l} ds) v_0 as a polynomial in c(1,-m) applied to v_0.
    std::map<std::pair<int, int>, MonoVec> poly;
    std::function<MonoVec(int, int)> P = [&](int k, int l) -> MonoVec {
        auto it = poly.find({k, l});
        if (it != poly.end()) return it->second;
        MonoVec r;
        if (k == 0) r = on_v0(form_ds(0, -l));
        else
            for (int m = 1; m <= l - k; ++m) r.add(pw.act(form_ds(0, -m), P(k - 1, l - m)), frac(k, l - m));
        return poly[{k, l}] = r;
    };

    for (int k : ks) {
        for (int l = 1; l <= max_l; ++l) {
            std::string tag = "(k,l)=(" + std::to_string(k) + "," + std::to_string(l) + ")";

            MonoVec lhs = on_v0(alg.gten(rs.e_theta(), k, -l));
            MonoVec rhs;
            for (int m = 1; m <= l - k; ++m)
                rhs += pw.act(TorElt(TorBasis::c(k, -l + m)), on_v0(alg.gten(rs.e_theta(), 0, -m)));
            rep.expect(pw.vanishes(lhs - rhs, Label{rs.theta(), l, k}), "e_theta rewriting " + tag);

            Label cl{rs.zero(), l, k + 1};
            MonoVec dl = on_v0(form_ds(k, -l));
            MonoVec dr;
            for (int m = 1; m <= l - k; ++m) dr += pw.act(TorElt(TorBasis::c(k, -l + m)), on_v0(form_ds(0, -m)));
            rep.expect(pw.vanishes(dl - dr, cl), "ds rewriting " + tag);

            MonoVec p = P(k, l);
            bool degree_one = true;
            for (const auto& [mono, c] : p)
                for (const auto& [b, e] : mono) degree_one = degree_one && b.kind == TorBasis::Kind::C && b.k == 1;
            rep.expect(degree_one && pw.vanishes(dl - p, cl), "c(k+1,-l) through c(1,-m) " + tag);
        }
    }
    return rep;
}

Report verify_spanning(PresentedWeyl& pw, int max_m, int ball) {
    const TorLie& alg = pw.alg();
    const RootSystem& rs = alg.rs();
    Report rep{"spanning set", 0, {}};
    auto with_spanning = [&](const Label& l) {
        Echelon<PBWMonomial> e = pw.relations(l);
        for (const auto& mono : spanning_monomials(rs, l)) e.insert(MonoVec(mono));
        return e;
    };
    for (int m = 0; m <= max_m; ++m)
        for (int n = 0; n <= 1; ++n)
            for (const auto& lam : weight_ball(rs, ball)) {
                Label l{lam, m, n};
                rep.expect(with_spanning(l).rank() == pw.monomials(l).size(), "spanning set spans " + to_string(l));
            }
    for (int l = 0; l <= max_m; ++l)
        for (GSym g = 0; g < rs.dim_g(); ++g) {
            if (l == 0 && !(rs.is_root_sym(g) && !rs.is_positive(rs.weight(g)))) continue;
            TorBasis x = TorBasis::gten(g, 1, -l);
            Label lab = shift(rs, x);
            rep.expect(with_spanning(lab).contains(pw.act(TorElt(x), pw.vacuum())),
                       "(x s t^-l) v_0 in span: " + alg.format(TorElt(x)));
        }
    return rep;
}

Report verify_induction_transport(const TorLie& alg, const VertexModule& vm, const std::vector<FockState>& states) {
    const RootSystem& rs = alg.rs();
    Report rep{"induction transport", 0, {}};
    for (int k = -2; k <= 2; ++k)
        for (int l = -4; l <= 2; ++l) {
            TorElt x = alg.gten(rs.e_theta(), k, l);
            TorElt y = apply_T0(alg, apply_Ttheta(alg, alg.gten(rs.e_theta(), k, l + 2)));
            for (const auto& st : states)
                rep.expect(pullback_act(vm, x, VElt(st)) == pullback_act(vm, y, VElt(st)),
                           "T_0 T_theta transport at (k,l)=(" + std::to_string(k) + "," + std::to_string(l) +
                               ") on " + vm.format(st));
        }
    return rep;
}

} // namespace toroidal
