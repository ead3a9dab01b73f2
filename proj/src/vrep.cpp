#include "toroidal/vrep.hpp"

#include "toroidal/partitions.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace toroidal {

namespace {

template <typename T>
std::vector<T> merged(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> r;
    r.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

bool is_zero_vec(const LatticeVec& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

// Multisets of (i, n) with sum n = d, entries sorted.
void heis_monomials(int rank, int d, std::vector<std::pair<int, int>>& cur, std::vector<std::vector<std::pair<int, int>>>& out) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    // Next entry must be >= the last one in (i, n) order.
    std::pair<int, int> last = cur.empty() ? std::pair{0, 1} : cur.back();
    for (int i = last.first; i < rank; ++i) {
        for (int n = (i == last.first ? last.second : 1); n <= d; ++n) {
            cur.emplace_back(i, n);
            heis_monomials(rank, d - n, cur, out);
            cur.pop_back();
        }
    }
}

std::vector<std::vector<std::pair<int, int>>> heis_of_degree(int rank, int d) {
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> cur;
    heis_monomials(rank, d, cur, out);
    return out;
}

std::vector<std::vector<int>> dmon_of_degree(int d) {
    std::vector<std::vector<int>> out;
    for_each_partition(d, [&](const std::vector<int>& mult) {
        std::vector<int> parts;
        for (std::size_t k = 1; k < mult.size(); ++k) parts.insert(parts.end(), mult[k], static_cast<int>(k));
        out.push_back(parts);
    });
    return out;
}

// Lattice points with (b,b)/2 <= dmax, grouped by (b,b)/2. Every nonzero b
// pairs positively with some root a, and b - a is no longer than b, so a
// search through root steps inside the norm ball reaches all of them.
std::vector<std::vector<LatticeVec>> lattice_by_degree(const RootSystem& rs, int dmax) {
    std::set<LatticeVec> seen{rs.zero()};
    std::vector<LatticeVec> todo{rs.zero()};
    while (!todo.empty()) {
        LatticeVec b = todo.back();
        todo.pop_back();
        for (const auto& a : rs.roots()) {
            LatticeVec c = b + a;
            if (rs.norm(c) <= 2 * dmax && seen.insert(c).second) todo.push_back(c);
        }
    }
    std::vector<std::vector<LatticeVec>> out(dmax + 1);
    for (const auto& b : seen) out[rs.norm(b) / 2].push_back(b);
    return out;
}

} // namespace

int m_degree(const RootSystem& rs, const FockState& st) {
    int d = rs.norm(st.lat) / 2;
    for (const auto& [i, n] : st.heis) d += n;
    return d;
}

int s_degree(const RootSystem& rs, const FockState& st) {
    int d = m_degree(rs, st);
    for (int n : st.dmon) d += n;
    return d;
}

bool in_window(const RootSystem& rs, const FockState& st, const Window& w) {
    return s_degree(rs, st) <= w.dmax && st.tau >= w.tau_min && st.tau <= w.tau_max;
}

FockState vacuum(const RootSystem& rs) {
    FockState st;
    st.lat = rs.zero();
    return st;
}

DPoly delta_coeff(int l, int j) {
    DPoly r;
    if (j < 0) return r;
    if (j == 0) return DPoly(std::vector<int>{});
    if (l == 0) return r;
    for_each_partition(j, [&](const std::vector<int>& mult) {
        std::vector<int> parts;
        for (std::size_t k = 1; k < mult.size(); ++k) parts.insert(parts.end(), mult[k], static_cast<int>(k));
        r.add(parts, exp_weight(mult, [l](int k) { return frac(l, k); }));
    });
    return r;
}

std::vector<DPoly> delta_coeffs(int l, int jmax) {
    std::vector<DPoly> out;
    for (int j = 0; j <= jmax; ++j) out.push_back(delta_coeff(l, j));
    return out;
}

std::size_t FactorCounts::product() const {
    std::size_t total = 0;
    const int d = static_cast<int>(fock.size()) - 1;
    for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b)
            for (int c = 0; a + b + c <= d; ++c) total += fock[a] * lattice[b] * dpart[c];
    return total * tau;
}

FactorCounts factor_counts(const RootSystem& rs, const Window& w) {
    FactorCounts fc;
    auto lat = lattice_by_degree(rs, w.dmax);
    for (int d = 0; d <= w.dmax; ++d) {
        fc.fock.push_back(heis_of_degree(rs.rank(), d).size());
        fc.lattice.push_back(lat[d].size());
        fc.dpart.push_back(dmon_of_degree(d).size());
    }
    fc.tau = w.tau_max >= w.tau_min ? static_cast<std::size_t>(w.tau_max - w.tau_min + 1) : 0;
    return fc;
}

std::vector<FockState> enumerate_basis(const RootSystem& rs, const Window& w) {
    auto lat = lattice_by_degree(rs, w.dmax);
    std::vector<std::vector<std::vector<std::pair<int, int>>>> heis;
    std::vector<std::vector<std::vector<int>>> dm;
    for (int d = 0; d <= w.dmax; ++d) {
        heis.push_back(heis_of_degree(rs.rank(), d));
        dm.push_back(dmon_of_degree(d));
    }
    std::vector<FockState> out;
    for (int a = 0; a <= w.dmax; ++a)
        for (int b = 0; a + b <= w.dmax; ++b)
            for (int c = 0; a + b + c <= w.dmax; ++c)
                for (const auto& h : heis[a])
                    for (const auto& l : lat[b])
                        for (const auto& d : dm[c])
                            for (int t = w.tau_min; t <= w.tau_max; ++t) out.push_back(FockState{h, l, d, t});
    std::sort(out.begin(), out.end());
    return out;
}

VertexModule::VertexModule(RootSystemPtr rs) : rs_(std::move(rs)) {
    if (!rs_) throw std::invalid_argument("null root system");
}

// h_w(k), k > 0, as a derivation: it removes one factor h_i(-k) with
// weight k (w, a_i).
VertexModule::HeisPoly VertexModule::annihilate(const std::vector<Rational>& w, int k, const HeisPoly& p) const {
    const int r = rs_->rank();
    std::vector<Rational> wpair(r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) wpair[i] += w[j] * rs_->cartan()[j][i];
    HeisPoly out;
    for (const auto& [mono, c] : p) {
        for (std::size_t pos = 0; pos < mono.size();) {
            std::size_t end = pos;
            while (end < mono.size() && mono[end] == mono[pos]) ++end;
            if (mono[pos].second == k && wpair[mono[pos].first] != 0) {
                HeisMono rest = mono;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
                out.add(rest, c * wpair[mono[pos].first] * k * static_cast<int>(end - pos));
            }
            pos = end;
        }
    }
    return out;
}

// Degree-b part of exp(sum_{k>0} h_a(-k)/k u^k) acting on the vacuum.
const VertexModule::HeisPoly& VertexModule::creation(const LatticeVec& alpha, int b) const {
    auto key = std::make_pair(alpha, b);
    auto it = creation_cache_.find(key);
    if (it != creation_cache_.end()) return it->second;
    HeisPoly total;
    for_each_partition(b, [&](const std::vector<int>& mult) {
        HeisPoly p(HeisMono{}, exp_weight(mult, [](int k) { return frac(1, k); }));
        for (std::size_t k = 1; k < mult.size(); ++k) {
            for (int rep = 0; rep < mult[k]; ++rep) {
                HeisPoly next;
                for (const auto& [mono, c] : p)
                    for (int i = 0; i < rs_->rank(); ++i) {
                        if (alpha[i] == 0) continue;
                        next.add(merged(mono, HeisMono{{i, static_cast<int>(k)}}), c * alpha[i]);
                    }
                p = std::move(next);
            }
        }
        total += p;
    });
    return creation_cache_.emplace(key, std::move(total)).first->second;
}

VertexModule::MPoly VertexModule::x_mode(const LatticeVec& alpha, int m, const HeisMono& h, const LatticeVec& beta) const {
    MPoly out;
    int dh = 0;
    for (const auto& [i, n] : h) dh += n;
    const int ab = rs_->form(alpha, beta);
    const int sign = rs_->eps(alpha, beta);
    const LatticeVec target = alpha + beta;
    std::vector<Rational> w(alpha.begin(), alpha.end());
    for (int a = 0; a <= dh; ++a) {
        const int b = -m - 1 - ab + a;
        if (b < 0) continue;
        // Degree-a part of exp(-sum_{k>0} h_a(k)/k u^{-k}) on h.
        HeisPoly ann;
        for_each_partition(a, [&](const std::vector<int>& mult) {
            HeisPoly p(h, exp_weight(mult, [](int k) { return frac(-1, k); }));
            for (std::size_t k = 1; k < mult.size() && !p.is_zero(); ++k)
                for (int rep = 0; rep < mult[k] && !p.is_zero(); ++rep) p = annihilate(w, static_cast<int>(k), p);
            ann += p;
        });
        if (ann.is_zero()) continue;
        const HeisPoly& cre = creation(alpha, b);
        for (const auto& [m1, c1] : ann)
            for (const auto& [m2, c2] : cre) out.add(MState{merged(m1, m2), target}, c1 * c2 * sign);
    }
    return out;
}

VertexModule::MPoly VertexModule::cartan_mode(const std::vector<Rational>& w, int m, const HeisMono& h, const LatticeVec& beta) const {
    MPoly out;
    if (m > 0) {
        for (const auto& [mono, c] : annihilate(w, m, HeisPoly(h))) out.add(MState{mono, beta}, c);
    } else if (m == 0) {
        Rational c = 0;
        for (int i = 0; i < rs_->rank(); ++i) {
            if (w[i] == 0) continue;
            LatticeVec ai = rs_->zero();
            ai[i] = 1;
            c += w[i] * rs_->form(ai, beta);
        }
        out.add(MState{h, beta}, c);
    } else {
        for (int i = 0; i < rs_->rank(); ++i)
            if (w[i] != 0) out.add(MState{merged(h, HeisMono{{i, -m}}), beta}, w[i]);
    }
    return out;
}

VElt VertexModule::tensor(const MPoly& m, const DPoly& d, const FockState& st, int dtau, const Rational& c) {
    VElt out;
    for (const auto& [ms, c1] : m)
        for (const auto& [dm, c2] : d) out.add(FockState{ms.first, ms.second, merged(st.dmon, dm), st.tau + dtau}, c * c1 * c2);
    return out;
}

VElt VertexModule::act_uncached(const TorBasis& b, const FockState& st) const {
    using K = TorBasis::Kind;
    VElt out;
    if (b.kind == K::C) {
        if (b.l == 0) {
            if (b.k < 0) out.add(FockState{st.heis, st.lat, merged(st.dmon, std::vector<int>{-b.k}), st.tau}, 1);
        } else if (b.k == 0) {
            out.add(FockState{st.heis, st.lat, st.dmon, st.tau + b.l}, 1);
        } else if (b.k < 0) {
            // c(k,l) = (-k/l) s^{k-1} t^l ds
            out = tensor(MPoly(MState{st.heis, st.lat}), delta_coeff(b.l, -b.k), st, b.l, frac(-b.k, b.l));
        }
        return out;
    }
    // g-tensor: sum_j (x (x) s^{k+j}) Delta_l^{(-j)} tau^l
    const int jmax = m_degree(*rs_, st) - b.k;
    const bool cartan = rs_->is_cartan(b.g);
    std::vector<Rational> w(rs_->rank(), 0);
    if (cartan) w[b.g] = 1;
    const LatticeVec alpha = cartan ? rs_->zero() : rs_->weight(b.g);
    for (int j = 0; j <= std::max(jmax, 0); ++j) {
        DPoly d = delta_coeff(b.l, j);
        if (d.is_zero()) continue;
        MPoly m = cartan ? cartan_mode(w, b.k + j, st.heis, st.lat) : x_mode(alpha, b.k + j, st.heis, st.lat);
        out += tensor(m, d, st, b.l, 1);
    }
    return out;
}

VElt VertexModule::act(const TorBasis& b, const FockState& st) const {
    using K = TorBasis::Kind;
    switch (b.kind) {
    case K::Cs: return VElt(st);
    case K::Ct: return VElt();
    case K::Ds: return VElt(st, -s_degree(*rs_, st));
    case K::Dt: return VElt(st, st.tau);
    default: break;
    }
    // The action commutes with tau, so it is computed and cached at tau = 0.
    FockState base = st;
    base.tau = 0;
    auto key = std::make_pair(b, base);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, act_uncached(b, base)).first;
    if (st.tau == 0) return it->second;
    VElt out;
    for (const auto& [s, c] : it->second) {
        FockState t = s;
        t.tau += st.tau;
        out.add(t, c);
    }
    return out;
}

VElt VertexModule::act(const TorElt& x, const VElt& v) const {
    VElt out;
    for (const auto& [b, cb] : x)
        for (const auto& [s, cs] : v) out.add(act(b, s), cb * cs);
    return out;
}

VElt VertexModule::vertex_X(const LatticeVec& beta, int l, int k, const VElt& v) const {
    if (static_cast<int>(beta.size()) != rs_->rank()) throw std::invalid_argument("lattice vector has wrong rank");
    if (is_zero_vec(beta)) {
        // X(l delta, u) = Delta_l(u) tau^l
        VElt out;
        DPoly d = delta_coeff(l, -k);
        for (const auto& [s, c] : v) out += tensor(MPoly(MState{s.heis, s.lat}), d, s, l, c);
        return out;
    }
    if (!rs_->is_root(beta)) throw std::invalid_argument("vertex operator needs a root or zero");
    return act(TorElt(TorBasis::gten(rs_->root_sym(beta), k, l)), v);
}

std::string VertexModule::format(const FockState& st) const {
    std::vector<std::string> parts;
    for (const auto& [i, n] : st.heis) parts.push_back("h" + std::to_string(i + 1) + "(" + std::to_string(-n) + ")");
    if (!is_zero_vec(st.lat)) {
        std::string e = "e^(";
        for (std::size_t i = 0; i < st.lat.size(); ++i) e += (i ? "," : "") + std::to_string(st.lat[i]);
        parts.push_back(e + ")");
    }
    for (int n : st.dmon) parts.push_back("d(" + std::to_string(-n) + ")");
    if (st.tau != 0) parts.push_back("tau^" + std::to_string(st.tau));
    if (parts.empty()) return "vac";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
    return out;
}

std::string VertexModule::format(const VElt& v) const {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : v) {
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational mag = abs(c);
        if (mag != 1) os << mag.get_str() << "*";
        os << format(s);
        first = false;
    }
    return os.str();
}

Report check_module_axiom(const TorLie& alg, const VertexModule& vm, const std::vector<TorBasis>& ops,
                          const Window& window) {
    Report rep;
    rep.name = "module axiom " + vm.rs().name();
    const auto states = enumerate_basis(vm.rs(), window);
    std::vector<int> degree;
    for (const auto& st : states) degree.push_back(s_degree(vm.rs(), st));
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const TorElt x(ops[i]);
        for (std::size_t j = i; j < ops.size(); ++j) {
            const TorElt y(ops[j]);
            const TorElt xy = alg.bracket(ops[i], ops[j]);
            const int limit = window.dmax - std::abs(ops[i].s_degree()) - std::abs(ops[j].s_degree());
            for (std::size_t n = 0; n < states.size(); ++n) {
                if (degree[n] > limit) continue;
                const FockState& st = states[n];
                VElt lhs = vm.act(xy, st);
                VElt rhs = vm.act(x, vm.act(y, st));
                rhs -= vm.act(y, vm.act(x, st));
                if (lhs == rhs) {
                    ++rep.checked;
                } else {
                    rep.expect(false, "[" + alg.format(x) + ", " + alg.format(y) + "] on " + vm.format(st) +
                                          ": difference " + vm.format(lhs - rhs));
                }
            }
        }
    }
    return rep;
}

Report check_vacuum_relations(const TorLie& alg, const VertexModule& vm, int range) {
    const RootSystem& rs = vm.rs();
    Report rep;
    rep.name = "vacuum relations " + rs.name();
    const FockState vac = vacuum(rs);
    const VElt v(vac);
    auto expect = [&](const TorElt& x, const VElt& want, const std::string& what) {
        VElt got = vm.act(x, v);
        rep.expect(got == want, what + ": got " + vm.format(got) + ", expected " + vm.format(want));
    };
    expect(alg.gten(rs.f_theta(), 1, 0), VElt(), "(f_theta s) vac = 0");
    expect(TorElt(TorBasis::cs()), v, "c_s vac = vac");
    expect(TorElt(TorBasis::ds()), VElt(), "d_s vac = 0");
    for (int i = 0; i < rs.rank(); ++i) {
        const std::string n = std::to_string(i + 1);
        expect(alg.gten(rs.e(i), 0, 0), VElt(), "e_" + n + " vac = 0");
        expect(alg.gten(rs.f(i), 0, 0), VElt(), "f_" + n + " vac = 0");
        expect(alg.gten(rs.h(i), 0, 0), VElt(), "h_" + n + " vac = 0");
    }
    const TorElt em = alg.gten(rs.e_theta(), -1, 0);
    VElt twice = vm.act(em, vm.act(em, v));
    rep.expect(twice.is_zero(), "(e_theta s^-1)^2 vac = 0: got " + vm.format(twice));

    // aff^(t) kills the vacuum.
    for (int l = -range; l <= range; ++l)
        for (GSym g = 0; g < rs.dim_g(); ++g) {
            TorElt x(TorBasis::gten(g, 0, l));
            expect(x, VElt(), alg.format(x) + " vac = 0");
        }
    expect(TorElt(TorBasis::ct()), VElt(), "c_t vac = 0");
    expect(TorElt(TorBasis::dt()), VElt(), "d_t vac = 0");
    expect(alg.generator(0, 0, TorLie::GenKind::E), VElt(), "e_0 vac = 0");
    expect(alg.generator(0, 0, TorLie::GenKind::F), VElt(), "f_0 vac = 0");
    // The remaining central elements: c(0,l) = tau^l, c(k,0) = delta(k) for k < 0.
    for (int l = -range; l <= range; ++l) {
        if (l == 0) continue;
        FockState t = vac;
        t.tau = l;
        expect(TorElt(TorBasis::c(0, l)), VElt(t), "c(0," + std::to_string(l) + ") vac = tau^l vac");
    }
    return rep;
}

} // namespace toroidal
