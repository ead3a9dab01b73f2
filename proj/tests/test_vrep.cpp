#include <doctest.h>

#include "toroidal/autos.hpp"
#include "toroidal/vrep.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace toroidal;

namespace {

// Coefficients of prod_{n>0} (1 - x^n)^{-r} up to x^d, by repeated
// multiplication with geometric series.
std::vector<std::size_t> colored_partitions(int r, int d) {
    std::vector<std::size_t> c(d + 1, 0);
    c[0] = 1;
    for (int color = 0; color < r; ++color)
        for (int n = 1; n <= d; ++n)
            for (int e = n; e <= d; ++e) c[e] += c[e - n];
    return c;
}

// Lattice points by (b,b)/2 from a coordinate box.
std::vector<std::size_t> lattice_counts(const RootSystem& rs, int d) {
    std::vector<std::size_t> out(d + 1, 0);
    const int r = rs.rank();
    const int box = 2 * d + 1;
    LatticeVec b(r, -box);
    while (true) {
        int half = rs.norm(b) / 2;
        if (half <= d) ++out[half];
        int i = 0;
        while (i < r && b[i] == box) b[i++] = -box;
        if (i == r) break;
        ++b[i];
    }
    return out;
}

using Mono = std::map<int, int>; // part -> multiplicity
using Poly = std::map<Mono, Rational>;

// exp(sum_k l x_k/k u^k) by the recurrence j F_j = sum_k l x_k F_{j-k}.
std::vector<Poly> exp_series(int l, int jmax) {
    std::vector<Poly> f(jmax + 1);
    f[0][Mono{}] = 1;
    for (int j = 1; j <= jmax; ++j) {
        for (int k = 1; k <= j; ++k)
            for (const auto& [m, c] : f[j - k]) {
                Mono n = m;
                ++n[k];
                f[j][n] += c * l / j;
            }
        std::erase_if(f[j], [](const auto& kv) { return kv.second == 0; });
    }
    return f;
}

Poly to_poly(const DPoly& d) {
    Poly p;
    for (const auto& [parts, c] : d) {
        Mono m;
        for (int x : parts) ++m[x];
        p[m] = c;
    }
    return p;
}

// Vertex operator oracle for rank-one Fock space: states are (multiset of
// modes, lattice coefficient n) with e^{n alpha}. Exponentials are built from
// their differential recurrences instead of partition sums.
struct A1Oracle {
    using State = std::pair<Mono, int>;
    using Vec = std::map<State, Rational>;

    static void add(Vec& v, const State& s, const Rational& c) {
        if (c == 0) return;
        v[s] += c;
        if (v[s] == 0) v.erase(s);
    }

    // h(k) for k > 0 on a monomial: [h(k), h(-k)] = 2k.
    static Vec lower(const Vec& v, int k) {
        Vec out;
        for (const auto& [s, c] : v) {
            auto it = s.first.find(k);
            if (it == s.first.end()) continue;
            Mono m = s.first;
            int mult = m[k]--;
            if (m[k] == 0) m.erase(k);
            add(out, {m, s.second}, c * 2 * k * mult);
        }
        return out;
    }
    static Vec raise(const Vec& v, int k) {
        Vec out;
        for (const auto& [s, c] : v) {
            Mono m = s.first;
            ++m[k];
            add(out, {m, s.second}, c);
        }
        return out;
    }

    // Coefficient of u^{-mode} in X(sign*alpha, u) applied to a state.
    static Vec X(int sign, int mode, const State& st, int maxdeg) {
        // Annihilation part: A_j with j A_j = -sum_k sign h(k) A_{j-k}.
        std::vector<Vec> ann(maxdeg + 1);
        ann[0][st] = 1;
        for (int j = 1; j <= maxdeg; ++j)
            for (int k = 1; k <= j; ++k)
                for (const auto& [s, c] : lower(ann[j - k], k)) add(ann[j], s, -c * sign / j);
        Vec out;
        const int n = st.second;
        const int pow0 = 1 + 2 * sign * n; // u^{(a,a)/2} u^{(a, n a)}
        // eps(sign a, n a) = eps(a, a)^{sign n} with eps(a, a) = -1
        const Rational eps = n % 2 == 0 ? 1 : -1;
        for (int a = 0; a <= maxdeg; ++a) {
            int b = -mode - pow0 + a;
            if (b < 0 || ann[a].empty()) continue;
            // Creation part applied on top: C_j with j C_j = sum_k sign h(-k) C_{j-k}.
            std::vector<Vec> cre(b + 1);
            cre[0] = ann[a];
            for (int j = 1; j <= b; ++j)
                for (int k = 1; k <= j; ++k)
                    for (const auto& [s, c] : raise(cre[j - k], k)) add(cre[j], s, c * sign / j);
            for (const auto& [s, c] : cre[b]) add(out, {s.first, n + sign}, eps * c);
        }
        return out;
    }
};

VElt from_oracle(const A1Oracle::Vec& v) {
    VElt out;
    for (const auto& [s, c] : v) {
        FockState st;
        for (const auto& [k, m] : s.first)
            for (int i = 0; i < m; ++i) st.heis.emplace_back(0, k);
        st.lat = {s.second};
        out.add(st, c);
    }
    return out;
}

} // namespace

TEST_CASE("basis enumeration") {
    auto a1 = RootSystem::build('A', 1);
    CHECK(enumerate_basis(*a1, {0, 0, 0}).size() == 1);
    CHECK(enumerate_basis(*a1, {0, 0, 0})[0] == vacuum(*a1));
    CHECK(enumerate_basis(*a1, {1, 0, 0}).size() == 5);
    auto b2 = enumerate_basis(*a1, {2, 0, 0});
    auto exact2 = std::count_if(b2.begin(), b2.end(), [&](const FockState& s) {
        return s_degree(*a1, s) == 2 && s.lat == LatticeVec{0};
    });
    CHECK(exact2 == 5);
    auto b = enumerate_basis(*a1, {3, -1, 1});
    CHECK(std::set<FockState>(b.begin(), b.end()).size() == b.size());
    for (const auto& s : b) CHECK(in_window(*a1, s, {3, -1, 1}));

    for (const char* name : {"A1", "A2", "A3"}) {
        auto rs = RootSystem::build(name);
        for (int d = 0; d <= (rs->rank() == 1 ? 6 : 4); ++d) {
            Window w{d, -1, 1};
            FactorCounts fc = factor_counts(*rs, w);
            auto parts = colored_partitions(rs->rank(), d);
            auto dparts = colored_partitions(1, d);
            auto lat = lattice_counts(*rs, d);
            for (int e = 0; e <= d; ++e) {
                CHECK(fc.fock[e] == parts[e]);
                CHECK(fc.dpart[e] == dparts[e]);
                CHECK(fc.lattice[e] == lat[e]);
            }
            CHECK(fc.tau == 3);
            CHECK(enumerate_basis(*rs, w).size() == fc.product());
        }
    }
}

TEST_CASE("Delta series") {
    CHECK(delta_coeff(1, 1) == DPoly(std::vector<int>{1}));
    DPoly d22(std::vector<int>{2});
    d22.add(std::vector<int>{1, 1}, 2);
    CHECK(delta_coeff(2, 2) == d22);
    for (int l = -3; l <= 3; ++l) {
        CHECK(delta_coeff(l, 0) == DPoly(std::vector<int>{}));
        auto series = delta_coeffs(l, 6);
        auto oracle = exp_series(l, 6);
        for (int j = 0; j <= 6; ++j) {
            CHECK(to_poly(series[j]) == oracle[j]);
            for (const auto& [parts, c] : series[j]) {
                int deg = 0;
                for (int x : parts) deg += x;
                CHECK(deg == j);
            }
        }
    }
}

TEST_CASE("vertex operators on the vacuum") {
    VertexModule vm(RootSystem::build('A', 1));
    const FockState vac = vacuum(vm.rs());
    FockState ea = vac;
    ea.lat = {1};
    CHECK(vm.vertex_X({1}, 0, -1, VElt(vac)) == VElt(ea));
    for (int k = 0; k <= 4; ++k) CHECK(vm.vertex_X({1}, 0, k, VElt(vac)).is_zero());
    FockState t = vac;
    t.tau = 1;
    CHECK(vm.vertex_X({0}, 1, 0, VElt(vac)) == VElt(t));
    CHECK_THROWS_AS(vm.vertex_X({2}, 0, 0, VElt(vac)), std::invalid_argument);
}

TEST_CASE("vertex operators agree with a series oracle") {
    VertexModule vm(RootSystem::build('A', 1));
    auto states = enumerate_basis(vm.rs(), {4, 0, 0});
    for (const auto& st : states) {
        if (!st.dmon.empty()) continue;
        Mono m;
        for (const auto& [i, n] : st.heis) ++m[n];
        A1Oracle::State os{m, st.lat[0]};
        for (int sign : {1, -1})
            for (int mode = -4; mode <= 4; ++mode) {
                CAPTURE(vm.format(st));
                CAPTURE(sign);
                CAPTURE(mode);
                VElt got = vm.vertex_X({sign}, 0, mode, VElt(st));
                CHECK(got == from_oracle(A1Oracle::X(sign, mode, os, 8)));
            }
    }
}

TEST_CASE("toroidal action: examples and relations on the vacuum") {
    auto rs = RootSystem::build('A', 1);
    TorLie alg(rs);
    VertexModule vm(rs);
    const FockState vac = vacuum(*rs);
    CHECK(vm.act(alg.generator(0, 0, TorLie::GenKind::E), vac).is_zero());
    CHECK(vm.act(TorElt(TorBasis::cs()), vac) == VElt(vac));
    FockState d2 = vac;
    d2.dmon = {2};
    CHECK(vm.act(TorElt(TorBasis::c(-2, 0)), vac) == VElt(d2));
    CHECK(vm.act(TorElt(TorBasis::c(2, 0)), vac).is_zero());
    CHECK(vm.act(TorElt(TorBasis::ct()), vac).is_zero());
    for (int k = -3; k <= 3; ++k) {
        if (k == 0) continue;
        FockState t = vac;
        t.tau = k;
        CHECK(vm.act(TorElt(TorBasis::c(0, k)), vac) == VElt(t));
    }
    // c(0,k) c(0,l) = c(0,k+l) on every state of a small window.
    for (const auto& st : enumerate_basis(*rs, {2, -1, 1})) {
        VElt two = vm.act(TorElt(TorBasis::c(0, 2)), vm.act(TorElt(TorBasis::c(0, -1)), st));
        CHECK(two == vm.act(TorElt(TorBasis::c(0, 1)), st));
    }

    for (const char* name : {"A1", "A2", "A3", "D4"}) {
        auto r = RootSystem::build(name);
        TorLie a(r);
        VertexModule v(r);
        Report rep = check_vacuum_relations(a, v, 3);
        CAPTURE(name);
        CHECK(rep.passed());
        if (!rep.passed()) MESSAGE(rep.failures.front());
    }
}

TEST_CASE("toroidal action: weight bookkeeping") {
    auto rs = RootSystem::build('A', 2);
    TorLie alg(rs);
    VertexModule vm(rs);
    auto states = enumerate_basis(*rs, {2, 0, 0});
    for (const auto& b : basis_box(*rs, 1)) {
        for (const auto& st : states) {
            VElt out = vm.act(TorElt(b), st);
            auto [root, tdeg] = alg.affine_root(b);
            for (const auto& [s, c] : out) {
                CHECK(s.lat == st.lat + root);
                CHECK(s_degree(*rs, s) == s_degree(*rs, st) - b.s_degree());
                CHECK(s.tau == st.tau + b.t_degree());
            }
        }
    }
}

TEST_CASE("toroidal action is a module") {
    {
        auto rs = RootSystem::build('A', 1);
        TorLie alg(rs);
        VertexModule vm(rs);
        Report rep = check_module_axiom(alg, vm, basis_box(*rs, 1), Window{4, 0, 0});
        CHECK(rep.passed());
        if (!rep.passed()) MESSAGE(rep.failures.front());
        CHECK(rep.checked > 10000);
    }
    {
        auto rs = RootSystem::build('A', 2);
        TorLie alg(rs);
        VertexModule vm(rs);
        std::mt19937 rng(5);
        auto box = basis_box(*rs, 1);
        std::shuffle(box.begin(), box.end(), rng);
        box.resize(30);
        Report rep = check_module_axiom(alg, vm, box, Window{3, 0, 0});
        CHECK(rep.passed());
        if (!rep.passed()) MESSAGE(rep.failures.front());
    }
}
