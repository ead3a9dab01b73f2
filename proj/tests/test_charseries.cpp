#include <doctest.h>

#include "toroidal/charseries.hpp"
#include "toroidal/vrep.hpp"

#include <functional>

using namespace toroidal;

namespace {

// Number of partitions of m, by brute-force recursion over the largest part.
long long count_partitions(int m, int largest) {
    if (m == 0) return 1;
    long long c = 0;
    for (int k = 1; k <= std::min(m, largest); ++k) c += count_partitions(m - k, k);
    return c;
}

// Partitions of m into exactly n parts, by listing them.
long long count_partitions_n(int m, int n) {
    long long c = 0;
    std::function<void(int, int, int)> rec = [&](int rest, int largest, int parts) {
        if (rest == 0) {
            c += parts == n;
            return;
        }
        for (int k = 1; k <= std::min(rest, largest); ++k) rec(rest - k, k, parts + 1);
    };
    rec(m, m, 0);
    return c;
}

CharSeries unit(const RootSystem& rs, const Caps& caps) {
    CharSeries one{caps, {}};
    one.add(Label{rs.zero(), 0, 0}, 1);
    return one;
}

} // namespace

TEST_CASE("level-one character") {
    auto rs = RootSystem::build("A1");
    Caps caps{4, 0};
    auto ch = char_L0(*rs, caps);
    LatticeVec a{1}, z{0};
    CHECK(ch.at(Label{z, 0, 0}) == 1);
    CHECK(ch.at(Label{a, 1, 0}) == 1);
    CHECK(ch.at(Label{z, 2, 0}) == 2);
    CHECK(ch.at(Label{z, 1, 0}) == 1);
    CHECK(ch.at(Label{LatticeVec{2}, 4, 0}) == 1);
    CHECK(ch.at(Label{LatticeVec{2}, 3, 0}) == 0);

    // Every weight space is one Heisenberg Fock space shifted by (b,b)/2.
    for (const auto& [lab, c] : ch.coeffs) {
        int shift = rs->norm(lab.weight) / 2;
        CHECK(c == count_partitions(lab.m - shift, lab.m - shift));
    }

    for (const char* name : {"A2", "D4"}) {
        auto r = RootSystem::build(name);
        auto chr = char_L0(*r, Caps{3, 0});
        std::map<Label, long long> direct;
        for (const auto& st : enumerate_basis(*r, Window{3, 0, 0}))
            if (st.dmon.empty()) ++direct[Label{st.lat, m_degree(*r, st), 0}];
        CHECK(chr.coeffs == direct);
    }
}

TEST_CASE("product expansion") {
    auto rs = RootSystem::build("A1");
    LatticeVec a{1}, z{0};
    Caps caps{6, 6};
    auto one = unit(*rs, caps);
    auto p = product_expand(one, ProductFactor::P);
    CHECK(p.at(Label{z, 4, 0}) == 5);
    for (int m = 0; m <= 6; ++m) CHECK(p.at(Label{z, m, 0}) == count_partitions(m, m));
    auto pq = product_expand(one, ProductFactor::PQ);
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) CHECK(pq.at(Label{z, m, n}) == count_partitions_n(m, n));

    auto ch = char_L0(*rs, caps);
    auto chp = product_expand(ch, ProductFactor::P);
    CHECK(chp.at(Label{z, 1, 0}) == 2);
    auto chpq = product_expand(ch, ProductFactor::PQ);
    CHECK(chpq.at(Label{z, 1, 1}) == 1);
    CHECK(chpq.at(Label{z, 1, 0}) == 1);
    CHECK(chpq.at(Label{a, 1, 0}) == 1);
    CHECK(chpq.at(Label{z, 2, 1}) == 2);

    // Convolution oracle at every label.
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n)
            for (int w = -2; w <= 2; ++w) {
                LatticeVec lam{w};
                long long expect = 0;
                for (int m1 = 0; m1 <= m; ++m1) expect += ch.at(Label{lam, m1, 0}) * count_partitions_n(m - m1, n);
                CHECK(chpq.at(Label{lam, m, n}) == expect);
            }

    // Factor application commutes and associates.
    CHECK(product_expand(product_expand(ch, ProductFactor::P), ProductFactor::PQ) ==
          product_expand(product_expand(ch, ProductFactor::PQ), ProductFactor::P));
    // Squared product at p^2: p(0)p(2) + p(1)p(1) + p(2)p(0) = 5.
    auto pp = product_expand(product_expand(one, ProductFactor::P), ProductFactor::P);
    CHECK(pp.at(Label{z, 2, 0}) == 5);
}

TEST_CASE("q collapse and comparison") {
    auto rs = RootSystem::build("A1");
    Caps caps{5, 5};
    auto ch = char_L0(*rs, caps);
    auto chpq = product_expand(ch, ProductFactor::PQ);
    auto chp = product_expand(CharSeries{Caps{5, 0}, ch.coeffs}, ProductFactor::P);
    CHECK(collapse_q(chpq) == chp);

    auto f = char_L0(*rs, Caps{4, 0});
    auto g = product_expand(f, ProductFactor::P);
    CHECK(char_leq(f, f));
    CHECK(char_leq(f, g));
    CHECK_FALSE(char_leq(g, f));
    CHECK_FALSE(char_leq(f, CharSeries{f.caps, {}}));
    CHECK_THROWS_AS(char_leq(f, ch), std::invalid_argument);
}
