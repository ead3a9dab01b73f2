#include "toroidal/charseries.hpp"

#include "toroidal/vrep.hpp"

#include <stdexcept>
#include <vector>

namespace toroidal {

std::string to_string(const Label& l) {
    std::string s = "(";
    for (std::size_t i = 0; i < l.weight.size(); ++i) s += (i ? "," : "") + std::to_string(l.weight[i]);
    return s + "; m=" + std::to_string(l.m) + ", n=" + std::to_string(l.n) + ")";
}

long long CharSeries::at(const Label& l) const {
    auto it = coeffs.find(l);
    return it == coeffs.end() ? 0 : it->second;
}

void CharSeries::add(const Label& l, long long c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs.try_emplace(l, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

CharSeries char_L0(const RootSystem& rs, const Caps& caps) {
    CharSeries r{caps, {}};
    for (const auto& st : enumerate_basis(rs, Window{caps.max_m, 0, 0})) {
        if (!st.dmon.empty()) continue;
        r.add(Label{st.lat, m_degree(rs, st), 0}, 1);
    }
    return r;
}

namespace {

// parts[m][n]: partitions of m into exactly n parts.
std::vector<std::vector<long long>> partition_table(int max_m) {
    std::vector<std::vector<long long>> t(max_m + 1, std::vector<long long>(max_m + 1, 0));
    t[0][0] = 1;
    for (int m = 1; m <= max_m; ++m)
        for (int n = 1; n <= m; ++n) {
            // Either some part equals 1 (remove it) or all parts exceed 1 (subtract 1 from each).
            t[m][n] = t[m - 1][n - 1] + (m - n >= n ? t[m - n][n] : 0);
        }
    return t;
}

} // namespace

CharSeries product_expand(const CharSeries& base, ProductFactor factor) {
    const Caps& caps = base.caps;
    auto parts = partition_table(caps.max_m);
    CharSeries r{caps, {}};
    for (const auto& [lab, c] : base.coeffs) {
        for (int dm = 0; lab.m + dm <= caps.max_m; ++dm) {
            for (int dn = 0; dn <= dm; ++dn) {
                long long f = parts[dm][dn];
                if (f == 0) continue;
                Label t{lab.weight, lab.m + dm, lab.n + (factor == ProductFactor::PQ ? dn : 0)};
                if (!r.within(t)) continue;
                r.add(t, c * f);
            }
        }
    }
    return r;
}

CharSeries collapse_q(const CharSeries& f) {
    CharSeries r{Caps{f.caps.max_m, 0}, {}};
    for (const auto& [lab, c] : f.coeffs) r.add(Label{lab.weight, lab.m, 0}, c);
    return r;
}

bool char_leq(const CharSeries& f, const CharSeries& g) {
    if (!(f.caps == g.caps)) throw std::invalid_argument("char_leq: caps differ");
    for (const auto& [lab, c] : f.coeffs)
        if (c > g.at(lab)) return false;
    for (const auto& [lab, c] : g.coeffs)
        if (f.at(lab) > c) return false;
    return true;
}

} // namespace toroidal
