#include "toroidal/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace toroidal {

LatticeVec operator+(const LatticeVec& a, const LatticeVec& b) {
    LatticeVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

LatticeVec operator-(const LatticeVec& a, const LatticeVec& b) {
    LatticeVec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

LatticeVec operator-(const LatticeVec& a) {
    LatticeVec r(a);
    for (auto& x : r) x = -x;
    return r;
}

LatticeVec operator*(int c, const LatticeVec& a) {
    LatticeVec r(a);
    for (auto& x : r) x *= c;
    return r;
}

namespace {

std::vector<std::vector<int>> cartan_matrix(char label, int n) {
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    switch (label) {
    case 'A':
        for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
        break;
    case 'D':
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(n - 3, n - 1);
        break;
    case 'E':
        // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
        link(0, 2);
        link(1, 3);
        for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
        break;
    default:
        break;
    }
    return c;
}

int height(const LatticeVec& a) { return std::accumulate(a.begin(), a.end(), 0); }

} // namespace

RootSystemPtr RootSystem::build(char label, int rank) {
    bool ok = false;
    switch (label) {
    case 'A': ok = rank >= 1; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    default:
        throw std::invalid_argument(std::string("unsupported root system label '") + label +
                                    "': only simply-laced types A (rank >= 1), D (rank >= 4) "
                                    "and E (rank 6-8) are supported");
    }
    if (!ok) {
        throw std::invalid_argument(std::string("rank ") + std::to_string(rank) +
                                    " is out of range for type " + label +
                                    " (valid: A rank >= 1, D rank >= 4, E rank 6-8)");
    }
    return std::shared_ptr<const RootSystem>(new RootSystem(label, rank, cartan_matrix(label, rank)));
}

RootSystemPtr RootSystem::build(const std::string& name) {
    if (name.size() < 2) throw std::invalid_argument("bad root system name '" + name + "'");
    int rank = 0;
    try {
        std::size_t pos = 0;
        rank = std::stoi(name.substr(1), &pos);
        if (pos != name.size() - 1) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad root system name '" + name + "'");
    }
    char label = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    return build(label, rank);
}

RootSystem::RootSystem(char label, int rank, std::vector<std::vector<int>> cartan)
    : label_(label), rank_(rank), cartan_(std::move(cartan)) {
    // Positive roots by height; the alpha_i-string through beta has
    // q = p - <beta, alpha_i>.
    std::set<LatticeVec> seen;
    std::vector<LatticeVec> layer;
    for (int i = 0; i < rank_; ++i) {
        LatticeVec a(rank_, 0);
        a[i] = 1;
        layer.push_back(a);
        seen.insert(a);
    }
    while (!layer.empty()) {
        std::sort(layer.begin(), layer.end(), std::greater<>());
        for (const auto& r : layer) positive_.push_back(r);
        std::vector<LatticeVec> next;
        for (const auto& beta : layer) {
            for (int i = 0; i < rank_; ++i) {
                int p = 0;
                LatticeVec down = beta;
                while (true) {
                    down[i] -= 1;
                    if (!seen.count(down)) break;
                    ++p;
                }
                LatticeVec ai(rank_, 0);
                ai[i] = 1;
                int q = p - form(beta, ai);
                if (q > 0) {
                    LatticeVec up = beta;
                    up[i] += 1;
                    if (seen.insert(up).second) next.push_back(up);
                }
            }
        }
        layer = std::move(next);
    }
    roots_ = positive_;
    for (const auto& r : positive_) roots_.push_back(-r);
    theta_ = *std::max_element(positive_.begin(), positive_.end(),
                               [](const LatticeVec& a, const LatticeVec& b) { return height(a) < height(b); });

    eps_table_.assign(rank_, std::vector<int>(rank_, 1));
    for (int i = 0; i < rank_; ++i) {
        for (int j = 0; j < rank_; ++j) {
            if (i == j) eps_table_[i][j] = -1;
            else if (i < j) eps_table_[i][j] = (cartan_[i][j] % 2 == 0) ? 1 : -1;
        }
    }

    const int n = dim_g();
    table_.assign(n, std::vector<GElt>(n));
    pairing_.assign(n, std::vector<int>(n, 0));
    for (GSym a = 0; a < n; ++a) {
        for (GSym b = 0; b < n; ++b) {
            LatticeVec wa = weight(a), wb = weight(b);
            GElt out;
            if (is_cartan(a) && is_cartan(b)) {
                pairing_[a][b] = cartan_[a][b];
            } else if (is_cartan(a)) {
                LatticeVec ai(rank_, 0);
                ai[a] = 1;
                out.add(b, form(ai, wb));
            } else if (is_cartan(b)) {
                LatticeVec bi(rank_, 0);
                bi[b] = 1;
                out.add(a, -form(bi, wa));
            } else {
                LatticeVec sum = wa + wb;
                if (std::all_of(sum.begin(), sum.end(), [](int x) { return x == 0; })) {
                    out = h_of(wa);
                    out *= eps(wa, wb);
                    pairing_[a][b] = -1;
                } else if (is_root(sum)) {
                    out.add(root_sym(sum), eps(wa, wb));
                }
            }
            table_[a][b] = std::move(out);
        }
    }
}

int RootSystem::form(const LatticeVec& a, const LatticeVec& b) const {
    if (static_cast<int>(a.size()) != rank_ || static_cast<int>(b.size()) != rank_)
        throw std::invalid_argument("lattice vector of wrong dimension");
    int s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank_; ++j) s += a[i] * cartan_[i][j] * b[j];
    }
    return s;
}

int RootSystem::eps(const LatticeVec& a, const LatticeVec& b) const {
    if (static_cast<int>(a.size()) != rank_ || static_cast<int>(b.size()) != rank_)
        throw std::invalid_argument("lattice vector of wrong dimension for eps");
    long parity = 0;
    for (int i = 0; i < rank_; ++i) {
        for (int j = 0; j < rank_; ++j) {
            if (eps_table_[i][j] < 0) parity += static_cast<long>(a[i]) * b[j];
        }
    }
    return (parity % 2 == 0) ? 1 : -1;
}

int RootSystem::root_index(const LatticeVec& a) const {
    auto it = std::find(roots_.begin(), roots_.end(), a);
    return it == roots_.end() ? -1 : static_cast<int>(it - roots_.begin());
}

bool RootSystem::is_positive(const LatticeVec& a) const {
    return std::find(positive_.begin(), positive_.end(), a) != positive_.end();
}

GSym RootSystem::root_sym(const LatticeVec& a) const {
    int idx = root_index(a);
    if (idx < 0) throw std::invalid_argument("not a root");
    return rank_ + idx;
}

LatticeVec RootSystem::weight(GSym s) const {
    if (is_cartan(s)) return zero();
    if (!is_root_sym(s)) throw std::out_of_range("g-basis symbol out of range");
    return roots_[s - rank_];
}

GElt RootSystem::e(int i) const {
    LatticeVec a = zero();
    a.at(i) = 1;
    return GElt(root_sym(a));
}

GElt RootSystem::f(int i) const {
    LatticeVec a = zero();
    a.at(i) = -1;
    return GElt(root_sym(a), -1);
}

GElt RootSystem::h(int i) const {
    if (i < 0 || i >= rank_) throw std::out_of_range("Cartan index out of range");
    return GElt(cartan_sym(i));
}

GElt RootSystem::e_theta() const { return GElt(root_sym(theta_)); }
GElt RootSystem::f_theta() const { return GElt(root_sym(-theta_), -1); }

GElt RootSystem::h_of(const LatticeVec& a) const {
    GElt r;
    for (int i = 0; i < rank_; ++i) r.add(cartan_sym(i), a[i]);
    return r;
}

GElt RootSystem::bracket(const GElt& x, const GElt& y) const {
    GElt r;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) r.add(table_[a][b], ca * cb);
    return r;
}

Rational RootSystem::pairing(const GElt& x, const GElt& y) const {
    Rational r = 0;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y)
            if (pairing_[a][b] != 0) r += ca * cb * pairing_[a][b];
    return r;
}

} // namespace toroidal
