#ifndef TOROIDAL_CHARSERIES_HPP
#define TOROIDAL_CHARSERIES_HPP

#include "toroidal/rootdata.hpp"

#include <compare>
#include <map>
#include <string>

namespace toroidal {

/// Weight Lambda_0 - m delta + lambda, s-degree n. Lambda_0 is the origin.
struct Label {
    LatticeVec weight;
    int m = 0;
    int n = 0;

    auto operator<=>(const Label&) const = default;
};

std::string to_string(const Label& l);

/// Truncation: delta-depth m <= max_m, s-degree n <= max_n. The finite
/// weights are bounded implicitly, since (lambda, lambda)/2 <= m on L(Lambda_0).
struct Caps {
    int max_m = 0;
    int max_n = 0;

    bool operator==(const Caps&) const = default;
};

/// Truncated formal character sum_{lambda,m,n} c e^lambda p^m q^n.
struct CharSeries {
    Caps caps;
    std::map<Label, long long> coeffs; ///< zero entries are not stored

    long long at(const Label& l) const;
    void add(const Label& l, long long c);
    bool within(const Label& l) const { return l.m >= 0 && l.n >= 0 && l.m <= caps.max_m && l.n <= caps.max_n; }

    bool operator==(const CharSeries&) const = default;
};

/// p-character of L(Lambda_0) (n = 0), by enumeration of the
/// Fock (x) twisted group algebra basis.
CharSeries char_L0(const RootSystem& rs, const Caps& caps);

enum class ProductFactor {
    P,  ///< prod_{n>0} 1/(1 - p^n)
    PQ, ///< prod_{n>0} 1/(1 - p^n q)
};

/// base times the chosen product, truncated to base.caps.
CharSeries product_expand(const CharSeries& base, ProductFactor factor);

/// Sets q = 1: sums over n. The result has max_n = 0.
CharSeries collapse_q(const CharSeries& f);

/// Pointwise f <= g. Throws std::invalid_argument on different caps.
bool char_leq(const CharSeries& f, const CharSeries& g);

} // namespace toroidal

#endif
