#ifndef TOROIDAL_PARTITIONS_HPP
#define TOROIDAL_PARTITIONS_HPP

#include "toroidal/rational.hpp"

#include <functional>
#include <vector>

namespace toroidal {

/// Calls f(mult) for every partition of n, where mult[k] is the number of
/// parts equal to k (index 0 unused).
inline void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& f) {
    if (n < 0) return;
    std::vector<int> mult(n + 1, 0);
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            f(mult);
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            ++mult[k];
            rec(rest - k, k);
            --mult[k];
        }
    };
    rec(n, n);
}

/// Coefficient prod_k w(k)^{m_k} / m_k! of the exponential
/// exp(sum_k w(k) u^k) attached to a partition with multiplicities mult.
inline Rational exp_weight(const std::vector<int>& mult, const std::function<Rational(int)>& w) {
    Rational c = 1;
    for (std::size_t k = 1; k < mult.size(); ++k) {
        for (int j = 1; j <= mult[k]; ++j) c *= w(static_cast<int>(k)) / j;
    }
    return c;
}

} // namespace toroidal

#endif
