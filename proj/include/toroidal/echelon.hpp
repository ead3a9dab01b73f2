#ifndef TOROIDAL_ECHELON_HPP
#define TOROIDAL_ECHELON_HPP

#include "toroidal/rational.hpp"

#include <map>
#include <vector>

namespace toroidal {

/// Row echelon form over Z with fraction-free elimination. Each row is kept
/// primitive and is keyed by its leading column (in Key order).
template <typename Key>
class Echelon {
public:
    /// Adds v if it is independent of the current rows. Returns whether it was.
    bool insert(const Sparse<Key>& v) {
        Row r = reduce(to_row(v));
        if (r.empty()) return false;
        Key lead = r.begin()->first;
        rows_.emplace(lead, std::move(r));
        return true;
    }

    bool contains(const Sparse<Key>& v) const { return reduce(to_row(v)).empty(); }

    std::size_t rank() const { return rows_.size(); }

    std::vector<Sparse<Key>> rows() const {
        std::vector<Sparse<Key>> out;
        out.reserve(rows_.size());
        for (const auto& [lead, r] : rows_) {
            Sparse<Key> v;
            for (const auto& [k, c] : r) v.add(k, Rational(c));
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    using Row = std::map<Key, Integer>;

    static void make_primitive(Row& r) {
        Integer g = 0;
        for (const auto& kv : r) g = gcd(g, kv.second);
        if (g > 1)
            for (auto& kv : r) kv.second /= g;
    }

    static Row to_row(const Sparse<Key>& v) {
        Integer l = 1;
        for (const auto& kv : v) l = lcm(l, kv.second.get_den());
        Row r;
        for (const auto& [k, c] : v) r.emplace(k, Integer(c.get_num() * (l / c.get_den())));
        make_primitive(r);
        return r;
    }

    Row reduce(Row v) const {
        while (!v.empty()) {
            auto it = rows_.find(v.begin()->first);
            if (it == rows_.end()) break;
            const Row& p = it->second;
            Integer a = p.begin()->second, b = v.begin()->second;
            for (auto& kv : v) kv.second *= a;
            for (const auto& [k, c] : p) {
                auto [slot, inserted] = v.try_emplace(k, 0);
                slot->second -= b * c;
                if (slot->second == 0) v.erase(slot);
            }
            make_primitive(v);
        }
        return v;
    }

    std::map<Key, Row> rows_;
};

} // namespace toroidal

#endif
