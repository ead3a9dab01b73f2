#ifndef TOROIDAL_RATIONAL_HPP
#define TOROIDAL_RATIONAL_HPP

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace toroidal {

using Rational = mpq_class;
using Integer = mpz_class;

// num/den in lowest terms. mpq_class(num, den) alone does not canonicalize.
inline Rational frac(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Sparse linear combination over an ordered key type. Zero coefficients are
// never stored.
template <typename Key>
class Sparse {
public:
    using Map = std::map<Key, Rational>;
    using const_iterator = typename Map::const_iterator;

    Sparse() = default;
    explicit Sparse(const Key& k, const Rational& c = 1) { add(k, c); }

    void add(const Key& k, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add(const Sparse& other, const Rational& scale = 1) {
        if (scale == 0) return;
        for (const auto& [k, c] : other.terms_) add(k, c * scale);
    }

    Rational coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool empty() const { return terms_.empty(); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const Map& terms() const { return terms_; }

    Sparse& operator+=(const Sparse& o) { add(o, 1); return *this; }
    Sparse& operator-=(const Sparse& o) { add(o, -1); return *this; }
    Sparse& operator*=(const Rational& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& kv : terms_) kv.second *= c;
        return *this;
    }

    friend Sparse operator+(Sparse a, const Sparse& b) { a += b; return a; }
    friend Sparse operator-(Sparse a, const Sparse& b) { a -= b; return a; }
    friend Sparse operator*(const Rational& c, Sparse a) { a *= c; return a; }
    friend Sparse operator-(Sparse a) { a *= -1; return a; }
    friend bool operator==(const Sparse& a, const Sparse& b) { return a.terms_ == b.terms_; }

private:
    Map terms_;
};

} // namespace toroidal

#endif
