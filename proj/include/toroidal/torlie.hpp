#ifndef TOROIDAL_TORLIE_HPP
#define TOROIDAL_TORLIE_HPP

#include "toroidal/rootdata.hpp"

#include <compare>
#include <string>
#include <tuple>
#include <vector>

namespace toroidal {

/// Basis vector of the toroidal Lie algebra: x (x) s^k t^l for a g-basis
/// symbol x, the central elements c(k,l) ((k,l) != (0,0)), c_s, c_t, and the
/// degree operators d_s, d_t.
struct TorBasis {
    enum class Kind : unsigned char { G, C, Cs, Ct, Ds, Dt };

    Kind kind = Kind::G;
    GSym g = 0;
    int k = 0;
    int l = 0;

    static TorBasis gten(GSym g, int k, int l) { return {Kind::G, g, k, l}; }
    /// Throws std::invalid_argument for (k,l) = (0,0).
    static TorBasis c(int k, int l);
    static TorBasis cs() { return {Kind::Cs, 0, 0, 0}; }
    static TorBasis ct() { return {Kind::Ct, 0, 0, 0}; }
    static TorBasis ds() { return {Kind::Ds, 0, 0, 0}; }
    static TorBasis dt() { return {Kind::Dt, 0, 0, 0}; }

    bool is_central() const { return kind == Kind::C || kind == Kind::Cs || kind == Kind::Ct; }
    /// Eigenvalues under (ad d_s, ad d_t).
    int s_degree() const { return (kind == Kind::G || kind == Kind::C) ? k : 0; }
    int t_degree() const { return (kind == Kind::G || kind == Kind::C) ? l : 0; }

    auto operator<=>(const TorBasis&) const = default;
};

using TorElt = Sparse<TorBasis>;

enum class Subalgebra {
    Full,      ///< tor
    Prime,     ///< tor' (no d_s)
    Plus,      ///< tor^+
    NHat,      ///< positive part of the triangular decomposition
    NBarHat,   ///< negative part
    HHat,      ///< Cartan part
    HHatPrime, ///< Cartan part without d_s
    AffS,      ///< g (x) C[s^{+-1}] + C c_s + C d_s
    AffT,      ///< g (x) C[t^{+-1}] + C c_t + C d_t
};

/// Differential form s^a t^b ds (or dt) rewritten in the basis
/// {c(k,l), c_s, c_t} of Omega / dA. Exact forms give zero.
TorElt form_ds(int a, int b);
TorElt form_dt(int a, int b);

struct TriangularParts {
    TorElt nbar;
    TorElt h;
    TorElt n;
};

/// The toroidal Lie algebra over a fixed simply-laced root system.
class TorLie {
public:
    explicit TorLie(RootSystemPtr rs);

    const RootSystem& rs() const { return *rs_; }
    RootSystemPtr rs_ptr() const { return rs_; }

    /// x (x) s^k t^l for x in g.
    TorElt gten(const GElt& x, int k, int l) const;

    TorElt bracket(const TorBasis& a, const TorBasis& b) const;
    TorElt bracket(const TorElt& a, const TorElt& b) const;

    /// Image of a presentation generator under t -> tor.
    /// i = 0 is the affine node, 1..rank the finite nodes.
    enum class GenKind { E, F, H };
    TorElt generator(int i, int k, GenKind kind) const;

    /// Affine root (finite part, t-degree) of a basis vector; central and
    /// degree elements report the zero finite part with their t-degree.
    std::pair<LatticeVec, int> affine_root(const TorBasis& b) const;
    /// Sign of the affine root beta + l delta: +1, -1, or 0 for the Cartan
    /// part (beta = 0 and l = 0).
    int affine_sign(const TorBasis& b) const;

    TriangularParts triangular_split(const TorElt& x) const;
    bool member(Subalgebra tag, const TorBasis& b) const;
    bool member(Subalgebra tag, const TorElt& x) const;

    /// Evaluation at s = a from tor' onto aff^(t). Throws for a = 0 or when x
    /// has a d_s component.
    TorElt ev_map(const Rational& a, const TorElt& x) const;

    /// Validates that every g-symbol belongs to this root system.
    void check(const TorElt& x) const;

    /// Text syntax: E(i), F(i), H(i), X(c1,..,cr), Eth, Fth, Hth times
    /// s^k, t^l; C(k,l), cs, ct, ds, dt; rational coefficients.
    TorElt parse(const std::string& text) const;
    std::string format(const TorElt& x) const;

private:
    RootSystemPtr rs_;
};

} // namespace toroidal

#endif
