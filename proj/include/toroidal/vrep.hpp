#ifndef TOROIDAL_VREP_HPP
#define TOROIDAL_VREP_HPP

#include "toroidal/report.hpp"
#include "toroidal/torlie.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace toroidal {

/// Basis vector of V(0) = F (x) C_eps[Q] (x) D (x) C[tau^{+-1}]:
///   prod h_{i}(-n) . e^lat . prod delta(-n) . tau^tau.
struct FockState {
    std::vector<std::pair<int, int>> heis; ///< sorted (i, n), n > 0
    LatticeVec lat;
    std::vector<int> dmon;                 ///< sorted n > 0
    int tau = 0;

    auto operator<=>(const FockState&) const = default;
};

using VElt = Sparse<FockState>;

/// Polynomial in the commuting symbols delta(-n), keyed by sorted parts.
using DPoly = Sparse<std::vector<int>>;

struct Window {
    int dmax = 0;
    int tau_min = 0;
    int tau_max = 0;
};

/// Degree of the F (x) C[Q] factor: (b,b)/2 + sum of Heisenberg modes.
int m_degree(const RootSystem& rs, const FockState& st);
/// Total s-degree including the D factor. d_s acts by its negative.
int s_degree(const RootSystem& rs, const FockState& st);
bool in_window(const RootSystem& rs, const FockState& st, const Window& w);

FockState vacuum(const RootSystem& rs);

/// Coefficient of u^j in Delta_l(u) = exp(sum_{k>0} l delta(-k)/k u^k).
DPoly delta_coeff(int l, int j);
std::vector<DPoly> delta_coeffs(int l, int jmax);

/// Per-degree sizes of the four tensor factors of V(0).
struct FactorCounts {
    std::vector<std::size_t> fock;    ///< Heisenberg monomials of degree d
    std::vector<std::size_t> lattice; ///< lattice points with (b,b)/2 = d
    std::vector<std::size_t> dpart;   ///< D-monomials of degree d
    std::size_t tau = 0;
    /// Number of basis vectors predicted by the tensor factorization.
    std::size_t product() const;
};

FactorCounts factor_counts(const RootSystem& rs, const Window& w);

/// All basis states of the window, sorted.
std::vector<FockState> enumerate_basis(const RootSystem& rs, const Window& w);

/// V(0) as a module over the toroidal algebra. The g-tensor x_a (x) s^k t^l
/// acts as sum_j X_{k+j}(a) Delta_l^{(-j)} tau^l, and Cartan tensors through
/// the Heisenberg modes in the same way; central elements and degree
/// operators follow the general construction on M (x) D (x) C[tau^{+-1}].
///
/// Every homogeneous operator moves a state by a fixed s-degree and only
/// finitely many modes contribute, so results are exact without truncation.
/// Actions on basis states are memoized; the object is not thread-safe.
class VertexModule {
public:
    explicit VertexModule(RootSystemPtr rs);

    const RootSystem& rs() const { return *rs_; }

    /// Mode X_k(beta + l delta). beta must be a root or zero.
    VElt vertex_X(const LatticeVec& beta, int l, int k, const VElt& v) const;

    VElt act(const TorBasis& b, const FockState& st) const;
    VElt act(const TorElt& x, const VElt& v) const;
    VElt act(const TorElt& x, const FockState& st) const { return act(x, VElt(st)); }

    std::string format(const FockState& st) const;
    std::string format(const VElt& v) const;

    std::size_t cache_size() const { return cache_.size(); }

private:
    using HeisMono = std::vector<std::pair<int, int>>;
    using HeisPoly = Sparse<HeisMono>;
    using MState = std::pair<HeisMono, LatticeVec>;
    using MPoly = Sparse<MState>;

    MPoly x_mode(const LatticeVec& alpha, int m, const HeisMono& h, const LatticeVec& beta) const;
    MPoly cartan_mode(const std::vector<Rational>& w, int m, const HeisMono& h, const LatticeVec& beta) const;
    HeisPoly annihilate(const std::vector<Rational>& w, int k, const HeisPoly& p) const;
    const HeisPoly& creation(const LatticeVec& alpha, int b) const;
    VElt act_uncached(const TorBasis& b, const FockState& st) const;
    static VElt tensor(const MPoly& m, const DPoly& d, const FockState& st, int dtau, const Rational& c);

    RootSystemPtr rs_;
    mutable std::map<std::pair<LatticeVec, int>, HeisPoly> creation_cache_;
    mutable std::map<std::pair<TorBasis, FockState>, VElt> cache_;
};

/// act([x,y], v) = act(x, act(y, v)) - act(y, act(x, v)) for all unordered
/// pairs of operators and all window states v with enough headroom:
/// s-degree(v) + |s-deg x| + |s-deg y| <= dmax, so every intermediate
/// vector stays inside the window.
Report check_module_axiom(const TorLie& alg, const VertexModule& vm, const std::vector<TorBasis>& ops,
                          const Window& window);

/// Highest-weight relations of the vacuum: the level-one Frenkel-Kac
/// relations, their toroidal versions, and aff^(t) . vac = 0 for t-modes
/// in [-range, range].
Report check_vacuum_relations(const TorLie& alg, const VertexModule& vm, int range);

} // namespace toroidal

#endif
