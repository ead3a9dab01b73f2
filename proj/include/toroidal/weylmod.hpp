#ifndef TOROIDAL_WEYLMOD_HPP
#define TOROIDAL_WEYLMOD_HPP

#include "toroidal/charseries.hpp"
#include "toroidal/echelon.hpp"
#include "toroidal/report.hpp"
#include "toroidal/torlie.hpp"
#include "toroidal/vrep.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toroidal {

/// Ordered product of basis elements with exponents, factors strictly
/// increasing in pbw_less.
using PBWMonomial = std::vector<std::pair<TorBasis, int>>;
using MonoVec = Sparse<PBWMonomial>;

/// Global basis order: t-degree, then s-degree, then g-symbol (central
/// elements after g-tensors of the same bidegree).
bool pbw_less(const TorBasis& a, const TorBasis& b);

/// Label shift of a homogeneous basis element: (finite weight, -t-degree,
/// s-degree). For the negative part this is the label it adds to a vector.
Label shift(const RootSystem& rs, const TorBasis& b);
Label label_of(const RootSystem& rs, const PBWMonomial& m);
Label operator+(const Label& a, const Label& b);
Label operator-(const Label& a, const Label& b);

std::string format_monomial(const TorLie& alg, const PBWMonomial& m);

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WeylConfig {
    RootSystemPtr rs;
    Rational a = 0;           ///< specialization point; 0 selects W(Lambda_0)
    Caps caps;                ///< max delta-depth and max s-degree
    int ball = 0;             ///< finite weights with (lambda,lambda)/2 <= ball
    std::size_t budget = 20000; ///< monomials per label
};

/// Lattice points with (lambda,lambda)/2 <= radius, sorted.
std::vector<LatticeVec> weight_ball(const RootSystem& rs, int radius);

struct DimTable {
    CharSeries dims;
    std::string provenance; ///< "rank-in-V", "presented-quotient" or "formula"
};

/// Action on V = (S^{-1})^* V(0): x acts as S^{-1}(x).
VElt pullback_act(const VertexModule& vm, const TorElt& x, const VElt& v);

/// Image in V_a: tau^p becomes a^{-p}. Throws std::invalid_argument for a = 0.
VElt specialize(const VElt& v, const Rational& a);

/// Monomials (c(1,-l) multiset) x (PBW monomial in the negative part of
/// aff^(t)) with the given label, in PBW order.
std::vector<PBWMonomial> spanning_monomials(const RootSystem& rs, const Label& target,
                                            std::size_t budget = 20000);

/// Applies the monomial to the vacuum of V through pullback_act.
VElt apply_monomial(const VertexModule& vm, const PBWMonomial& m);

/// Rank of the spanning monomial images in V_a for every (lambda, m) within
/// caps.max_m and the weight ball. Requires a != 0.
DimTable rank_spanning(const VertexModule& vm, const WeylConfig& config);

/// The character formula ch_p L(Lambda_0) prod 1/(1-p^n[q]) within caps.
DimTable formula_dims(const RootSystem& rs, const Caps& caps, bool with_q);

/// W(Lambda_0) = M / N, where M = U(tor^+) (x)_{U(b^+)} C v_0 has the PBW
/// basis of U(nbar^+) and N is generated by f_0^2 v_0 and f_i v_0 (i in I).
/// N is computed label by label as K + nbar^+ N with K = U(b^+) {relations}.
/// Caches everything; not thread-safe.
class PresentedWeyl {
public:
    /// drop_f0_squared omits the relation f_0^2 v_0 (a negative control).
    PresentedWeyl(const TorLie& alg, int max_n, std::size_t budget = 20000, bool drop_f0_squared = false);

    const TorLie& alg() const { return alg_; }

    /// PBW monomials of U(nbar^+) with the label. Throws BudgetExceeded.
    const std::vector<PBWMonomial>& monomials(const Label& l);

    /// Left multiplication by a basis element of nbar^+ in U(nbar^+).
    const MonoVec& left_mul(const TorBasis& g, const PBWMonomial& m);
    /// Action of a basis element of tor^+ on m . v_0.
    const MonoVec& act(const TorBasis& g, const PBWMonomial& m);
    MonoVec act(const TorElt& x, const MonoVec& v);

    MonoVec vacuum() const { return MonoVec(PBWMonomial{}); }

    /// Weight space of the relation submodule.
    const Echelon<PBWMonomial>& relations(const Label& l);
    bool vanishes(const MonoVec& v, const Label& l) { return relations(l).contains(v); }
    std::size_t dim(const Label& l);

    /// dim W(Lambda_0) on every label within caps and the weight ball.
    DimTable dims(const Caps& caps, int ball);

private:
    int classify(const TorBasis& g) const; // -1 nbar^+, 0 Cartan, 1 positive
    MonoVec left_mul_vec(const TorBasis& g, const MonoVec& v);
    void build_closure();
    std::vector<TorBasis> raising_ops(const Label& from) const;
    std::vector<TorBasis> lowering_ops(const Label& to) const;
    bool feasible(const Label& l) const;

    const TorLie& alg_;
    int max_n_;
    std::size_t budget_;
    int theta_height_;
    std::map<Label, std::vector<PBWMonomial>> mono_cache_;
    std::map<std::pair<TorBasis, PBWMonomial>, MonoVec> left_cache_;
    std::map<std::pair<TorBasis, PBWMonomial>, MonoVec> act_cache_;
    std::map<Label, Echelon<PBWMonomial>> closure_;
    std::map<Label, Echelon<PBWMonomial>> relations_;
    bool closure_built_ = false;
    bool drop_f0_squared_;
};

DimTable presented_weyl_dims(const TorLie& alg, const WeylConfig& config);

/// Relations of the highest weight vector in V (k in [-3,3]) and in the
/// presented module (k in [1,3]).
Report verify_hw_relations(const TorLie& alg, const VertexModule& vm, PresentedWeyl& pw);

/// Rewriting identities for e_theta (x) s^k t^{-l} and s^k t^{-l} ds on v_0,
/// and the reduction of c(k+1,-l) v_0 to a polynomial in c(1,-m), for
/// k in ks and 1 <= l <= max_l.
Report verify_rewriting(PresentedWeyl& pw, const std::vector<int>& ks, int max_l);

/// (x (x) s t^{-l}) v_0 lies in the span of the spanning monomials, and the
/// spanning monomials span every weight space, for labels with m <= max_m.
Report verify_spanning(PresentedWeyl& pw, int max_m, int ball);

/// e_theta (x) s^k t^l and T_0 T_theta(e_theta (x) s^k t^{l+2}) act the same
/// way on V for k in [-2,2], l in [-4,2], on the given states.
Report verify_induction_transport(const TorLie& alg, const VertexModule& vm, const std::vector<FockState>& states);

} // namespace toroidal

#endif
