#ifndef TOROIDAL_AUTOS_HPP
#define TOROIDAL_AUTOS_HPP

#include "toroidal/report.hpp"
#include "toroidal/torlie.hpp"

#include <functional>
#include <utility>

namespace toroidal {

/// Laurent polynomial in s, t keyed by exponent pairs.
using LaurentPoly = Sparse<std::pair<int, int>>;

/// Automorphism of the coordinate ring given by the images of s and t,
/// together with the images of the degree operators. Differential forms are
/// pushed through the coordinate change and re-canonicalized.
struct RingMap {
    LaurentPoly s_image;
    LaurentPoly t_image;
    TorElt ds_image;
    TorElt dt_image;
    bool ds_defined = true;
};

/// s -> t, t -> s^{-1} (power +1) or s -> t^{-1}, t -> s (power -1).
RingMap s_transform(int power);
/// s -> s + a on tor^+.
RingMap shift_map(const Rational& a);

TorElt apply_ring_map(const RingMap& map, const TorElt& x);

/// S (power = +1) or S^{-1} (power = -1).
TorElt apply_S(const TorElt& x, int power);

/// Error raised when an ad-exponential does not terminate within the cap.
struct NotNilpotent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// sum_j ad(n)^j x / j!, stopping when a term vanishes.
TorElt exp_ad(const TorLie& alg, const TorElt& n, const TorElt& x, int cap = 12);

/// exp ad e_0 . exp ad(-f_0) . exp ad e_0 with e_0 = f_theta (x) t, f_0 = e_theta (x) t^{-1}.
TorElt apply_T0(const TorLie& alg, const TorElt& x, int cap = 12);
/// exp ad e_theta . exp ad(-f_theta) . exp ad e_theta.
TorElt apply_Ttheta(const TorLie& alg, const TorElt& x, int cap = 12);

/// tau_a, induced by s -> s + a. Throws if x is not in tor^+.
TorElt tau_shift(const TorLie& alg, const Rational& a, const TorElt& x);

using AutoReport = Report;
using TorMap = std::function<TorElt(const TorElt&)>;

/// Checks phi([x,y]) = [phi x, phi y] on all pairs from the given basis list.
AutoReport check_homomorphism(const TorLie& alg, const TorMap& phi, const std::vector<TorBasis>& basis,
                              const std::string& name);

/// All basis vectors of tor with |k|, |l| <= bound (g-tensors, c(k,l), c_s,
/// c_t, d_s, d_t).
std::vector<TorBasis> basis_box(const RootSystem& rs, int bound);

} // namespace toroidal

#endif
