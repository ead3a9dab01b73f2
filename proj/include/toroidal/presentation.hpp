#ifndef TOROIDAL_PRESENTATION_HPP
#define TOROIDAL_PRESENTATION_HPP

#include "toroidal/report.hpp"
#include "toroidal/torlie.hpp"

#include <functional>

namespace toroidal {

using BracketFn = std::function<TorElt(const TorElt&, const TorElt&)>;

/// Affine Cartan matrix on the index set {0, 1, ..., rank}; node 0 has
/// alpha_0 = -theta + delta.
std::vector<std::vector<int>> affine_cartan(const RootSystem& rs);

/// Evaluates every defining relation of the presentation of tor (and of
/// tor^+ for nonnegative indices) on the images of the generators, with
/// all mode indices in [-range, range]. The bracket can be replaced to run
/// the check against a deliberately altered table.
Report verify_presentation(const TorLie& alg, int range, const BracketFn& bracket = {});

} // namespace toroidal

#endif
