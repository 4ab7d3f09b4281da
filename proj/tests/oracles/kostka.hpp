#pragma once

#include "aw/core.hpp"

#include <map>

// Finite-type weight multiplicities counted directly over semistandard
// tableaux, plus the layer-peeling step built on them.  Nothing here touches
// the production multiplicity code.

namespace oracle {

// dim L(lam)_x for finite sl(n) with sum-zero coordinates: the number of
// semistandard tableaux whose shape and content are lam and x shifted by
// -lam_n.  Zero when x falls outside the weight hull.
aw::Int kostka_multiplicity(const aw::Vec& lam, const aw::Vec& x);

// Expresses one Weyl-invariant layer (weight -> multiplicity, sum-zero keys)
// as a nonnegative sum of irreducible finite characters by repeatedly
// peeling the lexicographically largest weight.  Throws std::logic_error if
// the layer is not such a sum.
std::map<aw::Vec, aw::Int> peel_finite_layer(std::map<aw::Vec, aw::Int> layer);

}  // namespace oracle
