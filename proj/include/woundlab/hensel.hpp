#pragma once

#include <vector>

#include "woundlab/laurent.hpp"
#include "woundlab/tower.hpp"

namespace woundlab {

/// Maps every coefficient through the tower's embedding into its top field.
LaurentSeries lift_series(const FieldTower& tower, const LaurentSeries& x);

/// Solves v + a_1 v^p + ... + a_m v^(p^m) = f in k[[t]] to precision N.
/// Requires v(a_i) >= 0 and v(f) >= 0. The residue equation over the residue
/// field is solved first (extending the tower by a splitting step when it has
/// no root there); the lift is then a plain fixed-point iteration.
/// Throws PrecisionError when the input precision is below N.
LaurentSeries hensel_solve(FieldTower& tower, const std::vector<LaurentSeries>& a,
                           const LaurentSeries& f, long N);

}  // namespace woundlab
