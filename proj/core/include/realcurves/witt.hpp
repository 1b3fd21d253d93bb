#pragma once

#include "realcurves/abgroup.hpp"
#include "realcurves/curve.hpp"

namespace realcurves {

/// Witt group W(X) of the coordinate ring, built from u = dim H^1_et(X, Z/2)
/// and the level of the function field:
///   X(R) nonempty    Z^s (+) (Z/2)^(u-s)
///   level 2          Z/4 (+) (Z/2)^(u-1)
///   level 1          (Z/2)^(u+1)
/// Throws InconsistentInvariants for impossible tuples.
AbGroupDescriptor witt_group(const CurveInvariants& inv);

}  // namespace realcurves
