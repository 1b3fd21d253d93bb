#pragma once

#include "realcurves/curve.hpp"

namespace realcurves {

/// Z/2-dimensions of a cohomology sequence: h0, h1, h2, and the common value
/// h_stable taken by every degree i >= 3.
struct CohomologyDims {
  int h0 = 1;
  int h1 = 0;
  int h2 = 0;
  int h_stable = 0;
  friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

/// dim H^i_et(X, Z/2) from the invariant tuple. Accepts abstract (complete)
/// tuples as well as those derived from parsed curves.
CohomologyDims etale_dims(const CurveInvariants& inv);

/// dim H^i(X(C)/G, Z/2), G = Gal(C/R) acting by complex conjugation.
CohomologyDims quotient_space_dims(const CurveInvariants& inv);

}  // namespace realcurves
