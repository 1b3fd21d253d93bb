#pragma once

#include <vector>

#include "realcurves/abgroup.hpp"
#include "realcurves/curve.hpp"
#include "realcurves/eta.hpp"

namespace realcurves {

/// A group computed under a specific value of eta.
struct GroupCandidate {
  int eta = 0;
  AbGroupDescriptor group;
  friend bool operator==(const GroupCandidate&, const GroupCandidate&) = default;
};

/// Pic_tors(X) for a geometrically connected curve. One candidate when eta is
/// known (or irrelevant, for complete curves); one per admissible eta in
/// {0, 1} when it is undetermined. Throws InconsistentInvariants for
/// geometrically disconnected curves or eta > r + c - 1.
std::vector<GroupCandidate> pic_tors(const CurveInvariants& inv, const EtaResult& eta);

/// Pic_tors(X) for known eta: (Q/Z)^(g+r+c-eta-1) (+) (Z/2)^t when X is not
/// complete, (Q/Z)^g (+) (Z/2)^(s-1) or (Q/Z)^g when it is.
AbGroupDescriptor pic_tors_known(const CurveInvariants& inv, int eta);

/// Pic_tors(Y) of a smooth complex curve of genus g with k >= 1 points at
/// infinity: (Q/Z)^(2g+k-eta-1). Throws std::invalid_argument for k = 0 or
/// eta outside [0, k-1].
AbGroupDescriptor pic_tors_complex(int g, int k, int eta);

/// O(X)^* / O(X)^*n: (Z/n)^eta (+) Z/2 for even n, (Z/n)^eta for odd n.
/// Throws std::invalid_argument for n < 2 or eta < 0.
AbGroupDescriptor units_mod_n(int eta, int n);

}  // namespace realcurves
