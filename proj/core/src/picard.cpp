#include "realcurves/picard.hpp"

#include <stdexcept>

#include "realcurves/errors.hpp"

namespace realcurves {

AbGroupDescriptor pic_tors_known(const CurveInvariants& inv, int eta) {
  validate(inv);
  if (!inv.geometrically_connected) throw InconsistentInvariants("Pic_tors formula needs a geometrically connected curve");
  if (inv.complete) {
    if (inv.has_real_points()) return AbGroupDescriptor::divisible(inv.g) + AbGroupDescriptor::cyclic(2, inv.s - 1);
    return AbGroupDescriptor::divisible(inv.g);
  }
  if (eta < 0 || eta > inv.r + inv.c - 1) {
    throw InconsistentInvariants("eta = " + std::to_string(eta) + " outside [0, r + c - 1]");
  }
  const int rank = inv.g + inv.r + inv.c - eta - 1;
  if (rank < 0) throw InternalError("negative Q/Z rank in Pic_tors");
  return AbGroupDescriptor::divisible(rank) + AbGroupDescriptor::cyclic(2, inv.t);
}

std::vector<GroupCandidate> pic_tors(const CurveInvariants& inv, const EtaResult& eta) {
  if (inv.complete) return {{0, pic_tors_known(inv, 0)}};
  if (eta.value) return {{*eta.value, pic_tors_known(inv, *eta.value)}};
  std::vector<GroupCandidate> out;
  for (int candidate = 0; candidate <= 1 && candidate <= inv.r + inv.c - 1; ++candidate) {
    out.push_back({candidate, pic_tors_known(inv, candidate)});
  }
  return out;
}

AbGroupDescriptor pic_tors_complex(int g, int k, int eta) {
  if (g < 0) throw std::invalid_argument("negative genus");
  if (k < 1) throw std::invalid_argument("pic_tors_complex needs k >= 1 points at infinity; complete curves give (Q/Z)^(2g)");
  if (eta < 0 || eta > k - 1) throw std::invalid_argument("eta must lie in [0, k - 1]");
  return AbGroupDescriptor::divisible(2 * g + k - eta - 1);
}

AbGroupDescriptor units_mod_n(int eta, int n) {
  if (n < 2) throw std::invalid_argument("units_mod_n needs n >= 2");
  if (eta < 0) throw std::invalid_argument("negative eta");
  AbGroupDescriptor g = AbGroupDescriptor::cyclic(n, eta);
  if (n % 2 == 0) g = g + AbGroupDescriptor::cyclic(2);
  return g;
}

}  // namespace realcurves
