#include "realcurves/cohomology.hpp"

namespace realcurves {

CohomologyDims etale_dims(const CurveInvariants& inv) {
  validate(inv);
  const int g = inv.g, c = inv.c, s = inv.s, t = inv.t;
  if (inv.complete) {
    if (!inv.geometrically_connected) return {1, 2 * g, 1, 0};
    if (inv.has_real_points()) return {1, g + s, 2 * s, 2 * s};
    return {1, g + 1, 1, 0};
  }
  if (!inv.geometrically_connected) return {1, 2 * g + c - 1, 0, 0};
  if (inv.has_real_points()) return {1, g + c + s, s + t, s + t};
  return {1, g + c, 0, 0};
}

CohomologyDims quotient_space_dims(const CurveInvariants& inv) {
  validate(inv);
  const int g = inv.g, c = inv.c;
  if (inv.complete) {
    if (!inv.geometrically_connected) return {1, 2 * g, 1, 0};
    if (inv.has_real_points()) return {1, g, 0, 0};
    return {1, g + 1, 1, 0};
  }
  if (!inv.geometrically_connected) return {1, 2 * g + c - 1, 0, 0};
  return {1, g + c, 0, 0};
}

}  // namespace realcurves
