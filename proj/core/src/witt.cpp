#include "realcurves/witt.hpp"

#include "realcurves/cohomology.hpp"
#include "realcurves/errors.hpp"

namespace realcurves {

AbGroupDescriptor witt_group(const CurveInvariants& inv) {
  validate(inv);
  const int u = etale_dims(inv).h1;
  if (inv.has_real_points()) {
    if (u < inv.s) throw InternalError("witt_group: dim H^1 smaller than the number of components");
    return AbGroupDescriptor::free(inv.s) + AbGroupDescriptor::cyclic(2, u - inv.s);
  }
  switch (inv.level_of_function_field) {
    case Level::Two:
      if (u < 1) throw InternalError("witt_group: level 2 with trivial H^1");
      return AbGroupDescriptor::cyclic(4) + AbGroupDescriptor::cyclic(2, u - 1);
    case Level::One:
      return AbGroupDescriptor::cyclic(2, u + 1);
    case Level::Infinite:
      break;
  }
  throw InconsistentInvariants("witt_group: no real points but infinite level");
}

}  // namespace realcurves
