#include <gtest/gtest.h>

#include "generators.hpp"
#include "realcurves/cohomology.hpp"
#include "realcurves/curve.hpp"
#include "realcurves/witt.hpp"

using namespace realcurves;

namespace {

CurveInvariants tuple(int g, int r, int c, int s, int t, bool complete, bool connected, Level level) {
  CurveInvariants inv;
  inv.g = g;
  inv.r = r;
  inv.c = c;
  inv.s = s;
  inv.t = t;
  inv.complete = complete;
  inv.geometrically_connected = connected;
  inv.level_of_function_field = level;
  return inv;
}

}  // namespace

TEST(Etale, Examples) {
  const CurveInvariants ellipse = tuple(0, 0, 1, 1, 1, false, true, Level::Infinite);
  EXPECT_EQ(etale_dims(ellipse).h1, 2);
  EXPECT_EQ(etale_dims(ellipse).h2, 2);
  EXPECT_EQ(etale_dims(ellipse).h_stable, 2);

  EXPECT_EQ(etale_dims(tuple(1, 0, 0, 0, 0, true, true, Level::Two)), (CohomologyDims{1, 2, 1, 0}));

  const CohomologyDims open_empty = etale_dims(tuple(2, 0, 1, 0, 0, false, true, Level::Two));
  EXPECT_EQ(open_empty.h1, 3);
  EXPECT_EQ(open_empty.h2, 0);
}

TEST(QuotientSpace, Examples) {
  const CohomologyDims a = quotient_space_dims(tuple(3, 0, 0, 2, 2, true, true, Level::Infinite));
  EXPECT_EQ(a.h1, 3);
  EXPECT_EQ(a.h2, 0);
  EXPECT_EQ(quotient_space_dims(tuple(1, 0, 1, 0, 0, false, true, Level::Two)).h1, 2);
  EXPECT_EQ(quotient_space_dims(tuple(0, 0, 1, 0, 0, false, false, Level::One)).h1, 0);
}

TEST(Witt, Examples) {
  EXPECT_EQ(format(witt_group(tuple(0, 0, 1, 1, 1, false, true, Level::Infinite))), "Z (+) Z/2");
  EXPECT_EQ(format(witt_group(tuple(0, 0, 1, 0, 0, false, true, Level::Two))), "Z/4");
  EXPECT_EQ(format(witt_group(tuple(2, 0, 1, 0, 0, false, true, Level::Two))), "Z/4 (+) (Z/2)^2");
  EXPECT_EQ(format(witt_group(tuple(0, 0, 1, 0, 0, false, false, Level::One))), "Z/2");
}

TEST(Witt, RejectsInconsistentTuples) {
  EXPECT_THROW(witt_group(tuple(0, 0, 1, 0, 0, false, true, Level::Infinite)), std::invalid_argument);
  EXPECT_THROW(etale_dims(tuple(0, 1, 0, 0, 0, true, true, Level::Two)), std::invalid_argument);
}

TEST(CohomologyProperty, CrossModuleIdentities) {
  std::mt19937_64 rng(41);
  int open_real = 0;
  for (int i = 0; i < 2000; ++i) {
    const CurveInvariants inv = gen::random_invariants(rng);
    const CohomologyDims et = etale_dims(inv);
    const CohomologyDims qs = quotient_space_dims(inv);
    const AbGroupDescriptor w = witt_group(inv);
    const int u = et.h1;

    EXPECT_EQ(qs.h1, et.h1 - inv.s);
    EXPECT_EQ(w.free_rank, inv.s);
    if (inv.complete) EXPECT_EQ(qs.h2, et.h2 - inv.s - inv.t);
    if (!inv.complete && inv.has_real_points()) {
      ++open_real;
      EXPECT_EQ(u - inv.s, inv.g + inv.c);
      EXPECT_EQ(w, AbGroupDescriptor::free(inv.s) + AbGroupDescriptor::cyclic(2, inv.g + inv.c));
    }
    if (inv.complete && inv.has_real_points()) EXPECT_EQ(w.z2, inv.g);
    if (!inv.geometrically_connected && !inv.complete) {
      EXPECT_EQ(w, AbGroupDescriptor::cyclic(2, 2 * inv.g + inv.c));
      EXPECT_EQ(u, 2 * inv.g + inv.c - 1);
      // H^1 of the complex twin with c punctures has dimension 2g + c - 1.
      EXPECT_EQ(2 * u, 2 * (2 * inv.g + inv.c - 1));
    }
    if (!inv.has_real_points() && inv.geometrically_connected) EXPECT_EQ(w.z4, 1);
  }
  EXPECT_GE(open_real, 300);
}
