#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "realcurves/curve.hpp"
#include "realcurves/errors.hpp"
#include "realcurves/picard.hpp"
#include "realcurves/witt.hpp"

using namespace realcurves;

namespace {

AbGroupDescriptor Zk(int k) { return AbGroupDescriptor::free(k); }
AbGroupDescriptor QZ(int k) { return AbGroupDescriptor::divisible(k); }
AbGroupDescriptor Z2(int k) { return AbGroupDescriptor::cyclic(2, k); }
AbGroupDescriptor Z4() { return AbGroupDescriptor::cyclic(4); }

EtaResult known(int v) { return EtaResult::known_by(v, CertificateKind::RuleOnePointAtInfinity); }

// Monic polynomial of degree d with exactly k real roots.
UniPoly monic_with_roots(int d, int k) {
  UniPoly p({BigRational(1)});
  for (int i = 1; i <= k; ++i) p *= UniPoly::linear_root(BigRational(i));
  for (int j = 1; j <= (d - k) / 2; ++j) p *= UniPoly({BigRational(j), BigRational(0), BigRational(1)});
  return p;
}

}  // namespace

TEST(PicTors, Examples) {
  const CurveInvariants ellipse = classify_conic(parse_curve("x^2 + y^2 - 1 = 0")).invariants;
  EXPECT_EQ(pic_tors_known(ellipse, 0), Z2(1));

  const CurveInvariants k4 = curve_invariants(parse_curve("y^2 = (x^2-1)*(x^2-9)"));
  EXPECT_EQ(pic_tors_known(k4, 1), QZ(1) + Z2(1));
  EXPECT_EQ(format(pic_tors_known(k4, 1)), "Q/Z (+) Z/2");

  const CurveInvariants sextic = curve_invariants(parse_curve("y^2 = -(x^6+1)"));
  EXPECT_EQ(pic_tors_known(sextic, 0), QZ(2));
}

TEST(PicTors, CandidatesWhenUndetermined) {
  const CurveInvariants inv = curve_invariants(parse_curve("y^2 = x^4 + x + 1"));
  const auto cands = pic_tors(inv, EtaResult::undetermined(CertificateKind::NonRationalFactorization));
  ASSERT_EQ(cands.size(), 2u);
  EXPECT_EQ(cands[0].eta, 0);
  EXPECT_EQ(cands[0].group, QZ(2));
  EXPECT_EQ(cands[1].eta, 1);
  EXPECT_EQ(cands[1].group, QZ(1));
  EXPECT_EQ(pic_tors(inv, known(1)).size(), 1u);
}

TEST(PicTors, Guards) {
  const CurveInvariants parabola = classify_conic(parse_curve("x^2 + y = 0")).invariants;
  EXPECT_THROW(pic_tors_known(parabola, 1), InconsistentInvariants);
  const CurveInvariants split = classify_conic(parse_curve("x^2 + 1 = 0")).invariants;
  EXPECT_THROW(pic_tors(split, known(0)), InconsistentInvariants);
}

TEST(PicTors, CompleteCurves) {
  CurveInvariants inv;
  inv.complete = true;
  inv.g = 2;
  inv.s = 3;
  inv.t = 3;
  EXPECT_EQ(pic_tors(inv, EtaResult::undetermined(CertificateKind::GenusTooHigh)).at(0).group, QZ(2) + Z2(2));
  inv.s = inv.t = 0;
  inv.level_of_function_field = Level::Two;
  EXPECT_EQ(pic_tors_known(inv, 0), QZ(2));
}

TEST(PicTorsComplex, Examples) {
  EXPECT_EQ(pic_tors_complex(1, 2, 1), QZ(2));
  EXPECT_TRUE(pic_tors_complex(0, 1, 0).is_trivial());
  // eta(X_C) for the twin of (x^2+1)(x^2+4) comes from the eta pipeline.
  const CurveSpec twin = parse_curve("y^2 = -(x^2+1)*(x^2+4)");
  const EtaReport r = eta_full(twin, curve_invariants(twin));
  ASSERT_TRUE(r.eta_complex && r.eta_complex->known());
  EXPECT_EQ(pic_tors_complex(1, 2, *r.eta_complex->value), QZ(2));
  EXPECT_THROW(pic_tors_complex(1, 0, 0), std::invalid_argument);
  EXPECT_THROW(pic_tors_complex(1, 2, 2), std::invalid_argument);
}

TEST(UnitsModN, Examples) {
  EXPECT_EQ(units_mod_n(0, 2), Z2(1));
  EXPECT_EQ(units_mod_n(1, 3), AbGroupDescriptor::cyclic(3));
  EXPECT_EQ(units_mod_n(1, 4), Z4() + Z2(1));
  EXPECT_EQ(format(units_mod_n(1, 6)), "Z/6 (+) Z/2");
  EXPECT_EQ(units_mod_n(1, 2), Z2(2));
  EXPECT_THROW(units_mod_n(0, 1), std::invalid_argument);
}

TEST(PicardProperty, RankNeverNegative) {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 1000; ++i) {
    const CurveInvariants inv = gen::random_invariants(rng);
    if (!inv.geometrically_connected) continue;
    const int top = inv.complete ? 0 : inv.r + inv.c - 1;
    for (int eta = 0; eta <= top; ++eta) {
      const AbGroupDescriptor g = pic_tors_known(inv, eta);
      EXPECT_GE(g.qz, 0);
      EXPECT_EQ(g.free_rank, 0);
    }
  }
}

// The closed-form hyperelliptic tables, written out per (sign, d, k) and
// compared against the pipeline from parsed polynomials.
TEST(PicardProperty, HyperellipticTablesSweep) {
  int checked = 0;
  for (int d = 1; d <= 10; ++d) {
    for (int k = d % 2; k <= d; k += 2) {
      for (int sign : {1, -1}) {
        const UniPoly p = monic_with_roots(d, k);
        const CurveSpec spec = CurveSpec::hyperelliptic(sign > 0 ? p : -p);
        const CurveInvariants inv = curve_invariants(spec);
        const AbGroupDescriptor w = witt_group(inv);
        const int dp = d / 2, kp = k / 2;
        if (d % 2 == 1) {
          EXPECT_EQ(w, Zk(kp + 1) + Z2(dp)) << d << " " << k;
          EXPECT_EQ(pic_tors_known(inv, 0), QZ(dp) + Z2(kp));
        } else if (sign < 0) {
          // y^2 + P(x) = 0
          EXPECT_EQ(w, k > 0 ? Zk(kp) + Z2(dp) : Z4() + Z2(dp - 1)) << d << " " << k;
          EXPECT_EQ(pic_tors_known(inv, 0), QZ(dp - 1) + Z2(kp));
          EXPECT_EQ(eta_full(spec, inv).eta.value, 0);
        } else {
          // y^2 - P(x) = 0
          EXPECT_EQ(w, (k > 0 ? Zk(kp + 1) : Zk(2)) + Z2(dp - 1)) << d << " " << k;
          for (int eta = 0; eta <= 1; ++eta) {
            EXPECT_EQ(pic_tors_known(inv, eta), QZ(dp - eta) + (k > 0 ? Z2(kp - 1) : Z2(0)));
          }
        }
        ++checked;
      }
    }
  }
  EXPECT_EQ(checked, 70);
}

TEST(PicardProperty, PositiveEvenTableMatchesGeneralFormula) {
  for (int dp = 1; dp <= 10; ++dp) {
    for (int kp = 1; kp <= dp; ++kp) {
      CurveInvariants inv;
      inv.g = dp - 1;
      inv.r = 2;
      inv.c = 0;
      inv.s = kp + 1;
      inv.t = kp - 1;
      for (int eta = 0; eta <= 1; ++eta) EXPECT_EQ(pic_tors_known(inv, eta), QZ(dp - eta) + Z2(kp - 1));
    }
  }
}
