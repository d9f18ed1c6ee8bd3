#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "fanmoduli/errors.hpp"
#include "fanmoduli/moduli.hpp"

using namespace fanmoduli;
using oracle::tail_calibration;

namespace {

const CombinatorialType kP2(2, 3, {{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}});

Calibration square_base() { return tail_calibration(2, {{-1, 0}, {0, -1}}); }

// Sign vector with positive scalars applied to the non-identity columns.
Calibration rescale(const Calibration& h, Rng& rng) {
  RationalMatrix m = h.matrix();
  for (std::size_t c = h.d(); c < h.n(); ++c) {
    const Rational s(rng.integer(1, 9), rng.integer(1, 9));
    for (std::size_t r = 0; r < h.d(); ++r) m(r, c) *= s;
  }
  return Calibration(m);
}

}  // namespace

TEST(DetSigns, SimplexExample) {
  const auto s = det_signs(tail_calibration(2, {{-1, -1}}), types::simplex(2));
  EXPECT_EQ(s, (SignVector{{{1, 2}, 1}, {{1, 3}, -1}, {{2, 3}, 1}}));
}

TEST(DetSigns, SquareExampleUsesAscendingOrder) {
  // det(e1, (0,-1)) = -1 for the cone {1,4} read in ascending order.
  const auto s = det_signs(square_base(), types::cycle(4));
  EXPECT_EQ(s, (SignVector{{{1, 2}, 1}, {{1, 4}, -1}, {{2, 3}, 1}, {{3, 4}, 1}}));
}

TEST(DetSigns, RepeatedColumnGivesZero) {
  const auto s = det_signs(tail_calibration(2, {{-1, 2}, {-1, 2}}), types::cycle(4));
  EXPECT_EQ(s.at({3, 4}), 0);
}

TEST(DetSigns, NonPureTypeIsUnsupported) {
  const CombinatorialType t(3, 4, {{1}, {2}, {3}, {4}, {1, 2}});
  EXPECT_THROW(det_signs(tail_calibration(3, {{1, 1, 1}}), t), UnsupportedError);
}

TEST(InU, Examples) {
  EXPECT_TRUE(in_U(tail_calibration(2, {{-1, -1}}), types::simplex(2)));
  EXPECT_FALSE(in_U(tail_calibration(2, {{1, 0}}), types::simplex(2)));
  EXPECT_TRUE(in_U(square_base(), types::cycle(4)));
}

TEST(Admissible, Examples) {
  EXPECT_TRUE(is_admissible(tail_calibration(2, {{-1, -1}}), kP2));
  EXPECT_FALSE(is_admissible(tail_calibration(2, {{1, 1}}), kP2));
  for (int d = 1; d <= 3; ++d)
    EXPECT_TRUE(is_admissible(reference::orthant(d), types::orthant(d)));
  EXPECT_TRUE(is_admissible(square_base(), types::cycle(4)));
  EXPECT_TRUE(is_admissible(reference::p1_times_p2(), types::p1_times_p2()));
}

TEST(Admissible, ReferenceCalibrations) {
  for (int n = 3; n <= 8; ++n) EXPECT_TRUE(is_admissible(reference::cycle(n), types::cycle(n))) << n;
  for (int d = 1; d <= 4; ++d) EXPECT_TRUE(is_admissible(reference::simplex(d), types::simplex(d))) << d;
  EXPECT_EQ(reference::cycle(4), square_base());
}

TEST(Admissible, SimplexChartIsNegativeOrthant) {
  Rng rng(21);
  for (int d = 2; d <= 3; ++d) {
    for (int it = 0; it < 300; ++it) {
      Vector v;
      for (int i = 0; i < d; ++i) v.push_back(rng.rational(3, 4));
      const bool negative = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x < 0; });
      ASSERT_EQ(is_admissible(tail_calibration(static_cast<std::size_t>(d), {v}), types::simplex(d)),
                negative);
    }
  }
}

TEST(Admissible, PlanarCyclesMatchWindingOracle) {
  Rng rng(22);
  for (int n = 3; n <= 6; ++n) {
    int positives = 0;
    for (int it = 0; it < 400; ++it) {
      const Calibration h = random_calibration(rng, 2, static_cast<std::size_t>(n), 3, 2);
      const bool expected = oracle::realizes_cycle(oracle::columns(h));
      ASSERT_EQ(is_admissible(h, types::cycle(n)), expected) << n;
      positives += expected;
    }
    EXPECT_GT(positives, 0) << n;
  }
}

TEST(Admissible, WindingTwicePentagonHasTheReferenceSigns) {
  // Rays at roughly 0, 90, 248, 45 and 202 degrees: consecutive rays turn
  // counterclockwise but the polygon winds twice around the origin.
  const Calibration star = tail_calibration(2, {{-2, -5}, {1, 1}, {-5, -2}});
  const auto c5 = types::cycle(5);
  EXPECT_EQ(oracle::winding_number(oracle::columns(star)), 2);
  EXPECT_EQ(det_signs(star, c5), det_signs(reference::cycle(5), c5));
  EXPECT_TRUE(same_stratum(star, reference::cycle(5), c5));
  EXPECT_FALSE(is_admissible(star, c5));
}

TEST(Admissible, ImpliesInU) {
  Rng rng(23);
  for (int it = 0; it < 300; ++it) {
    const Calibration h = random_calibration(rng, 2, 4, 3, 2);
    if (is_admissible(h, types::cycle(4))) ASSERT_TRUE(in_U(h, types::cycle(4)));
  }
}

TEST(DetSigns, InvariantUnderPositiveRescaling) {
  Rng rng(24);
  for (int it = 0; it < 200; ++it) {
    const Calibration h = random_calibration(rng, 3, 5);
    ASSERT_EQ(det_signs(h, types::p1_times_p2()), det_signs(rescale(h, rng), types::p1_times_p2()));
  }
}

TEST(Completeness, PlanarCoverage) {
  EXPECT_TRUE(is_complete(square_base(), types::cycle(4)));
  EXPECT_TRUE(is_complete(tail_calibration(2, {{-1, -1}}), kP2));
  EXPECT_FALSE(is_complete(reference::orthant(2), types::orthant(2)));
  const CombinatorialType open(2, 3, {{1}, {2}, {3}, {1, 2}, {2, 3}});
  EXPECT_FALSE(is_complete(tail_calibration(2, {{-1, 0}}), open));
}

TEST(ComponentInequalities, SimplexSystemIsNegativeOrthant) {
  Rng rng(25);
  for (int d = 2; d <= 4; ++d) {
    const auto system = component_inequalities(types::simplex(d), reference::simplex(d));
    ASSERT_EQ(system.size(), static_cast<std::size_t>(d + 1));
    for (int it = 0; it < 200; ++it) {
      Vector v;
      for (int i = 0; i < d; ++i) v.push_back(Rational(rng.integer(-3, 3)));
      const bool negative = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x < 0; });
      ASSERT_EQ(satisfies(tail_calibration(static_cast<std::size_t>(d), {v}), system), negative);
    }
  }
}

TEST(ComponentInequalities, SquareSystem) {
  const auto system = component_inequalities(types::cycle(4), square_base());
  EXPECT_EQ(system, (std::vector<SignCondition>{{{1, 2}, 1}, {{1, 4}, -1}, {{2, 3}, 1}, {{3, 4}, 1}}));
  // In coordinates v3 = (a, b), v4 = (c, d): -a > 0, ad - bc > 0, -d > 0.
  Rng rng(26);
  for (int it = 0; it < 500; ++it) {
    const Rational a = rng.integer(-2, 2), b = rng.integer(-2, 2), c = rng.integer(-2, 2),
                   d = rng.integer(-2, 2);
    const bool expected = -a > 0 && a * d - b * c > 0 && -d > 0;
    ASSERT_EQ(satisfies(tail_calibration(2, {{a, b}, {c, d}}), system), expected);
  }
}

TEST(ComponentInequalities, InadmissibleBaseIsRejected) {
  try {
    component_inequalities(types::simplex(2), tail_calibration(2, {{1, 1}}));
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.code(), "inadmissible_base");
  }
}

TEST(SameStratum, Examples) {
  const Calibration h0 = tail_calibration(2, {{-1, -1}});
  const auto s2 = types::simplex(2);
  EXPECT_TRUE(same_stratum(h0, h0, s2));
  EXPECT_TRUE(same_stratum(tail_calibration(2, {{-2, -5}}), h0, s2));
  EXPECT_FALSE(same_stratum(tail_calibration(2, {{1, 1}}), h0, s2));
  EXPECT_FALSE(same_stratum(tail_calibration(2, {{0, -1}}), h0, s2));
}
