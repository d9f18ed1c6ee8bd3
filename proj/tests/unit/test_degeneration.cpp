#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>

#include "../support/oracles.hpp"
#include "fanmoduli/degeneration.hpp"
#include "fanmoduli/errors.hpp"
#include "fanmoduli/linalg.hpp"

using namespace fanmoduli;
using oracle::tail_calibration;

namespace {

const CombinatorialType kC4 = types::cycle(4);
const CombinatorialType kP2(2, 3, {{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}});

Calibration square(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return tail_calibration(2, {{a, b}, {c, d}});
}

std::vector<Subset> without(const CombinatorialType& t, const std::vector<Subset>& removed) {
  std::vector<Subset> out;
  for (const auto& c : t.cones())
    if (std::find(removed.begin(), removed.end(), c) == removed.end()) out.push_back(c);
  return out;
}

// Class index 4[f1 != 0] + 2[f2 != 0] + [f3 != 0] with f1 = det{2,3},
// f2 = det{3,4}, f3 = -det{1,4}.
int table_class(const SignVector& s) {
  return 4 * (s.at({2, 3}) != 0) + 2 * (s.at({3, 4}) != 0) + (s.at({1, 4}) != 0);
}

}  // namespace

TEST(DegenerateType, SquareExamples) {
  EXPECT_EQ(degenerate_type(square(-2, -2, -1, -1), kC4).cones(), without(kC4, {{3, 4}}));
  EXPECT_EQ(degenerate_type(square(-1, 1, -1, 0), kC4).cones(), without(kC4, {{1, 4}}));
  EXPECT_EQ(degenerate_type(square(0, 0, -1, -1), kC4).cones(),
            (std::vector<Subset>{{}, {1}, {2}, {4}, {1, 2}, {1, 4}}));
}

TEST(DegenerateType, InteriorPointsDoNotDegenerate) {
  Rng rng(51);
  int seen = 0;
  while (seen < 100) {
    const Calibration h = random_calibration(rng, 2, 4, 3, 2);
    if (!is_admissible(h, kC4)) continue;
    ASSERT_EQ(degenerate_type(h, kC4), CombinatorialType(2, 4, kC4.cones()));
    ++seen;
  }
}

TEST(DegenerateType, RemovedSetIsUpwardClosed) {
  Rng rng(52);
  for (int it = 0; it < 500; ++it) {
    Vector v3{rng.integer(-1, 1), rng.integer(-1, 1)}, v4{rng.integer(-1, 1), rng.integer(-1, 1)};
    const auto dt = degenerate_type(tail_calibration(2, {v3, v4}), kC4);
    ASSERT_TRUE(oracle::downward_closed({dt.cones().begin(), dt.cones().end()}));
    ASSERT_TRUE(patterns_included(zero_patterns(dt), zero_patterns(kC4)));
  }
}

TEST(ZeroPatterns, Examples) {
  const auto f = zero_patterns(kC4);
  EXPECT_EQ(f.allowed, kC4.cones());
  const auto degen = zero_patterns(degenerate_type(square(0, 0, -1, -1), kC4));
  EXPECT_EQ(degen.allowed, (std::vector<Subset>{{}, {1}, {2}, {4}, {1, 2}, {1, 4}}));
  EXPECT_TRUE(pattern_member({}, degen));
  EXPECT_FALSE(pattern_member({3}, degen));
  EXPECT_TRUE(pattern_member({1, 2}, f));
  EXPECT_FALSE(pattern_member({1, 3}, f));
}

TEST(ZeroPatterns, DegenerationsAreSubfamilies) {
  for (const auto& t : {kC4, kP2})
    for (const auto& dt : enumerate_degenerations(t))
      EXPECT_TRUE(patterns_included(zero_patterns(dt), zero_patterns(t)));
}

TEST(Classify, Examples) {
  const Calibration h0 = reference::cycle(4);
  const Stratum inside = classify(square(-3, 1, 1, -2), kC4, h0);
  EXPECT_EQ(inside.signs, det_signs(h0, kC4));
  EXPECT_TRUE(inside.interior());
  EXPECT_TRUE(inside.removed_cones(kC4).empty());

  const Stratum f1 = classify(square(0, 0, 1, -1), kC4, h0);
  EXPECT_EQ(f1.signs, (SignVector{{{1, 2}, 1}, {{1, 4}, -1}, {{2, 3}, 0}, {{3, 4}, 0}}));
  EXPECT_EQ(table_class(f1.signs), 1);
  EXPECT_EQ(f1.removed_cones(kC4), (std::vector<Subset>{{3}, {2, 3}, {3, 4}}));

  const Stratum f5 = classify(square(-1, 1, 1, -1), kC4, h0);
  EXPECT_EQ(table_class(f5.signs), 5);
  EXPECT_EQ(f5.removed_cones(kC4), (std::vector<Subset>{{3, 4}}));

  try {
    classify(square(1, 0, 0, -1), kC4, h0);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.code(), "outside_closure");
  }
}

TEST(Classify, TableGoldens) {
  std::ifstream in(FANMODULI_FIXTURE_DIR "/c4_table.json");
  ASSERT_TRUE(in);
  const auto doc = nlohmann::json::parse(in);
  const Calibration h0 = reference::cycle(4);
  std::set<int> classes;
  for (const auto& row : doc.at("rows")) {
    const auto w = row.at("witness").get<std::vector<long>>();
    const Stratum s = classify(square(w[0], w[1], w[2], w[3]), kC4, h0);
    std::vector<Subset> removed;
    for (const auto& c : row.at("removed")) removed.push_back(c.get<Subset>());
    EXPECT_EQ(table_class(s.signs), row.at("class").get<int>());
    EXPECT_EQ(s.removed_cones(kC4), removed);
    // The number of surviving 2-cones is the number of nonzero signs.
    EXPECT_EQ(s.degenerate_type.maximal_cones().size(),
              static_cast<std::size_t>(std::count_if(s.signs.begin(), s.signs.end(),
                                                     [](const auto& kv) { return kv.second != 0; })));
    classes.insert(table_class(s.signs));
  }
  EXPECT_EQ(classes, (std::set<int>{0, 1, 2, 3, 4, 5, 6}));
}

TEST(Classify, RoundTripThroughWitness) {
  for (const auto& s : strata_scan(kC4, reference::cycle(4), {2000, 7, {}, 1})) {
    const Stratum again = classify(s.witness, kC4, reference::cycle(4));
    EXPECT_EQ(again.signs, s.signs);
    EXPECT_EQ(again.degenerate_type, s.degenerate_type);
  }
}

TEST(StrataScan, SquareObservesEveryTableClass) {
  const auto strata = strata_scan(kC4, reference::cycle(4), {10000, 2024, {}, 0});
  std::set<int> boundary;
  int interior = 0;
  for (const auto& s : strata) {
    if (s.interior()) {
      ++interior;
      EXPECT_EQ(table_class(s.signs), 7);
    } else {
      boundary.insert(table_class(s.signs));
    }
    EXPECT_EQ(s.degenerate_type, degenerate_type(s.witness, kC4));
    EXPECT_EQ(det_signs(s.witness, kC4), s.signs);
  }
  EXPECT_EQ(interior, 1);
  EXPECT_EQ(boundary, (std::set<int>{0, 1, 2, 3, 4, 5, 6}));
}

TEST(StrataScan, SimplexFacesAcrossCharts) {
  const auto s2 = types::simplex(2);
  std::set<std::vector<int>> all;
  for (const Subset& chart : {Subset{1, 2}, Subset{1, 3}, Subset{2, 3}}) {
    const auto strata = strata_scan(s2, reference::simplex(2), {3000, 5, chart, 1});
    if (chart == Subset{1, 2}) EXPECT_EQ(strata.size(), 4u);
    for (const auto& s : strata) {
      std::vector<int> zeros;
      for (const auto& kv : s.signs) zeros.push_back(kv.second == 0);
      all.insert(zeros);
    }
  }
  // Interior, three edges and three vertices of the triangle.
  EXPECT_EQ(all.size(), 7u);
}

TEST(StrataScan, SingleConeHasOneStratum) {
  const auto strata = strata_scan(types::orthant(2), reference::orthant(2), {100, 1, {}, 1});
  ASSERT_EQ(strata.size(), 1u);
  EXPECT_TRUE(strata[0].interior());
}

TEST(StrataScan, DeterministicAcrossThreadCounts) {
  const auto one = strata_scan(kC4, reference::cycle(4), {3000, 99, {}, 1});
  const auto four = strata_scan(kC4, reference::cycle(4), {3000, 99, {}, 4});
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].signs, four[i].signs);
    EXPECT_EQ(one[i].witness, four[i].witness);
  }
}

TEST(ProjectedCalibration, Examples) {
  const auto p = projected_calibration(tail_calibration(2, {{-1, 1}, {-1, 0}}), 4, 1);
  EXPECT_EQ(p.w, (Vector{0, 1}));
  EXPECT_EQ(p.alpha, 1);
  EXPECT_EQ(p.row, (Vector{0, 1, 1, 0}));
  EXPECT_EQ(projected_calibration(tail_calibration(2, {{-1, 2}, {-1, 0}}), 4, 1).alpha, 1);
  const auto half = projected_calibration(
      tail_calibration(2, {{oracle::q("1/2"), oracle::q("3/2")}, {-1, 0}}), 4, 1);
  EXPECT_EQ(half.alpha, oracle::q("1/2"));
  EXPECT_EQ(half.row, (Vector{0, 2, 3, 0}));
}

TEST(ProjectedCalibration, Errors) {
  auto code = [](const Calibration& h, int i, int j) {
    try {
      projected_calibration(h, i, j);
    } catch (const Error& e) {
      return e.code();
    }
    return std::string("ok");
  };
  EXPECT_EQ(code(tail_calibration(2, {{-1, 1}, {1, 0}}), 4, 1), "not_opposite");
  EXPECT_EQ(code(tail_calibration(2, {{-1, 1}, {-1, 1}}), 4, 1), "not_opposite");
  EXPECT_EQ(code(tail_calibration(2, {{-1, 1}, {1, -1}}), 3, 3), "bad_index");
  EXPECT_EQ(code(tail_calibration(3, {{-1, 0, 0}}), 4, 1), "unsupported");
}
