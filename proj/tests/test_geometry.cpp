#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "heightmap/error.hpp"
#include "heightmap/geometry.hpp"
#include "support/instances.hpp"

namespace heightmap {
namespace {

using testing::kInf;

EndpointDescriptor ep(double value, bool closed, Side side, BoxIndex box) {
  return {value, closed, side, 0, box};
}

TEST(CompareEndpoints, ClosedRightBeforeCoincidentOpenLeft) {
  EXPECT_TRUE(compare_endpoints(ep(5, true, Side::right, 2), ep(5, false, Side::left, 1)));
  EXPECT_FALSE(compare_endpoints(ep(5, false, Side::left, 1), ep(5, true, Side::right, 2)));
}

TEST(CompareEndpoints, ClosedLeftBeforeCoincidentClosedRight) {
  EXPECT_TRUE(compare_endpoints(ep(5, true, Side::left, 1), ep(5, true, Side::right, 2)));
  EXPECT_FALSE(compare_endpoints(ep(5, true, Side::right, 2), ep(5, true, Side::left, 1)));
}

TEST(CompareEndpoints, DistinctValuesOrderByValue) {
  EXPECT_TRUE(compare_endpoints(ep(3, true, Side::right, 9), ep(7, false, Side::left, 1)));
  EXPECT_FALSE(compare_endpoints(ep(7, false, Side::left, 1), ep(3, true, Side::right, 9)));
  EXPECT_TRUE(compare_endpoints(ep(-kInf, false, Side::left, 5), ep(-1e300, false, Side::left, 1)));
  EXPECT_TRUE(compare_endpoints(ep(1e300, true, Side::right, 5), ep(kInf, false, Side::right, 1)));
}

TEST(CompareEndpoints, IdenticalKindsOrderByIndex) {
  EXPECT_TRUE(compare_endpoints(ep(5, false, Side::left, 2), ep(5, false, Side::left, 4)));
  EXPECT_FALSE(compare_endpoints(ep(5, false, Side::left, 4), ep(5, false, Side::left, 2)));
  EXPECT_TRUE(compare_endpoints(ep(kInf, false, Side::right, 1), ep(kInf, false, Side::right, 3)));
}

TEST(CompareEndpoints, RemainingTieKinds) {
  // open right ends before open left starts: (.,5) and (5,.) are disjoint
  EXPECT_TRUE(compare_endpoints(ep(5, false, Side::right, 9), ep(5, false, Side::left, 1)));
  // open right before closed left: (.,5) and [5,.) are disjoint
  EXPECT_TRUE(compare_endpoints(ep(5, false, Side::right, 9), ep(5, true, Side::left, 1)));
  // [5 starts before (5
  EXPECT_TRUE(compare_endpoints(ep(5, true, Side::left, 9), ep(5, false, Side::left, 1)));
  // 5) ends before 5]
  EXPECT_TRUE(compare_endpoints(ep(5, false, Side::right, 9), ep(5, true, Side::right, 1)));
}

std::vector<EndpointDescriptor> random_endpoints(std::mt19937_64& rng, std::size_t count) {
  std::set<std::tuple<double, bool, Side, BoxIndex>> seen;
  std::vector<EndpointDescriptor> out;
  while (out.size() < count) {
    const int pick = std::uniform_int_distribution<int>(0, 9)(rng);
    const Side side = testing::coin(rng) ? Side::left : Side::right;
    double value = testing::pooled(rng, 3);
    if (pick == 0) value = side == Side::left ? -kInf : kInf;
    const bool closed = std::isfinite(value) && testing::coin(rng);
    const auto box = static_cast<BoxIndex>(std::uniform_int_distribution<int>(1, 4)(rng));
    if (!seen.insert({value, closed, side, box}).second) continue;
    out.push_back({value, closed, side, 0, box});
  }
  return out;
}

TEST(CompareEndpoints, IsAStrictTotalOrder) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    const auto eps = random_endpoints(rng, 12);
    for (const auto& a : eps) {
      ASSERT_FALSE(compare_endpoints(a, a));
      for (const auto& b : eps) {
        if (a == b) continue;
        // Totality and antisymmetry: exactly one direction holds.
        ASSERT_NE(compare_endpoints(a, b), compare_endpoints(b, a));
        for (const auto& c : eps) {
          if (compare_endpoints(a, b) && compare_endpoints(b, c)) {
            ASSERT_TRUE(compare_endpoints(a, c));
          }
        }
      }
    }
  }
}

TEST(CompareEndpoints, SortIsIndependentOfInputOrder) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    auto eps = random_endpoints(rng, 20);
    auto first = eps;
    std::sort(first.begin(), first.end(), compare_endpoints);
    std::shuffle(eps.begin(), eps.end(), rng);
    std::sort(eps.begin(), eps.end(), compare_endpoints);
    ASSERT_EQ(first, eps);
  }
}

ObservationBox square(double lo, double hi, bool lo_closed = false, bool hi_closed = true) {
  return ObservationBox({Interval(lo, hi, lo_closed, hi_closed), Interval(lo, hi, lo_closed, hi_closed)});
}

TEST(Canonicalize, TouchingBoxesStayApart) {
  const std::vector<ObservationBox> boxes{square(0, 2), square(2, 4)};
  const auto canon = canonicalize(boxes);
  ASSERT_EQ(canon.boxes.size(), 2U);
  for (std::size_t a = 0; a < 2; ++a) {
    EXPECT_EQ(canon.boxes[0].axes[a], (CanonicalInterval{1, 2}));
    EXPECT_EQ(canon.boxes[1].axes[a], (CanonicalInterval{3, 4}));
  }
  EXPECT_FALSE(canon.boxes[0].intersects(canon.boxes[1]));
}

TEST(Canonicalize, ClosedLeftOverlapsCoincidentClosedRight) {
  const std::vector<ObservationBox> boxes{square(0, 2), square(2, 4, true, true)};
  const auto canon = canonicalize(boxes);
  for (std::size_t a = 0; a < 2; ++a) {
    EXPECT_EQ(canon.boxes[0].axes[a], (CanonicalInterval{1, 3}));
    EXPECT_EQ(canon.boxes[1].axes[a], (CanonicalInterval{2, 4}));
  }
  EXPECT_TRUE(canon.boxes[0].intersects(canon.boxes[1]));
}

TEST(Canonicalize, SingleUnboundedBox) {
  const std::vector<ObservationBox> boxes{square(0, kInf)};
  const auto canon = canonicalize(boxes);
  EXPECT_EQ(canon.boxes[0].axes[0], (CanonicalInterval{1, 2}));
  EXPECT_EQ(canon.boxes[0].axes[1], (CanonicalInterval{1, 2}));
  EXPECT_EQ(canon.boxes[0].index, 1U);
}

TEST(Canonicalize, RejectsEmptyBoxWithIndexAndAxis) {
  const std::vector<ObservationBox> boxes{
      square(0, 2), ObservationBox({Interval(0, 1), Interval(3, 3)})};  // (3,3] is empty
  try {
    canonicalize(boxes);
    FAIL() << "expected EmptyBoxError";
  } catch (const EmptyBoxError& e) {
    EXPECT_EQ(e.box_index(), 2U);
    EXPECT_EQ(e.axis(), 1U);
  }
}

TEST(Canonicalize, RejectsMisplacedInfinitiesAndNaN) {
  EXPECT_THROW(canonicalize(std::vector{ObservationBox({Interval(kInf, kInf)})}), EmptyBoxError);
  EXPECT_THROW(canonicalize(std::vector{ObservationBox({Interval(-kInf, -kInf)})}), EmptyBoxError);
  EXPECT_THROW(canonicalize(std::vector{ObservationBox({Interval(0, std::nan(""))})}), EmptyBoxError);
  EXPECT_THROW(canonicalize(std::vector{ObservationBox({Interval(1, 0)})}), EmptyBoxError);
}

TEST(Canonicalize, RejectsMixedDimensionsAndEmptyInput) {
  const std::vector<ObservationBox> mixed{square(0, 1), ObservationBox({Interval(0, 1)})};
  EXPECT_THROW(canonicalize(mixed), ValidationError);
  EXPECT_THROW(canonicalize(std::vector<ObservationBox>{}), ValidationError);
}

TEST(Canonicalize, ExactObservationIsLegal) {
  const std::vector<ObservationBox> boxes{ObservationBox({Interval(1, 1, true, true)})};
  const auto canon = canonicalize(boxes);
  EXPECT_EQ(canon.boxes[0].axes[0], (CanonicalInterval{1, 2}));
}

TEST(Canonicalize, CoordinatesArePermutationsPerAxis) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
    const std::size_t d = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const auto canon = canonicalize(testing::random_boxes(rng, n, d));
    ASSERT_NO_THROW(validate_canonical(canon.boxes, d));
  }
}

// Emptiness of every subset intersection agrees between real and canonical
// boxes. Subsets are sampled; pairs are checked exhaustively.
TEST(Canonicalize, PreservesIntersectionStructure) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 30)(rng);
    const std::size_t d = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const auto boxes = testing::random_boxes(rng, n, d, 5);
    const auto canon = canonicalize(boxes);

    auto check = [&](const std::vector<std::size_t>& subset) {
      std::vector<const ObservationBox*> real;
      CanonicalBox common{std::vector<CanonicalInterval>(d, {0, static_cast<Coord>(2 * n)}), 0};
      for (std::size_t i : subset) {
        real.push_back(&boxes[i]);
        for (std::size_t a = 0; a < d; ++a) {
          common.axes[a].lo = std::max(common.axes[a].lo, canon.boxes[i].axes[a].lo);
          common.axes[a].hi = std::min(common.axes[a].hi, canon.boxes[i].axes[a].hi);
        }
      }
      const bool canon_nonempty = std::all_of(common.axes.begin(), common.axes.end(),
                                              [](const CanonicalInterval& iv) { return iv.lo < iv.hi; });
      ASSERT_EQ(testing::intersect(real).has_value(), canon_nonempty);
    };

    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) check({i, j});
    }
    for (int s = 0; s < 50; ++s) {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < n; ++i) {
        if (testing::coin(rng, 0.3)) subset.push_back(i);
      }
      if (!subset.empty()) check(subset);
    }
  }
}

TEST(MapBack, SingleBoxMapsToItself) {
  const std::vector<ObservationBox> boxes{square(0, kInf)};
  const auto canon = canonicalize(boxes);
  const ObservationBox back = map_back(canon.boxes[0], canon.map);
  EXPECT_EQ(back, boxes[0]);
  EXPECT_FALSE(back.axis(0).lower().closed);
}

TEST(MapBack, SharedPointBecomesClosedDegenerateInterval) {
  const std::vector<ObservationBox> boxes{square(0, 2), square(2, 4, true, true)};
  const auto canon = canonicalize(boxes);
  const CanonicalBox overlap{{{2, 3}, {2, 3}}, 0};
  const ObservationBox back = map_back(overlap, canon.map);
  for (std::size_t a = 0; a < 2; ++a) {
    EXPECT_EQ(back.axis(a), Interval(2, 2, true, true));
  }
  const auto direct = testing::intersect({&boxes[0], &boxes[1]});
  ASSERT_TRUE(direct.has_value());
  EXPECT_EQ(back, *direct);
}

TEST(MapBack, RejectsOutOfRangeCoordinates) {
  const std::vector<ObservationBox> boxes{square(0, 2)};
  const auto canon = canonicalize(boxes);
  EXPECT_THROW(map_back(CanonicalBox{{{0, 2}, {1, 2}}, 0}, canon.map), ValidationError);
  EXPECT_THROW(map_back(CanonicalBox{{{1, 3}, {1, 2}}, 0}, canon.map), ValidationError);
  EXPECT_THROW(map_back(CanonicalBox{{{1, 2}}, 0}, canon.map), ValidationError);
}

TEST(MapBack, RoundTripIsIdentityOnPointSets) {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 30)(rng);
    const std::size_t d = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const auto boxes = testing::random_boxes(rng, n, d);
    const auto canon = canonicalize(boxes);
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_EQ(map_back(canon.boxes[i], canon.map), boxes[i]) << "box " << i + 1;
    }
  }
}

TEST(ValidateCanonical, RejectsDuplicatesAndRangeErrors) {
  const std::vector<CanonicalBox> dup{{{{1, 3}, {1, 2}}, 1}, {{{2, 3}, {3, 4}}, 2}};
  EXPECT_THROW(validate_canonical(dup, 2), ValidationError);
  const std::vector<CanonicalBox> range{{{{1, 5}, {1, 2}}, 1}, {{{2, 3}, {3, 4}}, 2}};
  EXPECT_THROW(validate_canonical(range, 2), ValidationError);
  const std::vector<CanonicalBox> reversed{{{{2, 1}, {1, 2}}, 1}, {{{3, 4}, {3, 4}}, 2}};
  EXPECT_THROW(validate_canonical(reversed, 2), ValidationError);
  const std::vector<CanonicalBox> ok{{{{1, 2}, {1, 2}}, 1}, {{{3, 4}, {3, 4}}, 2}};
  EXPECT_NO_THROW(validate_canonical(ok, 2));
}

TEST(Interval, InfiniteEndpointsAreNeverClosed) {
  const Interval iv(0, kInf, false, true);
  EXPECT_FALSE(iv.upper().closed);
  EXPECT_TRUE(iv.contains(1e308));
  EXPECT_FALSE(iv.contains(kInf));
  EXPECT_FALSE(iv.contains(0));
}

}  // namespace
}  // namespace heightmap
