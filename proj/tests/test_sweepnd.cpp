#include <gtest/gtest.h>

#include <random>

#include "heightmap/error.hpp"
#include "heightmap/oracle.hpp"
#include "heightmap/sweep2d.hpp"
#include "heightmap/sweepnd.hpp"
#include "support/figure1.hpp"
#include "support/instances.hpp"

namespace heightmap {
namespace {

CanonicalBox cube(BoxIndex i, Coord lo, Coord hi) { return CanonicalBox{{{lo, hi}, {lo, hi}, {lo, hi}}, i}; }

TEST(ReduceNd, TwoOverlappingCubesGiveOneMaximum) {
  const std::vector<CanonicalBox> boxes{cube(1, 1, 3), cube(2, 2, 4)};
  const auto out = reduce_nd(boxes, 3);
  ASSERT_EQ(out.size(), 1U);
  EXPECT_EQ(out[0].box, cube(0, 2, 3));
  EXPECT_EQ(out[0].clique, (std::vector<BoxIndex>{1, 2}));
  EXPECT_EQ(out, oracle_reduce(boxes, 3));
}

TEST(ReduceNd, DisjointCubesAreTheirOwnMaxima) {
  const std::vector<CanonicalBox> boxes{cube(1, 1, 2), cube(2, 3, 4)};
  const auto out = reduce_nd(boxes, 3);
  ASSERT_EQ(out.size(), 2U);
  EXPECT_EQ(out[0].box, cube(0, 1, 2));
  EXPECT_EQ(out[0].clique, (std::vector<BoxIndex>{1}));
  EXPECT_EQ(out[1].box, cube(0, 3, 4));
  EXPECT_EQ(out[1].clique, (std::vector<BoxIndex>{2}));
}

TEST(ReduceNd, RejectsBadInput) {
  EXPECT_THROW(reduce_nd(std::vector{CanonicalBox{{{1, 2}}, 1}}, 1), ValidationError);
  EXPECT_THROW(reduce_nd(std::vector{cube(1, 1, 2), cube(2, 2, 4)}, 3), ValidationError);
  EXPECT_THROW(reduce_nd(std::vector{cube(1, 1, 2)}, 2), ValidationError);
}

TEST(ReduceNd, MatchesReduce2dExactlyInTwoDimensions) {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 1000; ++round) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 30)(rng);
    const auto boxes = testing::random_canonical(rng, n, 2);
    ASSERT_EQ(reduce_nd(boxes, 2), reduce2d(boxes)) << "round " << round;
  }
}

TEST(SliceScan, LeavingFirstCubeEmitsTheOverlap) {
  // R1 = (1,3]^3 leaves the sweep at 3 while R2 = (2,4]^3 is still active.
  SliceState state(2, 2);
  const std::vector<CanonicalInterval> r1{{1, 3}, {1, 3}};
  const std::vector<CanonicalInterval> r2{{2, 4}, {2, 4}};
  state.enter(r1, 1);
  state.enter(r2, 2);
  const std::vector<Coord> lower_of{1, 2};
  const auto out = slice_scan(state, r1, 3, lower_of);
  ASSERT_EQ(out.size(), 1U);
  EXPECT_EQ(out[0], cube(0, 2, 3));
  const std::vector<Coord> overlap_cell{3, 3};
  EXPECT_EQ(state.entered(overlap_cell), 0U);

  // After R1 leaves, R2 alone is dominated; its region holds the zero.
  state.leave(r1);
  EXPECT_TRUE(slice_scan(state, r2, 4, lower_of).empty());
}

TEST(SliceScan, ZeroedFootprintEmitsNothing) {
  SliceState state(2, 2);
  const std::vector<CanonicalInterval> fp{{1, 3}, {1, 3}};
  state.enter(fp, 1);
  for (Coord x = 2; x <= 3; ++x) {
    for (Coord y = 2; y <= 3; ++y) {
      const std::vector<Coord> cell{x, y};
      state.entered(cell) = 0;
    }
  }
  SweepStats stats;
  EXPECT_TRUE(slice_scan(state, fp, 3, std::vector<Coord>{1}, &stats).empty());
  EXPECT_EQ(stats.candidates, 1U);
  EXPECT_EQ(stats.suppressed, 1U);
}

TEST(SliceScan, RejectsMismatchedFootprint) {
  SliceState state(2, 2);
  const std::vector<CanonicalInterval> flat{{1, 3}};
  EXPECT_THROW(slice_scan(state, flat, 1, std::vector<Coord>{1}), ValidationError);
  const std::vector<CanonicalInterval> wide{{1, 5}, {1, 2}};
  EXPECT_THROW(slice_scan(state, wide, 1, std::vector<Coord>{1}), ValidationError);
}

// The worked 2-D example lifted to 3-D: the sweep still runs along the old
// columns, axis 1 is a staircase that every box covers at cell n+1, and axis
// 2 holds the rows. The remainder of A2 seen when leaving R1 must stay
// suppressed.
std::vector<CanonicalBox> figure1_lifted() {
  auto flat = testing::figure1();
  const auto n = static_cast<Coord>(flat.size());
  std::vector<CanonicalBox> out;
  for (const auto& b : flat) {
    const auto i = static_cast<Coord>(b.index);
    out.push_back(CanonicalBox{{b.axes[0], {i, n + i}, b.axes[1]}, b.index});
  }
  return out;
}

TEST(ReduceNd, LiftedPseudoMaximumIsSuppressed) {
  const auto boxes = figure1_lifted();
  SweepStats stats;
  const auto out = reduce_nd(boxes, 3, {}, &stats);
  EXPECT_EQ(testing::sorted(out), oracle_reduce(boxes, 3));
  for (const auto& m : out) EXPECT_NE(m.box.axes[0].hi, 6) << "emitted while leaving R1";
  EXPECT_GT(stats.suppressed, 0U);

  // Same cliques as the flat example.
  std::vector<std::vector<BoxIndex>> flat_cliques, lifted_cliques;
  for (const auto& m : oracle_reduce(testing::figure1(), 2)) flat_cliques.push_back(m.clique);
  for (const auto& m : out) lifted_cliques.push_back(m.clique);
  std::sort(flat_cliques.begin(), flat_cliques.end());
  std::sort(lifted_cliques.begin(), lifted_cliques.end());
  EXPECT_EQ(flat_cliques, lifted_cliques);
}

// Each reported clique is maximal: its common intersection is nonempty and
// any further box misses it.
void expect_maximal(const std::vector<MaximalIntersection>& out, const std::vector<CanonicalBox>& boxes,
                    std::size_t dim) {
  for (const auto& m : out) {
    CanonicalBox common{std::vector<CanonicalInterval>(dim, {0, static_cast<Coord>(2 * boxes.size())}), 0};
    for (BoxIndex i : m.clique) {
      for (std::size_t a = 0; a < dim; ++a) {
        common.axes[a].lo = std::max(common.axes[a].lo, boxes[i - 1].axes[a].lo);
        common.axes[a].hi = std::min(common.axes[a].hi, boxes[i - 1].axes[a].hi);
      }
    }
    ASSERT_EQ(common, m.box);
    for (const auto& r : boxes) {
      if (std::find(m.clique.begin(), m.clique.end(), r.index) == m.clique.end()) {
        ASSERT_FALSE(r.intersects(common));
      }
    }
  }
}

class ReduceNdOracle : public ::testing::TestWithParam<std::size_t> {};

TEST_P(ReduceNdOracle, MatchesOracleOnRandomData) {
  const std::size_t dim = GetParam();
  const std::size_t max_n = dim == 3 ? 20 : dim == 4 ? 12 : 30;
  std::mt19937_64 rng(40 + dim);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
    const auto boxes = testing::random_canonical(rng, n, dim);
    const auto out = reduce_nd(boxes, dim);
    ASSERT_EQ(testing::sorted(out), oracle_reduce(boxes, dim)) << "d=" << dim << " round " << round;
    expect_maximal(out, boxes, dim);
  }
}

INSTANTIATE_TEST_SUITE_P(Dimensions, ReduceNdOracle, ::testing::Values(2, 3, 4));

TEST(ReduceNd, RealDataWithTiesMatchesOracle) {
  std::mt19937_64 rng(47);
  for (int round = 0; round < 200; ++round) {
    const std::size_t dim = std::uniform_int_distribution<std::size_t>(3, 4)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, dim == 3 ? 20 : 12)(rng);
    const auto canon = canonicalize(testing::random_boxes(rng, n, dim, 4));
    ASSERT_EQ(testing::sorted(reduce_nd(canon.boxes, dim)), oracle_reduce(canon.boxes, dim));
  }
}

TEST(ReduceNd, SliceMemoryIsOneSliceOfEach) {
  std::mt19937_64 rng(48);
  const auto boxes = testing::random_canonical(rng, 10, 3);
  SweepStats stats;
  reduce_nd(boxes, 3, {}, &stats);
  EXPECT_EQ(stats.working_cells, 2U * 20 * 20);
  EXPECT_LE(stats.scratch_cells, 20U * 20);
}

}  // namespace
}  // namespace heightmap
