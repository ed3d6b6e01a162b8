#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "heightmap/geometry.hpp"
#include "heightmap/maximal_intersection.hpp"

namespace heightmap {

/// One column of the height map plus the last-entered index of every row.
/// Rows are 1-based, matching canonical coordinates.
class SweepState {
 public:
  explicit SweepState(std::size_t n) : height_(2 * n, 0), entered_(2 * n, 0) {}

  std::size_t rows() const noexcept { return height_.size(); }

  int& height(Coord row) { return height_[static_cast<std::size_t>(row - 1)]; }
  int height(Coord row) const { return height_[static_cast<std::size_t>(row - 1)]; }
  BoxIndex& entered(Coord row) { return entered_[static_cast<std::size_t>(row - 1)]; }
  BoxIndex entered(Coord row) const { return entered_[static_cast<std::size_t>(row - 1)]; }

  std::span<const int> heights() const noexcept { return height_; }
  std::span<const BoxIndex> last_entered() const noexcept { return entered_; }

  std::size_t allocated_cells() const noexcept { return height_.size() + entered_.size(); }

  Coord column = 0;

 private:
  std::vector<int> height_;
  std::vector<BoxIndex> entered_;
};

/// Scans rows (rows.lo, rows.hi] of the current column for local maxima of
/// the height, as done just before leaving a rectangle with that row range.
/// Every run whose last-entered entries are all nonzero is emitted as
/// (left_of[e_top - 1], column] x (b, top], and its bottom row's entry is
/// zeroed so remainders of it are not reported again.
///
/// `left_of[i - 1]` is the left x boundary of box i. Emitted boxes carry no
/// clique.
std::vector<CanonicalBox> scan_emit(SweepState& state, CanonicalInterval rows, Coord column,
                                    std::span<const Coord> left_of, SweepStats* stats = nullptr);

/// HeightMap sweep for canonical rectangles. Output is in sweep order (by
/// right x boundary, then by row).
std::vector<MaximalIntersection> reduce2d(std::span<const CanonicalBox> boxes,
                                          const ReduceOptions& options = {},
                                          SweepStats* stats = nullptr);

}  // namespace heightmap
