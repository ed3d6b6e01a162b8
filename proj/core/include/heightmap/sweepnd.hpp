#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "heightmap/geometry.hpp"
#include "heightmap/maximal_intersection.hpp"

namespace heightmap {

/// One (d-1)-dimensional slice of the height map and of the last-entered
/// indices. The sweep runs along axis 0, as in the planar case; the slice
/// covers axes 1..d-1. Cells are addressed by 1-based canonical coordinates,
/// first slice axis most significant, so flat order is lexicographic order.
class SliceState {
 public:
  SliceState(std::size_t n, std::size_t slice_dims);

  std::size_t slice_dims() const noexcept { return strides_.size(); }
  /// Cells per axis (2n).
  std::size_t extent() const noexcept { return extent_; }
  std::size_t cells() const noexcept { return height_.size(); }

  std::size_t offset(std::span<const Coord> cell) const;

  int& height(std::span<const Coord> cell) { return height_[offset(cell)]; }
  BoxIndex& entered(std::span<const Coord> cell) { return entered_[offset(cell)]; }

  std::span<const int> heights() const noexcept { return height_; }
  std::span<const BoxIndex> last_entered() const noexcept { return entered_; }

  /// Adds `delta` to the height of every cell of `footprint`; on entry also
  /// records `box` as last entered.
  void enter(std::span<const CanonicalInterval> footprint, BoxIndex box);
  void leave(std::span<const CanonicalInterval> footprint);

  std::size_t allocated_cells() const noexcept { return height_.size() + entered_.size(); }

  Coord position = 0;

 private:
  friend std::vector<CanonicalBox> slice_scan(SliceState&, std::span<const CanonicalInterval>,
                                              Coord, std::span<const Coord>, SweepStats*);

  std::size_t extent_;
  std::vector<std::size_t> strides_;
  std::vector<int> height_;
  std::vector<BoxIndex> entered_;
  std::vector<char> visited_;  // footprint-sized scratch for slice_scan
};

/// Finds the local maxima of the height map inside `footprint` of the current
/// slice, just before leaving the box with that cross-section. Candidate
/// regions are connected plateaus of equal height with no higher neighbour.
/// A region is emitted only if every cell's last-entered index is nonzero.
/// The emitted box has the sweep interval (lower_of[e - 1], position] on
/// axis 0, where e is the last-entered index of the region's
/// lexicographically largest cell, and the region's bounding box on the
/// remaining axes. After emission the region's lexicographically smallest
/// cell gets e := 0.
///
/// Regions are emitted in order of their smallest cell.
std::vector<CanonicalBox> slice_scan(SliceState& state, std::span<const CanonicalInterval> footprint,
                                     Coord position, std::span<const Coord> lower_of,
                                     SweepStats* stats = nullptr);

/// HeightMap sweep for d >= 2 dimensional canonical boxes. For d = 2 the
/// output, including order, matches reduce2d.
std::vector<MaximalIntersection> reduce_nd(std::span<const CanonicalBox> boxes, std::size_t dim,
                                           const ReduceOptions& options = {},
                                           SweepStats* stats = nullptr);

}  // namespace heightmap
