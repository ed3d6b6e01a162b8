#pragma once

#include <compare>
#include <vector>

#include "heightmap/geometry.hpp"

namespace heightmap {

/// A local maximum of the height map together with its clique: the sorted
/// 1-based indices of the observations containing it. The clique is empty
/// when the producer was asked for boxes only.
struct MaximalIntersection {
  CanonicalBox box;
  std::vector<BoxIndex> clique;

  friend bool operator==(const MaximalIntersection&, const MaximalIntersection&) = default;
};

/// Orders by box coordinates, then clique. Used to compare outputs as sets.
inline bool canonical_less(const MaximalIntersection& a, const MaximalIntersection& b) {
  if (auto c = a.box.axes <=> b.box.axes; c != 0) return c < 0;
  return a.clique < b.clique;
}

struct ReduceOptions {
  /// Materialize cliques by containment after the sweep (type-2 output).
  bool cliques = true;
};

/// Bookkeeping a sweep reports about itself.
struct SweepStats {
  std::size_t events = 0;
  std::size_t candidates = 0;  ///< local maxima found in a slice
  std::size_t suppressed = 0;  ///< candidates blocked by a zero last-entered cell
  std::size_t working_cells = 0;  ///< cells allocated for height and last-entered slices
  std::size_t scratch_cells = 0;  ///< largest per-event scratch buffer
};

}  // namespace heightmap
