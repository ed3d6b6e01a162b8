#pragma once

#include <span>
#include <vector>

#include "heightmap/geometry.hpp"
#include "heightmap/maximal_intersection.hpp"

namespace heightmap {

enum class Engine {
  automatic,  ///< sweep2d for d <= 2, sweepnd otherwise
  sweep2d,
  sweepnd,
  oracle,
};

struct Reduction {
  CanonicalDataset canonical;
  std::vector<MaximalIntersection> maxima;
  /// maxima[j] mapped back to the original coordinates.
  std::vector<ObservationBox> real_boxes;
  SweepStats stats;
};

/// Canonicalize, reduce, and map back. One-dimensional data is reduced by
/// lifting it onto a shared second axis.
Reduction reduce(std::span<const ObservationBox> boxes, Engine engine = Engine::automatic,
                 const ReduceOptions& options = {});

}  // namespace heightmap
