#pragma once

#include <span>
#include <vector>

#include "heightmap/geometry.hpp"
#include "heightmap/maximal_intersection.hpp"

namespace heightmap::detail {

// Turns the sweep's type-1 output into type-2 output: each emitted box is
// paired with the observations that contain it. O(n) per box.
inline std::vector<MaximalIntersection> attach_cliques(std::vector<CanonicalBox> emitted,
                                                       std::span<const CanonicalBox> boxes,
                                                       bool with_cliques) {
  std::vector<MaximalIntersection> out;
  out.reserve(emitted.size());
  for (auto& box : emitted) {
    MaximalIntersection mi{std::move(box), {}};
    if (with_cliques) {
      for (const CanonicalBox& r : boxes) {
        if (mi.box.inside(r)) mi.clique.push_back(r.index);
      }
    }
    out.push_back(std::move(mi));
  }
  return out;
}

}  // namespace heightmap::detail
