#include "heightmap/reduce.hpp"

#include "heightmap/error.hpp"
#include "heightmap/oracle.hpp"
#include "heightmap/sweep2d.hpp"
#include "heightmap/sweepnd.hpp"

namespace heightmap {
namespace {

std::vector<MaximalIntersection> run(std::span<const CanonicalBox> boxes, std::size_t dim,
                                     Engine engine, const ReduceOptions& options, SweepStats& stats) {
  switch (engine) {
    case Engine::automatic:
      return dim == 2 ? reduce2d(boxes, options, &stats) : reduce_nd(boxes, dim, options, &stats);
    case Engine::sweep2d:
      if (dim != 2) throw ValidationError("sweep2d needs d=2");
      return reduce2d(boxes, options, &stats);
    case Engine::sweepnd:
      return reduce_nd(boxes, dim, options, &stats);
    case Engine::oracle:
      return oracle_reduce(boxes, dim);
  }
  throw ValidationError("unknown engine");
}

}  // namespace

Reduction reduce(std::span<const ObservationBox> boxes, Engine engine, const ReduceOptions& options) {
  Reduction out;
  out.canonical = canonicalize(boxes);
  const std::size_t dim = out.canonical.dim;

  if (dim == 1) {
    // Every box spans the same extra axis, so cliques are unchanged.
    std::vector<CanonicalBox> lifted = out.canonical.boxes;
    const auto n = static_cast<Coord>(lifted.size());
    for (CanonicalBox& b : lifted) {
      const auto i = static_cast<Coord>(b.index);
      b.axes.push_back({i, n + i});
    }
    out.maxima = run(lifted, 2, engine, options, out.stats);
    for (MaximalIntersection& mi : out.maxima) mi.box.axes.pop_back();
  } else {
    out.maxima = run(out.canonical.boxes, dim, engine, options, out.stats);
  }

  out.real_boxes.reserve(out.maxima.size());
  for (const MaximalIntersection& mi : out.maxima) {
    out.real_boxes.push_back(map_back(mi.box, out.canonical.map));
  }
  return out;
}

}  // namespace heightmap
