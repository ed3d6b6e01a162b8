#include "heightmap/sweep2d.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cliques.hpp"
#include "heightmap/error.hpp"

namespace heightmap {
namespace {

bool run_unblocked(const SweepState& state, Coord bottom, Coord top) {
  for (Coord k = bottom + 1; k <= top; ++k) {
    if (state.entered(k) == 0) return false;
  }
  return true;
}

}  // namespace

std::vector<CanonicalBox> scan_emit(SweepState& state, CanonicalInterval rows, Coord column,
                                    std::span<const Coord> left_of, SweepStats* stats) {
  if (rows.lo < 0 || rows.hi > static_cast<Coord>(state.rows()) || rows.lo >= rows.hi) {
    throw ValidationError("row range (" + std::to_string(rows.lo) + "," + std::to_string(rows.hi) +
                          "] outside the sweep state");
  }
  std::vector<CanonicalBox> emitted;

  auto try_emit = [&](Coord bottom, Coord top) {
    if (stats) ++stats->candidates;
    if (!run_unblocked(state, bottom, top)) {
      if (stats) ++stats->suppressed;
      return;
    }
    const BoxIndex last = state.entered(top);
    if (last > left_of.size()) {
      throw ValidationError("no left boundary known for box " + std::to_string(last));
    }
    emitted.push_back(CanonicalBox{{{left_of[last - 1], column}, {bottom, top}}, 0});
    state.entered(bottom + 1) = 0;
  };

  // b is the bottom of the current rising edge; 0 means "no candidate run".
  Coord b = rows.lo;
  for (Coord k = rows.lo + 1; k < rows.hi; ++k) {
    const int here = state.height(k);
    const int next = state.height(k + 1);
    if (next < here && b > 0) {
      try_emit(b, k);
      b = 0;
    }
    if (next > here) b = k;
  }
  if (b > 0) try_emit(b, rows.hi);
  return emitted;
}

std::vector<MaximalIntersection> reduce2d(std::span<const CanonicalBox> boxes,
                                          const ReduceOptions& options, SweepStats* stats) {
  validate_canonical(boxes, 2);
  const std::size_t n = boxes.size();

  // Event at each x coordinate: the box owning it, signed by side.
  struct Event {
    BoxIndex box;
    bool enter;
  };
  std::vector<Event> events(2 * n);
  std::vector<Coord> left_of(n);
  for (const CanonicalBox& r : boxes) {
    events[static_cast<std::size_t>(r.axes[0].lo - 1)] = {r.index, true};
    events[static_cast<std::size_t>(r.axes[0].hi - 1)] = {r.index, false};
    left_of[r.index - 1] = r.axes[0].lo;
  }

  SweepState state(n);
  if (stats) stats->working_cells = state.allocated_cells();

  std::vector<CanonicalBox> emitted;
  for (Coord j = 1; j <= static_cast<Coord>(2 * n); ++j) {
    state.column = j;
    const Event ev = events[static_cast<std::size_t>(j - 1)];
    const CanonicalInterval rows = boxes[ev.box - 1].axes[1];
    if (ev.enter) {
      for (Coord k = rows.lo + 1; k <= rows.hi; ++k) {
        ++state.height(k);
        state.entered(k) = ev.box;
      }
    } else {
      auto found = scan_emit(state, rows, j, left_of, stats);
      emitted.insert(emitted.end(), std::make_move_iterator(found.begin()),
                     std::make_move_iterator(found.end()));
      for (Coord k = rows.lo + 1; k <= rows.hi; ++k) --state.height(k);
    }
    if (stats) ++stats->events;
  }
  const auto h = state.heights();
  if (std::any_of(h.begin(), h.end(), [](int v) { return v != 0; })) {
    throw std::logic_error("reduce2d: height map not empty after the last event");
  }
  return detail::attach_cliques(std::move(emitted), boxes, options.cliques);
}

}  // namespace heightmap
