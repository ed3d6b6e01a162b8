#include "heightmap/sweepnd.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cliques.hpp"
#include "heightmap/error.hpp"

namespace heightmap {
namespace {

void check_footprint(std::span<const CanonicalInterval> footprint, std::size_t dims,
                     std::size_t extent) {
  if (footprint.size() != dims) {
    throw ValidationError("footprint has " + std::to_string(footprint.size()) + " axes, slice has " +
                          std::to_string(dims));
  }
  for (const auto& [lo, hi] : footprint) {
    if (lo < 0 || lo >= hi || static_cast<std::size_t>(hi) > extent) {
      throw ValidationError("footprint interval (" + std::to_string(lo) + "," + std::to_string(hi) +
                            "] outside the slice");
    }
  }
}

// Visits every global flat offset of the footprint in lexicographic order.
template <typename Fn>
void for_each_offset(std::span<const CanonicalInterval> footprint,
                     std::span<const std::size_t> strides, Fn&& fn) {
  const std::size_t dims = footprint.size();
  std::vector<Coord> cell(dims);
  std::size_t offset = 0;
  for (std::size_t a = 0; a < dims; ++a) {
    cell[a] = footprint[a].lo + 1;
    offset += static_cast<std::size_t>(cell[a] - 1) * strides[a];
  }
  while (true) {
    fn(offset);
    std::size_t a = dims;
    while (a > 0) {
      --a;
      if (cell[a] < footprint[a].hi) {
        ++cell[a];
        offset += strides[a];
        break;
      }
      offset -= static_cast<std::size_t>(cell[a] - footprint[a].lo - 1) * strides[a];
      cell[a] = footprint[a].lo + 1;
      if (a == 0) return;
    }
  }
}

}  // namespace

SliceState::SliceState(std::size_t n, std::size_t slice_dims) : extent_(2 * n) {
  if (slice_dims == 0) throw ValidationError("slice needs at least one axis");
  strides_.assign(slice_dims, 1);
  for (std::size_t a = slice_dims - 1; a > 0; --a) strides_[a - 1] = strides_[a] * extent_;
  const std::size_t cells = strides_[0] * extent_;
  height_.assign(cells, 0);
  entered_.assign(cells, 0);
}

std::size_t SliceState::offset(std::span<const Coord> cell) const {
  if (cell.size() != strides_.size()) {
    throw ValidationError("cell has " + std::to_string(cell.size()) + " coordinates, slice has " +
                          std::to_string(strides_.size()));
  }
  std::size_t off = 0;
  for (std::size_t a = 0; a < cell.size(); ++a) {
    if (cell[a] < 1 || static_cast<std::size_t>(cell[a]) > extent_) {
      throw ValidationError("cell coordinate " + std::to_string(cell[a]) + " outside 1.." +
                            std::to_string(extent_));
    }
    off += static_cast<std::size_t>(cell[a] - 1) * strides_[a];
  }
  return off;
}

void SliceState::enter(std::span<const CanonicalInterval> footprint, BoxIndex box) {
  check_footprint(footprint, slice_dims(), extent_);
  for_each_offset(footprint, strides_, [&](std::size_t off) {
    ++height_[off];
    entered_[off] = box;
  });
}

void SliceState::leave(std::span<const CanonicalInterval> footprint) {
  check_footprint(footprint, slice_dims(), extent_);
  for_each_offset(footprint, strides_, [&](std::size_t off) { --height_[off]; });
}

std::vector<CanonicalBox> slice_scan(SliceState& state, std::span<const CanonicalInterval> footprint,
                                     Coord position, std::span<const Coord> lower_of,
                                     SweepStats* stats) {
  const std::size_t dims = state.slice_dims();
  check_footprint(footprint, dims, state.extent_);

  // Local (footprint) strides, axis 0 most significant like the slice.
  std::vector<std::size_t> size(dims), local_stride(dims, 1);
  for (std::size_t a = 0; a < dims; ++a) size[a] = static_cast<std::size_t>(footprint[a].hi - footprint[a].lo);
  for (std::size_t a = dims - 1; a > 0; --a) local_stride[a - 1] = local_stride[a] * size[a];
  const std::size_t total = local_stride[0] * size[0];

  auto& visited = state.visited_;
  visited.assign(total, 0);
  if (stats) stats->scratch_cells = std::max(stats->scratch_cells, total);

  auto global_of = [&](std::size_t local) {
    std::size_t g = 0;
    for (std::size_t a = 0; a < dims; ++a) {
      const std::size_t c = (local / local_stride[a]) % size[a];
      g += (static_cast<std::size_t>(footprint[a].lo) + c) * state.strides_[a];
    }
    return g;
  };

  std::vector<CanonicalBox> emitted;
  std::vector<std::size_t> queue;
  std::vector<std::size_t> cmin(dims), cmax(dims);

  for (std::size_t seed = 0; seed < total; ++seed) {
    if (visited[seed]) continue;
    visited[seed] = 1;
    const std::size_t seed_global = global_of(seed);
    const int plateau = state.height_[seed_global];

    bool local_max = true;
    bool unblocked = true;
    std::size_t top = seed;
    std::fill(cmin.begin(), cmin.end(), static_cast<std::size_t>(-1));
    std::fill(cmax.begin(), cmax.end(), 0);

    queue.assign(1, seed);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      const std::size_t g = global_of(u);
      if (state.entered_[g] == 0) unblocked = false;
      top = std::max(top, u);
      for (std::size_t a = 0; a < dims; ++a) {
        const std::size_t c = (u / local_stride[a]) % size[a];
        cmin[a] = std::min(cmin[a], c);
        cmax[a] = std::max(cmax[a], c);
        // Neighbours outside the footprint lose the box being left, so they
        // are never higher.
        if (c > 0) {
          const int h = state.height_[g - state.strides_[a]];
          if (h > plateau) {
            local_max = false;
          } else if (h == plateau && !visited[u - local_stride[a]]) {
            visited[u - local_stride[a]] = 1;
            queue.push_back(u - local_stride[a]);
          }
        }
        if (c + 1 < size[a]) {
          const int h = state.height_[g + state.strides_[a]];
          if (h > plateau) {
            local_max = false;
          } else if (h == plateau && !visited[u + local_stride[a]]) {
            visited[u + local_stride[a]] = 1;
            queue.push_back(u + local_stride[a]);
          }
        }
      }
    }

    if (!local_max) continue;
    if (stats) ++stats->candidates;
    if (!unblocked) {
      if (stats) ++stats->suppressed;
      continue;
    }
    const BoxIndex last = state.entered_[global_of(top)];
    if (last > lower_of.size()) {
      throw ValidationError("no lower boundary known for box " + std::to_string(last));
    }
    CanonicalBox box;
    box.axes.resize(dims + 1);
    box.axes[0] = {lower_of[last - 1], position};
    for (std::size_t a = 0; a < dims; ++a) {
      box.axes[a + 1] = {footprint[a].lo + static_cast<Coord>(cmin[a]),
                         footprint[a].lo + static_cast<Coord>(cmax[a]) + 1};
    }
    emitted.push_back(std::move(box));
    state.entered_[seed_global] = 0;
  }
  return emitted;
}

std::vector<MaximalIntersection> reduce_nd(std::span<const CanonicalBox> boxes, std::size_t dim,
                                           const ReduceOptions& options, SweepStats* stats) {
  if (dim < 2) throw ValidationError("reduce_nd needs d >= 2, got d=" + std::to_string(dim));
  validate_canonical(boxes, dim);
  const std::size_t n = boxes.size();
  constexpr std::size_t sweep_axis = 0;

  struct Event {
    BoxIndex box;
    bool enter;
  };
  std::vector<Event> events(2 * n);
  std::vector<Coord> lower_of(n);
  for (const CanonicalBox& r : boxes) {
    events[static_cast<std::size_t>(r.axes[sweep_axis].lo - 1)] = {r.index, true};
    events[static_cast<std::size_t>(r.axes[sweep_axis].hi - 1)] = {r.index, false};
    lower_of[r.index - 1] = r.axes[sweep_axis].lo;
  }

  SliceState state(n, dim - 1);
  if (stats) stats->working_cells = state.allocated_cells();

  std::vector<CanonicalBox> emitted;
  for (Coord j = 1; j <= static_cast<Coord>(2 * n); ++j) {
    state.position = j;
    const Event ev = events[static_cast<std::size_t>(j - 1)];
    const auto footprint = std::span<const CanonicalInterval>(boxes[ev.box - 1].axes).subspan(1);
    if (ev.enter) {
      state.enter(footprint, ev.box);
    } else {
      auto found = slice_scan(state, footprint, j, lower_of, stats);
      emitted.insert(emitted.end(), std::make_move_iterator(found.begin()),
                     std::make_move_iterator(found.end()));
      state.leave(footprint);
    }
    if (stats) ++stats->events;
  }
  const auto h = state.heights();
  if (std::any_of(h.begin(), h.end(), [](int v) { return v != 0; })) {
    throw std::logic_error("reduce_nd: height map not empty after the last event");
  }
  return detail::attach_cliques(std::move(emitted), boxes, options.cliques);
}

}  // namespace heightmap
