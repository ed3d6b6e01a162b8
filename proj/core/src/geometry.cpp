#include "heightmap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "heightmap/error.hpp"

namespace heightmap {

Interval::Interval(double lower, double upper, bool lower_closed, bool upper_closed)
    : lower_{lower, lower_closed && std::isfinite(lower)},
      upper_{upper, upper_closed && std::isfinite(upper)} {}

bool Interval::empty() const noexcept {
  const double lo = lower_.value;
  const double hi = upper_.value;
  if (std::isnan(lo) || std::isnan(hi)) return true;
  if (lo == INFINITY || hi == -INFINITY) return true;
  if (lo < hi) return false;
  return !(lo == hi && lower_.closed && upper_.closed);
}

bool Interval::contains(double x) const noexcept {
  if (!std::isfinite(x)) return false;
  const bool above = lower_.closed ? x >= lower_.value : x > lower_.value;
  const bool below = upper_.closed ? x <= upper_.value : x < upper_.value;
  return above && below;
}

bool ObservationBox::empty() const noexcept {
  return axes_.empty() ||
         std::any_of(axes_.begin(), axes_.end(), [](const Interval& iv) { return iv.empty(); });
}

bool ObservationBox::contains(std::span<const double> point) const {
  if (point.size() != axes_.size()) {
    throw ValidationError("point has " + std::to_string(point.size()) + " coordinates, box has " +
                          std::to_string(axes_.size()));
  }
  for (std::size_t a = 0; a < axes_.size(); ++a) {
    if (!axes_[a].contains(point[a])) return false;
  }
  return true;
}

bool compare_endpoints(const EndpointDescriptor& a, const EndpointDescriptor& b) noexcept {
  if (a.value != b.value) return a.value < b.value;

  const bool a_right = a.side == Side::right;
  const bool b_right = b.side == Side::right;
  if (a_right == b_right && a.closed == b.closed) return a.box < b.box;
  // Opposite kinds: the right endpoint goes first, so the intervals stay apart.
  if (a_right != b_right && a.closed != b.closed) return a_right;
  // Closed left or open right sorts first.
  return a_right != a.closed;
}

bool CanonicalBox::inside(const CanonicalBox& outer) const noexcept {
  if (outer.axes.size() != axes.size()) return false;
  for (std::size_t a = 0; a < axes.size(); ++a) {
    if (outer.axes[a].lo > axes[a].lo || axes[a].hi > outer.axes[a].hi) return false;
  }
  return true;
}

bool CanonicalBox::intersects(const CanonicalBox& other) const noexcept {
  if (other.axes.size() != axes.size()) return false;
  for (std::size_t a = 0; a < axes.size(); ++a) {
    if (std::max(axes[a].lo, other.axes[a].lo) >= std::min(axes[a].hi, other.axes[a].hi)) {
      return false;
    }
  }
  return true;
}

CanonicalMap::CanonicalMap(std::vector<std::vector<EndpointDescriptor>> sorted)
    : sorted_(std::move(sorted)) {}

const EndpointDescriptor& CanonicalMap::endpoint(std::size_t axis, Coord k) const {
  if (axis >= sorted_.size()) {
    throw ValidationError("axis " + std::to_string(axis) + " out of range");
  }
  const auto& list = sorted_[axis];
  if (k < 1 || static_cast<std::size_t>(k) > list.size()) {
    throw ValidationError("canonical coordinate " + std::to_string(k) + " outside 1.." +
                          std::to_string(list.size()));
  }
  return list[static_cast<std::size_t>(k - 1)];
}

bool CanonicalMap::value_in_cell(std::size_t axis, Coord k) const {
  const EndpointDescriptor& ep = endpoint(axis, k);
  // Right-closed and left-open endpoints keep their value in the cell below.
  return (ep.side == Side::right) == ep.closed;
}

void validate_boxes(std::span<const ObservationBox> boxes) {
  if (boxes.empty()) throw ValidationError("dataset is empty");
  const std::size_t dim = boxes.front().dim();
  if (dim == 0) throw ValidationError("boxes must have at least one axis");
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (boxes[i].dim() != dim) {
      throw ValidationError("box " + std::to_string(i + 1) + " has dimension " +
                            std::to_string(boxes[i].dim()) + ", expected " + std::to_string(dim));
    }
    for (std::size_t a = 0; a < dim; ++a) {
      if (boxes[i].axis(a).empty()) throw EmptyBoxError(i + 1, a);
    }
  }
}

CanonicalDataset canonicalize(std::span<const ObservationBox> boxes) {
  validate_boxes(boxes);
  const std::size_t n = boxes.size();
  const std::size_t dim = boxes.front().dim();

  CanonicalDataset out;
  out.dim = dim;
  out.boxes.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.boxes[i].axes.resize(dim);
    out.boxes[i].index = static_cast<BoxIndex>(i + 1);
  }

  std::vector<std::vector<EndpointDescriptor>> sorted(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    auto& list = sorted[a];
    list.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      const Interval& iv = boxes[i].axis(a);
      const auto box = static_cast<BoxIndex>(i + 1);
      list.push_back({iv.lower().value, iv.lower().closed, Side::left, a, box});
      list.push_back({iv.upper().value, iv.upper().closed, Side::right, a, box});
    }
    std::sort(list.begin(), list.end(), compare_endpoints);
    for (std::size_t k = 0; k < list.size(); ++k) {
      auto& target = out.boxes[list[k].box - 1].axes[a];
      (list[k].side == Side::left ? target.lo : target.hi) = static_cast<Coord>(k + 1);
    }
  }
  out.map = CanonicalMap(std::move(sorted));
  return out;
}

ObservationBox map_back(const CanonicalBox& box, const CanonicalMap& map) {
  if (box.dim() != map.dim()) {
    throw ValidationError("canonical box has dimension " + std::to_string(box.dim()) +
                          ", map has " + std::to_string(map.dim()));
  }
  std::vector<Interval> axes;
  axes.reserve(box.dim());
  for (std::size_t a = 0; a < box.dim(); ++a) {
    const auto [lo, hi] = box.axes[a];
    if (lo >= hi) {
      throw ValidationError("canonical interval (" + std::to_string(lo) + "," +
                            std::to_string(hi) + "] is empty");
    }
    const EndpointDescriptor& lower = map.endpoint(a, lo);
    const EndpointDescriptor& upper = map.endpoint(a, hi);
    axes.emplace_back(lower.value, upper.value, !map.value_in_cell(a, lo),
                      map.value_in_cell(a, hi));
  }
  return ObservationBox(std::move(axes));
}

void validate_canonical(std::span<const CanonicalBox> boxes, std::size_t dim) {
  if (boxes.empty()) throw ValidationError("dataset is empty");
  const std::size_t positions = 2 * boxes.size();
  std::vector<char> seen(positions + 1);
  for (std::size_t a = 0; a < dim; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (const CanonicalBox& b : boxes) {
      if (b.dim() != dim) {
        throw ValidationError("box " + std::to_string(b.index) + " has dimension " +
                              std::to_string(b.dim()) + ", expected " + std::to_string(dim));
      }
      const auto [lo, hi] = b.axes[a];
      for (Coord c : {lo, hi}) {
        if (c < 1 || static_cast<std::size_t>(c) > positions) {
          throw ValidationError("coordinate " + std::to_string(c) + " outside 1.." +
                                std::to_string(positions) + " on axis " + std::to_string(a));
        }
        if (seen[static_cast<std::size_t>(c)]++) {
          throw ValidationError("duplicate canonical coordinate " + std::to_string(c) +
                                " on axis " + std::to_string(a));
        }
      }
      if (lo >= hi) {
        throw ValidationError("box " + std::to_string(b.index) + " has empty canonical interval on axis " +
                              std::to_string(a));
      }
    }
  }
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (boxes[i].index != static_cast<BoxIndex>(i + 1)) {
      throw ValidationError("box at position " + std::to_string(i + 1) + " carries index " +
                            std::to_string(boxes[i].index));
    }
  }
}

}  // namespace heightmap
