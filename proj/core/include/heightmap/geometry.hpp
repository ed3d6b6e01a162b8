#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace heightmap {

/// 1-based observation index. 0 is reserved as "no box" (it blocks output in
/// the sweep's last-entered arrays).
using BoxIndex = std::uint32_t;

/// Canonical coordinate in {1, ..., 2n}.
using Coord = std::int32_t;

enum class Side : std::uint8_t { left, right };

/// One interval endpoint. Values are extended reals: IEEE +/-infinity are
/// accepted as symbolic infinities, NaN never is.
struct Bound {
  double value = 0.0;
  bool closed = false;

  friend bool operator==(const Bound&, const Bound&) = default;
};

/// One axis of an observation box. Closure flags on infinite endpoints are
/// normalized to open, since no real point sits at infinity.
class Interval {
 public:
  Interval() = default;
  /// Defaults to the usual left-open, right-closed convention.
  Interval(double lower, double upper, bool lower_closed = false, bool upper_closed = true);

  const Bound& lower() const noexcept { return lower_; }
  const Bound& upper() const noexcept { return upper_; }

  /// True iff the interval contains no real point, or uses an infinity on
  /// the wrong side, or holds a NaN.
  bool empty() const noexcept;
  bool contains(double x) const noexcept;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Bound lower_{0.0, false};
  Bound upper_{0.0, true};
};

/// A d-dimensional censoring region: the product of its per-axis intervals.
class ObservationBox {
 public:
  ObservationBox() = default;
  explicit ObservationBox(std::vector<Interval> axes) : axes_(std::move(axes)) {}

  std::size_t dim() const noexcept { return axes_.size(); }
  const Interval& axis(std::size_t a) const { return axes_.at(a); }
  std::span<const Interval> axes() const noexcept { return axes_; }

  bool empty() const noexcept;
  bool contains(std::span<const double> point) const;

  friend bool operator==(const ObservationBox&, const ObservationBox&) = default;

 private:
  std::vector<Interval> axes_;
};

/// An endpoint together with everything the tie-breaking order needs.
struct EndpointDescriptor {
  double value = 0.0;
  bool closed = false;
  Side side = Side::left;
  std::size_t axis = 0;
  BoxIndex box = 0;

  friend bool operator==(const EndpointDescriptor&, const EndpointDescriptor&) = default;
};

/// Strict total order on endpoints of one axis. Distinct values order by
/// value; coincident values are ordered so that canonical intervals overlap
/// exactly when the real intervals do, and identical endpoint kinds fall back
/// to the box index.
bool compare_endpoints(const EndpointDescriptor& a, const EndpointDescriptor& b) noexcept;

/// Canonical interval (lo, hi]; covers cells lo+1 .. hi.
struct CanonicalInterval {
  Coord lo = 0;
  Coord hi = 0;

  friend auto operator<=>(const CanonicalInterval&, const CanonicalInterval&) = default;
};

/// A box on the canonical grid. `index` names the observation it came from,
/// or 0 for derived boxes such as maximal intersections.
struct CanonicalBox {
  std::vector<CanonicalInterval> axes;
  BoxIndex index = 0;

  std::size_t dim() const noexcept { return axes.size(); }

  /// Canonical containment: every axis of *this lies inside `outer`.
  bool inside(const CanonicalBox& outer) const noexcept;
  /// True iff the two boxes share at least one grid cell.
  bool intersects(const CanonicalBox& other) const noexcept;

  friend bool operator==(const CanonicalBox&, const CanonicalBox&) = default;
};

/// Per-axis lookup from canonical positions back to real endpoints.
class CanonicalMap {
 public:
  CanonicalMap() = default;
  CanonicalMap(std::vector<std::vector<EndpointDescriptor>> sorted);

  std::size_t dim() const noexcept { return sorted_.size(); }
  /// Number of positions per axis (2n).
  std::size_t positions() const noexcept { return sorted_.empty() ? 0 : sorted_.front().size(); }

  /// Endpoint assigned canonical coordinate `k` (1-based) on `axis`.
  const EndpointDescriptor& endpoint(std::size_t axis, Coord k) const;

  /// True iff the real value at position `k` is a member of canonical cell
  /// `k`; otherwise it belongs to cell k+1.
  bool value_in_cell(std::size_t axis, Coord k) const;

 private:
  std::vector<std::vector<EndpointDescriptor>> sorted_;
};

struct CanonicalDataset {
  std::size_t dim = 0;
  std::vector<CanonicalBox> boxes;
  CanonicalMap map;
};

/// Throws EmptyBoxError (with the 1-based box index) or ValidationError.
void validate_boxes(std::span<const ObservationBox> boxes);

/// Replaces every endpoint by its rank under compare_endpoints. The result has
/// the same subset-wise intersection structure as the input.
CanonicalDataset canonicalize(std::span<const ObservationBox> boxes);

/// Real box equal, as a point set, to the cells covered by `box`.
ObservationBox map_back(const CanonicalBox& box, const CanonicalMap& map);

/// Throws ValidationError unless every axis of `boxes` uses each of 1..2n
/// exactly once and every interval is nonempty.
void validate_canonical(std::span<const CanonicalBox> boxes, std::size_t dim);

}  // namespace heightmap
