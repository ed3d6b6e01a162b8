#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "heightmap/geometry.hpp"
#include "heightmap/maximal_intersection.hpp"

namespace heightmap {

/// Largest n the oracle accepts in dimension d. Defaults: d=2 -> 200,
/// d=3 -> 25, d=4 -> 12; higher d gets the largest n whose grid stays within
/// the d=4 cell count. The HEIGHTMAP_ORACLE_MAX_N environment variable, when
/// set to a positive integer, overrides the bound for every d.
std::size_t oracle_max_n(std::size_t dim);

/// Brute-force maximal intersections: enumerates the covering set of every
/// canonical grid cell, keeps the inclusion-maximal distinct sets, and reports
/// each with the common intersection of its members. Output is sorted by
/// canonical_less. Throws OracleSizeError above oracle_max_n(dim).
std::vector<MaximalIntersection> oracle_reduce(std::span<const CanonicalBox> boxes, std::size_t dim);

/// Indices of the boxes that canonically contain `box`.
std::vector<BoxIndex> clique_of(const CanonicalBox& box, std::span<const CanonicalBox> boxes);

}  // namespace heightmap
