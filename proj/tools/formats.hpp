#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "heightmap/maximal_intersection.hpp"
#include "heightmap/npmle.hpp"

namespace heightmap::cli {

// Canonical maxima: a `dim d` header, then one line per maximal
// intersection, `a1 b1 ... ad bd : i1 i2 ...`, where (ak, bk] is the
// canonical interval on axis k and the i are 1-based clique members.
std::string canonical_line(const MaximalIntersection& m);
void write_canonical(std::ostream& out, std::span<const MaximalIntersection> maxima, std::size_t dim);
std::vector<MaximalIntersection> read_canonical(std::istream& in, const std::string& source,
                                                std::size_t& dim);

// Clique matrix as row supports: a `shape m n` header, then `j: i1 i2 ...`
// for j = 1..m with 1-based column indices.
void write_clique_supports(std::ostream& out, const CliqueMatrix& c);
CliqueMatrix read_clique_supports(std::istream& in, const std::string& source);

/// Dense 0/1 CSV, one row per maximal intersection.
void write_clique_csv(std::ostream& out, const CliqueMatrix& c);

/// Mass vector: numbers separated by whitespace, commas or newlines.
std::vector<double> read_numbers(std::istream& in, const std::string& source);

}  // namespace heightmap::cli
