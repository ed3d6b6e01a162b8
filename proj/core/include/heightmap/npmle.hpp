#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "heightmap/geometry.hpp"
#include "heightmap/maximal_intersection.hpp"

namespace heightmap {

/// m x n incidence of maximal intersections (rows) in observation boxes
/// (columns): C(j, i) = 1 iff A_j lies inside R_i. Rows and columns are
/// 0-based here; row j corresponds to A_{j+1} and column i to R_{i+1}.
///
/// Stored as dense bit rows unless m*n exceeds the sparse threshold, in
/// which case each row keeps its sorted support.
class CliqueMatrix {
 public:
  enum class Storage { dense, sparse };

  static constexpr std::size_t default_sparse_threshold = 100'000'000;

  CliqueMatrix() = default;

  /// Builds from row supports given as 0-based column indices.
  static CliqueMatrix from_supports(std::size_t cols, std::vector<std::vector<std::uint32_t>> supports,
                                    std::size_t sparse_threshold = default_sparse_threshold);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Storage storage() const noexcept { return storage_; }

  bool at(std::size_t row, std::size_t col) const;
  /// Sorted 0-based columns with a one in `row`.
  std::vector<std::uint32_t> support(std::size_t row) const;

  /// Throws ValidationError unless every row and column has a one and no
  /// row's support is strictly inside another's.
  void check_reduction_invariants() const;

  friend bool operator==(const CliqueMatrix& a, const CliqueMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Storage storage_ = Storage::dense;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;                  // dense: rows_ * words_
  std::vector<std::vector<std::uint32_t>> support_;  // sparse
};

/// C(j, i) = 1 iff maxima[j].box lies inside boxes[i], recomputed by
/// containment. O(mn).
CliqueMatrix clique_matrix(std::span<const MaximalIntersection> maxima,
                           std::span<const CanonicalBox> boxes,
                           std::size_t sparse_threshold = CliqueMatrix::default_sparse_threshold);

/// Probability masses on the maximal intersections: nonnegative, summing to
/// one within 1e-12.
class MassVector {
 public:
  static constexpr double sum_tolerance = 1e-12;

  /// Throws ValidationError on a negative, non-finite, or unnormalized entry.
  explicit MassVector(std::vector<double> alpha);

  std::size_t size() const noexcept { return alpha_.size(); }
  double operator[](std::size_t j) const { return alpha_[j]; }
  std::span<const double> values() const noexcept { return alpha_; }

 private:
  std::vector<double> alpha_;
};

/// P_alpha(R_i) = sum_j alpha_j C(j, i), i.e. C^T alpha.
std::vector<double> prob_masses(const CliqueMatrix& c, const MassVector& alpha);

/// sum_i log P_alpha(R_i). Returns -infinity, not an error, when some
/// observation gets zero mass.
double log_likelihood(const CliqueMatrix& c, const MassVector& alpha);

/// True iff C^T alpha1 and C^T alpha2 agree entrywise within 1e-12; equal
/// vectors mean equal likelihoods.
bool same_equivalence_class(const CliqueMatrix& c, const MassVector& alpha1, const MassVector& alpha2);

}  // namespace heightmap
