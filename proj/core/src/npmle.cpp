#include "heightmap/npmle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "heightmap/error.hpp"

namespace heightmap {

CliqueMatrix CliqueMatrix::from_supports(std::size_t cols,
                                         std::vector<std::vector<std::uint32_t>> supports,
                                         std::size_t sparse_threshold) {
  CliqueMatrix c;
  c.rows_ = supports.size();
  c.cols_ = cols;
  for (std::size_t j = 0; j < supports.size(); ++j) {
    auto& row = supports[j];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    if (!row.empty() && row.back() >= cols) {
      throw ValidationError("row " + std::to_string(j + 1) + " references column " +
                            std::to_string(row.back() + 1) + " of " + std::to_string(cols));
    }
  }

  // Compare as long double so m*n cannot overflow before the test.
  if (static_cast<long double>(c.rows_) * static_cast<long double>(cols) >
      static_cast<long double>(sparse_threshold)) {
    c.storage_ = Storage::sparse;
    c.support_ = std::move(supports);
    return c;
  }
  c.storage_ = Storage::dense;
  c.words_ = (cols + 63) / 64;
  c.bits_.assign(c.rows_ * c.words_, 0);
  for (std::size_t j = 0; j < c.rows_; ++j) {
    for (std::uint32_t i : supports[j]) {
      c.bits_[j * c.words_ + i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  return c;
}

bool CliqueMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) {
    throw ValidationError("entry (" + std::to_string(row) + "," + std::to_string(col) +
                          ") outside a " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                          " clique matrix");
  }
  if (storage_ == Storage::sparse) {
    const auto& s = support_[row];
    return std::binary_search(s.begin(), s.end(), static_cast<std::uint32_t>(col));
  }
  return ((bits_[row * words_ + col / 64] >> (col % 64)) & 1U) != 0;
}

std::vector<std::uint32_t> CliqueMatrix::support(std::size_t row) const {
  if (row >= rows_) throw ValidationError("row " + std::to_string(row) + " out of range");
  if (storage_ == Storage::sparse) return support_[row];
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t word = bits_[row * words_ + w];
    while (word != 0) {
      const int bit = std::countr_zero(word);
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(bit)));
      word &= word - 1;
    }
  }
  return out;
}

void CliqueMatrix::check_reduction_invariants() const {
  std::vector<std::vector<std::uint32_t>> rows(rows_);
  std::vector<char> column_hit(cols_, 0);
  for (std::size_t j = 0; j < rows_; ++j) {
    rows[j] = support(j);
    if (rows[j].empty()) throw ValidationError("row " + std::to_string(j + 1) + " is all zero");
    for (std::uint32_t i : rows[j]) column_hit[i] = 1;
  }
  for (std::size_t i = 0; i < cols_; ++i) {
    if (!column_hit[i]) throw ValidationError("column " + std::to_string(i + 1) + " is all zero");
  }
  for (std::size_t j = 0; j < rows_; ++j) {
    for (std::size_t k = 0; k < rows_; ++k) {
      if (j == k || rows[j].size() > rows[k].size()) continue;
      if (std::includes(rows[k].begin(), rows[k].end(), rows[j].begin(), rows[j].end())) {
        throw ValidationError("row " + std::to_string(j + 1) + " support lies inside row " +
                              std::to_string(k + 1));
      }
    }
  }
}

bool operator==(const CliqueMatrix& a, const CliqueMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t j = 0; j < a.rows_; ++j) {
    if (a.support(j) != b.support(j)) return false;
  }
  return true;
}

CliqueMatrix clique_matrix(std::span<const MaximalIntersection> maxima,
                           std::span<const CanonicalBox> boxes, std::size_t sparse_threshold) {
  std::vector<std::vector<std::uint32_t>> supports(maxima.size());
  for (std::size_t j = 0; j < maxima.size(); ++j) {
    const CanonicalBox& a = maxima[j].box;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      if (boxes[i].dim() != a.dim()) {
        throw ValidationError("maximal intersection " + std::to_string(j + 1) + " has dimension " +
                              std::to_string(a.dim()) + ", box " + std::to_string(i + 1) +
                              " has " + std::to_string(boxes[i].dim()));
      }
      if (a.inside(boxes[i])) supports[j].push_back(static_cast<std::uint32_t>(i));
    }
    for (BoxIndex member : maxima[j].clique) {
      if (member == 0 || member > boxes.size()) {
        throw ValidationError("clique of maximal intersection " + std::to_string(j + 1) +
                              " names box " + std::to_string(member) + " but the dataset has " +
                              std::to_string(boxes.size()));
      }
    }
  }
  return CliqueMatrix::from_supports(boxes.size(), std::move(supports), sparse_threshold);
}

MassVector::MassVector(std::vector<double> alpha) : alpha_(std::move(alpha)) {
  double sum = 0.0;
  for (std::size_t j = 0; j < alpha_.size(); ++j) {
    if (!std::isfinite(alpha_[j]) || alpha_[j] < 0.0) {
      throw ValidationError("mass " + std::to_string(j + 1) + " is negative or not finite");
    }
    sum += alpha_[j];
  }
  if (std::abs(sum - 1.0) > sum_tolerance) {
    throw ValidationError("masses sum to " + std::to_string(sum) + ", not 1");
  }
}

std::vector<double> prob_masses(const CliqueMatrix& c, const MassVector& alpha) {
  if (alpha.size() != c.rows()) {
    throw ValidationError("mass vector has " + std::to_string(alpha.size()) +
                          " entries, clique matrix has " + std::to_string(c.rows()) + " rows");
  }
  std::vector<double> p(c.cols(), 0.0);
  for (std::size_t j = 0; j < c.rows(); ++j) {
    if (alpha[j] == 0.0) continue;
    for (std::uint32_t i : c.support(j)) p[i] += alpha[j];
  }
  return p;
}

double log_likelihood(const CliqueMatrix& c, const MassVector& alpha) {
  double total = 0.0;
  for (double p : prob_masses(c, alpha)) {
    if (p <= 0.0) return -std::numeric_limits<double>::infinity();
    total += std::log(p);
  }
  return total;
}

bool same_equivalence_class(const CliqueMatrix& c, const MassVector& alpha1, const MassVector& alpha2) {
  const auto p1 = prob_masses(c, alpha1);
  const auto p2 = prob_masses(c, alpha2);
  for (std::size_t i = 0; i < p1.size(); ++i) {
    if (std::abs(p1[i] - p2[i]) > 1e-12) return false;
  }
  return true;
}

}  // namespace heightmap
