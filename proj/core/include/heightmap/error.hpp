#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace heightmap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (empty box, non-canonical
/// coordinates, mismatched dimensions, invalid mass vector).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An observation box is empty on some axis.
class EmptyBoxError : public ValidationError {
 public:
  EmptyBoxError(std::size_t box_index, std::size_t axis)
      : ValidationError("box " + std::to_string(box_index) + " is empty on axis " +
                        std::to_string(axis)),
        box_index_(box_index),
        axis_(axis) {}

  std::size_t box_index() const noexcept { return box_index_; }
  std::size_t axis() const noexcept { return axis_; }

 private:
  std::size_t box_index_;
  std::size_t axis_;
};

/// The brute-force oracle refuses instances whose grid is too large.
class OracleSizeError : public Error {
 public:
  OracleSizeError(std::size_t n, std::size_t dim, std::size_t max_n)
      : Error("oracle refuses n=" + std::to_string(n) + " in d=" + std::to_string(dim) +
              " (bound n <= " + std::to_string(max_n) + ")"),
        max_n_(max_n) {}

  std::size_t max_n() const noexcept { return max_n_; }

 private:
  std::size_t max_n_;
};

}  // namespace heightmap
