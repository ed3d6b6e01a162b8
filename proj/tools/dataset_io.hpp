#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heightmap/error.hpp"
#include "heightmap/geometry.hpp"

namespace heightmap::cli {

/// Malformed text input. The message starts with "<source>:<line>:".
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A dataset read from text, together with the literal spelling of every
/// coordinate so that output can echo the user's own numbers.
///
/// Format: an optional `dim d` header, then one box per line with 2d
/// coordinates lo1 hi1 ... lod hid and optionally 2d closure flags in the
/// same order. Fields are separated by whitespace or commas, `#` starts a
/// comment, and `inf` / `-inf` denote infinities. Missing flags mean
/// left-open, right-closed.
struct DatasetFile {
  std::size_t dim = 0;
  std::vector<ObservationBox> boxes;
  std::vector<std::size_t> lines;  ///< source line of each box
  std::vector<std::map<double, std::string>> literals;  ///< per axis, first spelling seen

  /// The input spelling of `value` on `axis`, or its shortest decimal form.
  std::string format(std::size_t axis, double value) const;
};

/// Throws ParseError for malformed text and ValidationError (naming the
/// line) for an empty box. `dim` is required when the header is absent and
/// must agree with it when present.
DatasetFile read_dataset(std::istream& in, const std::string& source,
                         std::optional<std::size_t> dim = std::nullopt);

/// Shortest decimal that reads back to the same double; `inf` / `-inf`.
std::string format_double(double value);

/// Writes `boxes` in the dataset format with explicit closure flags.
/// Coordinates are spelled through `names` when given.
void write_dataset(std::ostream& out, std::span<const ObservationBox> boxes, std::size_t dim,
                   const DatasetFile* names = nullptr);

/// Parses one number field; accepts a leading '+', `inf`, `-inf`.
std::optional<double> parse_double(const std::string& token);

/// Splits a line on whitespace and commas after dropping any `#` comment.
std::vector<std::string> tokenize(const std::string& line);

}  // namespace heightmap::cli
