#include "dataset_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

namespace heightmap::cli {

std::vector<std::string> tokenize(const std::string& line) {
  const std::string body = line.substr(0, line.find('#'));
  std::vector<std::string> tokens;
  std::string current;
  for (char ch : body) {
    if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::optional<double> parse_double(const std::string& token) {
  const char* first = token.data();
  const char* last = first + token.size();
  if (first != last && *first == '+') ++first;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || std::isnan(value)) return std::nullopt;
  return value;
}

std::string format_double(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string DatasetFile::format(std::size_t axis, double value) const {
  if (axis < literals.size()) {
    const auto it = literals[axis].find(value);
    if (it != literals[axis].end()) return it->second;
  }
  return format_double(value);
}

namespace {

bool parse_flag(const std::string& token, bool& out) {
  if (token == "0") {
    out = false;
    return true;
  }
  if (token == "1") {
    out = true;
    return true;
  }
  return false;
}

std::size_t parse_dim(const std::string& token, const std::string& source, std::size_t line) {
  std::size_t d = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), d);
  if (ec != std::errc() || ptr != token.data() + token.size() || d == 0) {
    throw ParseError(source, line, "dimension must be a positive integer, got '" + token + "'");
  }
  return d;
}

}  // namespace

DatasetFile read_dataset(std::istream& in, const std::string& source, std::optional<std::size_t> dim) {
  DatasetFile file;
  std::optional<std::size_t> header;
  std::string text;
  std::size_t line = 0;

  while (std::getline(in, text)) {
    ++line;
    const auto tokens = tokenize(text);
    if (tokens.empty()) continue;

    if (tokens[0] == "dim") {
      if (header || !file.boxes.empty()) throw ParseError(source, line, "'dim' header must come first");
      if (tokens.size() != 2) throw ParseError(source, line, "expected 'dim <d>'");
      header = parse_dim(tokens[1], source, line);
      if (dim && *dim != *header) {
        throw ParseError(source, line,
                         "header declares dim " + tokens[1] + " but --dim is " + std::to_string(*dim));
      }
      continue;
    }

    if (!header && !dim) throw ParseError(source, line, "missing 'dim <d>' header");
    const std::size_t d = header ? *header : *dim;
    if (file.literals.empty()) file.literals.resize(d);

    if (tokens.size() != 2 * d && tokens.size() != 4 * d) {
      throw ParseError(source, line,
                       "expected " + std::to_string(2 * d) + " coordinates, optionally followed by " +
                           std::to_string(2 * d) + " closure flags; got " + std::to_string(tokens.size()) +
                           " fields");
    }
    std::vector<double> coords(2 * d);
    for (std::size_t k = 0; k < 2 * d; ++k) {
      const auto value = parse_double(tokens[k]);
      if (!value) throw ParseError(source, line, "field " + std::to_string(k + 1) + ": not a number: '" + tokens[k] + "'");
      coords[k] = *value;
    }
    std::vector<bool> closed(2 * d);
    for (std::size_t a = 0; a < d; ++a) closed[2 * a + 1] = true;
    if (tokens.size() == 4 * d) {
      for (std::size_t k = 0; k < 2 * d; ++k) {
        bool flag = false;
        if (!parse_flag(tokens[2 * d + k], flag)) {
          throw ParseError(source, line,
                           "field " + std::to_string(2 * d + k + 1) + ": closure flag must be 0 or 1, got '" +
                               tokens[2 * d + k] + "'");
        }
        closed[k] = flag;
      }
    }

    std::vector<Interval> axes;
    axes.reserve(d);
    for (std::size_t a = 0; a < d; ++a) {
      axes.emplace_back(coords[2 * a], coords[2 * a + 1], closed[2 * a], closed[2 * a + 1]);
      if (axes.back().empty()) {
        throw ValidationError(source + ":" + std::to_string(line) + ": box " +
                              std::to_string(file.boxes.size() + 1) + " is empty on axis " +
                              std::to_string(a + 1));
      }
      file.literals[a].emplace(coords[2 * a], tokens[2 * a]);
      file.literals[a].emplace(coords[2 * a + 1], tokens[2 * a + 1]);
    }
    file.boxes.emplace_back(std::move(axes));
    file.lines.push_back(line);
  }

  if (header) {
    file.dim = *header;
  } else if (dim) {
    file.dim = *dim;
  } else {
    throw ParseError(source, line, "missing 'dim <d>' header");
  }
  if (file.literals.empty()) file.literals.resize(file.dim);
  return file;
}

void write_dataset(std::ostream& out, std::span<const ObservationBox> boxes, std::size_t dim,
                   const DatasetFile* names) {
  auto spell = [&](std::size_t axis, double v) { return names ? names->format(axis, v) : format_double(v); };
  out << "dim " << dim << '\n';
  for (const ObservationBox& box : boxes) {
    for (std::size_t a = 0; a < dim; ++a) {
      out << (a ? " " : "") << spell(a, box.axis(a).lower().value) << ' ' << spell(a, box.axis(a).upper().value);
    }
    for (std::size_t a = 0; a < dim; ++a) {
      out << ' ' << box.axis(a).lower().closed << ' ' << box.axis(a).upper().closed;
    }
    out << '\n';
  }
}

}  // namespace heightmap::cli
