#include "formats.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>

#include "dataset_io.hpp"

namespace heightmap::cli {
namespace {

template <typename T>
bool parse_unsigned(const std::string& token, T& out) {
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

template <typename T>
T expect_unsigned(const std::string& token, const std::string& source, std::size_t line, const char* what) {
  T value{};
  if (!parse_unsigned(token, value)) throw ParseError(source, line, std::string(what) + ": '" + token + "'");
  return value;
}

// Splits "a b : c d" into the fields before and after the colon. The colon
// may be glued to a neighbouring token.
void split_colon(const std::string& text, std::vector<std::string>& before, std::vector<std::string>& after,
                 bool& has_colon) {
  const std::string body = text.substr(0, text.find('#'));
  const auto colon = body.find(':');
  has_colon = colon != std::string::npos;
  before = tokenize(body.substr(0, colon));
  after = has_colon ? tokenize(body.substr(colon + 1)) : std::vector<std::string>{};
}

}  // namespace

std::string canonical_line(const MaximalIntersection& m) {
  std::string line;
  for (const CanonicalInterval& iv : m.box.axes) {
    if (!line.empty()) line += ' ';
    line += std::to_string(iv.lo) + ' ' + std::to_string(iv.hi);
  }
  line += " :";
  for (BoxIndex i : m.clique) line += ' ' + std::to_string(i);
  return line;
}

void write_canonical(std::ostream& out, std::span<const MaximalIntersection> maxima, std::size_t dim) {
  out << "dim " << dim << '\n';
  for (const MaximalIntersection& m : maxima) out << canonical_line(m) << '\n';
}

std::vector<MaximalIntersection> read_canonical(std::istream& in, const std::string& source, std::size_t& dim) {
  std::vector<MaximalIntersection> out;
  dim = 0;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::vector<std::string> before, after;
    bool has_colon = false;
    split_colon(text, before, after, has_colon);
    if (before.empty() && !has_colon) continue;
    if (dim == 0) {
      if (before.size() != 2 || before[0] != "dim" || has_colon) throw ParseError(source, line, "expected 'dim <d>'");
      dim = expect_unsigned<std::size_t>(before[1], source, line, "bad dimension");
      if (dim == 0) throw ParseError(source, line, "dimension must be positive");
      continue;
    }
    if (before.size() != 2 * dim || !has_colon) {
      throw ParseError(source, line, "expected " + std::to_string(2 * dim) + " canonical coordinates, ':' and a clique");
    }
    MaximalIntersection m;
    for (std::size_t a = 0; a < dim; ++a) {
      m.box.axes.push_back({expect_unsigned<Coord>(before[2 * a], source, line, "bad coordinate"),
                            expect_unsigned<Coord>(before[2 * a + 1], source, line, "bad coordinate")});
    }
    for (const std::string& t : after) m.clique.push_back(expect_unsigned<BoxIndex>(t, source, line, "bad index"));
    std::sort(m.clique.begin(), m.clique.end());
    out.push_back(std::move(m));
  }
  if (dim == 0) throw ParseError(source, line, "missing 'dim <d>' header");
  return out;
}

void write_clique_supports(std::ostream& out, const CliqueMatrix& c) {
  out << "shape " << c.rows() << ' ' << c.cols() << '\n';
  for (std::size_t j = 0; j < c.rows(); ++j) {
    out << j + 1 << ':';
    for (std::uint32_t i : c.support(j)) out << ' ' << i + 1;
    out << '\n';
  }
}

CliqueMatrix read_clique_supports(std::istream& in, const std::string& source) {
  std::size_t rows = 0, cols = 0;
  bool have_shape = false;
  std::vector<std::vector<std::uint32_t>> supports;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    std::vector<std::string> before, after;
    bool has_colon = false;
    split_colon(text, before, after, has_colon);
    if (before.empty() && !has_colon) continue;
    if (!have_shape) {
      if (before.size() != 3 || before[0] != "shape" || has_colon) throw ParseError(source, line, "expected 'shape <m> <n>'");
      rows = expect_unsigned<std::size_t>(before[1], source, line, "bad row count");
      cols = expect_unsigned<std::size_t>(before[2], source, line, "bad column count");
      have_shape = true;
      continue;
    }
    if (before.size() != 1 || !has_colon) throw ParseError(source, line, "expected 'j: i1 i2 ...'");
    const auto j = expect_unsigned<std::size_t>(before[0], source, line, "bad row index");
    if (j != supports.size() + 1) {
      throw ParseError(source, line, "rows must be numbered 1..m in order; expected " + std::to_string(supports.size() + 1));
    }
    std::vector<std::uint32_t> row;
    for (const std::string& t : after) {
      const auto i = expect_unsigned<std::uint32_t>(t, source, line, "bad column index");
      if (i == 0 || i > cols) throw ParseError(source, line, "column index " + t + " outside 1.." + std::to_string(cols));
      row.push_back(i - 1);
    }
    supports.push_back(std::move(row));
  }
  if (!have_shape) throw ParseError(source, line, "missing 'shape <m> <n>' header");
  if (supports.size() != rows) {
    throw ParseError(source, line, "header declares " + std::to_string(rows) + " rows, found " + std::to_string(supports.size()));
  }
  return CliqueMatrix::from_supports(cols, std::move(supports));
}

void write_clique_csv(std::ostream& out, const CliqueMatrix& c) {
  for (std::size_t j = 0; j < c.rows(); ++j) {
    for (std::size_t i = 0; i < c.cols(); ++i) out << (i ? "," : "") << (c.at(j, i) ? '1' : '0');
    out << '\n';
  }
}

std::vector<double> read_numbers(std::istream& in, const std::string& source) {
  std::vector<double> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    for (const std::string& t : tokenize(text)) {
      const auto v = parse_double(t);
      if (!v) throw ParseError(source, line, "not a number: '" + t + "'");
      out.push_back(*v);
    }
  }
  return out;
}

}  // namespace heightmap::cli
