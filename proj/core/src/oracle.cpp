#include "heightmap/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "heightmap/error.hpp"

namespace heightmap {
namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& bits) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t w : bits) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

bool subset_of(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if ((a[w] & ~b[w]) != 0) return false;
  }
  return true;
}

std::size_t popcount(const Bits& bits) {
  std::size_t c = 0;
  for (std::uint64_t w : bits) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

// Cells that share one covering set.
struct CellGroup {
  std::vector<Coord> min_cell;
  std::vector<Coord> max_cell;
  std::size_t count = 0;
};

std::size_t grid_cells(std::size_t n, std::size_t dim) {
  std::size_t cells = 1;
  for (std::size_t a = 0; a < dim; ++a) cells *= 2 * n;
  return cells;
}

}  // namespace

std::size_t oracle_max_n(std::size_t dim) {
  if (const char* env = std::getenv("HEIGHTMAP_ORACLE_MAX_N")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  switch (dim) {
    case 0:
    case 1:
    case 2:
      return 200;
    case 3:
      return 25;
    case 4:
      return 12;
    default: {
      const std::size_t budget = grid_cells(12, 4);
      std::size_t n = 1;
      while (grid_cells(n + 1, dim) <= budget) ++n;
      return n;
    }
  }
}

std::vector<BoxIndex> clique_of(const CanonicalBox& box, std::span<const CanonicalBox> boxes) {
  std::vector<BoxIndex> members;
  for (const CanonicalBox& r : boxes) {
    bool contained = r.dim() == box.dim();
    for (std::size_t a = 0; contained && a < box.dim(); ++a) {
      contained = r.axes[a].lo <= box.axes[a].lo && box.axes[a].hi <= r.axes[a].hi;
    }
    if (contained) members.push_back(r.index);
  }
  return members;
}

std::vector<MaximalIntersection> oracle_reduce(std::span<const CanonicalBox> boxes, std::size_t dim) {
  if (dim == 0) throw ValidationError("oracle needs d >= 1");
  validate_canonical(boxes, dim);
  const std::size_t n = boxes.size();
  if (n > oracle_max_n(dim)) throw OracleSizeError(n, dim, oracle_max_n(dim));

  const std::size_t words = (n + 63) / 64;
  const auto extent = static_cast<Coord>(2 * n);

  // covers[a][c - 1]: boxes whose axis-a interval contains cell c.
  std::vector<std::vector<Bits>> covers(dim, std::vector<Bits>(2 * n, Bits(words, 0)));
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t i = 0; i < n; ++i) {
      for (Coord c = boxes[i].axes[a].lo + 1; c <= boxes[i].axes[a].hi; ++c) {
        covers[a][static_cast<std::size_t>(c - 1)][i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }

  std::unordered_map<Bits, CellGroup, BitsHash> groups;
  std::vector<Coord> cell(dim, 1);
  Bits members(words);
  while (true) {
    members = covers[0][static_cast<std::size_t>(cell[0] - 1)];
    for (std::size_t a = 1; a < dim; ++a) {
      const Bits& axis_bits = covers[a][static_cast<std::size_t>(cell[a] - 1)];
      for (std::size_t w = 0; w < words; ++w) members[w] &= axis_bits[w];
    }
    if (popcount(members) > 0) {
      auto [it, fresh] = groups.try_emplace(members);
      CellGroup& g = it->second;
      if (fresh) {
        g.min_cell = cell;
        g.max_cell = cell;
      }
      for (std::size_t a = 0; a < dim; ++a) {
        g.min_cell[a] = std::min(g.min_cell[a], cell[a]);
        g.max_cell[a] = std::max(g.max_cell[a], cell[a]);
      }
      ++g.count;
    }

    std::size_t a = dim;
    while (a > 0 && cell[a - 1] == extent) cell[--a] = 1;
    if (a == 0) break;
    ++cell[a - 1];
  }

  // Largest sets first: a set is maximal iff no kept set contains it.
  std::vector<const std::pair<const Bits, CellGroup>*> ordered;
  ordered.reserve(groups.size());
  for (const auto& entry : groups) ordered.push_back(&entry);
  std::sort(ordered.begin(), ordered.end(), [](const auto* x, const auto* y) {
    const std::size_t px = popcount(x->first);
    const std::size_t py = popcount(y->first);
    return px != py ? px > py : x->first < y->first;
  });

  std::vector<const std::pair<const Bits, CellGroup>*> maximal;
  for (const auto* entry : ordered) {
    const bool dominated = std::any_of(maximal.begin(), maximal.end(), [&](const auto* kept) {
      return subset_of(entry->first, kept->first);
    });
    if (!dominated) maximal.push_back(entry);
  }

  std::vector<MaximalIntersection> out;
  out.reserve(maximal.size());
  for (const auto* entry : maximal) {
    const Bits& set = entry->first;
    const CellGroup& group = entry->second;

    MaximalIntersection mi;
    mi.box.axes.assign(dim, CanonicalInterval{0, extent});
    for (std::size_t i = 0; i < n; ++i) {
      if (((set[i / 64] >> (i % 64)) & 1U) == 0) continue;
      mi.clique.push_back(boxes[i].index);
      for (std::size_t a = 0; a < dim; ++a) {
        mi.box.axes[a].lo = std::max(mi.box.axes[a].lo, boxes[i].axes[a].lo);
        mi.box.axes[a].hi = std::min(mi.box.axes[a].hi, boxes[i].axes[a].hi);
      }
    }

    // The member intersection and the bounding box of the set's cells must
    // agree, and the cells must fill it: a box family's common intersection
    // is a single box.
    std::size_t volume = 1;
    for (std::size_t a = 0; a < dim; ++a) {
      const CanonicalInterval cells{group.min_cell[a] - 1, group.max_cell[a]};
      if (cells != mi.box.axes[a]) {
        throw std::logic_error("oracle: member intersection differs from cell bounding box");
      }
      volume *= static_cast<std::size_t>(cells.hi - cells.lo);
    }
    if (volume != group.count) {
      throw std::logic_error("oracle: maximal covering set spans a non-box cell region");
    }
    // Every other box misses the intersection entirely.
    for (std::size_t i = 0; i < n; ++i) {
      if (((set[i / 64] >> (i % 64)) & 1U) != 0) continue;
      if (boxes[i].intersects(mi.box)) {
        throw std::logic_error("oracle: non-member box meets a maximal intersection");
      }
    }
    out.push_back(std::move(mi));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace heightmap
