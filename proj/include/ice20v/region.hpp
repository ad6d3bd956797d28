#pragma once

// Finite cell regions of the square grid and their domino tilings, counted by
// a broken-profile sweep (row by row, the mask holding cells of the next row
// already covered by vertical dominoes).  The perfect-matching count is the
// independent oracle for the strip-determinant tiling numbers.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ice20v/rings.hpp"

namespace ice20v {

class Region {
 public:
  Region() = default;
  Region(std::size_t width, std::size_t height)
      : w_(width), h_(height), cells_(width * height, 0) {
    if (width > 32) throw std::invalid_argument("region wider than 32 columns");
  }

  std::size_t width() const { return w_; }
  std::size_t height() const { return h_; }

  bool cell(std::size_t x, std::size_t y) const {
    return x < w_ && y < h_ && cells_[y * w_ + x];
  }
  void set_cell(std::size_t x, std::size_t y, bool v) { cells_[y * w_ + x] = v; }

  std::size_t cell_count() const {
    std::size_t c = 0;
    for (auto b : cells_) c += b;
    return c;
  }

  // '#' cell, '.' empty, one row per line (top row first).
  static Region parse(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    std::size_t width = 0;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      lines.push_back(line);
      width = std::max(width, line.size());
    }
    if (lines.empty()) throw std::invalid_argument("empty region text");
    Region r(width, lines.size());
    for (std::size_t y = 0; y < lines.size(); ++y)
      for (std::size_t x = 0; x < lines[y].size(); ++x) {
        char ch = lines[y][x];
        if (ch == '#')
          r.set_cell(x, y, true);
        else if (ch != '.')
          throw std::invalid_argument("region text: expected '#' or '.'");
      }
    return r;
  }

  std::string to_text() const {
    std::string s;
    for (std::size_t y = 0; y < h_; ++y) {
      for (std::size_t x = 0; x < w_; ++x) s += cell(x, y) ? '#' : '.';
      s += '\n';
    }
    return s;
  }

 private:
  std::size_t w_ = 0, h_ = 0;
  std::vector<std::uint8_t> cells_;
};

// 2n x 2n square.
inline Region square_region(std::size_t n) {
  Region r(2 * n, 2 * n);
  for (std::size_t y = 0; y < 2 * n; ++y)
    for (std::size_t x = 0; x < 2 * n; ++x) r.set_cell(x, y, true);
  return r;
}

// Half of the 2n x 2n square cut along the staircase with a first step of
// size 1 and then steps of 2: row lengths 1,1,3,3,...,2n-1,2n-1 top to
// bottom, left aligned.
inline Region triangle_region(std::size_t n) {
  Region r(2 * n - 1, 2 * n);
  for (std::size_t y = 0; y < 2 * n; ++y) {
    std::size_t len = 2 * (y / 2) + 1;
    for (std::size_t x = 0; x < len; ++x) r.set_cell(x, y, true);
  }
  return r;
}

namespace domdetail {

template <class Visit>
void fill_row(const Region& r, std::size_t y, std::size_t x, std::uint32_t covered,
              std::uint32_t below, Visit&& visit) {
  std::size_t w = r.width();
  while (x < w && (!r.cell(x, y) || (covered >> x & 1))) ++x;
  if (x >= w) {
    visit(below);
    return;
  }
  // horizontal domino
  if (x + 1 < w && r.cell(x + 1, y) && !(covered >> (x + 1) & 1))
    fill_row(r, y, x + 2, covered | (3u << x), below, visit);
  // vertical domino into the next row
  if (r.cell(x, y + 1))
    fill_row(r, y, x + 1, covered | (1u << x), below | (1u << x), visit);
}

}  // namespace domdetail

inline Int domino_matchings(const Region& r) {
  if (r.width() == 0 || r.height() == 0) return 0;
  std::unordered_map<std::uint32_t, Int> dp;
  dp.emplace(0u, Int(1));
  for (std::size_t y = 0; y < r.height(); ++y) {
    std::unordered_map<std::uint32_t, Int> next;
    for (const auto& [mask, cnt] : dp) {
      domdetail::fill_row(r, y, 0, mask, 0u, [&](std::uint32_t below) {
        auto it = next.find(below);
        if (it == next.end())
          next.emplace(below, cnt);
        else
          it->second += cnt;
      });
    }
    dp = std::move(next);
  }
  auto it = dp.find(0u);
  return it == dp.end() ? Int(0) : it->second;
}

struct Domino {
  std::size_t x, y;  // upper-left cell (y is the text row index)
  bool horizontal;
};

using Tiling = std::vector<Domino>;

// Explicit tilings for rendering; exponential, so callers cap via limit.
inline std::vector<Tiling> enumerate_tilings(const Region& r, std::size_t limit) {
  std::vector<Tiling> out;
  Tiling cur;
  struct Walker {
    const Region& r;
    std::vector<Tiling>& out;
    Tiling& cur;
    std::size_t limit;

    void go(std::size_t y, std::uint32_t mask) {
      if (out.size() >= limit) return;
      if (y == r.height()) {
        if (mask == 0) out.push_back(cur);
        return;
      }
      fill(y, 0, mask, 0u);
    }

    void fill(std::size_t y, std::size_t x, std::uint32_t covered, std::uint32_t below) {
      if (out.size() >= limit) return;
      std::size_t w = r.width();
      while (x < w && (!r.cell(x, y) || (covered >> x & 1))) ++x;
      if (x >= w) {
        go(y + 1, below);
        return;
      }
      if (x + 1 < w && r.cell(x + 1, y) && !(covered >> (x + 1) & 1)) {
        cur.push_back({x, y, true});
        fill(y, x + 2, covered | (3u << x), below);
        cur.pop_back();
      }
      if (r.cell(x, y + 1)) {
        cur.push_back({x, y, false});
        fill(y, x + 1, covered | (1u << x), below | (1u << x));
        cur.pop_back();
      }
    }
  } walker{r, out, cur, limit};
  walker.go(0, 0u);
  return out;
}

}  // namespace ice20v
