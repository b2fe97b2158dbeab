#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "subgame/periodicity.hpp"

namespace subgame::twod {

struct Vec2 {
  std::int64_t a = 0, b = 0;
  friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

/// Moves (a, b) with a, b >= 0, not both zero. A move with a zero
/// coordinate acts along one axis only.
class Ruleset2D {
 public:
  explicit Ruleset2D(std::vector<Vec2> moves);
  Ruleset2D(std::initializer_list<Vec2> moves) : Ruleset2D(std::vector<Vec2>(moves)) {}

  std::span<const Vec2> moves() const { return moves_; }
  std::size_t size() const { return moves_.size(); }
  std::int64_t max_a() const;
  std::int64_t max_b() const;
  /// True when some move has b = 0, which makes each row sequential.
  bool has_horizontal() const;
  /// "(2,6),(3,3)"
  std::string to_string() const;

  friend bool operator==(const Ruleset2D&, const Ruleset2D&) = default;

 private:
  std::vector<Vec2> moves_;
};

class GridTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Outcome bits for 0 <= x < width, 0 <= y < height; set bit = P. Rows are
/// padded to whole 64-bit words.
class OutcomeGrid {
 public:
  OutcomeGrid(Ruleset2D rules, std::int64_t width, std::int64_t height);

  const Ruleset2D& ruleset() const { return rules_; }
  std::int64_t width() const { return width_; }
  std::int64_t height() const { return height_; }
  bool is_p(std::int64_t x, std::int64_t y) const {
    return (row(y)[static_cast<std::size_t>(x >> 6)] >> (x & 63)) & 1u;
  }
  void set_p(std::int64_t x, std::int64_t y) {
    row(y)[static_cast<std::size_t>(x >> 6)] |= std::uint64_t{1} << (x & 63);
  }
  /// One byte per cell, row-major from y = 0, 1 for P.
  std::vector<std::uint8_t> to_bytes() const;
  /// FNV-1a of to_bytes().
  std::uint64_t digest() const;

 private:
  std::uint64_t* row(std::int64_t y) { return words_.data() + y * stride_; }
  const std::uint64_t* row(std::int64_t y) const { return words_.data() + y * stride_; }

  Ruleset2D rules_;
  std::int64_t width_, height_, stride_;
  std::vector<std::uint64_t> words_;
};

inline constexpr std::uint64_t kDefaultGridBitCap = std::uint64_t{1} << 33;

/// (x, y) is N iff some move lands on a P cell inside the quadrant. Rows
/// are filled bottom-up; with threads > 1 and no horizontal move, each row
/// is split across workers. Throws GridTooLarge above `max_bits`.
OutcomeGrid outcomes2d(const Ruleset2D& rules, std::int64_t width, std::int64_t height, unsigned threads = 1,
                       std::uint64_t max_bits = kDefaultGridBitCap);

struct Line {
  enum Kind { row, column } kind = row;
  std::int64_t index = 0;
};

/// Best (preperiod, period) for one row or column of the grid. Never
/// certified: a finite grid cannot hold the window the 2-d argument needs.
/// Empty when the line is outside the grid or too short to show a repeat.
std::optional<PeriodicityCertificate> line_periodicity(const OutcomeGrid& grid, Line line);

}  // namespace subgame::twod
