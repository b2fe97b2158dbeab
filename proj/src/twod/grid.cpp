#include "subgame/twod/grid.hpp"

#include <algorithm>

#include "subgame/digest.hpp"
#include "subgame/search/enumerate.hpp"

namespace subgame::twod {

Ruleset2D::Ruleset2D(std::vector<Vec2> moves) : moves_(std::move(moves)) {
  if (moves_.empty()) throw std::invalid_argument("2-d ruleset must be nonempty");
  std::sort(moves_.begin(), moves_.end());
  for (const auto& m : moves_) {
    if (m.a < 0 || m.b < 0) throw std::invalid_argument("2-d move coordinates must be nonnegative");
    if (m.a == 0 && m.b == 0) throw std::invalid_argument("(0,0) is not a move");
  }
  if (std::adjacent_find(moves_.begin(), moves_.end()) != moves_.end())
    throw std::invalid_argument("duplicate 2-d move");
}

std::int64_t Ruleset2D::max_a() const {
  std::int64_t m = 0;
  for (const auto& v : moves_) m = std::max(m, v.a);
  return m;
}

std::int64_t Ruleset2D::max_b() const {
  std::int64_t m = 0;
  for (const auto& v : moves_) m = std::max(m, v.b);
  return m;
}

bool Ruleset2D::has_horizontal() const {
  return std::any_of(moves_.begin(), moves_.end(), [](const Vec2& v) { return v.b == 0; });
}

std::string Ruleset2D::to_string() const {
  std::string out;
  for (const auto& v : moves_) {
    if (!out.empty()) out += ',';
    out += '(' + std::to_string(v.a) + ',' + std::to_string(v.b) + ')';
  }
  return out;
}

OutcomeGrid::OutcomeGrid(Ruleset2D rules, std::int64_t width, std::int64_t height)
    : rules_(std::move(rules)), width_(width), height_(height), stride_((width + 63) / 64) {
  words_.assign(static_cast<std::size_t>(stride_ * height_), 0);
}

std::vector<std::uint8_t> OutcomeGrid::to_bytes() const {
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(width_ * height_));
  for (std::int64_t y = 0; y < height_; ++y)
    for (std::int64_t x = 0; x < width_; ++x) out.push_back(is_p(x, y) ? 1 : 0);
  return out;
}

std::uint64_t OutcomeGrid::digest() const { return fnv1a64(to_bytes()); }

OutcomeGrid outcomes2d(const Ruleset2D& rules, std::int64_t width, std::int64_t height, unsigned threads,
                       std::uint64_t max_bits) {
  if (width < 1 || height < 1) throw std::invalid_argument("grid dimensions must be positive");
  if (static_cast<std::uint64_t>(width) > max_bits / static_cast<std::uint64_t>(height))
    throw GridTooLarge("grid of " + std::to_string(width) + "x" + std::to_string(height) + " exceeds the cap of " +
                       std::to_string(max_bits) + " bits");
  OutcomeGrid grid(rules, width, height);
  const auto moves = rules.moves();

  auto fill = [&](std::int64_t y, std::int64_t x0, std::int64_t x1) {
    for (std::int64_t x = x0; x < x1; ++x) {
      bool n = false;
      for (const auto& m : moves)
        if (x >= m.a && y >= m.b && grid.is_p(x - m.a, y - m.b)) {
          n = true;
          break;
        }
      if (!n) grid.set_p(x, y);
    }
  };

  threads = search::resolve_threads(threads);
  const std::int64_t words = (width + 63) / 64;
  if (threads <= 1 || rules.has_horizontal() || words < 2) {
    for (std::int64_t y = 0; y < height; ++y) fill(y, 0, width);
    return grid;
  }
  // Chunks are whole words, so workers never share a word of the row.
  const std::int64_t chunks = std::min<std::int64_t>(words, threads);
  const std::int64_t per = (words + chunks - 1) / chunks;
  for (std::int64_t y = 0; y < height; ++y)
    search::parallel_for(static_cast<std::size_t>(chunks), threads, [&](std::size_t c) {
      const std::int64_t x0 = static_cast<std::int64_t>(c) * per * 64;
      fill(y, std::min(x0, width), std::min(x0 + per * 64, width));
    });
  return grid;
}

std::optional<PeriodicityCertificate> line_periodicity(const OutcomeGrid& grid, Line line) {
  std::vector<std::uint8_t> cells;
  if (line.kind == Line::row) {
    if (line.index < 0 || line.index >= grid.height()) return std::nullopt;
    for (std::int64_t x = 0; x < grid.width(); ++x) cells.push_back(grid.is_p(x, line.index));
  } else {
    if (line.index < 0 || line.index >= grid.width()) return std::nullopt;
    for (std::int64_t y = 0; y < grid.height(); ++y) cells.push_back(grid.is_p(line.index, y));
  }
  const std::int64_t window =
      std::max<std::int64_t>(1, line.kind == Line::row ? grid.ruleset().max_a() : grid.ruleset().max_b());
  auto cert = certify_periodicity(std::span<const std::uint8_t>(cells), window);
  if (!cert.certified) return std::nullopt;
  cert.certified = false;
  return cert;
}

}  // namespace subgame::twod
