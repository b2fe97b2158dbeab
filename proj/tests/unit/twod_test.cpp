#include <chrono>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "subgame/sequence.hpp"
#include "subgame/twod/grid.hpp"
#include "subgame/twod/pgm.hpp"

using namespace subgame;
using namespace subgame::twod;

namespace {

const Ruleset2D kSegments{{2, 6}, {3, 3}, {6, 1}, {19, 6}};

std::vector<std::pair<std::int64_t, std::int64_t>> pairs(const Ruleset2D& r) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& v : r.moves()) out.emplace_back(v.a, v.b);
  return out;
}

}  // namespace

TEST_CASE("2-d ruleset validation") {
  CHECK(kSegments.to_string() == "(2,6),(3,3),(6,1),(19,6)");
  CHECK(kSegments.max_a() == 19);
  CHECK(kSegments.max_b() == 6);
  CHECK_FALSE(kSegments.has_horizontal());
  CHECK(Ruleset2D{{1, 0}, {0, 1}}.has_horizontal());
  CHECK_THROWS(Ruleset2D{{0, 0}});
  CHECK_THROWS(Ruleset2D{{1, 1}, {1, 1}});
  CHECK_THROWS(Ruleset2D{{-1, 2}});
  CHECK_THROWS(Ruleset2D(std::vector<Vec2>{}));
}

TEST_CASE("simple 2-d patterns") {
  const auto diag = outcomes2d(Ruleset2D{{1, 1}}, 12, 9);
  for (std::int64_t y = 0; y < 9; ++y)
    for (std::int64_t x = 0; x < 12; ++x) CHECK(diag.is_p(x, y) == (std::min(x, y) % 2 == 0));

  const auto parity = outcomes2d(Ruleset2D{{1, 0}, {0, 1}}, 20, 15);
  for (std::int64_t y = 0; y < 15; ++y)
    for (std::int64_t x = 0; x < 20; ++x) CHECK(parity.is_p(x, y) == ((x + y) % 2 == 0));

  auto cert = line_periodicity(parity, {Line::row, 7});
  REQUIRE(cert);
  CHECK_FALSE(cert->certified);
  CHECK(cert->preperiod == 0);
  CHECK(cert->period == 2);

  const auto row4 = line_periodicity(outcomes2d(Ruleset2D{{1, 1}}, 40, 9), {Line::row, 4});
  REQUIRE(row4);
  CHECK(row4->period == 1);
  CHECK(row4->preperiod == 4);

  CHECK_FALSE(line_periodicity(parity, {Line::column, 99}));
}

TEST_CASE("grid matches the naive game tree") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<std::int64_t> coord(0, 5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Vec2> moves;
    while (moves.size() < 3) {
      Vec2 v{coord(rng), coord(rng)};
      if ((v.a || v.b) && std::find(moves.begin(), moves.end(), v) == moves.end()) moves.push_back(v);
    }
    const Ruleset2D r(moves);
    const auto ref = oracle::grid(pairs(r), 37, 23);
    for (unsigned threads : {1u, 3u}) {
      const auto g = outcomes2d(r, 37 * 3, 23, threads);
      for (std::int64_t y = 0; y < 23; ++y)
        for (std::int64_t x = 0; x < 37; ++x) REQUIRE(g.is_p(x, y) == ref[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)]);
    }
  }
  // Lower-left window of the segment ruleset.
  const auto ref = oracle::grid(pairs(kSegments), 120, 80);
  const auto g = outcomes2d(kSegments, 300, 200);
  for (std::int64_t y = 0; y < 80; ++y)
    for (std::int64_t x = 0; x < 120; ++x) REQUIRE(g.is_p(x, y) == ref[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)]);
}

TEST_CASE("row 0 of an embedded 1-d ruleset matches the 1-d outcomes") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<Move> top(1, 12);
  std::bernoulli_distribution keep(0.4);
  for (int trial = 0; trial < 50; ++trial) {
    const Move m = top(rng);
    std::vector<Move> moves{m};
    for (Move s = 1; s < m; ++s)
      if (keep(rng)) moves.push_back(s);
    std::vector<Vec2> v;
    for (Move s : moves) v.push_back({s, 0});
    const auto g = outcomes2d(Ruleset2D(v), 300, 3);
    const auto o = outcomes(Ruleset(moves), 300);
    for (std::int64_t x = 0; x < 300; ++x) REQUIRE(g.is_p(x, 0) == o.is_p(x));
  }
}

TEST_CASE("grid recomputation from predecessors") {
  const auto g = outcomes2d(kSegments, 500, 300);
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<std::int64_t> xs(0, 499), ys(0, 299);
  CHECK(g.is_p(0, 0));
  for (int i = 0; i < 2000; ++i) {
    const auto x = xs(rng), y = ys(rng);
    bool n = false;
    for (const auto& m : kSegments.moves()) n = n || (x >= m.a && y >= m.b && g.is_p(x - m.a, y - m.b));
    REQUIRE(g.is_p(x, y) == !n);
  }
}

TEST_CASE("memory guard") {
  CHECK_THROWS_AS(outcomes2d(kSegments, 1000, 1000, 1, 1000), GridTooLarge);
  CHECK_THROWS(outcomes2d(kSegments, 0, 10));
}

TEST_CASE("pgm encoding") {
  // Displayed as [[P,N],[N,P]]: the top row is y = 1.
  OutcomeGrid shown(Ruleset2D{{1, 1}}, 2, 2);
  shown.set_p(0, 1);
  shown.set_p(1, 0);
  CHECK(encode_pgm(render(shown)) == std::string("P5\n2 2\n255\n") + std::string("\x00\xff\xff\x00", 4));

  // Parity grid: (0,0) is P, so the bottom-left pixel is black.
  const auto parity = render(outcomes2d(Ruleset2D{{1, 0}, {0, 1}}, 2, 2));
  CHECK(parity.pixels == std::vector<std::uint8_t>{255, 0, 0, 255});

  const auto stripes = outcomes2d(Ruleset2D{{0, 1}}, 3, 2);
  const auto img = render(stripes);
  CHECK(img.pixels == std::vector<std::uint8_t>{255, 255, 255, 0, 0, 0});

  const auto wrapped = render_wrapped(outcomes(Ruleset{2, 5}, 10), 4);
  CHECK(wrapped.height == 3);
  CHECK(wrapped.pixels[0] == 0);
  CHECK(wrapped.pixels[11] == 255);

  CHECK_THROWS(encode_pgm(Image{}));
}

TEST_CASE("class grid rendering") {
  const auto grid = search::classify_three_move(31);
  const auto img = render(grid);
  CHECK(img.width == 29);
  CHECK(img.height == 29);
  // (s1, s2) = (1, 30) sits in the top-left corner.
  CHECK(img.pixels[0] == class_gray(grid.at(1, 30)));
  CHECK(img.pixels.back() == class_gray(search::CellClass::none));
  CHECK(class_gray(search::CellClass::diagonal) == 0);
  CHECK(class_gray(search::CellClass::s2_s3) > class_gray(search::CellClass::s1_s3));
  CHECK(class_gray(search::CellClass::s1_s3) > class_gray(search::CellClass::s1_s2));
}

TEST_CASE("segment grid digest is stable across thread counts") {
  const auto t0 = std::chrono::steady_clock::now();
  const auto a = outcomes2d(kSegments, 3600, 2000, 1);
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 60.0);
  const auto b = outcomes2d(kSegments, 3600, 2000, 2);
  CHECK(a.digest() == b.digest());
  CHECK(encode_pgm(render(a)).size() == 3600 * 2000 + std::string("P5\n3600 2000\n255\n").size());
  const auto row = line_periodicity(a, {Line::row, 100});
  CHECK(row.has_value());
}
