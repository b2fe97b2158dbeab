#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "subgame/sequence.hpp"

using namespace subgame;

namespace {

oracle::Moves as_moves(const Ruleset& r) { return {r.moves().begin(), r.moves().end()}; }

Ruleset random_ruleset(std::mt19937_64& rng, Move max_bound) {
  std::uniform_int_distribution<Move> top(1, max_bound);
  const Move m = top(rng);
  std::vector<Move> moves{m};
  std::bernoulli_distribution keep(0.35);
  for (Move s = 1; s < m; ++s)
    if (keep(rng)) moves.push_back(s);
  return Ruleset(moves);
}

}  // namespace

TEST_CASE("ruleset construction sorts and validates") {
  Ruleset r({7, 2, 5});
  CHECK(r.to_string() == "2,5,7");
  CHECK(r.min() == 2);
  CHECK(r.max() == 7);
  CHECK(r.size() == 3);
  CHECK(r.with(4).to_string() == "2,4,5,7");
  CHECK(r.with(5) == r);
  CHECK(Ruleset{4, 6}.gcd() == 2);
  CHECK_THROWS_AS(Ruleset(std::vector<Move>{}), std::invalid_argument);
  CHECK_THROWS_AS((Ruleset{0, 3}), std::invalid_argument);
  CHECK_THROWS_AS((Ruleset{2, 2, 3}), std::invalid_argument);
}

TEST_CASE("seed indexing puts the deepest position first") {
  const auto seed = Seed::parse("NNP");
  CHECK(seed.at(-3) == Outcome::N);
  CHECK(seed.at(-1) == Outcome::P);
  CHECK_THROWS(seed.at(0));
  CHECK_THROWS(Seed::parse("NXP"));
  CHECK(Seed::misere(Ruleset{2, 5}).to_string() == "NNPPP");
}

TEST_CASE("outcome tables for two- and three-move rulesets") {
  CHECK(outcomes(Ruleset{2, 5}, 17).to_string() == "PPNNPNNPPNNPNNPPN");
  CHECK(outcomes(Ruleset{2, 3, 5}, 17).to_string() == "PPNNNNNPPNNNNNPPN");
  CHECK(outcomes(Ruleset{2, 5, 7}, 30).to_string() == "PPNNPNNNNNPNNPPNNNNNNNPPNNPNNN");
  CHECK(outcomes(Ruleset{2, 4, 7}, 17).to_string() == "PPNNNNPNNPNNPNNPN");
  CHECK(outcomes(Ruleset{1}, 8).to_string() == "PNPNPNPN");
}

TEST_CASE("outcome errors") {
  CHECK_THROWS_AS(outcomes(Ruleset{2, 5}, 0), std::invalid_argument);
  CHECK_THROWS_AS(outcomes(Ruleset{2, 5}, Seed::parse("NNN"), 10), std::invalid_argument);
}

TEST_CASE("packed kernel agrees with the game-tree oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto r = random_ruleset(rng, trial < 200 ? 12 : 90);
    std::string seed;
    std::bernoulli_distribution coin(0.5);
    for (Move i = 0; i < r.max(); ++i) seed += coin(rng) ? 'P' : 'N';
    const auto seq = outcomes(r, Seed::parse(seed), 400);
    CHECK(seq.to_string() == oracle::outcomes(as_moves(r), 400, seed));
    CHECK_FALSE(recurrence_violation(seq).has_value());
  }
}

TEST_CASE("extending a sequence matches computing it at once") {
  const Ruleset r{3, 8, 12, 70};
  auto seq = outcomes(r, 5);
  seq.extend(77);
  seq.extend(300);
  CHECK(seq.to_string() == outcomes(r, 300).to_string());

  auto g = grundy(r, 3);
  g.extend(300);
  CHECK(g.to_string() == grundy(r, 300).to_string());
}

TEST_CASE("grundy values") {
  CHECK(grundy(Ruleset{1, 2}, 9).to_string() == "012012012");
  CHECK(grundy(Ruleset{4, 7, 10}, 14).to_string() == "00001111222233");
  CHECK(grundy(Ruleset{4, 9, 14}, 18).to_string() == "000011110222103321");
  CHECK_THROWS_AS(grundy(Ruleset{1}, 0), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = random_ruleset(rng, 20);
    const auto g = grundy(r, 300);
    const auto expect = oracle::grundy(as_moves(r), 300);
    CHECK(std::vector<std::uint32_t>(g.values().begin(), g.values().end()) == expect);
    for (auto v : g.values()) CHECK(v <= r.size());
  }
}

TEST_CASE("outcome and grundy agree on P-positions") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = random_ruleset(rng, 25);
    const auto o = outcomes(r, 500);
    const auto g = grundy(r, 500);
    for (std::int64_t x = 0; x < 500; ++x) REQUIRE(o.is_p(x) == (g[x] == 0));
  }
}

TEST_CASE("misere outcomes") {
  CHECK(misere_outcomes(Ruleset{2, 3}, 6).to_string() == "NNPPNN");
  CHECK(misere_outcomes(Ruleset{1}, 6).to_string() == "NPNPNP");
  CHECK(misere_outcomes(Ruleset{2, 5}, 2).to_string() == "NN");
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = random_ruleset(rng, 30);
    const auto seq = misere_outcomes(r, 300);
    CHECK(seq.to_string() == oracle::misere(as_moves(r), 300));
    CHECK_FALSE(recurrence_violation(seq).has_value());
  }
}

TEST_CASE("misere seed and direct misere play diverge for {2,3}") {
  const Ruleset r{2, 3};
  const auto seeded = outcomes(r, Seed::misere(r), 6);
  const auto direct = misere_outcomes(r, 6);
  CHECK(seeded.to_string() == "PNNNPP");
  REQUIRE(first_difference(seeded, direct).has_value());
  CHECK(*first_difference(seeded, direct) == 0);
}

TEST_CASE("word formatting") {
  const std::vector<std::uint32_t> small{0, 1, 2};
  const std::vector<std::uint32_t> big{0, 12, 3};
  CHECK(format_word(small) == "012");
  CHECK(format_word(big) == "0,12,3");
}
