#include <cmath>
#include <map>
#include <numeric>

#include "doctest.h"
#include "oracle.hpp"
#include "subgame/laws.hpp"
#include "subgame/search/classify.hpp"
#include "subgame/search/enumerate.hpp"
#include "subgame/search/family.hpp"
#include "subgame/search/growth.hpp"
#include "subgame/search/records.hpp"
#include "subgame/search/zhang.hpp"

using namespace subgame;
using namespace subgame::search;

namespace {

// Outcome period by quadratic candidate testing over a long brute-force prefix.
oracle::Period brute_period(const Ruleset& r, std::int64_t horizon = 600) {
  const oracle::Moves m(r.moves().begin(), r.moves().end());
  return oracle::minimal_period(oracle::outcomes(m, horizon), r.max());
}

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

TEST_CASE("enumeration order and counts") {
  auto all = enumerate_rulesets(5, 2);
  REQUIRE(all.size() == 10);
  CHECK(all.front() == Ruleset{1, 2});
  CHECK(all[1] == Ruleset{1, 3});
  CHECK(all.back() == Ruleset{4, 5});
  CHECK(std::is_sorted(all.begin(), all.end()));

  CHECK(enumerate_rulesets(3, 3) == std::vector<Ruleset>{Ruleset{1, 2, 3}});
  CHECK(enumerate_rulesets(2, 3).empty());
  CHECK(enumerate_rulesets(9, 4).size() == choose(9, 4));
  CHECK(enumerate_rulesets(6, 0).size() == 63);

  for (int k = 1; k <= 4; ++k) {
    const auto sym = enumerate_rulesets(9, k, Filter::max_symmetric);
    std::vector<Ruleset> expect;
    for (const auto& r : enumerate_rulesets(9, k))
      if (is_max_symmetric(r)) expect.push_back(r);
    CHECK(sym == expect);
  }

  const auto with8 = enumerate_with_max(8, 3);
  CHECK(with8.size() == choose(7, 2));
  for (const auto& r : with8) CHECK(r.max() == 8);
  CHECK(enumerate_with_max(6, 0).size() == 32);
}

TEST_CASE("parallel_for covers every index once") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
  CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  CHECK_THROWS(parallel_for(10, 3, [](std::size_t i) {
    if (i == 5) throw std::runtime_error("boom");
  }));
}

TEST_CASE("record holders") {
  const auto table = record_holders(5, 7, 3, Filter::all);
  REQUIRE(table.rows.size() == 3);
  const auto& row7 = table.rows.back();
  CHECK(row7.max_s == 7);
  CHECK(row7.uncertified == 0);
  REQUIRE(row7.holders.size() == 1);
  CHECK(row7.holders[0].ruleset == Ruleset{2, 5, 7});
  CHECK(row7.holders[0].outcome.period == 22);

  // Oracle: brute-force periods of every 3-move set with max 6.
  std::int64_t best = 0;
  std::vector<Ruleset> expect;
  for (const auto& r : enumerate_with_max(6, 3)) {
    const auto p = brute_period(r).period;
    if (p > best) {
      best = p;
      expect.clear();
    }
    if (p == best) expect.push_back(r);
  }
  const auto& row6 = table.rows[1];
  REQUIRE(row6.holders.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) {
    CHECK(row6.holders[i].ruleset == expect[i]);
    CHECK(row6.holders[i].outcome.period == best);
  }

  const auto two = record_holders(5, 5, 2, Filter::all);
  REQUIRE(two.rows[0].holders.size() == 1);
  CHECK(two.rows[0].holders[0].ruleset == Ruleset{4, 5});
  CHECK(two.rows[0].holders[0].outcome.period == 9);
}

TEST_CASE("record holders do not depend on thread count") {
  const auto a = record_holders(8, 11, 4, Filter::all, {}, 1);
  const auto b = record_holders(8, 11, 4, Filter::all, {}, 3);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    REQUIRE(a.rows[i].holders.size() == b.rows[i].holders.size());
    for (std::size_t j = 0; j < a.rows[i].holders.size(); ++j) {
      CHECK(a.rows[i].holders[j].ruleset == b.rows[i].holders[j].ruleset);
      CHECK(a.rows[i].holders[j].nim == b.rows[i].holders[j].nim);
    }
  }
}

TEST_CASE("uncertified rulesets are counted, not dropped silently") {
  HorizonPolicy tiny{.limit = 16, .initial = 16};
  const auto table = record_holders(7, 7, 3, Filter::all, tiny);
  CHECK(table.rows[0].uncertified > 0);
  CHECK(table.rows[0].enumerated == choose(6, 2));
}

TEST_CASE("three-move classification") {
  const auto grid = classify_three_move(7);
  // {2,5,7} lies on the diagonal; its period 22 divides none of the sums.
  CHECK(grid.at(2, 5) == CellClass::diagonal);
  CHECK(grid.period_at(2, 5) == 22);
  CHECK(classify_cell(2, 5, 8, {0, 22, true, 100}) == CellClass::other);
  CHECK(grid.at(3, 4) == CellClass::diagonal);
  CHECK(grid.at(5, 2) == CellClass::none);

  // {2,3,7}: classify the brute-force period with the same rule.
  const auto p = brute_period(Ruleset{2, 3, 7}).period;
  CHECK(grid.period_at(2, 3) == p);
  CellClass expect = CellClass::other;
  if (5 % p == 0)
    expect = CellClass::s1_s2;
  else if (9 % p == 0)
    expect = CellClass::s1_s3;
  else if (10 % p == 0)
    expect = CellClass::s2_s3;
  CHECK(grid.at(2, 3) == expect);

  for (Move s1 = 1; s1 < 7; ++s1)
    for (Move s2 = s1 + 1; s2 < 7; ++s2)
      if (s1 + s2 == 7) CHECK(grid.at(s1, s2) == CellClass::diagonal);
}

TEST_CASE("class s1+s3 is the plurality") {
  const auto grid = classify_three_move(40, {}, 2);
  std::map<CellClass, int> counts;
  for (auto c : grid.cells) ++counts[c];
  const int s1s3 = counts[CellClass::s1_s3];
  for (auto [c, n] : counts)
    if (c != CellClass::s1_s3 && c != CellClass::none) CHECK(n < s1s3);
  CHECK(counts[CellClass::unknown] == 0);
}

TEST_CASE("polynomials") {
  auto p = Polynomial::parse("45n^2-1");
  CHECK(p(1) == 44);
  CHECK(p(3) == 404);
  CHECK(p.degree() == 2);
  CHECK(p.to_string() == "45n^2-1");
  CHECK(Polynomial::parse("56a³ + 52a² + 9a + 1")(1) == 118);
  CHECK(Polynomial::parse("5n−2")(2) == 8);
  CHECK(Polynomial::parse("n")(7) == 7);
  CHECK(Polynomial::parse("-n+4")(1) == 3);
  CHECK(Polynomial::parse("7")(100) == 7);
  CHECK(Polynomial::parse("2*n").degree() == 1);
  for (const char* t : {"10n^2+4n", "n", "3", "-2n+1", "4n^3-n"})
    CHECK(Polynomial::parse(Polynomial::parse(t).to_string()) == Polynomial::parse(t));
  CHECK_THROWS(Polynomial::parse(""));
  CHECK_THROWS(Polynomial::parse("2n+3m"));
  CHECK_THROWS(Polynomial::parse("n++"));
  CHECK_THROWS(Polynomial::parse("4 4"));
}

TEST_CASE("family evaluation") {
  auto ab = builtin_family("althofer-bultermann");
  REQUIRE(ab);
  auto rows = family_eval(*ab, 2, 2);
  CHECK(rows[0].ruleset == Ruleset{2, 5, 7});
  CHECK(rows[0].outcome.preperiod == 0);
  CHECK(rows[0].outcome.period == 22);
  CHECK(rows[0].status == RowStatus::match);

  auto cubic = builtin_family("cubic");
  rows = family_eval(*cubic, 1, 1);
  CHECK(rows[0].ruleset == Ruleset{1, 4, 13, 17});
  CHECK(rows[0].outcome.period == 118);
  CHECK(rows[0].outcome.preperiod == 0);
  CHECK(rows[0].status == RowStatus::match);
  // The nim sequence is not pure at n=2; only the outcomes are predicted.
  rows = family_eval(*cubic, 2, 2);
  CHECK(rows[0].outcome.period == 675);
  CHECK(rows[0].status == RowStatus::match);
  REQUIRE(rows[0].nim);
  CHECK(rows[0].nim->preperiod > 0);

  // Observed values agree with brute force whatever the prediction says.
  auto lp = builtin_family("long-preperiod");
  rows = family_eval(*lp, 1, 1);
  CHECK(rows[0].ruleset == Ruleset{3, 8, 12});
  CHECK(rows[0].outcome.preperiod == brute_period(Ruleset{3, 8, 12}).preperiod);

  auto s4 = builtin_family("S4");
  rows = family_eval(*s4, 2, 2);
  CHECK(rows[0].outcome.period == 24);
  CHECK(rows[0].nim->period == 48);
  CHECK(rows[0].status == RowStatus::match);

  auto s1 = builtin_family("S1");
  rows = family_eval(*s1, 2, 2);
  CHECK(rows[0].status == RowStatus::invalid);
  CHECK_FALSE(rows[0].error.empty());

  CHECK_FALSE(builtin_family("nope"));
  for (const auto& name : builtin_family_names()) CHECK(builtin_family(name));
}

TEST_CASE("divergent periods") {
  auto d = divergent_period_check(Ruleset{4, 6, 11, 14});
  REQUIRE(d.ratio);
  CHECK(*d.ratio == 2.0);
  d = divergent_period_check(Ruleset{5, 7, 14, 17});
  CHECK(d.ratio == 2.0);
  d = divergent_period_check(Ruleset{2, 5});
  CHECK(d.ratio == 1.0);
  // Oracle periods for the nim sequence.
  const auto g = oracle::grundy({4, 6, 11, 14}, 800);
  CHECK(oracle::minimal_period(g, 14).period == divergent_period_check(Ruleset{4, 6, 11, 14}).nim.period);
}

TEST_CASE("seeded family") {
  auto s = seeded_family(2);
  CHECK(s.ruleset == Ruleset{2, 7, 16});
  CHECK(s.seed.to_string() == "NNNNNNNNNPNNNNNN");
  s = seeded_family(3);
  CHECK(s.ruleset == Ruleset{3, 11, 36});
  CHECK(s.seed.to_string().substr(0, 15) == std::string(14, 'N') + "P");
  for (std::int64_t n = 2; n <= 10; ++n) CHECK(seeded_family(n).seed.size() == static_cast<std::size_t>(4 * n * n));
  CHECK_THROWS_AS(seeded_family(1), PreconditionError);
}

TEST_CASE("growth fits") {
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  for (std::int64_t m = 10; m <= 60; m += 10) pts.emplace_back(m, std::llround(std::pow(2.0, 0.3 * m) * 1e6));
  auto g = fit_growth(pts);
  CHECK(g.alpha == doctest::Approx(0.3).epsilon(1e-6));

  pts.clear();
  for (std::int64_t m = 3; m <= 12; ++m) pts.emplace_back(m, m * m * m * m * m);
  g = fit_growth(pts);
  CHECK(g.beta == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(g.monomial.max_abs_residual < 1e-9);

  CHECK_THROWS(fit_growth(std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 4}, {4, 5}}));
  CHECK_THROWS(fit_growth(std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 4}, {3, 5}, {3, 6}}));
  CHECK_THROWS(fit_growth(std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 4}, {4, 0}, {5, 6}}));
}

TEST_CASE("adjoin-one-move scans") {
  auto scan = zhang_scan(Ruleset{1, 2}, 1, 3, 7, 16);
  REQUIRE(scan.rows.size() == 4);
  for (const auto& row : scan.rows) {
    const auto ref = brute_period(Ruleset{1, 2}.with(row.c));
    CHECK(row.certificate.period == ref.period);
    CHECK(row.certificate.preperiod == ref.preperiod);
  }
  REQUIRE(scan.period_fit);
  CHECK(scan.period_fit->max_abs_residual < 1e-9);

  scan = zhang_scan(Ruleset{1, 3}, 0, 2, 4, 60);
  REQUIRE(scan.period_fit);
  CHECK(scan.period_fit->max_abs_residual < 1e-9);
  CHECK(scan.preperiod_fit->max_abs_residual < 1e-9);

  const auto base = certified_outcomes(Ruleset{2, 4}).certificate;
  scan = zhang_scan(Ruleset{2, 4}, 1, base.period * 2, 5, 200);
  REQUIRE(scan.period_fit);
  CHECK_FALSE(scan.fit_uses_all_rows);
  CHECK(scan.above_threshold_deviation.value_or(0) < 1e-9);

  CHECK_THROWS_AS(zhang_scan(Ruleset{1, 2}, 1, 4, 7, 16), PreconditionError);
}
