#include <numeric>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "subgame/fes.hpp"
#include "subgame/sequence.hpp"

using namespace subgame;
using namespace subgame::fes;

namespace {

std::vector<std::uint64_t> widen(const std::vector<Value>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("fes ruleset") {
  const FesRuleset r{4, 2};
  CHECK(r.to_string() == "!2,4");
  CHECK(r.gcd() == 2);
  CHECK(r.reduced() == FesRuleset{1, 2});
  CHECK(r.contains(4));
  CHECK_FALSE(r.contains(3));
  CHECK_THROWS(FesRuleset(std::vector<Move>{}));
  CHECK_THROWS(FesRuleset{2, 2});
  CHECK_THROWS(FesRuleset{0, 2});
}

TEST_CASE("fes grundy against full option enumeration") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> size(1, 4);
  std::uniform_int_distribution<Move> elem(1, 15);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Move> s;
    const int k = size(rng);
    while (static_cast<int>(s.size()) < k) {
      const Move m = elem(rng);
      if (std::find(s.begin(), s.end(), m) == s.end()) s.push_back(m);
    }
    const auto seq = fes_grundy(FesRuleset(s), 250);
    REQUIRE(widen(seq.values) == oracle::fes(s, 250));
  }
}

TEST_CASE("fes words for small excluded sets") {
  CHECK(format_word(fes_grundy(FesRuleset{2}, 10).values) == "0101232345");
  CHECK(format_word(fes_grundy(FesRuleset{2, 4}, 12).values) == "010101232323");
}

TEST_CASE("closed forms for one and two excluded moves") {
  for (Move a = 1; a <= 12; ++a) {
    CHECK_FALSE(check_closed_form(FesRuleset{a}, 2000).first_mismatch.has_value());
    for (Move b = a + 1; b <= 12; ++b) {
      const auto check = check_closed_form(FesRuleset{a, b}, 2000);
      CHECK_MESSAGE(!check.first_mismatch, "a=", a, " b=", b);
      CHECK(check.form.period() == (b == 2 * a ? 3 * a : 2 * a));
    }
  }
  CHECK_THROWS_AS(closed_form(FesRuleset{1, 2, 3}), PreconditionError);
}

TEST_CASE("gcd scaling") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<Move> g(2, 5), elem(1, 8);
  std::uniform_int_distribution<int> size(1, 4);
  int done = 0;
  while (done < 50) {
    const Move k = g(rng);
    std::vector<Move> s;
    const int n = size(rng);
    while (static_cast<int>(s.size()) < n) {
      const Move m = elem(rng);
      if (std::find(s.begin(), s.end(), m) == s.end()) s.push_back(m);
    }
    Move h = 0;
    for (Move m : s) h = std::gcd(h, m);
    for (Move& m : s) m = m / h * k;
    const auto check = gcd_scaling_check(FesRuleset(s), 2000);
    CHECK(check.gcd == k);
    CHECK_FALSE(check.first_violation.has_value());
    ++done;
  }
}

TEST_CASE("arithmetic periodicity detection") {
  const auto seq = fes_grundy(FesRuleset{2, 3, 5, 7}, 20000);
  const auto ap = detect_arithmetic_periodicity(seq.values);
  REQUIRE(ap);
  CHECK(ap->preperiod == 2);
  CHECK(ap->period == 10);
  CHECK(ap->saltus == 3);

  // Oracle: the relation holds from the preperiod on and fails just before it.
  const auto& g = seq.values;
  for (std::size_t n = 2; n + 10 < g.size(); ++n) REQUIRE(g[n + 10] - g[n] == 3);
  CHECK(g[11] - g[1] != 3);

  const auto pure = detect_arithmetic_periodicity(fes_grundy(FesRuleset{1, 3, 4, 7}, 5000).values);
  REQUIRE(pure);
  CHECK(pure->preperiod == 0);
  CHECK(pure->period == 8);
  CHECK(pure->saltus == 2);

  // A short horizon for !2 still finds the pure period 4.
  const auto short_run = detect_arithmetic_periodicity(fes_grundy(FesRuleset{2}, 100).values);
  REQUIRE(short_run);
  CHECK(*short_run == ArithmeticPeriodicity{0, 4, 2, 100});

  const std::vector<Value> flat(50, 3);
  CHECK_FALSE(detect_arithmetic_periodicity(flat).has_value());
}

TEST_CASE("sleator-slusky conjecture") {
  auto v = run_conjecture(Conjecture::sleator_slusky, 2, 7, 50000);
  CHECK(v.predicted_period == 48);
  CHECK(v.kind == VerdictKind::holds_over_window);
  REQUIRE(v.observed);
  CHECK(v.observed->period == 48);

  v = run_conjecture(Conjecture::sleator_slusky, 2, 9, 50000);
  CHECK_FALSE(v.predicted_period.has_value());
  CHECK(v.kind == VerdictKind::holds_over_window);
  REQUIRE(v.observed);
  CHECK(v.observed->period == 60);

  v = run_conjecture(Conjecture::sleator_slusky, 3, 10, 50000);
  CHECK(v.predicted_period == 108);
  CHECK(v.kind == VerdictKind::holds_over_window);

  CHECK_THROWS_AS(run_conjecture(Conjecture::sleator_slusky, 2, 5, 1000), PreconditionError);
  CHECK_THROWS_AS(run_conjecture(Conjecture::sleator_slusky, 2, 10, 1000), PreconditionError);
}

TEST_CASE("period lemma for {a,b,a+b,2a+b}") {
  auto v = run_conjecture(Conjecture::abuku_suetsugu_lemma, 2, 9, 50000);
  CHECK(v.predicted_period == 23);
  CHECK(v.kind == VerdictKind::holds_over_window);
  REQUIRE(v.observed);
  CHECK(v.observed->period == 23);
  CHECK(v.observed->preperiod == 0);

  v = run_conjecture(Conjecture::abuku_suetsugu_lemma, 3, 13, 50000);
  CHECK(v.predicted_period == 34);
  CHECK(v.kind == VerdictKind::holds_over_window);

  CHECK_THROWS_AS(run_conjecture(Conjecture::abuku_suetsugu_lemma, 2, 4, 1000), PreconditionError);
  CHECK_THROWS_AS(run_conjecture(Conjecture::abuku_suetsugu_lemma, 2, 11, 1000), PreconditionError);
}

TEST_CASE("violations carry a witness") {
  // Too short a horizon is inconclusive rather than a verdict.
  auto v = run_conjecture(Conjecture::abuku_suetsugu_lemma, 2, 9, 40);
  CHECK(v.kind == VerdictKind::inconclusive);

  v = run_conjecture(Conjecture::abuku_suetsugu_pure, 2, 9, 20000);
  CHECK(v.kind == VerdictKind::holds_over_window);
  CHECK_FALSE(v.witness.has_value());
}

TEST_CASE("remaining conjectures produce a verdict") {
  for (Move a = 1; a <= 4; ++a)
    for (Move b = a + 1; b <= 12; ++b) {
      const auto v = run_conjecture(Conjecture::abuku_suetsugu_f, a, b, 20000);
      CHECK_FALSE(v.matched_case.empty());
      if (v.kind == VerdictKind::violated && v.witness) CHECK(*v.witness >= 0);
    }
  const auto v = run_conjecture(Conjecture::abuku_suetsugu_f_prime, 2, 7, 20000);
  CHECK(v.predicted_period.has_value());
  CHECK_THROWS_AS(run_conjecture(Conjecture::abuku_suetsugu_f_prime, 2, 8, 1000), PreconditionError);
}

TEST_CASE("conjecture names round-trip") {
  for (auto c : {Conjecture::sleator_slusky, Conjecture::abuku_suetsugu_f, Conjecture::abuku_suetsugu_lemma,
                 Conjecture::abuku_suetsugu_pure, Conjecture::abuku_suetsugu_f_prime})
    CHECK(conjecture_from_name(conjecture_name(c)) == c);
  CHECK_FALSE(conjecture_from_name("nope").has_value());
}
