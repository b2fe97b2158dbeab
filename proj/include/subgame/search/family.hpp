#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "subgame/periodicity.hpp"
#include "subgame/search/polynomial.hpp"

namespace subgame::search {

struct FamilySpec {
  std::string name;
  std::vector<Polynomial> moves;
  std::optional<Polynomial> outcome_period, outcome_preperiod;
  std::optional<Polynomial> nim_period, nim_preperiod;
  /// Terminal seed for the outcome sequence; normal play when empty.
  std::function<Seed(std::int64_t)> seed;
  /// Smallest admissible parameter.
  std::int64_t min_n = 1;

  Ruleset instantiate(std::int64_t n) const;
};

/// Named families: "althofer-bultermann", "cubic", "long-preperiod", "S1".."S4",
/// "miklos-post".
std::optional<FamilySpec> builtin_family(std::string_view name);
std::vector<std::string> builtin_family_names();

struct PredictionCheck {
  std::string quantity;  // e.g. "outcome period"
  std::int64_t predicted = 0;
  std::int64_t observed = 0;
  bool matches = false;
};

enum class RowStatus { match, mismatch, inconclusive, invalid, unchecked };

std::string_view row_status_name(RowStatus s);

struct FamilyRow {
  std::int64_t n = 0;
  std::optional<Ruleset> ruleset;
  std::string error;  // when the instance is invalid
  PeriodicityCertificate outcome;
  std::optional<PeriodicityCertificate> nim;  // skipped for seeded families
  std::vector<PredictionCheck> checks;
  RowStatus status = RowStatus::unchecked;
};

std::vector<FamilyRow> family_eval(const FamilySpec& family, std::int64_t lo, std::int64_t hi,
                                   const HorizonPolicy& policy = {}, unsigned threads = 1);

struct DivergentCheck {
  PeriodicityCertificate outcome;
  PeriodicityCertificate nim;
  /// nim period / outcome period, when both are certified.
  std::optional<double> ratio;
};

DivergentCheck divergent_period_check(const Ruleset& rules, const HorizonPolicy& policy = {});

struct SeededInstance {
  Ruleset ruleset;
  Seed seed;
};

/// S_n = {n, 4n-1, 4n^2} with seed N^(5n-1) followed by P^j N^(4n-1-j) for
/// j = 1..n-1. Throws PreconditionError for n < 2.
SeededInstance seeded_family(std::int64_t n);

}  // namespace subgame::search
