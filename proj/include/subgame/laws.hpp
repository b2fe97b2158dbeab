#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subgame/periodicity.hpp"

namespace subgame {

/// Outcome period of {a, b}: a + b, or 2a when 2a divides a + b; always pure.
PeriodicityCertificate two_move_period(Move a, Move b);

struct TwoMoveLawCheck {
  PeriodicityCertificate predicted;
  PeriodicityCertificate observed;
  bool agrees = false;
};

/// Predicted outcome period of {a, b} checked against a computed
/// certificate. Throws PreconditionError unless 0 < a < b.
TwoMoveLawCheck two_move_law(Move a, Move b, const HorizonPolicy& policy = {});

/// Austin's period words for two-move nim-sequences:
///   b = (2n-1)a + r  ->  (0^a 1^a)^n 2^r
///   b = 2na + r      ->  (0^a 1^a)^n 0^r 2^(a-r) 1^r,   0 < r < a.
/// When a divides b no form applies; `covered` is false and only the
/// computed word is reported.
struct TwoMoveNimPrediction {
  Move a = 0, b = 0;
  bool covered = false;
  std::int64_t repetitions = 0;
  std::int64_t remainder = 0;
  std::vector<std::uint32_t> predicted;
  std::vector<std::uint32_t> observed;
  PeriodicityCertificate observed_certificate;
  /// covered, certified, pure, and the observed period word equals the prediction.
  bool matches = false;
};

TwoMoveNimPrediction predict_two_move_nim(Move a, Move b, const HorizonPolicy& policy = {});

/// The p with p - s ∈ S for every s ∈ S, if any. Such a p is forced to be
/// min S + max S.
std::optional<Move> symmetry_period(const Ruleset& rules);

/// max S - s ∈ S implies s ∈ S, for every 1 <= s <= max S.
bool is_max_symmetric(const Ruleset& rules);

struct FibonacciBound {
  /// ceil(2 phi^{max S}); exact while `saturated` is false.
  std::uint64_t value = 0;
  bool saturated = false;
};

/// Period bound 2 phi^{max S}, available when two distinct moves sum to at
/// most max S. Computed as L_n + ceil(F_n sqrt 5) with integer arithmetic,
/// since 2 phi^n = L_n + F_n sqrt 5.
std::optional<FibonacciBound> fibonacci_bound(const Ruleset& rules);

/// Every gap between consecutive moves is at most min S.
bool short_period_law_applies(const Ruleset& rules);

/// P^{min S} N^{max S}: one period of the outcomes when the short-period
/// law applies.
std::string short_period_word(const Ruleset& rules);

/// First x >= min S where G(x) == 1 and G(x - min S) == 0 disagree.
std::optional<std::int64_t> ferguson_violation(const GrundySequence& seq);

}  // namespace subgame
