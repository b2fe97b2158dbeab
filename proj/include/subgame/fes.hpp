#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subgame/ruleset.hpp"

namespace subgame::fes {

/// All-but nim: from a heap of n tokens remove any m in 1..n except the
/// members of a finite excluded set.
class FesRuleset {
 public:
  explicit FesRuleset(std::vector<Move> excluded);
  FesRuleset(std::initializer_list<Move> excluded) : FesRuleset(std::vector<Move>(excluded)) {}

  std::span<const Move> excluded() const { return excluded_; }
  std::size_t size() const { return excluded_.size(); }
  bool contains(Move m) const;
  Move gcd() const;
  /// Every element divided by gcd().
  FesRuleset reduced() const;
  /// "!2,4"
  std::string to_string() const;

  friend bool operator==(const FesRuleset&, const FesRuleset&) = default;

 private:
  std::vector<Move> excluded_;
};

using Value = std::uint32_t;

struct FesSequence {
  FesRuleset ruleset;
  std::vector<Value> values;
};

/// G(n) = mex{ G(n - m) : 1 <= m <= n, m not excluded }.
///
/// The options of n are all earlier positions except at most |S| of them,
/// so the mex is either the mex of every earlier value or a value whose
/// every occurrence sits on an excluded option. Keeping a count per value
/// makes each step O(|S|) amortized.
FesSequence fes_grundy(const FesRuleset& rules, std::int64_t horizon);

/// G(n + period) = G(n) + saltus for preperiod <= n < horizon - period.
struct ArithmeticPeriodicity {
  std::int64_t preperiod = 0;
  std::int64_t period = 1;
  std::int64_t saltus = 1;
  /// Number of terms from the preperiod to the horizon.
  std::int64_t window = 0;

  friend bool operator==(const ArithmeticPeriodicity&, const ArithmeticPeriodicity&) = default;
};

struct DetectOptions {
  std::int64_t min_periods = 3;
  std::int64_t min_terms = 1000;
};

/// Smallest period p, with a positive constant difference over the tail,
/// whose tail spans at least max(min_periods * p, min(min_terms, H / 2))
/// terms; the preperiod is the start of that tail. Empirical only.
std::optional<ArithmeticPeriodicity> detect_arithmetic_periodicity(std::span<const Value> seq,
                                                                    const DetectOptions& options = {});

/// X^repetitions + saltus with X = 0, 1, ..., a - 1.
struct ClosedForm {
  std::vector<Value> block;
  std::int64_t repetitions = 0;
  std::int64_t saltus = 0;

  std::int64_t period() const { return static_cast<std::int64_t>(block.size()) * repetitions; }
  Value at(std::int64_t n) const;
};

/// Siegel's forms for |S| <= 2. Throws PreconditionError for |S| >= 3.
ClosedForm closed_form(const FesRuleset& rules);

struct ClosedFormCheck {
  ClosedForm form;
  std::int64_t horizon = 0;
  std::optional<std::int64_t> first_mismatch;
};

ClosedFormCheck check_closed_form(const FesRuleset& rules, std::int64_t horizon);

struct ScalingCheck {
  Move gcd = 1;
  FesRuleset reduced;
  std::int64_t horizon = 0;
  /// First n with G_S(n) != G_{S'}(n / g) g + n mod g.
  std::optional<std::int64_t> first_violation;
};

ScalingCheck gcd_scaling_check(const FesRuleset& rules, std::int64_t horizon);

// Conjecture harness ---------------------------------------------------------

enum class Conjecture {
  /// S = {a, b, a+b}, b > 3a, gcd 1: p = 3am for a multiple m of 2a in (b, a+b),
  /// otherwise p = 3an for some n in (b, a+b).
  sleator_slusky,
  /// S = {a, b, a+b, a+2b}: p = f / divisor with the three-case divisor.
  abuku_suetsugu_f,
  /// S = {a, b, a+b, 2a+b}, b != 2a, 2ma <= b <= (2m+1)a: pure with p = (2m+3)a + b.
  abuku_suetsugu_lemma,
  /// S = {a, b, a+b, 2a+b}, b > 2a: purely arithmetic periodic.
  abuku_suetsugu_pure,
  /// S = {a, b, a+b, 2a+b}, (2m+1)a < b < (2m+2)a: pure with p = f' / gcd(a, b).
  abuku_suetsugu_f_prime,
};

std::optional<Conjecture> conjecture_from_name(std::string_view name);
std::string_view conjecture_name(Conjecture c);

enum class VerdictKind { holds_over_window, violated, inconclusive };

std::string_view verdict_name(VerdictKind kind);

struct Verdict {
  Conjecture conjecture{};
  Move a = 0, b = 0;
  FesRuleset ruleset{1};
  VerdictKind kind = VerdictKind::inconclusive;
  /// Index where the conjectured relation first fails, when one exists.
  std::optional<std::int64_t> witness;
  std::optional<std::int64_t> predicted_period;
  std::optional<ArithmeticPeriodicity> observed;
  /// Which branch of a case-split conjecture applied.
  std::string matched_case;
  std::string detail;
};

/// Builds the conjecture's ruleset from (a, b), computes G to the horizon
/// and compares. Throws PreconditionError naming the premise that fails.
Verdict run_conjecture(Conjecture which, Move a, Move b, std::int64_t horizon);

}  // namespace subgame::fes
