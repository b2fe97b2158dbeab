#include "subgame/laws.hpp"

#include <limits>
#include <utility>

namespace subgame {

PeriodicityCertificate two_move_period(Move a, Move b) {
  PeriodicityCertificate cert;
  cert.period = (a + b) % (2 * a) == 0 ? 2 * a : a + b;
  cert.certified = true;
  return cert;
}

TwoMoveLawCheck two_move_law(Move a, Move b, const HorizonPolicy& policy) {
  if (a < 1 || a >= b) throw PreconditionError("two-move law needs 0 < a < b");
  TwoMoveLawCheck check;
  check.observed = certified_outcomes(Ruleset{a, b}, policy).certificate;
  check.predicted = two_move_period(a, b);
  check.predicted.horizon = check.observed.horizon;
  check.agrees = check.observed.certified && check.observed.preperiod == 0 &&
                 check.observed.period == check.predicted.period;
  return check;
}

TwoMoveNimPrediction predict_two_move_nim(Move a, Move b, const HorizonPolicy& policy) {
  if (a < 1 || a >= b) throw PreconditionError("two-move nim forms need 0 < a < b");
  TwoMoveNimPrediction out;
  out.a = a;
  out.b = b;

  auto run = certified_grundy(Ruleset{a, b}, policy);
  out.observed_certificate = run.certificate;
  out.observed = period_word(run.sequence, run.certificate);

  const Move q = b / a;
  const Move r = b % a;
  out.remainder = r;
  if (r == 0) return out;

  out.covered = true;
  auto& w = out.predicted;
  auto repeat = [&w](std::uint32_t v, Move count) { w.insert(w.end(), static_cast<std::size_t>(count), v); };
  out.repetitions = q % 2 == 1 ? (q + 1) / 2 : q / 2;
  for (std::int64_t i = 0; i < out.repetitions; ++i) {
    repeat(0, a);
    repeat(1, a);
  }
  if (q % 2 == 1) {
    repeat(2, r);
  } else {
    repeat(0, r);
    repeat(2, a - r);
    repeat(1, r);
  }
  out.matches = run.certificate.certified && run.certificate.preperiod == 0 && out.observed == out.predicted;
  return out;
}

std::optional<Move> symmetry_period(const Ruleset& rules) {
  const Move p = rules.min() + rules.max();
  for (Move s : rules.moves())
    if (!rules.contains(p - s)) return std::nullopt;
  return p;
}

bool is_max_symmetric(const Ruleset& rules) {
  const Move top = rules.max();
  for (Move s = 1; s < top; ++s)
    if (rules.contains(top - s) && !rules.contains(s)) return false;
  return true;
}

namespace {

using u128 = unsigned __int128;

// Largest c with c * c <= v.
std::uint64_t isqrt(u128 v) {
  std::uint64_t lo = 0, hi = std::numeric_limits<std::uint64_t>::max();
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2 + 1;
    if (static_cast<u128>(mid) * mid <= v)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

}  // namespace

std::optional<FibonacciBound> fibonacci_bound(const Ruleset& rules) {
  const auto moves = rules.moves();
  if (moves.size() < 2 || moves[0] + moves[1] > rules.max()) return std::nullopt;

  const Move n = rules.max();
  if (n > 90) return FibonacciBound{std::numeric_limits<std::uint64_t>::max(), true};

  // F_n and L_n by the shared recurrence.
  std::uint64_t f0 = 0, f1 = 1, l0 = 2, l1 = 1;
  for (Move i = 1; i < n; ++i) {
    f0 = std::exchange(f1, f0 + f1);
    l0 = std::exchange(l1, l0 + l1);
  }
  // 5 F_n^2 is never a perfect square for n >= 1.
  const std::uint64_t f_sqrt5_ceil = isqrt(static_cast<u128>(5) * f1 * f1) + 1;
  return FibonacciBound{l1 + f_sqrt5_ceil, false};
}

bool short_period_law_applies(const Ruleset& rules) {
  const auto moves = rules.moves();
  for (std::size_t i = 1; i < moves.size(); ++i)
    if (moves[i] - moves[i - 1] > moves[0]) return false;
  return true;
}

std::string short_period_word(const Ruleset& rules) {
  return std::string(static_cast<std::size_t>(rules.min()), 'P') +
         std::string(static_cast<std::size_t>(rules.max()), 'N');
}

std::optional<std::int64_t> ferguson_violation(const GrundySequence& seq) {
  const Move a = seq.ruleset().min();
  for (std::int64_t x = a; x < seq.size(); ++x)
    if ((seq[x] == 1) != (seq[x - a] == 0)) return x;
  return std::nullopt;
}

}  // namespace subgame
