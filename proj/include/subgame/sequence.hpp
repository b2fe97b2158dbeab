#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subgame/detail/bits.hpp"
#include "subgame/ruleset.hpp"

namespace subgame {

enum class Convention { seeded, misere };

/// Outcomes o(0), o(1), ... of a subtraction game, stored bit-packed with
/// P = 1. Under the seeded convention the seed occupies the max S bits in
/// front of position 0, so every position uses the same recurrence.
class OutcomeSequence {
 public:
  const Ruleset& ruleset() const { return rules_; }
  Convention convention() const { return convention_; }
  /// The seed in use; empty under the misère convention.
  const std::optional<Seed>& seed() const { return seed_; }

  std::int64_t size() const { return size_; }
  bool is_p(std::int64_t x) const { return bits_.test(x + offset()); }
  Outcome operator[](std::int64_t x) const { return is_p(x) ? Outcome::P : Outcome::N; }

  /// Continues the recurrence up to the new horizon (no-op if not larger).
  void extend(std::int64_t horizon);

  /// One byte per position, 1 for P and 0 for N.
  std::vector<std::uint8_t> to_bytes() const;
  /// "PPNN..." for positions [0, min(size, limit)).
  std::string to_string(std::int64_t limit = -1) const;

 private:
  OutcomeSequence(Ruleset rules, Convention convention, std::optional<Seed> seed);
  friend OutcomeSequence outcomes(const Ruleset&, const Seed&, std::int64_t);
  friend OutcomeSequence misere_outcomes(const Ruleset&, std::int64_t);

  std::int64_t offset() const { return rules_.max(); }

  Ruleset rules_;
  Convention convention_;
  std::optional<Seed> seed_;
  detail::BitVector bits_;
  std::int64_t size_ = 0;
};

/// Nim-values G(0), G(1), ... of a subtraction game under normal play.
class GrundySequence {
 public:
  const Ruleset& ruleset() const { return rules_; }
  std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }
  std::uint32_t operator[](std::int64_t x) const { return values_[static_cast<std::size_t>(x)]; }
  std::span<const std::uint32_t> values() const { return values_; }

  void extend(std::int64_t horizon);

  /// Digits when every value is below 10, otherwise comma separated.
  std::string to_string(std::int64_t limit = -1) const;

 private:
  explicit GrundySequence(Ruleset rules);
  friend GrundySequence grundy(const Ruleset&, std::int64_t);

  Ruleset rules_;
  std::vector<std::uint32_t> values_;
  std::vector<std::int64_t> stamp_;
};

/// Outcomes under a terminal seed; throws if the seed length differs from
/// max S or horizon < 1.
OutcomeSequence outcomes(const Ruleset& rules, const Seed& seed, std::int64_t horizon);
/// Ordinary normal play (all-N seed).
OutcomeSequence outcomes(const Ruleset& rules, std::int64_t horizon);

/// Misère play computed directly: a position with no legal move is N.
OutcomeSequence misere_outcomes(const Ruleset& rules, std::int64_t horizon);

GrundySequence grundy(const Ruleset& rules, std::int64_t horizon);

/// Re-derives every stored symbol from its options one position at a time
/// and returns the first position that disagrees.
std::optional<std::int64_t> recurrence_violation(const OutcomeSequence& seq);

/// First position where the two sequences differ within their common length.
std::optional<std::int64_t> first_difference(const OutcomeSequence& a, const OutcomeSequence& b);

std::string format_word(std::span<const std::uint32_t> word);

}  // namespace subgame
