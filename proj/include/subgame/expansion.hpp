#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "subgame/periodicity.hpp"

namespace subgame {

/// Moves that can be adjoined to a ruleset without changing its nim-sequence.
///
/// A candidate c is compared position by position against the base
/// sequence up to `horizon`. If the base sequence is certified with
/// (preperiod l, period p) and horizon >= l + p + max(max S, c), agreement
/// up to the horizon implies agreement everywhere: each later value is the
/// mex of options that are, by periodicity, the options of the value one
/// period earlier. A disagreement is always a proof of non-adjoinability.
struct ExpansionReport {
  Ruleset base;
  std::int64_t horizon = 0;
  Move candidate_bound = 0;
  PeriodicityCertificate base_certificate;
  /// Every c <= candidate_bound, c ∉ S, that leaves the sequence unchanged.
  std::vector<Move> adjoinable;
  /// The adjoinable c that are not s + n p for some s ∈ S, n >= 1.
  std::vector<Move> nontrivial;
  bool certified = false;
};

bool adjoin_preserves(const GrundySequence& base, Move candidate);

/// Uses an explicit comparison horizon.
ExpansionReport expansion_set(const Ruleset& rules, Move candidate_bound, std::int64_t horizon);

/// Certifies the base sequence first and then picks the smallest horizon
/// that makes the comparison a proof.
ExpansionReport expansion_set(const Ruleset& rules, Move candidate_bound, const HorizonPolicy& policy = {});

struct AdjoinCheck {
  PeriodicityCertificate certificate;
  /// p - s for s ∈ S with p - s > 0, sorted and deduplicated.
  std::vector<Move> candidates;
  std::vector<Move> verified;
  std::vector<Move> refuted;
};

/// For a purely periodic nim-sequence with period p, checks that every
/// p - s > 0 (s ∈ S) is adjoinable. Throws PreconditionError when the
/// sequence is not certified purely periodic.
AdjoinCheck austin_adjoin_check(const Ruleset& rules, const HorizonPolicy& policy = {});

struct BipartiteReport {
  /// 1 ∈ S and all moves odd; empty when gcd(S) != 1.
  std::optional<bool> bipartite;
  /// Certified ultimate period 2 with values {0, 1}; empty if uncertified.
  std::optional<bool> ultimately_bipartite;
  /// Preperiod of the alternating tail when ultimately bipartite.
  std::optional<std::int64_t> onset;
  PeriodicityCertificate certificate;
};

BipartiteReport bipartite_check(const Ruleset& rules, const HorizonPolicy& policy = {});

}  // namespace subgame
