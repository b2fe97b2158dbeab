#include "subgame/sequence.hpp"

#include <algorithm>

namespace subgame {

OutcomeSequence::OutcomeSequence(Ruleset rules, Convention convention, std::optional<Seed> seed)
    : rules_(std::move(rules)), convention_(convention), seed_(std::move(seed)) {
  bits_.resize(offset());
  if (seed_) {
    const auto symbols = seed_->symbols();
    for (std::size_t i = 0; i < symbols.size(); ++i)
      if (symbols[i] == Outcome::P) bits_.set(static_cast<std::int64_t>(i));
  }
}

void OutcomeSequence::extend(std::int64_t horizon) {
  if (horizon <= size_) return;
  const std::int64_t m = offset();
  bits_.resize(horizon + m);
  std::int64_t x = size_;

  // Misère: small heaps see only non-negative options, so do them one by one.
  if (convention_ == Convention::misere) {
    for (; x < std::min(horizon, m); ++x) {
      bool any_option = false;
      bool to_p = false;
      for (Move s : rules_.moves()) {
        if (s > x) break;
        any_option = true;
        to_p = to_p || is_p(x - s);
      }
      if (any_option && !to_p) bits_.set(x + m);
    }
  }

  // Positions within min S of each other never depend on each other, so a
  // block of that many outcomes is one word operation per move.
  const auto block = static_cast<unsigned>(std::min<Move>(rules_.min(), 64));
  while (x < horizon) {
    const auto n = static_cast<unsigned>(std::min<std::int64_t>(block, horizon - x));
    std::uint64_t reaches_p = 0;
    for (Move s : rules_.moves()) reaches_p |= bits_.extract(x + m - s, n);
    bits_.merge(x + m, n, ~reaches_p);
    x += n;
  }
  size_ = horizon;
}

std::vector<std::uint8_t> OutcomeSequence::to_bytes() const {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(size_));
  for (std::int64_t x = 0; x < size_; ++x) out[static_cast<std::size_t>(x)] = is_p(x) ? 1 : 0;
  return out;
}

std::string OutcomeSequence::to_string(std::int64_t limit) const {
  const std::int64_t n = limit < 0 ? size_ : std::min(limit, size_);
  std::string out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t x = 0; x < n; ++x) out += is_p(x) ? 'P' : 'N';
  return out;
}

GrundySequence::GrundySequence(Ruleset rules)
    : rules_(std::move(rules)), stamp_(rules_.size() + 2, -1) {}

void GrundySequence::extend(std::int64_t horizon) {
  if (horizon <= size()) return;
  values_.reserve(static_cast<std::size_t>(horizon));
  // mex <= |S|, so a stamp table of |S| + 2 slots replaces a set.
  for (std::int64_t x = size(); x < horizon; ++x) {
    for (Move s : rules_.moves()) {
      if (s > x) break;
      const auto v = values_[static_cast<std::size_t>(x - s)];
      if (v < stamp_.size()) stamp_[v] = x;
    }
    std::uint32_t mex = 0;
    while (stamp_[mex] == x) ++mex;
    values_.push_back(mex);
  }
}

std::string GrundySequence::to_string(std::int64_t limit) const {
  const std::int64_t n = limit < 0 ? size() : std::min(limit, size());
  return format_word(values().first(static_cast<std::size_t>(n)));
}

OutcomeSequence outcomes(const Ruleset& rules, const Seed& seed, std::int64_t horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  if (static_cast<Move>(seed.size()) != rules.max())
    throw std::invalid_argument("seed length " + std::to_string(seed.size()) +
                                " does not match max S = " + std::to_string(rules.max()));
  OutcomeSequence seq(rules, Convention::seeded, seed);
  seq.extend(horizon);
  return seq;
}

OutcomeSequence outcomes(const Ruleset& rules, std::int64_t horizon) {
  return outcomes(rules, Seed::normal_play(rules.max()), horizon);
}

OutcomeSequence misere_outcomes(const Ruleset& rules, std::int64_t horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  OutcomeSequence seq(rules, Convention::misere, std::nullopt);
  seq.extend(horizon);
  return seq;
}

GrundySequence grundy(const Ruleset& rules, std::int64_t horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  GrundySequence seq(rules);
  seq.extend(horizon);
  return seq;
}

std::optional<std::int64_t> recurrence_violation(const OutcomeSequence& seq) {
  const auto& rules = seq.ruleset();
  for (std::int64_t x = 0; x < seq.size(); ++x) {
    bool any_option = false;
    bool to_p = false;
    for (Move s : rules.moves()) {
      const std::int64_t y = x - s;
      if (y >= 0) {
        any_option = true;
        to_p = to_p || seq.is_p(y);
      } else if (seq.convention() == Convention::seeded) {
        to_p = to_p || seq.seed()->at(y) == Outcome::P;
      }
    }
    bool expect_p = !to_p;
    if (seq.convention() == Convention::misere && !any_option) expect_p = false;
    if (expect_p != seq.is_p(x)) return x;
  }
  return std::nullopt;
}

std::optional<std::int64_t> first_difference(const OutcomeSequence& a, const OutcomeSequence& b) {
  const std::int64_t n = std::min(a.size(), b.size());
  for (std::int64_t x = 0; x < n; ++x)
    if (a.is_p(x) != b.is_p(x)) return x;
  return std::nullopt;
}

std::string format_word(std::span<const std::uint32_t> word) {
  const bool digits = std::all_of(word.begin(), word.end(), [](auto v) { return v < 10; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (digits) {
      out += static_cast<char>('0' + word[i]);
    } else {
      if (i) out += ',';
      out += std::to_string(word[i]);
    }
  }
  return out;
}

}  // namespace subgame
