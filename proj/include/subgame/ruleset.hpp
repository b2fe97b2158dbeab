#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace subgame {

using Move = std::int64_t;

/// Raised when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Outcome : std::uint8_t { N = 0, P = 1 };

constexpr char to_char(Outcome o) { return o == Outcome::P ? 'P' : 'N'; }

/// A finite subtraction ruleset: a nonempty, strictly increasing list of
/// positive move sizes.
class Ruleset {
 public:
  /// Sorts the moves; throws on an empty list, a non-positive move or a
  /// duplicate.
  explicit Ruleset(std::vector<Move> moves);
  Ruleset(std::initializer_list<Move> moves) : Ruleset(std::vector<Move>(moves)) {}

  std::span<const Move> moves() const { return moves_; }
  Move min() const { return moves_.front(); }
  Move max() const { return moves_.back(); }
  std::size_t size() const { return moves_.size(); }
  bool contains(Move s) const;
  Move gcd() const;

  /// S ∪ {extra}; returns a copy of *this if extra is already a move.
  Ruleset with(Move extra) const;

  /// Canonical text form, e.g. "2,5,7".
  std::string to_string() const;

  friend bool operator==(const Ruleset&, const Ruleset&) = default;
  friend auto operator<=>(const Ruleset&, const Ruleset&) = default;

 private:
  std::vector<Move> moves_;
};

/// Outcome symbols prescribed for the negative positions -L..-1, where L is
/// the seed length. symbols()[i] belongs to position -L + i, so the leftmost
/// symbol is the deepest position.
class Seed {
 public:
  explicit Seed(std::vector<Outcome> symbols);

  /// Parses a string of 'P'/'N' characters, leftmost = deepest position.
  static Seed parse(std::string_view text);
  /// All-N seed of the given length: ordinary normal play.
  static Seed normal_play(Move length);
  /// N^{min S} P^{max S - min S}.
  static Seed misere(const Ruleset& rules);

  std::span<const Outcome> symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  /// Symbol at a negative position in [-size(), -1].
  Outcome at(std::int64_t position) const;
  std::string to_string() const;

  friend bool operator==(const Seed&, const Seed&) = default;

 private:
  std::vector<Outcome> symbols_;
};

}  // namespace subgame
