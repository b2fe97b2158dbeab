#include "subgame/ruleset.hpp"

#include <algorithm>
#include <numeric>

namespace subgame {

Ruleset::Ruleset(std::vector<Move> moves) : moves_(std::move(moves)) {
  if (moves_.empty()) throw std::invalid_argument("ruleset must contain at least one move");
  std::sort(moves_.begin(), moves_.end());
  if (moves_.front() < 1) throw std::invalid_argument("moves must be positive");
  if (std::adjacent_find(moves_.begin(), moves_.end()) != moves_.end())
    throw std::invalid_argument("duplicate move in ruleset");
}

bool Ruleset::contains(Move s) const { return std::binary_search(moves_.begin(), moves_.end(), s); }

Move Ruleset::gcd() const {
  Move g = 0;
  for (Move s : moves_) g = std::gcd(g, s);
  return g;
}

Ruleset Ruleset::with(Move extra) const {
  if (contains(extra)) return *this;
  auto moves = moves_;
  moves.push_back(extra);
  return Ruleset(std::move(moves));
}

std::string Ruleset::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < moves_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(moves_[i]);
  }
  return out;
}

Seed::Seed(std::vector<Outcome> symbols) : symbols_(std::move(symbols)) {}

Seed Seed::parse(std::string_view text) {
  std::vector<Outcome> symbols;
  symbols.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'P': symbols.push_back(Outcome::P); break;
      case 'N': symbols.push_back(Outcome::N); break;
      default:
        throw std::invalid_argument("seed symbol at offset " + std::to_string(i) + " is not P or N");
    }
  }
  return Seed(std::move(symbols));
}

Seed Seed::normal_play(Move length) {
  return Seed(std::vector<Outcome>(static_cast<std::size_t>(length), Outcome::N));
}

Seed Seed::misere(const Ruleset& rules) {
  std::vector<Outcome> symbols(static_cast<std::size_t>(rules.max()), Outcome::P);
  std::fill_n(symbols.begin(), rules.min(), Outcome::N);
  return Seed(std::move(symbols));
}

Outcome Seed::at(std::int64_t position) const {
  const auto len = static_cast<std::int64_t>(symbols_.size());
  if (position >= 0 || position < -len) throw std::out_of_range("seed position out of range");
  return symbols_[static_cast<std::size_t>(len + position)];
}

std::string Seed::to_string() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Outcome o : symbols_) out += to_char(o);
  return out;
}

}  // namespace subgame
