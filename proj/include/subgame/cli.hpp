#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "subgame/fes.hpp"
#include "subgame/ruleset.hpp"
#include "subgame/twod/grid.hpp"

namespace subgame::cli {

enum ExitCode : int { exit_ok = 0, exit_input_error = 1, exit_uncertified = 2 };

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

using AnyRuleset = std::variant<Ruleset, twod::Ruleset2D, fes::FesRuleset>;

/// "2,5,7" (braces optional), "(2,6),(3,3)" or "!2,3,5,7".
AnyRuleset parse_ruleset(std::string_view text);
std::string format_ruleset(const AnyRuleset& rules);

/// "A..B" with A <= B.
std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text);

/// Integers separated by commas, e.g. "2,9".
std::vector<std::int64_t> parse_int_list(std::string_view text);

/// Runs one command line (without the program name). Results go to `out`
/// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string_view version();

}  // namespace subgame::cli
