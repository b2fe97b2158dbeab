#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "subgame/ruleset.hpp"

namespace subgame::search {

enum class Filter { all, max_symmetric };

/// Walks every k-subset of {1..bound} in lexicographic order. With k = 0
/// every nonempty subset is produced, ordered by size and then
/// lexicographically.
class RulesetEnumerator {
 public:
  RulesetEnumerator(Move bound, int k, Filter filter = Filter::all);
  std::optional<Ruleset> next();

 private:
  bool advance();

  Move bound_;
  int k_;
  bool all_sizes_;
  Filter filter_;
  std::vector<Move> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Ruleset> enumerate_rulesets(Move bound, int k, Filter filter = Filter::all);

/// Rulesets with max S exactly `max_s`; k = 0 means any size.
std::vector<Ruleset> enumerate_with_max(Move max_s, int k, Filter filter = Filter::all);

/// Runs fn(i) for i in [0, n) on `threads` workers. Work is handed out by
/// an atomic counter; callers write results into slot i.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

/// 0 means hardware concurrency.
unsigned resolve_threads(unsigned requested);

}  // namespace subgame::search
