#pragma once

#include <vector>

#include "subgame/periodicity.hpp"
#include "subgame/search/enumerate.hpp"

namespace subgame::search {

struct RecordHolder {
  Ruleset ruleset;
  PeriodicityCertificate outcome;
  PeriodicityCertificate nim;
};

struct RecordRow {
  Move max_s = 0;
  std::size_t enumerated = 0;
  /// Rulesets whose outcome period could not be certified under the cap.
  std::size_t uncertified = 0;
  /// All rulesets attaining the largest certified outcome period, in
  /// lexicographic order.
  std::vector<RecordHolder> holders;
};

struct RecordTable {
  int k = 0;
  Filter filter = Filter::all;
  std::vector<RecordRow> rows;
};

RecordTable record_holders(Move lo, Move hi, int k, Filter filter, const HorizonPolicy& policy = {},
                           unsigned threads = 1);

}  // namespace subgame::search
