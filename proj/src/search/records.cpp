#include "subgame/search/records.hpp"

namespace subgame::search {

RecordTable record_holders(Move lo, Move hi, int k, Filter filter, const HorizonPolicy& policy, unsigned threads) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("max S range must satisfy 1 <= lo <= hi");
  RecordTable table{k, filter, {}};

  // Flatten the whole range so workers stay busy across max S groups.
  std::vector<Ruleset> all;
  std::vector<std::size_t> group_start;
  for (Move m = lo; m <= hi; ++m) {
    group_start.push_back(all.size());
    auto group = enumerate_with_max(m, k, filter);
    all.insert(all.end(), std::make_move_iterator(group.begin()), std::make_move_iterator(group.end()));
  }
  group_start.push_back(all.size());

  std::vector<PeriodicityCertificate> certs(all.size());
  parallel_for(all.size(), threads, [&](std::size_t i) { certs[i] = certified_outcomes(all[i], policy).certificate; });

  for (Move m = lo; m <= hi; ++m) {
    const auto g = static_cast<std::size_t>(m - lo);
    RecordRow row;
    row.max_s = m;
    row.enumerated = group_start[g + 1] - group_start[g];
    std::int64_t best = 0;
    for (std::size_t i = group_start[g]; i < group_start[g + 1]; ++i) {
      if (!certs[i].certified) {
        ++row.uncertified;
        continue;
      }
      best = std::max(best, certs[i].period);
    }
    for (std::size_t i = group_start[g]; i < group_start[g + 1]; ++i)
      if (certs[i].certified && certs[i].period == best) row.holders.push_back({all[i], certs[i], {}});
    table.rows.push_back(std::move(row));
  }

  std::vector<RecordHolder*> holders;
  for (auto& row : table.rows)
    for (auto& h : row.holders) holders.push_back(&h);
  parallel_for(holders.size(), threads,
               [&](std::size_t i) { holders[i]->nim = certified_grundy(holders[i]->ruleset, policy).certificate; });
  return table;
}

}  // namespace subgame::search
