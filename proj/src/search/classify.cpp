#include "subgame/search/classify.hpp"

#include "subgame/search/enumerate.hpp"

namespace subgame::search {

std::string_view class_name(CellClass c) {
  switch (c) {
    case CellClass::s2_s3:
      return "s2+s3";
    case CellClass::s1_s3:
      return "s1+s3";
    case CellClass::s1_s2:
      return "s1+s2";
    case CellClass::diagonal:
      return "diagonal";
    case CellClass::other:
      return "other";
    case CellClass::unknown:
      return "unknown";
    case CellClass::none:
      return "none";
  }
  return "?";
}

CellClass classify_cell(Move s1, Move s2, Move s3, const PeriodicityCertificate& cert) {
  if (s1 + s2 == s3) return CellClass::diagonal;
  if (!cert.certified) return CellClass::unknown;
  const std::int64_t p = cert.period;
  if ((s1 + s2) % p == 0) return CellClass::s1_s2;
  if ((s1 + s3) % p == 0) return CellClass::s1_s3;
  if ((s2 + s3) % p == 0) return CellClass::s2_s3;
  return CellClass::other;
}

CellClass ClassGrid::at(Move s1, Move s2) const {
  if (s1 < s1_lo || s1 > s1_hi || s2 < s2_lo || s2 > s2_hi) return CellClass::none;
  return cells[static_cast<std::size_t>((s2 - s2_lo) * width() + (s1 - s1_lo))];
}

std::int64_t ClassGrid::period_at(Move s1, Move s2) const {
  if (s1 < s1_lo || s1 > s1_hi || s2 < s2_lo || s2 > s2_hi) return 0;
  return periods[static_cast<std::size_t>((s2 - s2_lo) * width() + (s1 - s1_lo))];
}

ClassGrid classify_three_move(Move s3, Move s1_lo, Move s1_hi, Move s2_lo, Move s2_hi, const HorizonPolicy& policy,
                              unsigned threads) {
  if (s3 < 3) throw std::invalid_argument("s3 must be at least 3");
  if (s1_lo < 1 || s1_hi < s1_lo || s2_lo < 1 || s2_hi < s2_lo)
    throw std::invalid_argument("ranges must be nonempty and positive");
  ClassGrid grid{s3, s1_lo, s1_hi, s2_lo, s2_hi, {}, {}};
  const auto cells = static_cast<std::size_t>(grid.width() * grid.height());
  grid.cells.assign(cells, CellClass::none);
  grid.periods.assign(cells, 0);
  parallel_for(cells, threads, [&](std::size_t i) {
    const Move s1 = s1_lo + static_cast<Move>(i) % grid.width();
    const Move s2 = s2_lo + static_cast<Move>(i) / grid.width();
    if (!(s1 < s2 && s2 < s3)) return;
    const auto cert = certified_outcomes(Ruleset{s1, s2, s3}, policy).certificate;
    grid.cells[i] = classify_cell(s1, s2, s3, cert);
    if (cert.certified) grid.periods[i] = cert.period;
  });
  return grid;
}

ClassGrid classify_three_move(Move s3, const HorizonPolicy& policy, unsigned threads) {
  return classify_three_move(s3, 1, s3 - 2, 2, s3 - 1, policy, threads);
}

}  // namespace subgame::search
