#pragma once

#include <string_view>
#include <vector>

#include "subgame/periodicity.hpp"

namespace subgame::search {

enum class CellClass : std::uint8_t { s2_s3, s1_s3, s1_s2, diagonal, other, unknown, none };

std::string_view class_name(CellClass c);

/// Period classes of {s1, s2, s3} over s1 in [s1_lo, s1_hi], s2 in
/// [s2_lo, s2_hi]. Cells outside s1 < s2 < s3 are `none`.
struct ClassGrid {
  Move s3 = 0;
  Move s1_lo = 1, s1_hi = 1, s2_lo = 1, s2_hi = 1;
  std::vector<CellClass> cells;  // row-major, s2 outer
  std::vector<std::int64_t> periods;  // 0 when uncertified or none

  std::int64_t width() const { return s1_hi - s1_lo + 1; }
  std::int64_t height() const { return s2_hi - s2_lo + 1; }
  CellClass at(Move s1, Move s2) const;
  std::int64_t period_at(Move s1, Move s2) const;
};

/// Smallest of s1+s2, s1+s3, s2+s3 that p divides; `other` if none does.
/// A cell with s1 + s2 = s3 is `diagonal` regardless of its period.
CellClass classify_cell(Move s1, Move s2, Move s3, const PeriodicityCertificate& cert);

ClassGrid classify_three_move(Move s3, Move s1_lo, Move s1_hi, Move s2_lo, Move s2_hi,
                              const HorizonPolicy& policy = {}, unsigned threads = 1);

/// Full triangle 1 <= s1 < s2 < s3.
ClassGrid classify_three_move(Move s3, const HorizonPolicy& policy = {}, unsigned threads = 1);

}  // namespace subgame::search
