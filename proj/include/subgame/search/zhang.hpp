#pragma once

#include <optional>
#include <vector>

#include "subgame/periodicity.hpp"
#include "subgame/search/growth.hpp"

namespace subgame::search {

struct ZhangRow {
  Move c = 0;
  PeriodicityCertificate certificate;
  bool above_threshold = false;
};

struct ZhangScan {
  Ruleset base;
  PeriodicityCertificate base_certificate;
  Move residue = 0, modulus = 1;
  /// c > 4 p(S) max S counts as "sufficiently large".
  Move threshold = 0;
  std::vector<ZhangRow> rows;  // certified rows only
  std::size_t uncertified = 0;
  /// Fits over the certified rows above the threshold, or over every
  /// certified row when fewer than two lie above it.
  std::optional<LineFit> preperiod_fit, period_fit;
  bool fit_uses_all_rows = false;
  /// Largest deviation from the fits, split by side of the threshold.
  std::optional<double> above_threshold_deviation, below_threshold_deviation;
};

/// Adjoins each c in [lo, hi] with c = residue mod modulus (and c not in S)
/// and certifies the outcome sequence of S + {c}. Throws PreconditionError
/// when S is uncertified or the modulus is not a multiple of its period.
ZhangScan zhang_scan(const Ruleset& base, Move residue, Move modulus, Move lo, Move hi,
                     const HorizonPolicy& policy = {}, unsigned threads = 1);

}  // namespace subgame::search
