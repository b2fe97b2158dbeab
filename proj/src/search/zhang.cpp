#include "subgame/search/zhang.hpp"

#include <cmath>

#include "subgame/search/enumerate.hpp"

namespace subgame::search {

ZhangScan zhang_scan(const Ruleset& base, Move residue, Move modulus, Move lo, Move hi, const HorizonPolicy& policy,
                     unsigned threads) {
  ZhangScan scan{base, certified_outcomes(base, policy).certificate, 0, modulus, 0, {}, 0, {}, {}, false, {}, {}};
  if (!scan.base_certificate.certified) throw PreconditionError("outcome sequence of the base ruleset is uncertified");
  if (modulus < 1 || modulus % scan.base_certificate.period != 0)
    throw PreconditionError("modulus " + std::to_string(modulus) + " is not a multiple of the base period " +
                            std::to_string(scan.base_certificate.period));
  if (lo < 1 || hi < lo) throw std::invalid_argument("c range must satisfy 1 <= lo <= hi");
  scan.residue = ((residue % modulus) + modulus) % modulus;
  scan.threshold = 4 * scan.base_certificate.period * base.max();

  std::vector<Move> cs;
  for (Move c = lo; c <= hi; ++c)
    if (c % modulus == scan.residue && !base.contains(c)) cs.push_back(c);
  std::vector<PeriodicityCertificate> certs(cs.size());
  parallel_for(cs.size(), threads,
               [&](std::size_t i) { certs[i] = certified_outcomes(base.with(cs[i]), policy).certificate; });

  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (certs[i].certified)
      scan.rows.push_back({cs[i], certs[i], cs[i] > scan.threshold});
    else
      ++scan.uncertified;
  }

  auto fit_rows = [&](bool above_only) {
    std::vector<double> x, pre, per;
    for (const auto& row : scan.rows) {
      if (above_only && !row.above_threshold) continue;
      x.push_back(static_cast<double>(row.c));
      pre.push_back(static_cast<double>(row.certificate.preperiod));
      per.push_back(static_cast<double>(row.certificate.period));
    }
    if (x.size() < 2) return false;
    scan.preperiod_fit = fit_line(x, pre);
    scan.period_fit = fit_line(x, per);
    return true;
  };
  if (!fit_rows(true)) {
    if (!fit_rows(false)) return scan;
    scan.fit_uses_all_rows = true;
  }
  for (const auto& row : scan.rows) {
    const auto c = static_cast<double>(row.c);
    const double dev = std::max(
        std::abs(row.certificate.preperiod - (scan.preperiod_fit->slope * c + scan.preperiod_fit->intercept)),
        std::abs(row.certificate.period - (scan.period_fit->slope * c + scan.period_fit->intercept)));
    auto& slot = row.above_threshold ? scan.above_threshold_deviation : scan.below_threshold_deviation;
    slot = std::max(slot.value_or(0.0), dev);
  }
  return scan;
}

}  // namespace subgame::search
