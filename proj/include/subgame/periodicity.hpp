#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "subgame/sequence.hpp"

namespace subgame {

/// Eventual periodicity seq[x + period] == seq[x] for x >= preperiod.
///
/// When `certified` is set the pair is minimal and proven: the computed
/// prefix contains two equal windows of length `window` (max S for
/// subtraction games) one period apart, starting at the preperiod, and each
/// term is a function of the preceding window. Otherwise the pair is only
/// the best fit to the computed prefix.
struct PeriodicityCertificate {
  std::int64_t preperiod = 0;
  std::int64_t period = 1;
  bool certified = false;
  std::int64_t horizon = 0;

  friend bool operator==(const PeriodicityCertificate&, const PeriodicityCertificate&) = default;
};

namespace detail {

/// z[i] = length of the longest common prefix of the reversed sequence and
/// its suffix starting at i. For the forward sequence this is how far the
/// tail keeps period i: positions [H - i - z[i], H) satisfy seq[x] == seq[x + i].
template <class T>
std::vector<std::uint32_t> reversed_z(std::span<const T> seq) {
  const auto n = static_cast<std::int64_t>(seq.size());
  std::vector<std::uint32_t> z(seq.size(), 0);
  if (n == 0) return z;
  auto rev = [&](std::int64_t i) -> const T& { return seq[static_cast<std::size_t>(n - 1 - i)]; };
  z[0] = static_cast<std::uint32_t>(n);
  std::int64_t left = 0, right = 0;
  for (std::int64_t i = 1; i < n; ++i) {
    std::int64_t k = 0;
    if (i < right) k = std::min<std::int64_t>(right - i, z[static_cast<std::size_t>(i - left)]);
    while (i + k < n && rev(k) == rev(i + k)) ++k;
    z[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(k);
    if (i + k > right) {
      left = i;
      right = i + k;
    }
  }
  return z;
}

}  // namespace detail

/// Smallest period whose periodic tail spans at least period + window
/// terms; the preperiod is where that tail begins. Falls back to the
/// period with the longest periodic tail, flagged uncertified.
template <class T>
PeriodicityCertificate certify_periodicity(std::span<const T> seq, std::int64_t window) {
  const auto n = static_cast<std::int64_t>(seq.size());
  PeriodicityCertificate cert;
  cert.horizon = n;
  if (n < 2) {
    cert.period = std::max<std::int64_t>(n, 1);
    return cert;
  }
  const auto z = detail::reversed_z(seq);
  std::int64_t best_p = n, best_len = 0;
  for (std::int64_t p = 1; p < n; ++p) {
    const std::int64_t len = z[static_cast<std::size_t>(p)];
    if (len >= window) {
      cert.period = p;
      cert.preperiod = n - p - len;
      cert.certified = true;
      return cert;
    }
    if (len > best_len) {
      best_len = len;
      best_p = p;
    }
  }
  cert.period = best_p;
  cert.preperiod = best_len > 0 ? n - best_p - best_len : 0;
  return cert;
}

PeriodicityCertificate certify_periodicity(const OutcomeSequence& seq);
PeriodicityCertificate certify_periodicity(const GrundySequence& seq);

/// How far sequences are extended while searching for a certificate.
struct HorizonPolicy {
  std::int64_t limit = 10'000'000;
  std::int64_t initial = 1024;

  /// 4 * 2^min(max S, 20), at least `initial`, at most `limit`.
  std::int64_t cap_for(Move max_s) const;
};

struct CertifiedOutcomes {
  OutcomeSequence sequence;
  PeriodicityCertificate certificate;
};

struct CertifiedGrundy {
  GrundySequence sequence;
  PeriodicityCertificate certificate;
};

/// Doubles the horizon until the sequence certifies or the cap is reached.
CertifiedOutcomes certified_outcomes(const Ruleset& rules, const Seed& seed,
                                     const HorizonPolicy& policy = {});
CertifiedOutcomes certified_outcomes(const Ruleset& rules, const HorizonPolicy& policy = {});
CertifiedOutcomes certified_misere(const Ruleset& rules, const HorizonPolicy& policy = {});
CertifiedGrundy certified_grundy(const Ruleset& rules, const HorizonPolicy& policy = {});

/// Values over one period starting at the preperiod.
std::vector<std::uint32_t> period_word(const GrundySequence& seq, const PeriodicityCertificate& cert);
std::string period_word(const OutcomeSequence& seq, const PeriodicityCertificate& cert);

}  // namespace subgame
