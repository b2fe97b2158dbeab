#include "subgame/expansion.hpp"

#include <algorithm>
#include <numeric>

namespace subgame {

bool adjoin_preserves(const GrundySequence& base, Move candidate) {
  const auto extended = base.ruleset().with(candidate);
  const auto moves = extended.moves();
  std::vector<std::int64_t> stamp(moves.size() + 2, -1);
  // Equal so far means the extended sequence's options can be read from the
  // base sequence itself.
  for (std::int64_t x = 0; x < base.size(); ++x) {
    for (Move s : moves) {
      if (s > x) break;
      const auto v = base[x - s];
      if (v < stamp.size()) stamp[v] = x;
    }
    std::uint32_t mex = 0;
    while (stamp[mex] == x) ++mex;
    if (mex != base[x]) return false;
  }
  return true;
}

namespace {

ExpansionReport scan(const Ruleset& rules, Move bound, const GrundySequence& base,
                     const PeriodicityCertificate& cert) {
  ExpansionReport report{rules, base.size(), bound, cert, {}, {}, false};
  for (Move c = 1; c <= bound; ++c) {
    if (rules.contains(c)) continue;
    if (adjoin_preserves(base, c)) report.adjoinable.push_back(c);
  }
  report.certified =
      cert.certified && base.size() >= cert.preperiod + cert.period + std::max(rules.max(), bound);
  for (Move c : report.adjoinable) {
    const bool shifted_move = cert.certified && std::any_of(rules.moves().begin(), rules.moves().end(), [&](Move s) {
      return c > s && (c - s) % cert.period == 0;
    });
    if (!shifted_move) report.nontrivial.push_back(c);
  }
  return report;
}

}  // namespace

ExpansionReport expansion_set(const Ruleset& rules, Move candidate_bound, std::int64_t horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  const auto base = grundy(rules, horizon);
  return scan(rules, candidate_bound, base, certify_periodicity(base));
}

ExpansionReport expansion_set(const Ruleset& rules, Move candidate_bound, const HorizonPolicy& policy) {
  auto run = certified_grundy(rules, policy);
  const auto& cert = run.certificate;
  if (cert.certified)
    run.sequence.extend(cert.preperiod + cert.period + std::max(rules.max(), candidate_bound));
  return scan(rules, candidate_bound, run.sequence, cert);
}

AdjoinCheck austin_adjoin_check(const Ruleset& rules, const HorizonPolicy& policy) {
  auto run = certified_grundy(rules, policy);
  const auto& cert = run.certificate;
  if (!cert.certified || cert.preperiod != 0)
    throw PreconditionError("adjoin check needs a purely periodic nim-sequence, but {" +
                            rules.to_string() + "} is not certified purely periodic");
  AdjoinCheck out;
  out.certificate = cert;
  for (Move s : rules.moves())
    if (cert.period - s > 0) out.candidates.push_back(cert.period - s);
  std::sort(out.candidates.begin(), out.candidates.end());
  out.candidates.erase(std::unique(out.candidates.begin(), out.candidates.end()), out.candidates.end());
  if (out.candidates.empty()) return out;

  run.sequence.extend(cert.period + std::max(rules.max(), out.candidates.back()));
  for (Move c : out.candidates)
    (adjoin_preserves(run.sequence, c) ? out.verified : out.refuted).push_back(c);
  return out;
}

BipartiteReport bipartite_check(const Ruleset& rules, const HorizonPolicy& policy) {
  BipartiteReport report;
  if (rules.gcd() == 1) {
    const auto moves = rules.moves();
    report.bipartite = rules.contains(1) && std::all_of(moves.begin(), moves.end(), [](Move s) { return s % 2 == 1; });
  }
  auto run = certified_grundy(rules, policy);
  report.certificate = run.certificate;
  if (!run.certificate.certified) return report;
  const auto l = run.certificate.preperiod;
  const bool alternating = run.certificate.period == 2 &&
                           std::min(run.sequence[l], run.sequence[l + 1]) == 0 &&
                           std::max(run.sequence[l], run.sequence[l + 1]) == 1;
  report.ultimately_bipartite = alternating;
  if (alternating) report.onset = l;
  return report;
}

}  // namespace subgame
