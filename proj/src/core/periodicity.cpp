#include "subgame/periodicity.hpp"

#include <algorithm>

namespace subgame {

PeriodicityCertificate certify_periodicity(const OutcomeSequence& seq) {
  const auto bytes = seq.to_bytes();
  return certify_periodicity(std::span<const std::uint8_t>(bytes), seq.ruleset().max());
}

PeriodicityCertificate certify_periodicity(const GrundySequence& seq) {
  return certify_periodicity(seq.values(), seq.ruleset().max());
}

std::int64_t HorizonPolicy::cap_for(Move max_s) const {
  const std::int64_t golomb = std::int64_t{4} << std::min<Move>(max_s, 20);
  return std::min(limit, std::max(golomb, initial));
}

namespace {

template <class Seq>
PeriodicityCertificate grow_until_certified(Seq& seq, const HorizonPolicy& policy) {
  const std::int64_t cap = policy.cap_for(seq.ruleset().max());
  std::int64_t horizon = std::max<std::int64_t>(1, std::min(policy.initial, cap));
  for (;;) {
    seq.extend(horizon);
    auto cert = certify_periodicity(seq);
    if (cert.certified || horizon >= cap) return cert;
    horizon = std::min(cap, horizon * 2);
  }
}

}  // namespace

CertifiedOutcomes certified_outcomes(const Ruleset& rules, const Seed& seed, const HorizonPolicy& policy) {
  auto seq = outcomes(rules, seed, 1);
  auto cert = grow_until_certified(seq, policy);
  return {std::move(seq), cert};
}

CertifiedOutcomes certified_outcomes(const Ruleset& rules, const HorizonPolicy& policy) {
  return certified_outcomes(rules, Seed::normal_play(rules.max()), policy);
}

CertifiedOutcomes certified_misere(const Ruleset& rules, const HorizonPolicy& policy) {
  auto seq = misere_outcomes(rules, 1);
  auto cert = grow_until_certified(seq, policy);
  return {std::move(seq), cert};
}

CertifiedGrundy certified_grundy(const Ruleset& rules, const HorizonPolicy& policy) {
  auto seq = grundy(rules, 1);
  auto cert = grow_until_certified(seq, policy);
  return {std::move(seq), cert};
}

std::vector<std::uint32_t> period_word(const GrundySequence& seq, const PeriodicityCertificate& cert) {
  const auto end = std::min(seq.size(), cert.preperiod + cert.period);
  const auto values = seq.values();
  return {values.begin() + cert.preperiod, values.begin() + end};
}

std::string period_word(const OutcomeSequence& seq, const PeriodicityCertificate& cert) {
  std::string out;
  const auto end = std::min(seq.size(), cert.preperiod + cert.period);
  for (auto x = cert.preperiod; x < end; ++x) out += seq.is_p(x) ? 'P' : 'N';
  return out;
}

}  // namespace subgame
