#include "subgame/fes.hpp"

#include <algorithm>
#include <numeric>

namespace subgame::fes {

FesRuleset::FesRuleset(std::vector<Move> excluded) : excluded_(std::move(excluded)) {
  if (excluded_.empty()) throw std::invalid_argument("excluded set must be nonempty");
  std::sort(excluded_.begin(), excluded_.end());
  if (excluded_.front() < 1) throw std::invalid_argument("excluded moves must be positive");
  if (std::adjacent_find(excluded_.begin(), excluded_.end()) != excluded_.end())
    throw std::invalid_argument("duplicate excluded move");
}

bool FesRuleset::contains(Move m) const { return std::binary_search(excluded_.begin(), excluded_.end(), m); }

Move FesRuleset::gcd() const {
  Move g = 0;
  for (Move s : excluded_) g = std::gcd(g, s);
  return g;
}

FesRuleset FesRuleset::reduced() const {
  const Move g = gcd();
  std::vector<Move> out;
  out.reserve(excluded_.size());
  for (Move s : excluded_) out.push_back(s / g);
  return FesRuleset(std::move(out));
}

std::string FesRuleset::to_string() const {
  std::string out = "!";
  for (std::size_t i = 0; i < excluded_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(excluded_[i]);
  }
  return out;
}

FesSequence fes_grundy(const FesRuleset& rules, std::int64_t horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  FesSequence seq{rules, {}};
  auto& g = seq.values;
  g.reserve(static_cast<std::size_t>(horizon));

  std::vector<std::uint32_t> count;  // occurrences of each value among 0..n-1
  Value mex_all = 0;
  std::vector<std::pair<Value, std::uint32_t>> hidden;  // values on excluded options

  for (std::int64_t n = 0; n < horizon; ++n) {
    hidden.clear();
    for (Move m : rules.excluded()) {
      if (m > n) break;
      const Value v = g[static_cast<std::size_t>(n - m)];
      auto it = std::find_if(hidden.begin(), hidden.end(), [v](const auto& e) { return e.first == v; });
      if (it == hidden.end())
        hidden.emplace_back(v, 1);
      else
        ++it->second;
    }
    Value mex = mex_all;
    for (const auto& [v, k] : hidden)
      if (count[v] == k) mex = std::min(mex, v);

    g.push_back(mex);
    if (mex >= count.size()) count.resize(static_cast<std::size_t>(mex) + 1, 0);
    ++count[mex];
    while (mex_all < count.size() && count[mex_all] > 0) ++mex_all;
  }
  return seq;
}

std::optional<ArithmeticPeriodicity> detect_arithmetic_periodicity(std::span<const Value> seq,
                                                                    const DetectOptions& options) {
  const auto n = static_cast<std::int64_t>(seq.size());
  const std::int64_t min_window = std::min(options.min_terms, n / 2);
  auto at = [&](std::int64_t i) { return static_cast<std::int64_t>(seq[static_cast<std::size_t>(i)]); };
  for (std::int64_t p = 1; options.min_periods * p <= n; ++p) {
    const std::int64_t s = at(n - 1) - at(n - 1 - p);
    if (s <= 0) continue;
    std::int64_t i = n - 1 - p;
    while (i >= 0 && at(i + p) - at(i) == s) --i;
    const std::int64_t start = i + 1;
    const std::int64_t window = n - start;
    if (window >= std::max(options.min_periods * p, min_window)) return ArithmeticPeriodicity{start, p, s, window};
  }
  return std::nullopt;
}

Value ClosedForm::at(std::int64_t n) const {
  const auto width = static_cast<std::int64_t>(block.size());
  return block[static_cast<std::size_t>(n % width)] + static_cast<Value>(saltus * (n / period()));
}

ClosedForm closed_form(const FesRuleset& rules) {
  if (rules.size() > 2) throw PreconditionError("no closed form is known for excluded sets with three or more elements");
  const auto s = rules.excluded();
  const Move a = s[0];
  ClosedForm form;
  for (Move v = 0; v < a; ++v) form.block.push_back(static_cast<Value>(v));
  form.repetitions = s.size() == 2 && s[1] == 2 * a ? 3 : 2;
  form.saltus = a;
  return form;
}

ClosedFormCheck check_closed_form(const FesRuleset& rules, std::int64_t horizon) {
  ClosedFormCheck check{closed_form(rules), horizon, std::nullopt};
  const auto seq = fes_grundy(rules, horizon);
  for (std::int64_t n = 0; n < horizon; ++n)
    if (seq.values[static_cast<std::size_t>(n)] != check.form.at(n)) {
      check.first_mismatch = n;
      break;
    }
  return check;
}

ScalingCheck gcd_scaling_check(const FesRuleset& rules, std::int64_t horizon) {
  ScalingCheck check{rules.gcd(), rules.reduced(), horizon, std::nullopt};
  const Move g = check.gcd;
  const auto full = fes_grundy(rules, horizon);
  const auto small = fes_grundy(check.reduced, horizon / g + 1);
  for (std::int64_t n = 0; n < horizon; ++n) {
    const auto expect = static_cast<std::int64_t>(small.values[static_cast<std::size_t>(n / g)]) * g + n % g;
    if (full.values[static_cast<std::size_t>(n)] != expect) {
      check.first_violation = n;
      break;
    }
  }
  return check;
}

}  // namespace subgame::fes
