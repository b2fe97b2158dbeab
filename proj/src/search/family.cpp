#include "subgame/search/family.hpp"

#include "subgame/search/enumerate.hpp"

namespace subgame::search {

Ruleset FamilySpec::instantiate(std::int64_t n) const {
  if (n < min_n) throw PreconditionError("parameter " + std::to_string(n) + " below the family minimum " + std::to_string(min_n));
  std::vector<Move> out;
  out.reserve(moves.size());
  for (const auto& m : moves) out.push_back(m(n));
  return Ruleset(std::move(out));
}

namespace {

std::vector<Polynomial> polys(std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(Polynomial::parse(t));
  return out;
}

}  // namespace

std::optional<FamilySpec> builtin_family(std::string_view name) {
  FamilySpec f;
  f.name = std::string(name);
  if (name == "althofer-bultermann") {
    f.moves = polys({"n", "2n+1", "3n+1"});
    f.outcome_preperiod = Polynomial::parse("0");
    f.nim_preperiod = Polynomial::parse("0");
  } else if (name == "cubic") {
    f.moves = polys({"n", "4n", "12n+1", "16n+1"});
    f.outcome_period = Polynomial::parse("56n^3+52n^2+9n+1");
    f.outcome_preperiod = Polynomial::parse("0");
  } else if (name == "long-preperiod") {
    f.moves = polys({"5n-2", "5n+3", "10n+2"});
    f.outcome_preperiod = Polynomial::parse("45n^2-1");
  } else if (name == "S1") {
    f.moves = polys({"n", "n+3", "3n-1", "3n+3"});
    f.outcome_period = Polynomial::parse("4n+2");
    f.nim_period = Polynomial::parse("12n+6");
  } else if (name == "S2") {
    f.moves = polys({"2", "4n-1", "4n+1", "4n+5", "8n-2"});
    f.outcome_period = Polynomial::parse("4");
    f.nim_period = Polynomial::parse("8n");
  } else if (name == "S3") {
    f.moves = polys({"2", "4n+1", "4n+3", "4n+7", "8n+2"});
    f.outcome_period = Polynomial::parse("4");
    f.nim_period = Polynomial::parse("8n+4");
  } else if (name == "S4") {
    f.moves = polys({"n", "2n+1", "4n+2", "5n+3", "6n+3"});
    f.outcome_period = Polynomial::parse("10n+4");
    f.nim_period = Polynomial::parse("10n^2+4n");
  } else if (name == "miklos-post") {
    f.moves = polys({"n", "4n-1", "4n^2"});
    f.seed = [](std::int64_t n) { return seeded_family(n).seed; };
    f.min_n = 2;
  } else {
    return std::nullopt;
  }
  return f;
}

std::vector<std::string> builtin_family_names() {
  return {"althofer-bultermann", "cubic", "long-preperiod", "S1", "S2", "S3", "S4", "miklos-post"};
}

std::string_view row_status_name(RowStatus s) {
  switch (s) {
    case RowStatus::match:
      return "match";
    case RowStatus::mismatch:
      return "mismatch";
    case RowStatus::inconclusive:
      return "inconclusive";
    case RowStatus::invalid:
      return "invalid";
    case RowStatus::unchecked:
      return "unchecked";
  }
  return "?";
}

namespace {

void evaluate_row(const FamilySpec& f, FamilyRow& row, const HorizonPolicy& policy) {
  try {
    row.ruleset = f.instantiate(row.n);
  } catch (const std::invalid_argument& e) {
    row.error = e.what();
    row.status = RowStatus::invalid;
    return;
  }
  const Ruleset& r = *row.ruleset;
  row.outcome = f.seed ? certified_outcomes(r, f.seed(row.n), policy).certificate
                       : certified_outcomes(r, policy).certificate;
  if (!f.seed) row.nim = certified_grundy(r, policy).certificate;

  bool inconclusive = false;
  auto check = [&](const char* what, const std::optional<Polynomial>& poly, const PeriodicityCertificate* cert,
                   bool preperiod) {
    if (!poly) return;
    if (!cert || !cert->certified) {
      inconclusive = true;
      return;
    }
    const std::int64_t predicted = (*poly)(row.n);
    const std::int64_t observed = preperiod ? cert->preperiod : cert->period;
    row.checks.push_back({what, predicted, observed, predicted == observed});
  };
  const PeriodicityCertificate* nim = row.nim ? &*row.nim : nullptr;
  check("outcome preperiod", f.outcome_preperiod, &row.outcome, true);
  check("outcome period", f.outcome_period, &row.outcome, false);
  check("nim preperiod", f.nim_preperiod, nim, true);
  check("nim period", f.nim_period, nim, false);

  bool mismatch = false;
  for (const auto& c : row.checks) mismatch = mismatch || !c.matches;
  if (mismatch)
    row.status = RowStatus::mismatch;
  else if (inconclusive)
    row.status = RowStatus::inconclusive;
  else if (row.checks.empty())
    row.status = row.outcome.certified ? RowStatus::unchecked : RowStatus::inconclusive;
  else
    row.status = RowStatus::match;
}

}  // namespace

std::vector<FamilyRow> family_eval(const FamilySpec& family, std::int64_t lo, std::int64_t hi,
                                   const HorizonPolicy& policy, unsigned threads) {
  if (hi < lo) throw std::invalid_argument("empty parameter range");
  std::vector<FamilyRow> rows(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].n = lo + static_cast<std::int64_t>(i);
  for (auto& row : rows)
    if (row.n < family.min_n) throw PreconditionError("parameter range starts below " + std::to_string(family.min_n));
  parallel_for(rows.size(), threads, [&](std::size_t i) { evaluate_row(family, rows[i], policy); });
  return rows;
}

DivergentCheck divergent_period_check(const Ruleset& rules, const HorizonPolicy& policy) {
  DivergentCheck out{certified_outcomes(rules, policy).certificate, certified_grundy(rules, policy).certificate, {}};
  if (out.outcome.certified && out.nim.certified)
    out.ratio = static_cast<double>(out.nim.period) / static_cast<double>(out.outcome.period);
  return out;
}

SeededInstance seeded_family(std::int64_t n) {
  if (n < 2) throw PreconditionError("the seeded family needs n >= 2");
  const Move a = n, b = 4 * n - 1, c = 4 * n * n;
  std::string word(static_cast<std::size_t>(5 * n - 1), 'N');
  for (std::int64_t j = 1; j <= n - 1; ++j) {
    word.append(static_cast<std::size_t>(j), 'P');
    word.append(static_cast<std::size_t>(4 * n - 1 - j), 'N');
  }
  return {Ruleset{a, b, c}, Seed::parse(word)};
}

}  // namespace subgame::search
