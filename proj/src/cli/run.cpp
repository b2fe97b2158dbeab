#include <CLI11.hpp>
#include <chrono>
#include <json.hpp>
#include <map>
#include <sstream>

#include "subgame/cli.hpp"
#include "subgame/digest.hpp"
#include "subgame/expansion.hpp"
#include "subgame/periodicity.hpp"
#include "subgame/search/classify.hpp"
#include "subgame/search/family.hpp"
#include "subgame/search/growth.hpp"
#include "subgame/search/records.hpp"
#include "subgame/search/zhang.hpp"
#include "subgame/twod/pgm.hpp"

#ifndef SUBGAME_VERSION
#define SUBGAME_VERSION "0.0.0"
#endif

namespace subgame::cli {

std::string_view version() { return SUBGAME_VERSION; }

namespace {

using json = nlohmann::ordered_json;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Result {
  json input = json::object();
  json payload = json::object();
  std::optional<std::vector<std::uint8_t>> sequence;  // digest source when set
  std::string text;
  std::optional<Table> table;
  std::optional<twod::Image> image;
  int exit = exit_ok;
};

struct Options {
  std::string ruleset;
  std::int64_t horizon = 0;  // 0: the command's default
  unsigned threads = 1;
  std::string format = "text";
  std::string out;
  std::string seed;
  std::string filter = "all";
  std::string range, range2;
  std::string kind = "outcome";
  std::string params;
  std::string name;
  std::string outcome_period, outcome_preperiod, nim_period, nim_preperiod;
  std::int64_t bound = 0;
  int k = 0;
  std::int64_t s3 = 0;
  std::int64_t residue = 0, modulus = 0;
  std::int64_t width = 0, height = 0;
  std::int64_t row = -1, column = -1;
};

// Helpers ------------------------------------------------------------------

HorizonPolicy policy_from(const Options& o) {
  HorizonPolicy p;
  if (o.horizon > 0) {
    p.limit = o.horizon;
    p.initial = std::min(p.initial, o.horizon);
  }
  return p;
}

std::int64_t horizon_or(const Options& o, std::int64_t fallback) { return o.horizon > 0 ? o.horizon : fallback; }

Ruleset need_1d(const std::string& text) {
  auto r = parse_ruleset(text);
  if (auto* one = std::get_if<Ruleset>(&r)) return *one;
  throw std::invalid_argument("this command expects a 1-d ruleset such as 2,5,7");
}

twod::Ruleset2D need_2d(const std::string& text) {
  auto r = parse_ruleset(text);
  if (auto* two = std::get_if<twod::Ruleset2D>(&r)) return *two;
  throw std::invalid_argument("this command expects a 2-d ruleset such as (2,6),(3,3)");
}

fes::FesRuleset need_fes(const std::string& text) {
  auto r = parse_ruleset(text);
  if (auto* f = std::get_if<fes::FesRuleset>(&r)) return *f;
  throw std::invalid_argument("this command expects an excluded set such as !2,4");
}

json cert_json(const PeriodicityCertificate& c) {
  return {{"preperiod", c.preperiod}, {"period", c.period}, {"certified", c.certified}, {"horizon", c.horizon}};
}

void put_cert(json& j, const PeriodicityCertificate& c) {
  const json fields = cert_json(c);
  for (auto& [k, v] : fields.items()) j[k] = v;
}

std::string cert_text(const PeriodicityCertificate& c) {
  std::ostringstream s;
  s << "preperiod " << c.preperiod << ", period " << c.period;
  if (c.certified)
    s << " (certified at horizon " << c.horizon << ")";
  else
    s << " (uncertified best fit at horizon " << c.horizon << ")";
  return s.str();
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? sep : "") << v[i];
  return s.str();
}

json opt_json(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

json opt_json(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

std::vector<std::uint8_t> value_bytes(std::span<const std::uint32_t> values) {
  std::vector<std::uint8_t> out;
  out.reserve(values.size() * 4);
  for (std::uint32_t v : values)
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  return out;
}

search::Filter parse_filter(const std::string& f) {
  if (f == "all") return search::Filter::all;
  if (f == "max-symmetric") return search::Filter::max_symmetric;
  throw std::invalid_argument("unknown filter '" + f + "' (all, max-symmetric)");
}

std::pair<std::int64_t, std::int64_t> need_range(const std::string& text, const char* flag) {
  if (text.empty()) throw std::invalid_argument(std::string(flag) + " A..B is required");
  return parse_range(text);
}

// Commands -----------------------------------------------------------------

Result cmd_outcomes(const Options& o) {
  Result r;
  const Ruleset rules = need_1d(o.ruleset);
  const std::int64_t h = horizon_or(o, 100);
  const auto seq = o.seed.empty() ? outcomes(rules, h) : outcomes(rules, Seed::parse(o.seed), h);
  r.input = {{"ruleset", rules.to_string()}, {"horizon", h}, {"seed", o.seed.empty() ? json(nullptr) : json(o.seed)}};
  r.payload["sequence"] = seq.to_string();
  r.sequence = seq.to_bytes();
  r.text = seq.to_string();
  Table t{{"position", "outcome"}, {}};
  for (std::int64_t x = 0; x < seq.size(); ++x) t.rows.push_back({std::to_string(x), std::string(1, to_char(seq[x]))});
  r.table = std::move(t);
  return r;
}

Result cmd_grundy(const Options& o) {
  Result r;
  const auto any = parse_ruleset(o.ruleset);
  const std::int64_t h = horizon_or(o, 100);
  std::vector<std::uint32_t> values;
  if (auto* one = std::get_if<Ruleset>(&any)) {
    const auto g = grundy(*one, h);
    values.assign(g.values().begin(), g.values().end());
  } else if (auto* f = std::get_if<fes::FesRuleset>(&any)) {
    values = fes::fes_grundy(*f, h).values;
  } else {
    throw std::invalid_argument("grundy expects a 1-d ruleset or an excluded set");
  }
  r.input = {{"ruleset", format_ruleset(any)}, {"horizon", h}};
  r.payload["values"] = values;
  r.sequence = value_bytes(values);
  r.text = format_word(values);
  Table t{{"position", "value"}, {}};
  for (std::size_t x = 0; x < values.size(); ++x) t.rows.push_back({std::to_string(x), std::to_string(values[x])});
  r.table = std::move(t);
  return r;
}

Result cmd_period(const Options& o) {
  Result r;
  const Ruleset rules = need_1d(o.ruleset);
  const auto policy = policy_from(o);
  r.input = {{"ruleset", rules.to_string()}, {"kind", o.kind}, {"horizon_cap", policy.cap_for(rules.max())}};
  PeriodicityCertificate cert;
  std::string word;
  if (o.kind == "outcome") {
    const auto run = certified_outcomes(rules, policy);
    cert = run.certificate;
    r.sequence = run.sequence.to_bytes();
    if (cert.certified) word = period_word(run.sequence, cert);
  } else if (o.kind == "nim") {
    const auto run = certified_grundy(rules, policy);
    cert = run.certificate;
    r.sequence = value_bytes(run.sequence.values());
    if (cert.certified) word = format_word(period_word(run.sequence, cert));
  } else {
    throw std::invalid_argument("unknown --kind '" + o.kind + "' (outcome, nim)");
  }
  put_cert(r.payload, cert);
  r.payload["word"] = word.empty() ? json(nullptr) : json(word);
  r.text = cert_text(cert);
  if (!word.empty() && word.size() <= 200) r.text += "\nperiod word " + word;
  r.exit = cert.certified ? exit_ok : exit_uncertified;
  return r;
}

Result cmd_misere(const Options& o) {
  Result r;
  const Ruleset rules = need_1d(o.ruleset);
  const auto policy = policy_from(o);
  const auto direct = certified_misere(rules, policy);
  const auto seeded = certified_outcomes(rules, Seed::misere(rules), policy);
  const auto diverge = first_difference(direct.sequence, seeded.sequence);
  r.input = {{"ruleset", rules.to_string()}};
  put_cert(r.payload, direct.certificate);
  r.payload["seeded_convention"] = cert_json(seeded.certificate);
  r.payload["seed"] = Seed::misere(rules).to_string();
  r.payload["first_divergence"] = opt_json(diverge);
  r.sequence = direct.sequence.to_bytes();
  r.text = "misere: " + cert_text(direct.certificate) + "\nseed " + Seed::misere(rules).to_string() + ": " +
           cert_text(seeded.certificate);
  r.text += diverge ? "\nthe two conventions first differ at position " + std::to_string(*diverge)
                    : "\nthe two conventions agree over the computed prefix";
  r.exit = direct.certificate.certified ? exit_ok : exit_uncertified;
  return r;
}

Result cmd_seed_period(const Options& o) {
  Result r;
  const Ruleset rules = need_1d(o.ruleset);
  if (o.seed.empty()) throw std::invalid_argument("--seed is required (P/N string, leftmost = position -max S)");
  const auto seed = Seed::parse(o.seed);
  if (static_cast<Move>(seed.size()) != rules.max())
    throw std::invalid_argument("seed length " + std::to_string(seed.size()) + " differs from max S = " +
                                std::to_string(rules.max()));
  const auto run = certified_outcomes(rules, seed, policy_from(o));
  r.input = {{"ruleset", rules.to_string()}, {"seed", o.seed}};
  put_cert(r.payload, run.certificate);
  r.payload["ratio"] = static_cast<double>(run.certificate.period) / static_cast<double>(rules.max());
  r.sequence = run.sequence.to_bytes();
  r.text = cert_text(run.certificate);
  r.exit = run.certificate.certified ? exit_ok : exit_uncertified;
  return r;
}

Result cmd_expand(const Options& o) {
  Result r;
  const Ruleset rules = need_1d(o.ruleset);
  if (o.bound < 1) throw std::invalid_argument("--bound must be positive");
  const auto rep = expansion_set(rules, o.bound, policy_from(o));
  r.input = {{"ruleset", rules.to_string()}, {"bound", o.bound}};
  put_cert(r.payload, rep.base_certificate);
  r.payload["certified"] = rep.certified;
  r.payload["comparison_horizon"] = rep.horizon;
  r.payload["adjoinable"] = rep.adjoinable;
  r.payload["nontrivial"] = rep.nontrivial;
  r.text = "base " + cert_text(rep.base_certificate) + "\nadjoinable {" + join(rep.adjoinable) + "}\nnontrivial {" +
           join(rep.nontrivial) + "}" + (rep.certified ? "\nproof horizon " : "\nNOT proven, horizon ") +
           std::to_string(rep.horizon);
  r.exit = rep.certified ? exit_ok : exit_uncertified;
  return r;
}

Result cmd_adjoin_check(const Options& o) {
  Result r;
  const Ruleset rules = need_1d(o.ruleset);
  const auto check = austin_adjoin_check(rules, policy_from(o));
  r.input = {{"ruleset", rules.to_string()}};
  put_cert(r.payload, check.certificate);
  r.payload["candidates"] = check.candidates;
  r.payload["verified"] = check.verified;
  r.payload["refuted"] = check.refuted;
  r.text = "nim " + cert_text(check.certificate) + "\nverified {" + join(check.verified) + "}\nrefuted {" +
           join(check.refuted) + "}";
  return r;
}

Result cmd_bipartite(const Options& o) {
  Result r;
  const Ruleset rules = need_1d(o.ruleset);
  const auto rep = bipartite_check(rules, policy_from(o));
  r.input = {{"ruleset", rules.to_string()}};
  put_cert(r.payload, rep.certificate);
  r.payload["bipartite"] = opt_json(rep.bipartite);
  r.payload["ultimately_bipartite"] = opt_json(rep.ultimately_bipartite);
  r.payload["onset"] = opt_json(rep.onset);
  auto tri = [](const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "n/a"; };
  r.text = std::string("bipartite: ") + tri(rep.bipartite) + "\nultimately bipartite: " +
           tri(rep.ultimately_bipartite) + (rep.onset ? " from " + std::to_string(*rep.onset) : "");
  r.exit = rep.ultimately_bipartite ? exit_ok : exit_uncertified;
  return r;
}

Result cmd_fes(const Options& o) {
  Result r;
  const auto rules = need_fes(o.ruleset);
  const std::int64_t h = horizon_or(o, 10000);
  const auto seq = fes::fes_grundy(rules, h);
  const auto ap = fes::detect_arithmetic_periodicity(seq.values);
  r.input = {{"ruleset", rules.to_string()}, {"horizon", h}};
  r.payload["detected"] = ap.has_value();
  r.payload["preperiod"] = ap ? json(ap->preperiod) : json(nullptr);
  r.payload["period"] = ap ? json(ap->period) : json(nullptr);
  r.payload["saltus"] = ap ? json(ap->saltus) : json(nullptr);
  r.payload["window"] = ap ? json(ap->window) : json(nullptr);
  r.payload["certified"] = false;
  const auto prefix = std::vector<std::uint32_t>(seq.values.begin(),
                                                 seq.values.begin() + std::min<std::int64_t>(h, 40));
  r.payload["prefix"] = format_word(prefix);
  r.sequence = value_bytes(seq.values);
  if (ap)
    r.text = "arithmetic periodicity (" + std::to_string(ap->preperiod) + "," + std::to_string(ap->period) + "," +
             std::to_string(ap->saltus) + ") over " + std::to_string(ap->window) + " terms (empirical)";
  else
    r.text = "no arithmetic periodicity detected within " + std::to_string(h) + " terms";
  r.exit = ap ? exit_ok : exit_uncertified;
  return r;
}

Result cmd_fes_conjecture(const Options& o) {
  Result r;
  const auto which = fes::conjecture_from_name(o.name);
  if (!which)
    throw std::invalid_argument("unknown conjecture '" + o.name +
                                "' (sleator-slusky, as-f, as-lemma, as-pure, as-f-prime)");
  const auto params = parse_int_list(o.params);
  if (params.size() != 2) throw std::invalid_argument("--params expects a,b");
  const std::int64_t h = horizon_or(o, 50000);
  const auto v = fes::run_conjecture(*which, params[0], params[1], h);
  std::string verdict(fes::verdict_name(v.kind));
  if (v.kind == fes::VerdictKind::violated && v.witness) verdict += "-at-" + std::to_string(*v.witness);
  r.input = {{"conjecture", o.name}, {"a", v.a}, {"b", v.b}, {"horizon", h}};
  r.payload["ruleset"] = v.ruleset.to_string();
  r.payload["verdict"] = verdict;
  r.payload["witness"] = opt_json(v.witness);
  r.payload["predicted_period"] = opt_json(v.predicted_period);
  r.payload["observed"] = v.observed ? json{{"preperiod", v.observed->preperiod},
                                            {"period", v.observed->period},
                                            {"saltus", v.observed->saltus},
                                            {"window", v.observed->window}}
                                     : json(nullptr);
  r.payload["matched_case"] = v.matched_case;
  r.payload["detail"] = v.detail;
  r.payload["certified"] = false;
  std::ostringstream s;
  s << o.name << " (" << v.a << "," << v.b << ") on " << v.ruleset.to_string() << ": " << verdict;
  if (v.predicted_period) s << "\npredicted period " << *v.predicted_period;
  if (v.observed)
    s << "\nobserved (" << v.observed->preperiod << "," << v.observed->period << "," << v.observed->saltus << ")";
  if (!v.matched_case.empty()) s << "\ncase " << v.matched_case;
  if (!v.detail.empty()) s << "\n" << v.detail;
  r.text = s.str();
  r.exit = v.kind == fes::VerdictKind::inconclusive ? exit_uncertified : exit_ok;
  return r;
}

search::FamilySpec family_from(const Options& o) {
  search::FamilySpec f;
  if (auto b = search::builtin_family(o.name)) {
    f = *b;
  } else {
    if (o.name.find(',') == std::string::npos && o.name.find('n') == std::string::npos)
      throw std::invalid_argument("unknown family '" + o.name + "'");
    f.name = o.name;
    std::size_t start = 0;
    while (start <= o.name.size()) {
      const auto comma = o.name.find(',', start);
      const auto piece = o.name.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      f.moves.push_back(search::Polynomial::parse(piece));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  auto override = [](std::optional<search::Polynomial>& slot, const std::string& text) {
    if (!text.empty()) slot = search::Polynomial::parse(text);
  };
  override(f.outcome_period, o.outcome_period);
  override(f.outcome_preperiod, o.outcome_preperiod);
  override(f.nim_period, o.nim_period);
  override(f.nim_preperiod, o.nim_preperiod);
  return f;
}

Result cmd_family(const Options& o) {
  Result r;
  const auto family = family_from(o);
  const auto [lo, hi] = need_range(o.range, "--range");
  const auto rows = search::family_eval(family, lo, hi, policy_from(o), o.threads);
  std::vector<std::string> moves;
  for (const auto& m : family.moves) moves.push_back(m.to_string());
  r.input = {{"family", family.name}, {"moves", moves}, {"range", {lo, hi}}};
  json jrows = json::array();
  Table t{{"n", "ruleset", "outcome_preperiod", "outcome_period", "outcome_certified", "nim_preperiod", "nim_period",
           "nim_certified", "status"},
          {}};
  std::ostringstream text;
  bool inconclusive = false;
  for (const auto& row : rows) {
    json jr{{"n", row.n}, {"status", search::row_status_name(row.status)}};
    std::vector<std::string> cells{std::to_string(row.n)};
    text << "n=" << row.n << " ";
    if (!row.ruleset) {
      jr["error"] = row.error;
      cells.insert(cells.end(), {"", "", "", "", "", "", ""});
      text << "invalid: " << row.error << "\n";
    } else {
      jr["ruleset"] = row.ruleset->to_string();
      jr["outcome"] = cert_json(row.outcome);
      jr["nim"] = row.nim ? cert_json(*row.nim) : json(nullptr);
      json checks = json::array();
      for (const auto& c : row.checks)
        checks.push_back({{"quantity", c.quantity}, {"predicted", c.predicted}, {"observed", c.observed},
                          {"matches", c.matches}});
      jr["checks"] = checks;
      cells.insert(cells.end(), {row.ruleset->to_string(), std::to_string(row.outcome.preperiod),
                                 std::to_string(row.outcome.period), row.outcome.certified ? "true" : "false",
                                 row.nim ? std::to_string(row.nim->preperiod) : "",
                                 row.nim ? std::to_string(row.nim->period) : "",
                                 row.nim ? (row.nim->certified ? "true" : "false") : ""});
      text << "{" << row.ruleset->to_string() << "} outcome (" << row.outcome.preperiod << "," << row.outcome.period
           << ")";
      if (row.nim) text << " nim (" << row.nim->preperiod << "," << row.nim->period << ")";
      for (const auto& c : row.checks)
        text << " [" << c.quantity << " " << c.observed << (c.matches ? " = " : " != ") << c.predicted << "]";
      text << " " << search::row_status_name(row.status) << "\n";
    }
    cells.push_back(std::string(search::row_status_name(row.status)));
    t.rows.push_back(std::move(cells));
    jrows.push_back(std::move(jr));
    inconclusive = inconclusive || row.status == search::RowStatus::inconclusive;
  }
  r.payload["rows"] = std::move(jrows);
  r.text = text.str();
  if (!r.text.empty()) r.text.pop_back();
  r.table = std::move(t);
  r.exit = inconclusive ? exit_uncertified : exit_ok;
  return r;
}

Result cmd_records(const Options& o) {
  Result r;
  const auto [lo, hi] = need_range(o.range, "--range");
  const auto filter = parse_filter(o.filter);
  const auto table = search::record_holders(lo, hi, o.k, filter, policy_from(o), o.threads);
  r.input = {{"range", {lo, hi}}, {"k", o.k}, {"filter", o.filter}};
  json rows = json::array();
  Table t{{"max_s", "ruleset", "outcome_preperiod", "outcome_period", "outcome_certified", "nim_preperiod",
           "nim_period", "nim_certified", "enumerated", "uncertified"},
          {}};
  std::ostringstream text;
  std::vector<std::pair<std::int64_t, std::int64_t>> points;
  std::size_t uncertified = 0;
  for (const auto& row : table.rows) {
    json holders = json::array();
    text << "max S " << row.max_s << ": " << row.enumerated << " rulesets, " << row.uncertified << " uncertified";
    for (const auto& h : row.holders) {
      holders.push_back({{"ruleset", h.ruleset.to_string()}, {"outcome", cert_json(h.outcome)}, {"nim", cert_json(h.nim)}});
      t.rows.push_back({std::to_string(row.max_s), h.ruleset.to_string(), std::to_string(h.outcome.preperiod),
                        std::to_string(h.outcome.period), h.outcome.certified ? "true" : "false",
                        std::to_string(h.nim.preperiod), std::to_string(h.nim.period),
                        h.nim.certified ? "true" : "false", std::to_string(row.enumerated),
                        std::to_string(row.uncertified)});
      text << "\n  {" << h.ruleset.to_string() << "} outcome (" << h.outcome.preperiod << "," << h.outcome.period
           << ") nim (" << h.nim.preperiod << "," << h.nim.period << (h.nim.certified ? ")" : ", uncertified)");
    }
    text << "\n";
    if (!row.holders.empty()) points.emplace_back(row.max_s, row.holders.front().outcome.period);
    rows.push_back({{"max_s", row.max_s}, {"enumerated", row.enumerated}, {"uncertified", row.uncertified},
                    {"holders", holders}});
    uncertified += row.uncertified;
  }
  r.payload["rows"] = std::move(rows);
  r.payload["uncertified"] = uncertified;
  r.payload["certified"] = uncertified == 0;
  if (points.size() >= 3) {
    try {
      const auto g = search::fit_growth(points);
      r.payload["growth"] = {{"alpha", g.alpha}, {"beta", g.beta},
                             {"alpha_max_residual", g.exponential.max_abs_residual},
                             {"beta_max_residual", g.monomial.max_abs_residual}};
      text << "growth fit: alpha " << g.alpha << ", beta " << g.beta << "\n";
    } catch (const std::invalid_argument&) {
    }
  }
  r.text = text.str();
  if (!r.text.empty()) r.text.pop_back();
  r.table = std::move(t);
  r.exit = uncertified == 0 ? exit_ok : exit_uncertified;
  return r;
}

Result cmd_classify3(const Options& o) {
  Result r;
  if (o.s3 < 3) throw std::invalid_argument("--s3 must be at least 3");
  std::int64_t s1_lo = 1, s1_hi = o.s3 - 2, s2_lo = 2, s2_hi = o.s3 - 1;
  if (!o.range.empty()) std::tie(s1_lo, s1_hi) = parse_range(o.range);
  if (!o.range2.empty()) std::tie(s2_lo, s2_hi) = parse_range(o.range2);
  const auto grid = search::classify_three_move(o.s3, s1_lo, s1_hi, s2_lo, s2_hi, policy_from(o), o.threads);
  r.input = {{"s3", o.s3}, {"s1_range", {s1_lo, s1_hi}}, {"s2_range", {s2_lo, s2_hi}}};
  std::map<std::string, std::int64_t> counts;
  json cells = json::array();
  Table t{{"s1", "s2", "class", "period"}, {}};
  for (Move s2 = s2_lo; s2 <= s2_hi; ++s2)
    for (Move s1 = s1_lo; s1 <= s1_hi; ++s1) {
      const auto c = grid.at(s1, s2);
      if (c == search::CellClass::none) continue;
      const std::string name(search::class_name(c));
      ++counts[name];
      cells.push_back({{"s1", s1}, {"s2", s2}, {"class", name}, {"period", grid.period_at(s1, s2)}});
      t.rows.push_back({std::to_string(s1), std::to_string(s2), name, std::to_string(grid.period_at(s1, s2))});
    }
  r.payload["counts"] = counts;
  r.payload["cells"] = std::move(cells);
  const bool complete = !counts.count("unknown");
  r.payload["certified"] = complete;
  std::ostringstream text;
  text << "s3 = " << o.s3;
  for (const auto& [name, n] : counts) text << "\n" << name << ": " << n;
  r.text = text.str();
  r.table = std::move(t);
  r.image = twod::render(grid);
  r.exit = complete ? exit_ok : exit_uncertified;
  return r;
}

Result cmd_zhang(const Options& o) {
  Result r;
  const Ruleset rules = need_1d(o.ruleset);
  const auto [lo, hi] = need_range(o.range, "--range");
  const auto scan = search::zhang_scan(rules, o.residue, o.modulus, lo, hi, policy_from(o), o.threads);
  r.input = {{"ruleset", rules.to_string()}, {"residue", o.residue}, {"modulus", o.modulus}, {"range", {lo, hi}}};
  r.payload["base"] = cert_json(scan.base_certificate);
  r.payload["threshold"] = scan.threshold;
  json rows = json::array();
  Table t{{"c", "preperiod", "period", "above_threshold"}, {}};
  for (const auto& row : scan.rows) {
    rows.push_back({{"c", row.c}, {"preperiod", row.certificate.preperiod}, {"period", row.certificate.period},
                    {"above_threshold", row.above_threshold}});
    t.rows.push_back({std::to_string(row.c), std::to_string(row.certificate.preperiod),
                      std::to_string(row.certificate.period), row.above_threshold ? "true" : "false"});
  }
  r.payload["rows"] = std::move(rows);
  r.payload["uncertified"] = scan.uncertified;
  r.payload["certified"] = scan.uncertified == 0;
  auto fit_json = [](const std::optional<search::LineFit>& f) {
    return f ? json{{"slope", f->slope}, {"intercept", f->intercept}, {"max_abs_residual", f->max_abs_residual}}
             : json(nullptr);
  };
  r.payload["preperiod_fit"] = fit_json(scan.preperiod_fit);
  r.payload["period_fit"] = fit_json(scan.period_fit);
  r.payload["fit_uses_all_rows"] = scan.fit_uses_all_rows;
  auto dev = [](const std::optional<double>& d) { return d ? json(*d) : json(nullptr); };
  r.payload["above_threshold_deviation"] = dev(scan.above_threshold_deviation);
  r.payload["below_threshold_deviation"] = dev(scan.below_threshold_deviation);

  std::ostringstream text;
  text << "base " << cert_text(scan.base_certificate) << "\nthreshold c > " << scan.threshold;
  for (const auto& row : scan.rows)
    text << "\nc=" << row.c << " (" << row.certificate.preperiod << "," << row.certificate.period << ")"
         << (row.above_threshold ? "" : " below threshold");
  if (scan.period_fit)
    text << "\nperiod ~ " << scan.period_fit->slope << " c + " << scan.period_fit->intercept << ", preperiod ~ "
         << scan.preperiod_fit->slope << " c + " << scan.preperiod_fit->intercept
         << (scan.fit_uses_all_rows ? " (fitted over all rows)" : "");
  r.text = text.str();
  r.table = std::move(t);
  r.exit = scan.uncertified == 0 ? exit_ok : exit_uncertified;
  return r;
}

Result cmd_grid2d(const Options& o) {
  Result r;
  const auto rules = need_2d(o.ruleset);
  const std::int64_t w = o.width > 0 ? o.width : 400, h = o.height > 0 ? o.height : 400;
  const auto grid = twod::outcomes2d(rules, w, h, o.threads);
  r.input = {{"ruleset", rules.to_string()}, {"width", w}, {"height", h}};
  auto bytes = grid.to_bytes();
  std::int64_t p_count = 0;
  for (auto b : bytes) p_count += b;
  r.payload["p_positions"] = p_count;
  std::ostringstream text;
  text << w << "x" << h << " grid of " << rules.to_string() << ": " << p_count << " P-positions, digest "
       << to_hex(grid.digest());
  std::optional<twod::Line> line;
  if (o.row >= 0) line = twod::Line{twod::Line::row, o.row};
  if (o.column >= 0) line = twod::Line{twod::Line::column, o.column};
  if (line) {
    const auto cert = twod::line_periodicity(grid, *line);
    const std::string which = line->kind == twod::Line::row ? "row" : "column";
    r.payload["line"] = {{"kind", which}, {"index", line->index}};
    if (cert) {
      put_cert(r.payload, *cert);
      text << "\n" << which << " " << line->index << ": " << cert_text(*cert) << " (empirical)";
    } else {
      text << "\n" << which << " " << line->index << ": no period found";
      r.exit = exit_uncertified;
    }
  }
  r.sequence = std::move(bytes);
  r.text = text.str();
  r.image = twod::render(grid);
  return r;
}

Result cmd_render(const Options& o) {
  Result r;
  const auto any = parse_ruleset(o.ruleset);
  if (std::holds_alternative<twod::Ruleset2D>(any)) {
    Options copy = o;
    copy.row = copy.column = -1;
    return cmd_grid2d(copy);
  }
  const Ruleset rules = need_1d(o.ruleset);
  const std::int64_t h = horizon_or(o, 4096);
  const std::int64_t w = o.width > 0 ? o.width : 64;
  const auto seq = o.seed.empty() ? outcomes(rules, h) : outcomes(rules, Seed::parse(o.seed), h);
  r.input = {{"ruleset", rules.to_string()}, {"horizon", h}, {"width", w}};
  r.image = twod::render_wrapped(seq, w);
  r.sequence = seq.to_bytes();
  r.text = std::to_string(w) + "x" + std::to_string(r.image->height) + " image of " + std::to_string(h) + " outcomes";
  return r;
}

// Output -------------------------------------------------------------------

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string render_csv(const Table& t) {
  std::ostringstream s;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) s << (i ? "," : "") << csv_field(cells[i]);
    s << "\n";
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
  return s.str();
}

// Scalar payload fields as a one-row table.
Table scalar_table(const json& payload) {
  Table t;
  std::vector<std::string> row;
  for (const auto& [k, v] : payload.items()) {
    if (v.is_structured()) continue;
    t.header.push_back(k);
    row.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  }
  t.rows.push_back(std::move(row));
  return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Subtraction game outcomes, nim-values and periodicity certificates", "subgame"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--horizon", o.horizon, "sequence length, or the certification cap for period commands")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", o.threads, "worker threads for search commands (0 = all cores)");
  app.add_option("--format", o.format, "text, json, csv or pgm")->check(CLI::IsMember({"text", "json", "csv", "pgm"}));
  app.add_option("--out", o.out, "write the result to this file");

  using Handler = Result (*)(const Options&);
  std::map<std::string, Handler> handlers;
  auto sub = [&](const char* name, const char* help, Handler h) {
    handlers[name] = h;
    return app.add_subcommand(name, help);
  };
  auto with_ruleset = [&](CLI::App* s, const char* help = "ruleset, e.g. 2,5,7") {
    s->add_option("ruleset", o.ruleset, help)->required();
    return s;
  };

  auto* s = with_ruleset(sub("outcomes", "P/N outcomes of positions 0..horizon-1", cmd_outcomes));
  s->add_option("--seed", o.seed, "terminal seed, leftmost = position -max S");
  with_ruleset(sub("grundy", "nim-values of positions 0..horizon-1", cmd_grundy), "ruleset, e.g. 2,5,7 or !2,4");
  s = with_ruleset(sub("period", "certified preperiod and period", cmd_period));
  s->add_option("--kind", o.kind, "outcome or nim");
  with_ruleset(sub("misere", "misere certificate and comparison with the misere seed", cmd_misere));
  s = with_ruleset(sub("seed-period", "certificate under a terminal seed", cmd_seed_period));
  s->add_option("--seed", o.seed, "P/N string of length max S, leftmost = position -max S")->required();
  s = with_ruleset(sub("expand", "moves that can be adjoined without changing the nim-sequence", cmd_expand));
  s->add_option("--bound", o.bound, "largest candidate move")->required();
  with_ruleset(sub("adjoin-check", "check that p - s is adjoinable for a purely periodic nim-sequence",
                   cmd_adjoin_check));
  with_ruleset(sub("bipartite", "bipartite and ultimately bipartite tests", cmd_bipartite));
  with_ruleset(sub("fes", "all-but nim: arithmetic periodicity of the nim-sequence", cmd_fes), "excluded set, e.g. !2,4");
  s = sub("fes-conjecture", "evaluate an all-but nim conjecture at (a, b)", cmd_fes_conjecture);
  s->add_option("name", o.name, "sleator-slusky, as-f, as-lemma, as-pure, as-f-prime")->required();
  s->add_option("--params", o.params, "a,b")->required();
  s = sub("family", "evaluate a one-parameter family", cmd_family);
  s->add_option("name", o.name, "built-in family name or moves such as 5n-2,5n+3,10n+2")->required();
  s->add_option("--range", o.range, "parameter range A..B")->required();
  s->add_option("--outcome-period", o.outcome_period, "predicted outcome period polynomial");
  s->add_option("--outcome-preperiod", o.outcome_preperiod, "predicted outcome preperiod polynomial");
  s->add_option("--nim-period", o.nim_period, "predicted nim period polynomial");
  s->add_option("--nim-preperiod", o.nim_preperiod, "predicted nim preperiod polynomial");
  s = sub("records", "record outcome periods per max S", cmd_records);
  s->add_option("--range", o.range, "max S range A..B")->required();
  s->add_option("--k", o.k, "ruleset size (0 = any)");
  s->add_option("--filter", o.filter, "all or max-symmetric");
  s = sub("classify3", "period classes of 3-move rulesets at fixed s3", cmd_classify3);
  s->add_option("--s3", o.s3, "largest move")->required();
  s->add_option("--range", o.range, "s1 range A..B");
  s->add_option("--range2", o.range2, "s2 range A..B");
  s = with_ruleset(sub("zhang", "adjoin one move c over a residue class", cmd_zhang));
  s->add_option("--residue", o.residue, "c mod modulus")->required();
  s->add_option("--modulus", o.modulus, "a multiple of the period of the ruleset")->required();
  s->add_option("--range", o.range, "c range A..B")->required();
  s = with_ruleset(sub("grid2d", "2-d outcome grid", cmd_grid2d), "2-d ruleset, e.g. (2,6),(3,3)");
  s->add_option("--width", o.width, "columns (default 400)");
  s->add_option("--height", o.height, "rows (default 400)");
  s->add_option("--row", o.row, "report empirical periodicity of this row");
  s->add_option("--column", o.column, "report empirical periodicity of this column");
  s = with_ruleset(sub("render", "PGM image of wrapped 1-d outcomes or a 2-d grid", cmd_render));
  s->add_option("--width", o.width, "image width");
  s->add_option("--height", o.height, "image height (2-d only)");
  s->add_option("--seed", o.seed, "terminal seed for 1-d outcomes");

  const auto t0 = std::chrono::steady_clock::now();
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const bool images = command == "render" || command == "classify3" || command == "grid2d";
  std::string format = o.format;
  if (command == "render" && format == "text") format = "pgm";
  if (format == "pgm" && !images) {
    err << "error: --format pgm is only available for render, classify3 and grid2d\n";
    return exit_input_error;
  }

  Result result;
  try {
    result = handlers.at(command)(o);
  } catch (const std::invalid_argument& e) {  // includes ParseError and PreconditionError
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  }

  std::string body;
  if (format == "pgm") {
    body = twod::encode_pgm(*result.image);
  } else if (format == "json") {
    json rec;
    rec["command"] = command;
    rec["version"] = std::string(version());
    rec["input"] = result.input;
    for (auto& [k, v] : result.payload.items()) rec[k] = v;
    if (result.sequence) {
      rec["digest"] = to_hex(fnv1a64(*result.sequence));
    } else {
      const std::string canon = json{{"input", result.input}, {"payload", result.payload}}.dump();
      rec["digest"] = to_hex(fnv1a64({reinterpret_cast<const std::uint8_t*>(canon.data()), canon.size()}));
    }
    rec["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    body = rec.dump(2) + "\n";
  } else if (format == "csv") {
    body = render_csv(result.table ? *result.table : scalar_table(result.payload));
  } else {
    body = result.text + "\n";
  }

  if (o.out.empty()) {
    out << body;
  } else {
    try {
      twod::write_file(o.out, body);
    } catch (const std::runtime_error& e) {
      err << "error: " << e.what() << "\n";
      return exit_input_error;
    }
  }
  return result.exit;
}

}  // namespace subgame::cli
