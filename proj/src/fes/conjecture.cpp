#include <numeric>

#include "subgame/fes.hpp"

namespace subgame::fes {

namespace {

struct Named {
  Conjecture c;
  std::string_view name;
};

constexpr Named kNames[] = {
    {Conjecture::sleator_slusky, "sleator-slusky"},
    {Conjecture::abuku_suetsugu_f, "as-f"},
    {Conjecture::abuku_suetsugu_lemma, "as-lemma"},
    {Conjecture::abuku_suetsugu_pure, "as-pure"},
    {Conjecture::abuku_suetsugu_f_prime, "as-f-prime"},
};

// First n with G(n + p) - G(n) != G(p) - G(0).
std::optional<std::int64_t> pure_witness(const std::vector<Value>& g, std::int64_t p) {
  const auto h = static_cast<std::int64_t>(g.size());
  const std::int64_t s = static_cast<std::int64_t>(g[static_cast<std::size_t>(p)]) - g[0];
  for (std::int64_t n = 0; n + p < h; ++n)
    if (static_cast<std::int64_t>(g[static_cast<std::size_t>(n + p)]) - g[static_cast<std::size_t>(n)] != s) return n;
  return std::nullopt;
}

// Compare against a purely arithmetic-periodic prediction with period p.
void judge_pure_period(Verdict& v, const std::vector<Value>& g, std::int64_t p) {
  v.predicted_period = p;
  const auto h = static_cast<std::int64_t>(g.size());
  if (h < 3 * p + 1) {
    v.kind = VerdictKind::inconclusive;
    v.detail = "horizon shorter than three predicted periods";
    return;
  }
  if (auto w = pure_witness(g, p)) {
    v.kind = VerdictKind::violated;
    v.witness = w;
    v.detail = "G(n+" + std::to_string(p) + ")-G(n) is not constant from n=0";
    v.observed = detect_arithmetic_periodicity(g);
    return;
  }
  if (g[static_cast<std::size_t>(p)] <= g[0]) {
    v.kind = VerdictKind::violated;
    v.witness = 0;
    v.detail = "saltus is not positive";
    return;
  }
  // The relation holds for p; the minimal period must still be p itself.
  for (std::int64_t q = 1; q < p; ++q)
    if (p % q == 0 && g[static_cast<std::size_t>(q)] > g[0] && !pure_witness(g, q)) {
      v.kind = VerdictKind::violated;
      v.detail = "minimal period is " + std::to_string(q);
      v.observed = ArithmeticPeriodicity{0, q, static_cast<std::int64_t>(g[static_cast<std::size_t>(q)]) - g[0], h};
      return;
    }
  v.kind = VerdictKind::holds_over_window;
  v.observed = detect_arithmetic_periodicity(g);
}

Move require_ab(Move a, Move b) {
  if (a < 1 || b <= a) throw PreconditionError("premise 0 < a < b not met");
  return std::gcd(a, b);
}

}  // namespace

std::optional<Conjecture> conjecture_from_name(std::string_view name) {
  for (const auto& n : kNames)
    if (n.name == name) return n.c;
  return std::nullopt;
}

std::string_view conjecture_name(Conjecture c) {
  for (const auto& n : kNames)
    if (n.c == c) return n.name;
  return "?";
}

std::string_view verdict_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::holds_over_window:
      return "holds-over-window";
    case VerdictKind::violated:
      return "violated";
    case VerdictKind::inconclusive:
      return "inconclusive";
  }
  return "?";
}

Verdict run_conjecture(Conjecture which, Move a, Move b, std::int64_t horizon) {
  const Move g = require_ab(a, b);
  Verdict v;
  v.conjecture = which;
  v.a = a;
  v.b = b;

  switch (which) {
    case Conjecture::sleator_slusky: {
      if (b <= 3 * a) throw PreconditionError("premise b > 3a not met");
      if (g != 1) throw PreconditionError("premise gcd(a, b) = 1 not met");
      v.ruleset = FesRuleset{a, b, a + b};
      const auto seq = fes_grundy(v.ruleset, horizon);
      const Move m = (b / (2 * a) + 1) * 2 * a;
      if (m < a + b) {
        v.matched_case = "multiple of 2a in (b, a+b): m=" + std::to_string(m);
        judge_pure_period(v, seq.values, 3 * a * m);
        return v;
      }
      v.matched_case = "no multiple of 2a in (b, a+b)";
      v.observed = detect_arithmetic_periodicity(seq.values);
      if (!v.observed) {
        v.kind = VerdictKind::inconclusive;
        v.detail = "no arithmetic periodicity detected within the horizon";
        return v;
      }
      const std::int64_t p = v.observed->period;
      const std::int64_t n = p / (3 * a);
      if (p % (3 * a) == 0 && b < n && n < a + b) {
        v.kind = VerdictKind::holds_over_window;
        v.detail = "p=3a*" + std::to_string(n);
      } else {
        v.kind = VerdictKind::violated;
        v.detail = "observed period " + std::to_string(p) + " is not 3an with b<n<a+b";
      }
      return v;
    }

    case Conjecture::abuku_suetsugu_f: {
      v.ruleset = FesRuleset{a, b, a + b, a + 2 * b};
      const Move i = (b - a) / (2 * a);
      const Move j = (b - (2 * i + 1) * a) / a;
      const Move k = b - (2 * i + j + 1) * a;
      const Move f = 4 * (i + j) * (i + 1) * a * a + (4 * i + 3) * k * a + k * k;
      Move divisor;
      if (b < 2 * a) {
        divisor = b - a;
        v.matched_case = "a<b<2a";
      } else if (g == a) {
        divisor = ((a + b - 1) / (2 * a)) * a;
        v.matched_case = b == 2 * a ? "b>=2a, gcd=a (b=2a)" : "b>=2a, gcd=a";
      } else {
        divisor = g;
        v.matched_case = "b>=2a, gcd<a";
      }
      v.detail = "f=" + std::to_string(f) + " divisor=" + std::to_string(divisor);
      const auto seq = fes_grundy(v.ruleset, horizon);
      if (divisor <= 0 || f % divisor != 0) {
        v.kind = VerdictKind::inconclusive;
        v.detail += " (formula does not give an integer period)";
        v.observed = detect_arithmetic_periodicity(seq.values);
        return v;
      }
      const std::int64_t p = f / divisor;
      v.predicted_period = p;
      v.observed = detect_arithmetic_periodicity(seq.values);
      if (!v.observed) {
        v.kind = VerdictKind::inconclusive;
        v.detail += "; no arithmetic periodicity detected within the horizon";
      } else if (v.observed->period == p) {
        v.kind = VerdictKind::holds_over_window;
      } else {
        v.kind = VerdictKind::violated;
        v.detail += "; observed period " + std::to_string(v.observed->period);
      }
      return v;
    }

    case Conjecture::abuku_suetsugu_lemma: {
      if (b == 2 * a) throw PreconditionError("premise b != 2a not met");
      const Move m = b / (2 * a);
      if (m < 1 || b > (2 * m + 1) * a) throw PreconditionError("premise 2ma <= b <= (2m+1)a for some m >= 1 not met");
      v.ruleset = FesRuleset{a, b, a + b, 2 * a + b};
      v.matched_case = "m=" + std::to_string(m);
      const auto seq = fes_grundy(v.ruleset, horizon);
      judge_pure_period(v, seq.values, (2 * m + 3) * a + b);
      return v;
    }

    case Conjecture::abuku_suetsugu_pure: {
      if (b <= 2 * a) throw PreconditionError("premise b > 2a not met");
      v.ruleset = FesRuleset{a, b, a + b, 2 * a + b};
      const auto seq = fes_grundy(v.ruleset, horizon);
      v.observed = detect_arithmetic_periodicity(seq.values);
      if (!v.observed) {
        v.kind = VerdictKind::inconclusive;
        v.detail = "no arithmetic periodicity detected within the horizon";
      } else if (v.observed->preperiod == 0) {
        v.kind = VerdictKind::holds_over_window;
      } else {
        v.kind = VerdictKind::violated;
        v.witness = v.observed->preperiod - 1;
        v.detail = "preperiod " + std::to_string(v.observed->preperiod);
      }
      return v;
    }

    case Conjecture::abuku_suetsugu_f_prime: {
      const Move q = b / a;
      if (b % a == 0 || q % 2 == 0) throw PreconditionError("premise (2m+1)a < b < (2m+2)a for some m >= 0 not met");
      v.ruleset = FesRuleset{a, b, a + b, 2 * a + b};
      v.matched_case = "m=" + std::to_string((q - 1) / 2);
      const Move fp = ((b + 2 * a - 1) / (2 * a)) * 4 * a * a + 3 * a * (b % a);
      v.detail = "f'=" + std::to_string(fp);
      const auto seq = fes_grundy(v.ruleset, horizon);
      if (fp % g != 0) {
        v.kind = VerdictKind::inconclusive;
        v.detail += " is not divisible by gcd(a, b)";
        return v;
      }
      judge_pure_period(v, seq.values, fp / g);
      return v;
    }
  }
  return v;
}

}  // namespace subgame::fes
