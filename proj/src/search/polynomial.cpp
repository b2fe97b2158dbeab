#include "subgame/search/polynomial.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>

namespace subgame::search {

Polynomial::Polynomial(std::vector<std::int64_t> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(std::string_view token) {
    skip_space();
    if (text.substr(pos, token.size()) != token) return false;
    pos += token.size();
    return true;
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bad polynomial '" + std::string(text) + "' at " + std::to_string(pos) + ": " + what);
  }
};

std::optional<std::int64_t> read_int(Cursor& c) {
  c.skip_space();
  const std::size_t start = c.pos;
  std::int64_t v = 0;
  while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) {
    if (v > (INT64_MAX - 9) / 10) c.fail("number too large");
    v = v * 10 + (c.text[c.pos++] - '0');
  }
  if (c.pos == start) return std::nullopt;
  return v;
}

}  // namespace

Polynomial Polynomial::parse(std::string_view text) {
  Cursor c{text};
  std::vector<std::int64_t> coef;
  char var = 0;
  bool first = true;
  if (c.done()) c.fail("empty");
  while (!c.done()) {
    int sign = 1;
    if (c.eat("+")) {
    } else if (c.eat("-") || c.eat("−")) {
      sign = -1;
    } else if (!first) {
      c.fail("expected + or -");
    }
    first = false;

    auto k = read_int(c);
    c.eat("*");
    c.skip_space();
    std::size_t power = 0;
    if (c.pos < text.size() && std::isalpha(static_cast<unsigned char>(text[c.pos]))) {
      const char v = text[c.pos++];
      if (var && v != var) c.fail("more than one variable");
      var = v;
      power = 1;
      if (c.eat("^")) {
        auto e = read_int(c);
        if (!e || *e > 16) c.fail("bad exponent");
        power = static_cast<std::size_t>(*e);
      } else if (c.eat("²")) {
        power = 2;
      } else if (c.eat("³")) {
        power = 3;
      }
    } else if (!k) {
      c.fail("expected a number or variable");
    }
    if (coef.size() <= power) coef.resize(power + 1, 0);
    coef[power] += sign * k.value_or(1);
  }
  return Polynomial(std::move(coef));
}

std::int64_t Polynomial::operator()(std::int64_t n) const {
  std::int64_t v = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) v = v * n + *it;
  return v;
}

std::string Polynomial::to_string(char var) const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    const std::int64_t k = coefficients_[i];
    if (k == 0) continue;
    const std::int64_t mag = k < 0 ? -k : k;
    if (out.empty())
      out += k < 0 ? "-" : "";
    else
      out += k < 0 ? "-" : "+";
    if (mag != 1 || i == 0) out += std::to_string(mag);
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace subgame::search
