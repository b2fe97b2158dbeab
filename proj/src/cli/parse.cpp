#include <cctype>
#include <charconv>
#include <set>

#include "subgame/cli.hpp"

namespace subgame::cli {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t pos() const { return pos_; }

  /// Signed integer; the caller checks the sign.
  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::int64_t v = 0;
    const char* first = text_.data() + start + (start < text_.size() && text_[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, v);
    if (ec != std::errc{} || ptr != text_.data() + pos_) {
      pos_ = start;
      fail(ec == std::errc::result_out_of_range ? "integer out of range" : "malformed token");
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<Move> move_list(Scanner& s, bool allow_zero = false) {
  std::vector<Move> out;
  std::set<Move> seen;
  do {
    const std::size_t at = (s.skip_space(), s.pos());
    const Move m = s.integer();
    if (m < (allow_zero ? 0 : 1)) s.fail(allow_zero ? "negative value" : "move must be positive", at);
    if (!seen.insert(m).second) s.fail("duplicate move " + std::to_string(m), at);
    out.push_back(m);
  } while (s.eat(','));
  return out;
}

}  // namespace

AnyRuleset parse_ruleset(std::string_view text) {
  Scanner s(text);
  if (s.at_end()) s.fail("empty ruleset");

  if (s.eat('!')) {
    auto moves = move_list(s);
    if (!s.at_end()) s.fail("unexpected character");
    return fes::FesRuleset(std::move(moves));
  }

  if (s.peek() == '(') {
    std::vector<twod::Vec2> moves;
    do {
      const std::size_t at = (s.skip_space(), s.pos());
      s.expect('(');
      const std::size_t a_at = (s.skip_space(), s.pos());
      const std::int64_t a = s.integer();
      s.expect(',');
      const std::size_t b_at = (s.skip_space(), s.pos());
      const std::int64_t b = s.integer();
      s.expect(')');
      if (a < 0) s.fail("negative coordinate", a_at);
      if (b < 0) s.fail("negative coordinate", b_at);
      if (a == 0 && b == 0) s.fail("(0,0) is not a move", at);
      for (const auto& m : moves)
        if (m.a == a && m.b == b) s.fail("duplicate move", at);
      moves.push_back({a, b});
    } while (s.eat(','));
    if (!s.at_end()) s.fail("unexpected character");
    return twod::Ruleset2D(std::move(moves));
  }

  const bool braced = s.eat('{');
  auto moves = move_list(s);
  if (braced) s.expect('}');
  if (!s.at_end()) s.fail("unexpected character");
  return Ruleset(std::move(moves));
}

std::string format_ruleset(const AnyRuleset& rules) {
  return std::visit([](const auto& r) { return r.to_string(); }, rules);
}

std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    Scanner s(text);
    const std::int64_t v = s.integer();
    if (!s.at_end()) s.fail("expected A..B");
    return {v, v};
  }
  Scanner lo(text.substr(0, dots)), hi(text.substr(dots + 2));
  const std::int64_t a = lo.integer();
  if (!lo.at_end()) lo.fail("malformed range start");
  std::int64_t b = 0;
  try {
    b = hi.integer();
    if (!hi.at_end()) hi.fail("malformed range end");
  } catch (const ParseError& e) {
    throw ParseError("malformed range end", dots + 2 + e.position());
  }
  if (b < a) throw ParseError("empty range", dots);
  return {a, b};
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  Scanner s(text);
  std::vector<std::int64_t> out;
  do out.push_back(s.integer());
  while (s.eat(','));
  if (!s.at_end()) s.fail("unexpected character");
  return out;
}

}  // namespace subgame::cli
