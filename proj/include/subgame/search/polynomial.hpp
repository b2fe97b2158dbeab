#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace subgame::search {

/// Integer polynomial in one variable; coefficient i multiplies n^i.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::int64_t> coefficients);

  /// Parses forms like "45n^2-1", "5n+3", "4n²" or "7". Any single letter
  /// is accepted as the variable. Throws std::invalid_argument.
  static Polynomial parse(std::string_view text);

  std::int64_t operator()(std::int64_t n) const;
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<std::int64_t>& coefficients() const { return coefficients_; }
  std::string to_string(char var = 'n') const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<std::int64_t> coefficients_;
};

}  // namespace subgame::search
