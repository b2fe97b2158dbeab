#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace subgame::detail {

constexpr std::uint64_t low_mask(unsigned n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Growable bit array with unaligned multi-bit reads and OR-writes of up to
/// 64 bits. Freshly grown bits are zero.
class BitVector {
 public:
  std::int64_t size() const { return size_; }

  void resize(std::int64_t bits) {
    words_.resize(static_cast<std::size_t>((bits + 63) / 64) + 1, 0);
    size_ = bits;
  }

  bool test(std::int64_t i) const {
    return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
  }

  void set(std::int64_t i) { words_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }

  /// Bits [pos, pos + n) packed into the low n bits, n in [1, 64].
  std::uint64_t extract(std::int64_t pos, unsigned n) const {
    const auto word = static_cast<std::size_t>(pos >> 6);
    const auto off = static_cast<unsigned>(pos & 63);
    std::uint64_t v = words_[word] >> off;
    if (off != 0 && off + n > 64) v |= words_[word + 1] << (64 - off);
    return v & low_mask(n);
  }

  /// ORs the low n bits of value into [pos, pos + n).
  void merge(std::int64_t pos, unsigned n, std::uint64_t value) {
    value &= low_mask(n);
    const auto word = static_cast<std::size_t>(pos >> 6);
    const auto off = static_cast<unsigned>(pos & 63);
    words_[word] |= value << off;
    if (off != 0 && off + n > 64) words_[word + 1] |= value >> (64 - off);
  }

 private:
  std::vector<std::uint64_t> words_{0};
  std::int64_t size_ = 0;
};

}  // namespace subgame::detail
