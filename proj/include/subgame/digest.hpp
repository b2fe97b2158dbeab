#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace subgame {

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes);

std::string to_hex(std::uint64_t value);

}  // namespace subgame
