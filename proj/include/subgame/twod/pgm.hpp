#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "subgame/search/classify.hpp"
#include "subgame/sequence.hpp"
#include "subgame/twod/grid.hpp"

namespace subgame::twod {

/// Binary grayscale image, maxval 255, pixels listed top row first.
struct Image {
  std::int64_t width = 0, height = 0;
  std::vector<std::uint8_t> pixels;
};

/// "P5\n<W> <H>\n255\n" followed by the pixel bytes.
std::string encode_pgm(const Image& image);

/// P = 0 (black), N = 255. The origin is the lower-left pixel: y grows
/// upward, so the first image row is y = height - 1.
Image render(const OutcomeGrid& grid);

/// Gray level per class:
///   s2+s3 192, s1+s3 128, s1+s2 64, diagonal 0, other 255, unknown 160, none 255.
std::uint8_t class_gray(search::CellClass c);

/// s1 along x, s2 along y, same lower-left origin.
Image render(const search::ClassGrid& grid);

/// A 1-d outcome sequence wrapped into rows of `width`, position 0 at the
/// top-left, reading order left to right, top to bottom.
Image render_wrapped(const OutcomeSequence& seq, std::int64_t width);

/// Writes bytes to path; throws std::runtime_error on failure.
void write_file(const std::string& path, const std::string& bytes);

}  // namespace subgame::twod
