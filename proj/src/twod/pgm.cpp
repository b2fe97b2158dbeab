#include "subgame/twod/pgm.hpp"

#include <fstream>

namespace subgame::twod {

std::string encode_pgm(const Image& image) {
  if (image.width < 1 || image.height < 1) throw std::invalid_argument("empty image");
  if (static_cast<std::int64_t>(image.pixels.size()) != image.width * image.height)
    throw std::invalid_argument("pixel count does not match the image size");
  std::string out = "P5\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
  out.append(image.pixels.begin(), image.pixels.end());
  return out;
}

Image render(const OutcomeGrid& grid) {
  Image img{grid.width(), grid.height(), {}};
  img.pixels.reserve(static_cast<std::size_t>(img.width * img.height));
  for (std::int64_t y = grid.height(); y-- > 0;)
    for (std::int64_t x = 0; x < grid.width(); ++x) img.pixels.push_back(grid.is_p(x, y) ? 0 : 255);
  return img;
}

std::uint8_t class_gray(search::CellClass c) {
  using search::CellClass;
  switch (c) {
    case CellClass::s2_s3:
      return 192;
    case CellClass::s1_s3:
      return 128;
    case CellClass::s1_s2:
      return 64;
    case CellClass::diagonal:
      return 0;
    case CellClass::unknown:
      return 160;
    case CellClass::other:
    case CellClass::none:
      return 255;
  }
  return 255;
}

Image render(const search::ClassGrid& grid) {
  Image img{grid.width(), grid.height(), {}};
  for (Move s2 = grid.s2_hi; s2 >= grid.s2_lo; --s2)
    for (Move s1 = grid.s1_lo; s1 <= grid.s1_hi; ++s1) img.pixels.push_back(class_gray(grid.at(s1, s2)));
  return img;
}

Image render_wrapped(const OutcomeSequence& seq, std::int64_t width) {
  if (width < 1) throw std::invalid_argument("wrap width must be positive");
  Image img{width, (seq.size() + width - 1) / width, {}};
  img.pixels.assign(static_cast<std::size_t>(img.width * img.height), 255);
  for (std::int64_t x = 0; x < seq.size(); ++x)
    if (seq.is_p(x)) img.pixels[static_cast<std::size_t>(x)] = 0;
  return img;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace subgame::twod
