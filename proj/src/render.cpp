#include "cograph/render.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "cograph/errors.hpp"

namespace cograph {

GrayImage adjacency_image(const Cotree& t) {
  const std::size_t n = t.size();
  if (n > kMaxImageSide) throw LimitExceeded("adjacency image limited to 16384 vertices");
  const Graph g = cograph_in_dfs_order(t);
  GrayImage image{n, n, 255, std::vector<std::uint8_t>(n * n, 255)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.adjacent(i, j)) image.pixels[i * n + j] = 0;
  return image;
}

void write_pgm(std::ostream& out, const GrayImage& image) {
  out << "P5\n" << image.width << ' ' << image.height << '\n' << static_cast<int>(image.max_value) << '\n';
  out.write(reinterpret_cast<const char*>(image.pixels.data()), static_cast<std::streamsize>(image.pixels.size()));
}

std::string to_pgm(const GrayImage& image) {
  std::ostringstream out;
  write_pgm(out, image);
  return std::move(out).str();
}

GrayImage parse_pgm(std::string_view bytes) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < bytes.size()) {
      if (bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(bytes[pos]))) {
        ++pos;
      } else {
        break;
      }
    }
  };
  auto number = [&] {
    skip_space();
    std::size_t value = 0;
    const std::size_t start = pos;
    while (pos < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[pos])))
      value = value * 10 + static_cast<std::size_t>(bytes[pos++] - '0');
    if (pos == start) throw ParseError("pgm: expected a number in the header");
    return value;
  };
  if (bytes.substr(0, 2) != "P5") throw ParseError("pgm: missing P5 magic");
  pos = 2;
  GrayImage image;
  image.width = number();
  image.height = number();
  const std::size_t max_value = number();
  if (max_value == 0 || max_value > 255) throw ParseError("pgm: only 8-bit images are supported");
  image.max_value = static_cast<std::uint8_t>(max_value);
  if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos])))
    throw ParseError("pgm: header must end with one whitespace byte");
  ++pos;
  const std::size_t size = image.width * image.height;
  if (bytes.size() - pos != size) throw ParseError("pgm: pixel data has the wrong length");
  image.pixels.assign(bytes.begin() + static_cast<std::ptrdiff_t>(pos), bytes.end());
  return image;
}

}  // namespace cograph
