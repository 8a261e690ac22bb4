#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cograph/cotree.hpp"

namespace cograph {

inline constexpr std::size_t kMaxImageSide = std::size_t{1} << 14;

struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::uint8_t max_value = 255;
  std::vector<std::uint8_t> pixels;  ///< row-major

  std::uint8_t at(std::size_t row, std::size_t col) const { return pixels[row * width + col]; }
  friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

/// Adjacency matrix of the cograph with vertices in stored depth-first leaf
/// order: black (0) for an edge, white (255) otherwise. Throws LimitExceeded
/// above kMaxImageSide leaves.
GrayImage adjacency_image(const Cotree& t);

/// Binary P5 graymap.
void write_pgm(std::ostream& out, const GrayImage& image);
std::string to_pgm(const GrayImage& image);
/// Accepts binary P5 with comments in the header and max value < 256.
GrayImage parse_pgm(std::string_view bytes);

}  // namespace cograph
