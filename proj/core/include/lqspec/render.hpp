#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "lqspec/ifs.hpp"

namespace lqspec {

struct Rgb {
  std::uint8_t r = 255, g = 255, b = 255;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Row-major, row 0 at the top.
struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<Rgb> pixels;

  const Rgb& at(int row, int col) const { return pixels[static_cast<std::size_t>(row) * width + col]; }
  Rgb& at(int row, int col) { return pixels[static_cast<std::size_t>(row) * width + col]; }
  std::size_t count(const Rgb& c) const;
};

// Random orbit from (1/2, 1/2); map i is drawn with probability p_i from a
// seeded mt19937_64 stream. The first burn_in points are discarded.
std::vector<Point> chaos_game(const Ifs& ifs, std::size_t n, std::uint64_t seed,
                              std::size_t burn_in);

// White background, black hits; y grows upward so (0, 0) is the bottom-left pixel.
RasterImage rasterize(std::span<const Point> points, int width, int height);

// Binary PPM: "P6\n<w> <h>\n255\n" followed by raw RGB bytes.
void write_ppm(std::ostream& os, const RasterImage& img);
std::string encode_ppm(const RasterImage& img);

}  // namespace lqspec
