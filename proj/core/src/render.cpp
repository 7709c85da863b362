#include "lqspec/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <stdexcept>

#include "lqspec/rng.hpp"

namespace lqspec {

std::size_t RasterImage::count(const Rgb& c) const {
  return static_cast<std::size_t>(std::count(pixels.begin(), pixels.end(), c));
}

std::vector<Point> chaos_game(const Ifs& ifs, std::size_t n, std::uint64_t seed,
                              std::size_t burn_in) {
  if (n == 0) throw std::invalid_argument("chaos_game: n must be positive");
  std::vector<double> cumulative;
  double acc = 0.0;
  for (const MapSpec& m : ifs.maps()) cumulative.push_back(acc += m.p);
  cumulative.back() = 1.0;

  Rng rng(seed);
  Point z{0.5, 0.5};
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t step = 0; step < n + burn_in; ++step) {
    const double u = rng.uniform();
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const auto i = static_cast<Letter>(std::min<std::size_t>(
        static_cast<std::size_t>(it - cumulative.begin()), ifs.size() - 1));
    z = ifs.apply_letter(i, z);
    if (step >= burn_in) out.push_back(z);
  }
  return out;
}

RasterImage rasterize(std::span<const Point> points, int width, int height) {
  if (width < 1 || height < 1) throw std::invalid_argument("rasterize: size must be positive");
  RasterImage img;
  img.width = width;
  img.height = height;
  img.pixels.assign(static_cast<std::size_t>(width) * height, Rgb{});
  for (const Point& p : points) {
    if (!(p.x >= 0.0 && p.x <= 1.0 && p.y >= 0.0 && p.y <= 1.0)) continue;
    const int col = std::min(width - 1, static_cast<int>(p.x * width));
    const int row = height - 1 - std::min(height - 1, static_cast<int>(p.y * height));
    img.at(row, col) = Rgb{0, 0, 0};
  }
  return img;
}

void write_ppm(std::ostream& os, const RasterImage& img) {
  const std::string header =
      "P6\n" + std::to_string(img.width) + ' ' + std::to_string(img.height) + "\n255\n";
  os.write(header.data(), static_cast<std::streamsize>(header.size()));
  for (const Rgb& c : img.pixels) {
    const char bytes[3] = {static_cast<char>(c.r), static_cast<char>(c.g),
                           static_cast<char>(c.b)};
    os.write(bytes, 3);
  }
}

std::string encode_ppm(const RasterImage& img) {
  std::ostringstream os(std::ios::binary);
  write_ppm(os, img);
  return os.str();
}

}  // namespace lqspec
