#include "lqspec/regression.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lqspec {

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_line: size mismatch");
  if (x.size() < 2) throw std::invalid_argument("fit_line: need at least two points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("fit_line: x values are all equal");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return fit;
}

std::vector<double> dyadic_ladder(int from, int to) {
  if (from > to) throw std::invalid_argument("dyadic_ladder: from must not exceed to");
  std::vector<double> out;
  for (int k = from; k <= to; ++k) out.push_back(std::ldexp(1.0, -k));
  return out;
}

void check_delta_ladder(std::span<const double> deltas, std::size_t min_length) {
  if (deltas.size() < min_length)
    throw std::invalid_argument("delta ladder needs at least " + std::to_string(min_length) +
                                " entries");
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!(deltas[i] > 0.0 && deltas[i] < 1.0))
      throw std::invalid_argument("delta ladder entries must lie in (0, 1)");
    if (i > 0 && !(deltas[i] < deltas[i - 1]))
      throw std::invalid_argument("delta ladder must be strictly decreasing");
  }
}

}  // namespace lqspec
