#pragma once

#include <span>
#include <vector>

namespace lqspec {

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 1.0;
};

// Ordinary least squares y = slope * x + intercept. r2 is 1 when y is
// constant. Needs at least two distinct x.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

// {2^-from, ..., 2^-to}, decreasing.
std::vector<double> dyadic_ladder(int from, int to);

// Validates a decreasing list in (0, 1); throws std::invalid_argument otherwise.
void check_delta_ladder(std::span<const double> deltas, std::size_t min_length);

}  // namespace lqspec
