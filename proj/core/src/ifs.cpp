#include "lqspec/ifs.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lqspec {

Ifs::Ifs(std::vector<MapSpec> maps, std::string label)
    : maps_(std::move(maps)), label_(std::move(label)) {
  if (maps_.size() < 2) throw std::invalid_argument("Ifs: at least two maps are required");
  double total = 0.0;
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    const MapSpec& m = maps_[i];
    if (m.f.depends_on_y())
      throw std::invalid_argument("Ifs: f of map " + std::to_string(i) + " depends on y");
    if (!(m.p > 0.0 && m.p < 1.0))
      throw std::invalid_argument("Ifs: probability of map " + std::to_string(i) +
                                  " is outside (0, 1)");
    total += m.p;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("Ifs: probabilities do not sum to 1");

  derivs_.reserve(maps_.size());
  for (const MapSpec& m : maps_) {
    derivs_.push_back({partial(m.f, Axis::X), partial(m.g, Axis::X), partial(m.g, Axis::Y)});
  }
}

Point apply(const Ifs& ifs, WordView w, const Point& at) {
  Point z = at;
  for (auto it = w.rbegin(); it != w.rend(); ++it) z = ifs.apply_letter(*it, z);
  return z;
}

double weight(const Ifs& ifs, WordView w) {
  double p = 1.0;
  for (Letter i : w) p *= ifs.prob(i);
  return p;
}

JacobianEntries jacobian(const Ifs& ifs, WordView w, const Point& at) {
  JacobianEntries acc;
  Point z = at;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    acc = compose(ifs.jacobian_letter(*it, z), acc);
    z = ifs.apply_letter(*it, z);
  }
  return acc;
}

SingularPair singular_values(const JacobianEntries& j) {
  if (!std::isfinite(j.fx) || !std::isfinite(j.gx) || !std::isfinite(j.gy))
    throw std::invalid_argument("singular_values: non-finite Jacobian entry");
  if (!(j.fx > 0.0 && j.gy > 0.0))
    throw std::invalid_argument("singular_values: diagonal entries must be positive");
  // a1 = (|A + rot| + |A - rot|) / 2 for the 2x2 case; avoids the cancellation
  // in sqrt(S^2 - 4 det^2) when fx ~ gy.
  const double sum = std::hypot(j.fx + j.gy, j.gx);
  const double diff = std::hypot(j.fx - j.gy, j.gx);
  const double a1 = 0.5 * (sum + diff);
  const double a2 = (j.fx * j.gy) / a1;
  return {a1, std::min(a1, a2)};
}

namespace {

// Solves h(t) = target for increasing h on [0, 1]; caller checks the range.
template <class F>
double bisect_increasing(F&& h, double target, double tol) {
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (h(mid) < target) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::optional<Point> invert_map(const Ifs& ifs, Letter i, const Point& at, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("invert_map: tol must be positive");
  const MapSpec& m = ifs.map(i);

  const double f0 = m.f(0.0);
  const double f1 = m.f(1.0);
  if (!(f0 < at.x && at.x < f1)) return std::nullopt;
  const double x = bisect_increasing([&](double t) { return m.f(t); }, at.x, tol);

  const double g0 = m.g(x, 0.0);
  const double g1 = m.g(x, 1.0);
  if (!(g0 < at.y && at.y < g1)) return std::nullopt;
  const double y = bisect_increasing([&](double t) { return m.g(x, t); }, at.y, tol);

  return Point{x, y};
}

std::string to_string(WordView w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << ',';
    os << w[k];
  }
  os << ')';
  return os.str();
}

}  // namespace lqspec
