#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace lqspec {

// Closed interval [lo, hi]. Arithmetic rounds endpoints outward by one ulp
// so that enclosures stay rigorous under floating-point evaluation.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  constexpr Interval() = default;
  constexpr explicit Interval(double v) : lo(v), hi(v) {}
  Interval(double l, double h);

  double width() const { return hi - lo; }
  double mid() const { return lo + 0.5 * (hi - lo); }
  bool contains(double v) const { return lo <= v && v <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool is_point() const { return lo == hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

inline double round_down(double v) {
  return std::nextafter(v, -std::numeric_limits<double>::infinity());
}
inline double round_up(double v) {
  return std::nextafter(v, std::numeric_limits<double>::infinity());
}

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(double c, const Interval& a);

// Tight enclosure of {v^n : v in a}.
Interval pow(const Interval& a, unsigned n);

Interval hull(const Interval& a, const Interval& b);

// Empty intersection is reported through the bool.
bool intersect(const Interval& a, const Interval& b, Interval& out);

// Axis-aligned box inside the unit square.
struct Box {
  Interval x{0.0, 1.0};
  Interval y{0.0, 1.0};

  static Box unit() { return Box{}; }

  double max_side() const { return std::max(x.width(), y.width()); }
  double area() const { return x.width() * y.width(); }

  friend bool operator==(const Box&, const Box&) = default;
};

}  // namespace lqspec
