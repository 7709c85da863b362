#include "lqspec/interval.hpp"

#include <stdexcept>

namespace lqspec {

Interval::Interval(double l, double h) : lo(l), hi(h) {
  if (!(l <= h)) throw std::invalid_argument("Interval: lo must not exceed hi");
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r;
  r.lo = round_down(a.lo + b.lo);
  r.hi = round_up(a.hi + b.hi);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r;
  r.lo = round_down(a.lo - b.hi);
  r.hi = round_up(a.hi - b.lo);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const double p1 = a.lo * b.lo;
  const double p2 = a.lo * b.hi;
  const double p3 = a.hi * b.lo;
  const double p4 = a.hi * b.hi;
  Interval r;
  r.lo = round_down(std::min(std::min(p1, p2), std::min(p3, p4)));
  r.hi = round_up(std::max(std::max(p1, p2), std::max(p3, p4)));
  return r;
}

Interval operator*(double c, const Interval& a) {
  return Interval(c) * a;
}

Interval pow(const Interval& a, unsigned n) {
  if (n == 0) return Interval(1.0);
  if (n == 1) return a;

  auto ipow = [n](double v) {
    double r = 1.0;
    for (unsigned i = 0; i < n; ++i) r *= v;
    return r;
  };
  // Each of the n - 1 products may be off by half an ulp; widen by n ulps.
  auto down = [n](double v) {
    for (unsigned i = 0; i < n; ++i) v = round_down(v);
    return v;
  };
  auto up = [n](double v) {
    for (unsigned i = 0; i < n; ++i) v = round_up(v);
    return v;
  };

  const double l = ipow(a.lo);
  const double h = ipow(a.hi);
  Interval r;
  if (n % 2 == 1 || a.lo >= 0.0) {
    // monotone on the interval (odd power, or even power on the nonnegative side)
    r.lo = down(std::min(l, h));
    r.hi = up(std::max(l, h));
  } else if (a.hi <= 0.0) {
    r.lo = down(h);
    r.hi = up(l);
  } else {
    r.lo = 0.0;
    r.hi = up(std::max(l, h));
  }
  return r;
}

Interval hull(const Interval& a, const Interval& b) {
  Interval r;
  r.lo = std::min(a.lo, b.lo);
  r.hi = std::max(a.hi, b.hi);
  return r;
}

bool intersect(const Interval& a, const Interval& b, Interval& out) {
  const double l = std::max(a.lo, b.lo);
  const double h = std::min(a.hi, b.hi);
  if (l > h) return false;
  out.lo = l;
  out.hi = h;
  return true;
}

}  // namespace lqspec
