#include "lqspec/poly.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace lqspec {

namespace {

double ipow(double v, unsigned n) {
  double r = 1.0;
  for (unsigned i = 0; i < n; ++i) r *= v;
  return r;
}

std::vector<Term> normalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return a.deg_x != b.deg_x ? a.deg_x < b.deg_x : a.deg_y < b.deg_y;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    if (!std::isfinite(t.coeff))
      throw std::invalid_argument("Poly2: non-finite coefficient");
    if (!out.empty() && out.back().deg_x == t.deg_x && out.back().deg_y == t.deg_y) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coeff == 0.0; });
  return out;
}

}  // namespace

Poly2::Poly2(std::vector<Term> terms) : terms_(normalize(std::move(terms))) {}

Poly2 Poly2::constant(double c) { return Poly2({Term{0, 0, c}}); }

Poly2 Poly2::monomial(unsigned deg_x, unsigned deg_y, double coeff) {
  return Poly2({Term{deg_x, deg_y, coeff}});
}

bool Poly2::depends_on_x() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.deg_x > 0; });
}

bool Poly2::depends_on_y() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.deg_y > 0; });
}

unsigned Poly2::degree_x() const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.deg_x);
  return d;
}

unsigned Poly2::degree_y() const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.deg_y);
  return d;
}

double Poly2::coeff(unsigned deg_x, unsigned deg_y) const {
  for (const Term& t : terms_)
    if (t.deg_x == deg_x && t.deg_y == deg_y) return t.coeff;
  return 0.0;
}

double Poly2::operator()(double x, double y) const {
  double s = 0.0;
  for (const Term& t : terms_) s += t.coeff * ipow(x, t.deg_x) * ipow(y, t.deg_y);
  return s;
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
  std::vector<Term> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return Poly2(std::move(terms));
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  std::vector<Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_)
      terms.push_back({s.deg_x + t.deg_x, s.deg_y + t.deg_y, s.coeff * t.coeff});
  return Poly2(std::move(terms));
}

Poly2 operator*(double c, const Poly2& a) {
  std::vector<Term> terms = a.terms_;
  for (Term& t : terms) t.coeff *= c;
  return Poly2(std::move(terms));
}

double eval(const Poly2& p, const Point& at) { return p(at); }

Poly2 partial(const Poly2& p, Axis axis) {
  std::vector<Term> out;
  for (const Term& t : p.terms()) {
    const unsigned d = axis == Axis::X ? t.deg_x : t.deg_y;
    if (d == 0) continue;
    Term r = t;
    r.coeff = t.coeff * static_cast<double>(d);
    (axis == Axis::X ? r.deg_x : r.deg_y) = d - 1;
    out.push_back(r);
  }
  return Poly2(std::move(out));
}

Interval eval_interval(const Poly2& p, const Box& box) {
  const auto& terms = p.terms();
  if (terms.empty()) return Interval(0.0);

  bool first = true;
  Interval sum;
  for (const Term& t : terms) {
    Interval term;
    if (t.deg_x == 0 && t.deg_y == 0) {
      term = Interval(t.coeff);
    } else if (t.deg_y == 0) {
      term = t.coeff * pow(box.x, t.deg_x);
    } else if (t.deg_x == 0) {
      term = t.coeff * pow(box.y, t.deg_y);
    } else {
      term = t.coeff * (pow(box.x, t.deg_x) * pow(box.y, t.deg_y));
    }
    sum = first ? term : sum + term;
    first = false;
  }
  return sum;
}

namespace {

struct Node {
  Box box;
  double bound;  // certified lower bound of p over box
};

struct ByBound {
  bool operator()(const Node& a, const Node& b) const { return a.bound > b.bound; }
};

// Lower endpoint search. `used` counts split boxes across both endpoints.
double lower_bound_search(const Poly2& p, const Box& box, double tol,
                          std::size_t budget, std::size_t& used, Interval& partial_out,
                          bool& exhausted) {
  const bool dx = p.depends_on_x();
  const bool dy = p.depends_on_y();
  const Poly2 px = partial(p, Axis::X);
  const Poly2 py = partial(p, Axis::Y);

  // Natural extension intersected with the mean-value form; the latter
  // overestimates quadratically in the box width, so extrema inside the
  // box do not force exponential subdivision.
  auto lower = [&](const Box& b) {
    const Interval c = eval_interval(p, Box{Interval(b.x.mid()), Interval(b.y.mid())});
    Interval mv = c;
    if (dx) mv = mv + eval_interval(px, b) * (b.x - Interval(b.x.mid()));
    if (dy) mv = mv + eval_interval(py, b) * (b.y - Interval(b.y.mid()));
    return std::max(eval_interval(p, b).lo, mv.lo);
  };

  auto sample = [&](const Box& b) {
    double v = p(b.x.mid(), b.y.mid());
    v = std::min(v, p(b.x.lo, b.y.lo));
    v = std::min(v, p(b.x.hi, b.y.hi));
    v = std::min(v, p(b.x.lo, b.y.hi));
    v = std::min(v, p(b.x.hi, b.y.lo));
    return v;
  };

  std::priority_queue<Node, std::vector<Node>, ByBound> queue;
  double best = sample(box);
  queue.push({box, lower(box)});

  while (true) {
    const Node top = queue.top();
    if (best - top.bound <= tol) return std::min(top.bound, best);
    if (used >= budget) {
      partial_out.lo = std::min(top.bound, best);
      exhausted = true;
      return partial_out.lo;
    }
    queue.pop();
    ++used;

    // Bisect the widest side among the variables p depends on.
    bool split_x = dx && (!dy || top.box.x.width() >= top.box.y.width());
    Box left = top.box;
    Box right = top.box;
    if (split_x) {
      const double m = top.box.x.mid();
      left.x.hi = m;
      right.x.lo = m;
    } else {
      const double m = top.box.y.mid();
      left.y.hi = m;
      right.y.lo = m;
    }
    for (const Box& child : {left, right}) {
      const double b = std::max(lower(child), top.bound);
      best = std::min(best, sample(child));
      queue.push({child, b});
    }
  }
}

}  // namespace

Interval range_bounds(const Poly2& p, const Box& box, double tol, std::size_t budget) {
  if (!(tol > 0.0)) throw std::invalid_argument("range_bounds: tol must be positive");

  std::size_t used = 0;
  Interval best = eval_interval(p, box);
  bool exhausted = false;

  const double lo = lower_bound_search(p, box, tol, budget, used, best, exhausted);
  if (exhausted) {
    throw RangeBudgetExceeded("range_bounds: subdivision budget exhausted on lower endpoint",
                              budget, best);
  }
  best.lo = lo;

  const Poly2 neg = -1.0 * p;
  Interval neg_best(-best.hi, -best.lo);
  const double neg_lo = lower_bound_search(neg, box, tol, budget, used, neg_best, exhausted);
  if (exhausted) {
    best.hi = -neg_best.lo;
    throw RangeBudgetExceeded("range_bounds: subdivision budget exhausted on upper endpoint",
                              budget, best);
  }
  best.hi = -neg_lo;
  return best;
}

std::string to_string(const Poly2& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const Term& t : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << t.coeff;
    if (t.deg_x > 0) os << "*x^" << t.deg_x;
    if (t.deg_y > 0) os << "*y^" << t.deg_y;
  }
  return os.str();
}

}  // namespace lqspec
