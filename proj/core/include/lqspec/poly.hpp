#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lqspec/error.hpp"
#include "lqspec/interval.hpp"

namespace lqspec {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Term {
  unsigned deg_x = 0;
  unsigned deg_y = 0;
  double coeff = 0.0;

  friend bool operator==(const Term&, const Term&) = default;
};

enum class Axis { X, Y };

/// Bivariate polynomial stored as a sparse term list.
///
/// Terms are kept sorted by (deg_x, deg_y) with duplicates merged and zero
/// coefficients dropped, so two polynomials with the same value as formal
/// expressions compare equal.
class Poly2 {
 public:
  Poly2() = default;
  explicit Poly2(std::vector<Term> terms);

  static Poly2 constant(double c);
  static Poly2 monomial(unsigned deg_x, unsigned deg_y, double coeff);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool depends_on_x() const;
  bool depends_on_y() const;
  bool is_constant() const { return !depends_on_x() && !depends_on_y(); }
  unsigned degree_x() const;
  unsigned degree_y() const;

  // Coefficient of x^deg_x y^deg_y (zero if absent).
  double coeff(unsigned deg_x, unsigned deg_y) const;

  double operator()(double x, double y = 0.0) const;
  double operator()(const Point& p) const { return (*this)(p.x, p.y); }

  friend Poly2 operator+(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(double c, const Poly2& a);
  friend bool operator==(const Poly2&, const Poly2&) = default;

 private:
  std::vector<Term> terms_;
};

double eval(const Poly2& p, const Point& at);

// Formal partial derivative.
Poly2 partial(const Poly2& p, Axis axis);

// Natural interval extension over a box (rigorous but possibly loose).
Interval eval_interval(const Poly2& p, const Box& box);

/// Thrown when range_bounds runs out of subdivision budget. Carries the
/// rigorous (but not yet tol-tight) enclosure reached so far.
class RangeBudgetExceeded : public BudgetExceeded {
 public:
  RangeBudgetExceeded(const std::string& what, std::size_t limit, Interval best)
      : BudgetExceeded(what, limit), best_(best) {}

  Interval best() const { return best_; }

 private:
  Interval best_;
};

inline constexpr std::size_t kDefaultRangeBudget = std::size_t{1} << 20;

/// Rigorous enclosure of p(box) whose endpoints are within tol of the true
/// infimum and supremum.
///
/// Runs a best-first branch and bound separately for the lower and upper
/// endpoint. Each endpoint search stops once the best certified bound and
/// the best sampled value are within tol. Boxes are bisected only along
/// the variables p actually depends on.
Interval range_bounds(const Poly2& p, const Box& box, double tol,
                      std::size_t budget = kDefaultRangeBudget);

std::string to_string(const Poly2& p);

}  // namespace lqspec
