#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lqspec/ifs.hpp"
#include "lqspec/projection.hpp"

namespace lqspec {

inline constexpr std::size_t kDefaultWordBudget = 5'000'000;

struct PressureEstimate {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  int k_used = 0;
  Point base_point;
};

struct GammaPoint {
  double q = 0.0;
  double gamma = 0.0;
  double residual = 0.0;  // |P(gamma, q) - 1| at k_used
  double beta_used = 0.0;
};

enum class BetaSource { Empirical, ClosedForm };

// q-modified singular value function p(w)^q a1^beta a2^(s - beta) at `a`.
double psi(const Ifs& ifs, WordView w, double s, double q, double beta, const Point& a);

/// Logarithmic data of every word of one length at a fixed base point.
///
/// Built by walking the word tree outward (each child prepends an outer
/// letter), so a node costs one Jacobian product. After construction the
/// level sum for any (s, q, beta) is a single pass over three arrays.
class LevelTable {
 public:
  LevelTable(const Ifs& ifs, int k, const Point& a, std::size_t budget = kDefaultWordBudget);

  int length() const { return k_; }
  std::size_t size() const { return log_p_.size(); }

  // log of Psi_k(s, q); stable for any sign of the exponents.
  double log_sum(double s, double q, double beta) const;

 private:
  int k_;
  std::vector<double> log_p_;
  std::vector<double> log_a1_;
  std::vector<double> log_a2_;
};

// Psi_k(s, q) at base point a, by exhaustive enumeration of I^k.
double big_psi(const Ifs& ifs, int k, double s, double q, double beta, const Point& a,
               std::size_t budget = kDefaultWordBudget);

/// Pressure estimates at a base point, reusing the three deepest levels.
///
/// value = Psi_k / Psi_{k-1} with k = k_max; lower and upper bracket value
/// and Psi_j^(1/j) for j in {k-2, k-1, k}. The spread is a convergence
/// diagnostic, not a certified bound.
class PressureModel {
 public:
  PressureModel(const Ifs& ifs, int k_max, const Point& a,
                std::size_t budget = kDefaultWordBudget);

  PressureEstimate estimate(double s, double q, double beta) const;

  // log of the ratio estimate; the quantity the gamma solver drives to 0.
  double log_ratio(double s, double q, double beta) const;

  int k_max() const { return k_max_; }
  const Point& base_point() const { return base_; }

 private:
  int k_max_;
  Point base_;
  std::vector<LevelTable> levels_;  // lengths k_max - 2, k_max - 1, k_max
};

PressureEstimate pressure(const Ifs& ifs, double s, double q, double beta, int k_max,
                          const Point& a, std::size_t budget = kDefaultWordBudget);

/// Root of P(s, q) = 1 by bisection.
///
/// The bracket starts at [-5, 5] and doubles until it straddles the root;
/// beyond +-64 a SolverError is thrown. Bisection runs until the bracket is
/// narrower than tol and the residual is at most tol.
GammaPoint gamma(const PressureModel& model, double q, double beta, double tol);

GammaPoint gamma(const Ifs& ifs, double q, double beta, double tol, int k_max,
                 const Point& a = {0.5, 0.5}, std::size_t budget = kDefaultWordBudget);

struct BetaOptions {
  std::vector<double> deltas;  // ladder for the empirical estimator
  double z0 = 0.5;
  CloudOptions cloud;
};

struct GammaCurve {
  std::vector<GammaPoint> points;
  BetaSource beta_source = BetaSource::Empirical;
  std::vector<double> beta_fit_r2;  // empirical source only
  bool strictly_decreasing = true;
  // Smallest second divided difference over consecutive triples (0 if < 3 points).
  double min_second_difference = 0.0;
};

/// gamma over a grid of q, resolving beta(q) first for each q.
///
/// ClosedForm requires beta_closed_form to apply and throws SolverError
/// otherwise.
GammaCurve gamma_curve(const Ifs& ifs, std::span<const double> q_grid, double tol, int k_max,
                       BetaSource source, const BetaOptions& beta_opts,
                       const Point& a = {0.5, 0.5}, std::size_t budget = kDefaultWordBudget);

}  // namespace lqspec
