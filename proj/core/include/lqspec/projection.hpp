#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lqspec/cloud.hpp"
#include "lqspec/ifs.hpp"

namespace lqspec {

// The x-coordinate maps of an IFS together with its weights.
struct Projected1D {
  std::vector<Poly2> fs;
  std::vector<double> probs;
};

struct BetaPoint {
  double q = 0.0;
  double beta = 0.0;
  double fit_r2 = 1.0;
  double delta_max = 0.0;  // coarsest scale used in the fit
  double delta_min = 0.0;  // finest scale used in the fit
};

struct Atom1D {
  double x = 0.0;
  double mass = 0.0;
};

inline constexpr std::size_t kDefaultAtomBudget = std::size_t{1} << 25;

Projected1D project(const Ifs& ifs);

// One atom per word at the first level where |f_w'(z0)| < delta; the atom
// sits at f_w(z0) and carries p(w).
std::vector<Atom1D> projected_atoms(const Projected1D& proj, double delta, double z0,
                                    std::size_t budget = kDefaultAtomBudget);

// Merged push-forward of delta_{z0} under the projected maps, atoms merged
// per cell of side delta / refine.
std::vector<Atom1D> merged_projected_atoms(const Projected1D& proj, double delta, double z0,
                                           int refine = 16,
                                           std::size_t budget = kDefaultAtomBudget);

// Sum over occupied grid cells [j delta, (j+1) delta) of mass^q, for each q.
std::vector<double> interval_moments(std::span<const Atom1D> atoms, double delta,
                                     std::span<const double> qs);

/// Empirical L^q spectrum of the projected measure: least-squares slope of
/// log(moment) against -log(delta) over the ladder.
BetaPoint beta_empirical(const Projected1D& proj, double q, std::span<const double> deltas,
                         double z0 = 0.5, const CloudOptions& opts = {});

// Same estimator for several q, sharing the atoms at each scale.
std::vector<BetaPoint> beta_empirical_curve(const Projected1D& proj, std::span<const double> qs,
                                            std::span<const double> deltas, double z0 = 0.5,
                                            const CloudOptions& opts = {});

/// Exact spectrum for affine, column-separated projections.
///
/// Identical maps are merged (weights added). Returns the root of
/// sum_j pi_j^q a_j^beta = 1, or nothing when some map is not affine or two
/// distinct images overlap.
std::optional<double> beta_closed_form(const Projected1D& proj, double q);

}  // namespace lqspec
