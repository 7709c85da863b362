#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lqspec/ifs.hpp"

namespace lqspec {

struct ContractionReport {
  std::vector<double> lipschitz_bound;  // certified sup of the Frobenius norm, per map
  std::vector<Box> image_enclosure;     // enclosure of S_i([0,1]^2), per map
  bool self_map = false;
  double c_bound = 0.0;                 // max of lipschitz_bound

  bool pass() const { return self_map && c_bound < 1.0; }
};

// Sup of sqrt(fx^2 + gx^2 + gy^2) per map, plus image containment in the
// unit square up to tol.
ContractionReport check_contraction(const Ifs& ifs, double tol);

struct MapBounds {
  double inf_fx = 0.0;
  double sup_fx = 0.0;
  double inf_gy = 0.0;
  double sup_gy = 0.0;
};

struct DominationReport {
  std::vector<MapBounds> maps;
  double d = 0.0;
  double eta = 0.0;
  double alpha_min = 0.0;
  double alpha_max = 0.0;
  double p_min = 0.0;
  double p_max = 0.0;
  bool pass = false;
  // Every map is a similarity (constant Jacobian fx == gy, gx == 0). Such
  // systems sit exactly on the boundary of domination but the singular value
  // function degenerates to p^q r^s, so the spectrum pipeline still applies.
  bool similarity = false;

  bool admissible() const { return pass || similarity; }
};

/// Certified derivative bounds and the domination verdict.
///
/// pass holds iff every map has inf fx > sup gy and inf gy >= d > 0, with
/// d the smallest inf gy. eta = max sup gy / inf fx. alpha_min and
/// alpha_max enclose the single-letter singular values over [0,1]^2.
DominationReport check_domination(const Ifs& ifs, double tol);

// Certified upper bound on the operator norm of every DS_i over [0,1]^2.
double lipschitz_constant(const Ifs& ifs);

enum class RoscStatus { Verified, Violated, Inconclusive };

struct RoscWitness {
  Letter i = 0;
  Letter j = 0;
  Point point;
};

struct RoscVerdict {
  RoscStatus status = RoscStatus::Inconclusive;
  std::optional<RoscWitness> witness;  // present iff Violated
  std::size_t pairs_examined = 0;
};

/// Rectangular open set condition by image-box refinement.
///
/// For each pair of maps the domain boxes are refined (up to max_depth
/// splits along a branch) until their image enclosures are disjoint or meet
/// in a sliver thinner than tol. A point certified to lie in both open
/// images through invert_map makes the verdict Violated.
RoscVerdict check_rosc(const Ifs& ifs, int max_depth, double tol);

struct DistortionReport {
  double R_hat = 1.0;
  double C_hat = 0.0;
  double K1_hat = 1.0;
  double K2_hat = 1.0;
  int k_max = 0;
  int samples = 0;
};

/// Empirical distortion constants over random words and point pairs.
///
/// Each sampled word is evaluated at the corners, the centre and two random
/// points. R_hat is the largest fx(w,a)/fx(w,b) or gy(w,a)/gy(w,b), C_hat
/// the largest |gx(w,a)|/fx(w,b). K1_hat and K2_hat bound
/// Psi_{k+l} / (Psi_k Psi_l) over k + l <= k_max at (s, q) = (s0, 0) with
/// beta = beta0 and at (0, 1) with beta = 0, where s0 solves the one-level
/// equation Psi_1(s0, 0) = 1. Deterministic given seed.
DistortionReport distortion_diagnostics(const Ifs& ifs, int k_max, int samples,
                                        std::uint64_t seed, double beta0 = 1.0);

std::string to_string(RoscStatus status);

}  // namespace lqspec
