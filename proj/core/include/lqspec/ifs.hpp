#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lqspec/poly.hpp"

namespace lqspec {

// One map S(x, y) = (f(x), g(x, y)) with its selection probability.
struct MapSpec {
  Poly2 f;
  Poly2 g;
  double p = 0.0;
};

using Letter = std::uint32_t;
using Word = std::vector<Letter>;
using WordView = std::span<const Letter>;

// Entries of a lower-triangular Jacobian [[fx, 0], [gx, gy]].
struct JacobianEntries {
  double fx = 1.0;
  double gx = 0.0;
  double gy = 1.0;
};

struct SingularPair {
  double a1 = 1.0;
  double a2 = 1.0;
};

/// A planar IFS of maps with lower-triangular Jacobians.
///
/// The constructor enforces the model invariants: at least two maps, each
/// f independent of y, every p in (0, 1) and the probabilities summing to 1
/// within 1e-12. Derivative polynomials are computed once here.
class Ifs {
 public:
  explicit Ifs(std::vector<MapSpec> maps, std::string label = {});

  std::size_t size() const { return maps_.size(); }
  const MapSpec& map(std::size_t i) const { return maps_[i]; }
  const std::vector<MapSpec>& maps() const { return maps_; }
  const std::string& label() const { return label_; }
  double prob(std::size_t i) const { return maps_[i].p; }

  const Poly2& fx(std::size_t i) const { return derivs_[i].fx; }
  const Poly2& gx(std::size_t i) const { return derivs_[i].gx; }
  const Poly2& gy(std::size_t i) const { return derivs_[i].gy; }

  Point apply_letter(Letter i, const Point& at) const {
    const MapSpec& m = maps_[i];
    return {m.f(at.x), m.g(at.x, at.y)};
  }

  JacobianEntries jacobian_letter(Letter i, const Point& at) const {
    const Derivs& d = derivs_[i];
    return {d.fx(at.x), d.gx(at.x, at.y), d.gy(at.x, at.y)};
  }

 private:
  struct Derivs {
    Poly2 fx, gx, gy;
  };
  std::vector<MapSpec> maps_;
  std::vector<Derivs> derivs_;
  std::string label_;
};

// S_w(at) = S_{w[0]} o ... o S_{w[k-1]}(at); the empty word is the identity.
Point apply(const Ifs& ifs, WordView w, const Point& at);

// p(w) = product of letter probabilities; 1 for the empty word.
double weight(const Ifs& ifs, WordView w);

// Jacobian of S_w at `at`, accumulated innermost letter first.
JacobianEntries jacobian(const Ifs& ifs, WordView w, const Point& at);

// Left-multiplies `acc` (the Jacobian of an inner composition) by the
// Jacobian of one outer letter evaluated at the current orbit point.
inline JacobianEntries compose(const JacobianEntries& outer, const JacobianEntries& acc) {
  return {outer.fx * acc.fx, outer.gx * acc.fx + outer.gy * acc.gx, outer.gy * acc.gy};
}

// Closed-form singular values of [[fx, 0], [gx, gy]]. Requires fx, gy > 0.
SingularPair singular_values(const JacobianEntries& j);

/// Preimage of `at` under S_i, if `at` lies in S_i((0,1)^2).
///
/// Bisects f_i in x and then g_i(x, .) in y, which relies on both being
/// strictly increasing (guaranteed once the domination check passes).
std::optional<Point> invert_map(const Ifs& ifs, Letter i, const Point& at, double tol);

std::string to_string(WordView w);

}  // namespace lqspec
