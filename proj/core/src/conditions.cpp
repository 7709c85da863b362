#include "lqspec/conditions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lqspec/pressure.hpp"
#include "lqspec/rng.hpp"

namespace lqspec {

ContractionReport check_contraction(const Ifs& ifs, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("check_contraction: tol must be positive");
  ContractionReport rep;
  rep.self_map = true;
  for (std::size_t i = 0; i < ifs.size(); ++i) {
    const Poly2 norm2 = ifs.fx(i) * ifs.fx(i) + ifs.gx(i) * ifs.gx(i) + ifs.gy(i) * ifs.gy(i);
    const Interval n = range_bounds(norm2, Box::unit(), tol);
    const double bound = std::sqrt(std::max(0.0, n.hi));
    rep.lipschitz_bound.push_back(bound);
    rep.c_bound = std::max(rep.c_bound, bound);

    Box image{range_bounds(ifs.map(i).f, Box::unit(), tol),
              range_bounds(ifs.map(i).g, Box::unit(), tol)};
    rep.image_enclosure.push_back(image);
    if (image.x.lo < -tol || image.x.hi > 1.0 + tol || image.y.lo < -tol ||
        image.y.hi > 1.0 + tol)
      rep.self_map = false;
  }
  return rep;
}

namespace {

constexpr int kAlphaGrid = 64;

// Enclosure of the singular values of one letter over the unit square, from
// entrywise enclosures on a grid. The operator norm of a matrix with
// nonnegative entries is monotone in each entry, which bounds a1; a2 is the
// determinant over a1.
void alpha_enclosure(const Ifs& ifs, std::size_t i, double& a2_lo, double& a1_hi) {
  a2_lo = std::numeric_limits<double>::infinity();
  a1_hi = 0.0;
  const double h = 1.0 / kAlphaGrid;
  for (int r = 0; r < kAlphaGrid; ++r) {
    for (int c = 0; c < kAlphaGrid; ++c) {
      const Box b{Interval(r * h, (r + 1) * h), Interval(c * h, (c + 1) * h)};
      const Interval fx = eval_interval(ifs.fx(i), b);
      const Interval gx = eval_interval(ifs.gx(i), b);
      const Interval gy = eval_interval(ifs.gy(i), b);
      if (!(fx.lo > 0.0 && gy.lo > 0.0)) {
        a2_lo = 0.0;
        a1_hi = std::max(a1_hi, std::hypot(std::max(std::abs(fx.lo), std::abs(fx.hi)),
                                           std::max(std::abs(gx.lo), std::abs(gx.hi)),
                                           std::max(std::abs(gy.lo), std::abs(gy.hi))));
        continue;
      }
      const double gx_abs_hi = std::max(std::abs(gx.lo), std::abs(gx.hi));
      const double hi1 = singular_values({fx.hi, gx_abs_hi, gy.hi}).a1;
      a1_hi = std::max(a1_hi, round_up(round_up(hi1)));
      const double lo2 = fx.lo * gy.lo / round_up(round_up(hi1));
      a2_lo = std::min(a2_lo, round_down(round_down(lo2)));
    }
  }
}

bool is_similarity(const Ifs& ifs, std::size_t i) {
  const Poly2& fx = ifs.fx(i);
  const Poly2& gy = ifs.gy(i);
  if (!fx.is_constant() || !gy.is_constant() || !ifs.gx(i).is_zero()) return false;
  const double a = fx.coeff(0, 0);
  return a > 0.0 && std::abs(a - gy.coeff(0, 0)) <= 1e-12 * a;
}

}  // namespace

double lipschitz_constant(const Ifs& ifs) {
  double c = 0.0;
  for (std::size_t i = 0; i < ifs.size(); ++i) {
    double a2_lo = 0.0, a1_hi = 0.0;
    alpha_enclosure(ifs, i, a2_lo, a1_hi);
    c = std::max(c, a1_hi);
  }
  return c;
}

DominationReport check_domination(const Ifs& ifs, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("check_domination: tol must be positive");
  DominationReport rep;
  rep.d = std::numeric_limits<double>::infinity();
  rep.alpha_min = std::numeric_limits<double>::infinity();
  rep.p_min = 1.0;
  rep.similarity = true;
  bool strict = true;

  for (std::size_t i = 0; i < ifs.size(); ++i) {
    const Interval fx = range_bounds(ifs.fx(i), Box::unit(), tol);
    const Interval gy = range_bounds(ifs.gy(i), Box::unit(), tol);
    rep.maps.push_back({fx.lo, fx.hi, gy.lo, gy.hi});
    rep.d = std::min(rep.d, gy.lo);
    if (!(fx.lo > gy.hi)) strict = false;
    rep.eta = std::max(rep.eta, fx.lo > 0.0 ? gy.hi / fx.lo
                                            : std::numeric_limits<double>::infinity());

    double a2_lo = 0.0, a1_hi = 0.0;
    alpha_enclosure(ifs, i, a2_lo, a1_hi);
    rep.alpha_min = std::min(rep.alpha_min, a2_lo);
    rep.alpha_max = std::max(rep.alpha_max, a1_hi);

    rep.p_min = std::min(rep.p_min, ifs.prob(i));
    rep.p_max = std::max(rep.p_max, ifs.prob(i));
    rep.similarity = rep.similarity && is_similarity(ifs, i);
  }
  rep.pass = strict && rep.d > 0.0;
  return rep;
}

namespace {

class RoscSearch {
 public:
  RoscSearch(const Ifs& ifs, int max_depth, double tol)
      : ifs_(ifs), max_depth_(max_depth), tol_(tol) {}

  RoscVerdict run() {
    RoscVerdict verdict;
    for (Letter i = 0; i < ifs_.size() && !witness_; ++i) {
      for (Letter j = i + 1; j < ifs_.size() && !witness_; ++j) {
        explore(i, Box::unit(), j, Box::unit(), 0);
      }
    }
    verdict.pairs_examined = examined_;
    if (witness_) {
      verdict.status = RoscStatus::Violated;
      verdict.witness = witness_;
    } else {
      verdict.status = unresolved_ ? RoscStatus::Inconclusive : RoscStatus::Verified;
    }
    return verdict;
  }

 private:
  Box image(Letter i, const Box& b) const {
    return {eval_interval(ifs_.map(i).f, b), eval_interval(ifs_.map(i).g, b)};
  }

  bool interior(const Point& p) const {
    return p.x > tol_ && p.x < 1.0 - tol_ && p.y > tol_ && p.y < 1.0 - tol_;
  }

  bool certify(Letter i, Letter j, const Point& c) {
    const auto pi = invert_map(ifs_, i, c, tol_);
    if (!pi || !interior(*pi)) return false;
    const auto pj = invert_map(ifs_, j, c, tol_);
    if (!pj || !interior(*pj)) return false;
    witness_ = RoscWitness{i, j, c};
    return true;
  }

  static std::array<Box, 4> quarters(const Box& b) {
    const double mx = b.x.mid();
    const double my = b.y.mid();
    return {Box{Interval(b.x.lo, mx), Interval(b.y.lo, my)},
            Box{Interval(mx, b.x.hi), Interval(b.y.lo, my)},
            Box{Interval(b.x.lo, mx), Interval(my, b.y.hi)},
            Box{Interval(mx, b.x.hi), Interval(my, b.y.hi)}};
  }

  void explore(Letter i, const Box& a, Letter j, const Box& b, int depth) {
    if (witness_) return;
    ++examined_;
    const Box ea = image(i, a);
    const Box eb = image(j, b);
    Interval ix, iy;
    if (!intersect(ea.x, eb.x, ix) || !intersect(ea.y, eb.y, iy)) return;
    if (ix.width() <= tol_ || iy.width() <= tol_) return;  // boundary contact only

    if (certify(i, j, {ix.mid(), iy.mid()})) return;
    if (depth >= max_depth_) {
      unresolved_ = true;
      return;
    }
    if (ea.max_side() >= eb.max_side()) {
      for (const Box& child : quarters(a)) explore(i, child, j, b, depth + 1);
    } else {
      for (const Box& child : quarters(b)) explore(i, a, j, child, depth + 1);
    }
  }

  const Ifs& ifs_;
  int max_depth_;
  double tol_;
  bool unresolved_ = false;
  std::optional<RoscWitness> witness_;
  std::size_t examined_ = 0;
};

}  // namespace

RoscVerdict check_rosc(const Ifs& ifs, int max_depth, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("check_rosc: tol must be positive");
  if (max_depth < 0) throw std::invalid_argument("check_rosc: max_depth must be nonnegative");
  return RoscSearch(ifs, max_depth, tol).run();
}

DistortionReport distortion_diagnostics(const Ifs& ifs, int k_max, int samples,
                                        std::uint64_t seed, double beta0) {
  if (k_max < 2) throw std::invalid_argument("distortion_diagnostics: k_max must be >= 2");
  if (samples < 1) throw std::invalid_argument("distortion_diagnostics: samples must be >= 1");

  DistortionReport rep;
  rep.k_max = k_max;
  rep.samples = samples;

  Rng rng(seed);
  Word w;
  for (int n = 0; n < samples; ++n) {
    const std::size_t len = 1 + rng.index(static_cast<std::size_t>(k_max));
    w.resize(len);
    for (auto& l : w) l = static_cast<Letter>(rng.index(ifs.size()));
    // Corners and centre hold the extremes of the derivative ratios far more
    // often than uniform points do; two random points cover the interior.
    const Point pts[] = {{0.0, 0.0},
                         {1.0, 0.0},
                         {0.0, 1.0},
                         {1.0, 1.0},
                         {0.5, 0.5},
                         {rng.uniform(), rng.uniform()},
                         {rng.uniform(), rng.uniform()}};
    double fx_lo = std::numeric_limits<double>::infinity(), fx_hi = 0.0;
    double gy_lo = fx_lo, gy_hi = 0.0, gx_hi = 0.0;
    for (const Point& p : pts) {
      const JacobianEntries j = jacobian(ifs, w, p);
      fx_lo = std::min(fx_lo, j.fx);
      fx_hi = std::max(fx_hi, j.fx);
      gy_lo = std::min(gy_lo, j.gy);
      gy_hi = std::max(gy_hi, j.gy);
      gx_hi = std::max(gx_hi, std::abs(j.gx));
    }
    rep.R_hat = std::max({rep.R_hat, fx_hi / fx_lo, gy_hi / gy_lo});
    rep.C_hat = std::max(rep.C_hat, gx_hi / fx_lo);
  }

  // Largest level the enumeration budget allows.
  int k_top = 1;
  {
    std::size_t n = ifs.size();
    while (k_top < k_max && n <= kDefaultWordBudget / ifs.size()) {
      n *= ifs.size();
      ++k_top;
    }
  }
  const Point base{0.5, 0.5};
  std::vector<LevelTable> levels;
  for (int k = 1; k <= k_top; ++k) levels.emplace_back(ifs, k, base);

  // s0: one-level root of Psi_1(s, 0) = 1.
  double lo = -64.0, hi = 64.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (levels[0].log_sum(mid, 0.0, beta0) > 0.0) lo = mid; else hi = mid;
  }
  const double s0 = 0.5 * (lo + hi);

  struct Params {
    double s, q, beta;
  };
  rep.K1_hat = std::numeric_limits<double>::infinity();
  rep.K2_hat = 0.0;
  for (const Params& par : {Params{s0, 0.0, beta0}, Params{0.0, 1.0, 0.0}}) {
    std::vector<double> logs;
    for (const LevelTable& t : levels) logs.push_back(t.log_sum(par.s, par.q, par.beta));
    for (int k = 1; k <= k_top; ++k) {
      for (int l = 1; k + l <= k_top; ++l) {
        const double r = std::exp(logs[k + l - 1] - logs[k - 1] - logs[l - 1]);
        rep.K1_hat = std::min(rep.K1_hat, r);
        rep.K2_hat = std::max(rep.K2_hat, r);
      }
    }
  }
  if (rep.K2_hat == 0.0) rep.K1_hat = rep.K2_hat = 1.0;
  return rep;
}

std::string to_string(RoscStatus status) {
  switch (status) {
    case RoscStatus::Verified: return "Verified";
    case RoscStatus::Violated: return "Violated";
    case RoscStatus::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

}  // namespace lqspec
