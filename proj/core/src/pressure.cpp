#include "lqspec/pressure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace lqspec {

double psi(const Ifs& ifs, WordView w, double s, double q, double beta, const Point& a) {
  if (w.empty()) throw std::invalid_argument("psi: word must be nonempty");
  const SingularPair sv = singular_values(jacobian(ifs, w, a));
  return std::pow(weight(ifs, w), q) * std::pow(sv.a1, beta) * std::pow(sv.a2, s - beta);
}

namespace {

std::size_t level_count(std::size_t letters, int k, std::size_t budget) {
  std::size_t n = 1;
  for (int i = 0; i < k; ++i) {
    if (n > budget / letters)
      throw BudgetExceeded("word enumeration of length " + std::to_string(k) +
                               " exceeds the budget of " + std::to_string(budget) + " words",
                           budget);
    n *= letters;
  }
  return n;
}

struct Frame {
  Point at;
  JacobianEntries jac;
  double log_p;
};

}  // namespace

LevelTable::LevelTable(const Ifs& ifs, int k, const Point& a, std::size_t budget) : k_(k) {
  if (k < 1) throw std::invalid_argument("LevelTable: k must be at least 1");
  const std::size_t n = level_count(ifs.size(), k, budget);
  log_p_.reserve(n);
  log_a1_.reserve(n);
  log_a2_.reserve(n);

  std::vector<double> log_probs;
  for (const MapSpec& m : ifs.maps()) log_probs.push_back(std::log(m.p));

  // Iterative DFS; frames[d] describes the current word of length d.
  std::vector<Frame> frames(static_cast<std::size_t>(k) + 1);
  std::vector<Letter> next(static_cast<std::size_t>(k) + 1, 0);
  frames[0] = {a, JacobianEntries{}, 0.0};
  int depth = 0;
  while (depth >= 0) {
    const auto d = static_cast<std::size_t>(depth);
    if (next[d] == ifs.size()) {
      next[d] = 0;
      --depth;
      continue;
    }
    const Letter j = next[d]++;
    const Frame& cur = frames[d];
    Frame child{ifs.apply_letter(j, cur.at), compose(ifs.jacobian_letter(j, cur.at), cur.jac),
                cur.log_p + log_probs[j]};
    if (depth + 1 == k) {
      const SingularPair sv = singular_values(child.jac);
      log_p_.push_back(child.log_p);
      log_a1_.push_back(std::log(sv.a1));
      log_a2_.push_back(std::log(sv.a2));
    } else {
      frames[d + 1] = child;
      ++depth;
    }
  }
}

double LevelTable::log_sum(double s, double q, double beta) const {
  const double e2 = s - beta;
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < log_p_.size(); ++i)
    top = std::max(top, q * log_p_[i] + beta * log_a1_[i] + e2 * log_a2_[i]);
  double sum = 0.0;
  for (std::size_t i = 0; i < log_p_.size(); ++i)
    sum += std::exp(q * log_p_[i] + beta * log_a1_[i] + e2 * log_a2_[i] - top);
  return top + std::log(sum);
}

double big_psi(const Ifs& ifs, int k, double s, double q, double beta, const Point& a,
               std::size_t budget) {
  return std::exp(LevelTable(ifs, k, a, budget).log_sum(s, q, beta));
}

PressureModel::PressureModel(const Ifs& ifs, int k_max, const Point& a, std::size_t budget)
    : k_max_(k_max), base_(a) {
  if (k_max < 3) throw std::invalid_argument("PressureModel: k_max must be at least 3");
  for (int k = k_max - 2; k <= k_max; ++k) levels_.emplace_back(ifs, k, a, budget);
}

double PressureModel::log_ratio(double s, double q, double beta) const {
  return levels_[2].log_sum(s, q, beta) - levels_[1].log_sum(s, q, beta);
}

PressureEstimate PressureModel::estimate(double s, double q, double beta) const {
  double logs[3];
  for (int i = 0; i < 3; ++i) logs[i] = levels_[i].log_sum(s, q, beta);
  PressureEstimate est;
  est.value = std::exp(logs[2] - logs[1]);
  est.lower = est.value;
  est.upper = est.value;
  for (int i = 0; i < 3; ++i) {
    const double root = std::exp(logs[i] / levels_[i].length());
    est.lower = std::min(est.lower, root);
    est.upper = std::max(est.upper, root);
  }
  est.k_used = k_max_;
  est.base_point = base_;
  return est;
}

PressureEstimate pressure(const Ifs& ifs, double s, double q, double beta, int k_max,
                          const Point& a, std::size_t budget) {
  return PressureModel(ifs, k_max, a, budget).estimate(s, q, beta);
}

GammaPoint gamma(const PressureModel& model, double q, double beta, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("gamma: tol must be positive");
  if (!(q >= 0.0)) throw std::invalid_argument("gamma: q must be nonnegative");
  constexpr double kLimit = 64.0;

  // log P is decreasing in s; the root is where it crosses zero.
  auto f = [&](double s) { return model.log_ratio(s, q, beta); };

  double lo = -5.0;
  double hi = 5.0;
  while (f(lo) < 0.0) {
    lo *= 2.0;
    if (lo < -kLimit) throw SolverError("gamma: bracket expansion passed -64");
  }
  while (f(hi) > 0.0) {
    hi *= 2.0;
    if (hi > kLimit) throw SolverError("gamma: bracket expansion passed +64");
  }

  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 400; ++it) {
    mid = 0.5 * (lo + hi);
    const double v = f(mid);
    if (hi - lo < tol && std::abs(std::expm1(v)) <= tol) break;
    if (mid <= lo || mid >= hi) break;
    if (v > 0.0) lo = mid; else hi = mid;
  }

  GammaPoint out;
  out.q = q;
  out.gamma = mid;
  out.residual = std::abs(std::expm1(f(mid)));
  out.beta_used = beta;
  if (!(out.residual <= tol))
    throw SolverError("gamma: residual " + std::to_string(out.residual) + " exceeds tolerance");
  return out;
}

GammaPoint gamma(const Ifs& ifs, double q, double beta, double tol, int k_max, const Point& a,
                 std::size_t budget) {
  return gamma(PressureModel(ifs, k_max, a, budget), q, beta, tol);
}

GammaCurve gamma_curve(const Ifs& ifs, std::span<const double> q_grid, double tol, int k_max,
                       BetaSource source, const BetaOptions& beta_opts, const Point& a,
                       std::size_t budget) {
  if (q_grid.empty()) throw std::invalid_argument("gamma_curve: empty q grid");
  for (double q : q_grid)
    if (!(q >= 0.0)) throw std::invalid_argument("gamma_curve: q must be nonnegative");

  GammaCurve curve;
  curve.beta_source = source;

  const Projected1D proj = project(ifs);
  std::vector<double> betas;
  if (source == BetaSource::Empirical) {
    for (const BetaPoint& b :
         beta_empirical_curve(proj, q_grid, beta_opts.deltas, beta_opts.z0, beta_opts.cloud)) {
      betas.push_back(b.beta);
      curve.beta_fit_r2.push_back(b.fit_r2);
    }
  } else {
    for (double q : q_grid) {
      const auto b = beta_closed_form(proj, q);
      if (!b) throw SolverError("gamma_curve: closed-form beta does not apply to this system");
      betas.push_back(*b);
    }
  }

  const PressureModel model(ifs, k_max, a, budget);
  for (std::size_t i = 0; i < q_grid.size(); ++i)
    curve.points.push_back(gamma(model, q_grid[i], betas[i], tol));

  const auto& pts = curve.points;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].q > pts[i - 1].q && !(pts[i].gamma < pts[i - 1].gamma))
      curve.strictly_decreasing = false;
  for (std::size_t i = 2; i < pts.size(); ++i) {
    const double h0 = pts[i - 1].q - pts[i - 2].q;
    const double h1 = pts[i].q - pts[i - 1].q;
    if (!(h0 > 0.0 && h1 > 0.0)) continue;
    const double second = ((pts[i].gamma - pts[i - 1].gamma) / h1 -
                           (pts[i - 1].gamma - pts[i - 2].gamma) / h0) *
                          0.5 * (h0 + h1);
    if (i == 2 || second < curve.min_second_difference) curve.min_second_difference = second;
  }
  return curve;
}

}  // namespace lqspec
