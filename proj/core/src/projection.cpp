#include "lqspec/projection.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "cell_merge.hpp"
#include "lqspec/error.hpp"
#include "lqspec/regression.hpp"

namespace lqspec {

Projected1D project(const Ifs& ifs) {
  Projected1D proj;
  for (const MapSpec& m : ifs.maps()) {
    proj.fs.push_back(m.f);
    proj.probs.push_back(m.p);
  }
  return proj;
}

namespace {

class AtomBuilder {
 public:
  AtomBuilder(const Projected1D& proj, double delta, double z0, std::size_t budget)
      : proj_(proj), delta_(delta), z0_(z0), budget_(budget) {
    for (const Poly2& f : proj.fs) derivs_.push_back(partial(f, Axis::X));
  }

  std::vector<Atom1D> run() {
    word_.clear();
    descend(1.0);
    return std::move(atoms_);
  }

 private:
  // Returns (f_w(z0), f_w'(z0)) for the current word.
  std::pair<double, double> evaluate() const {
    double z = z0_;
    double d = 1.0;
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
      d *= derivs_[*it](z);
      z = proj_.fs[*it](z);
    }
    return {z, d};
  }

  void descend(double mass) {
    for (std::size_t i = 0; i < proj_.fs.size(); ++i) {
      word_.push_back(static_cast<Letter>(i));
      const double m = mass * proj_.probs[i];
      const auto [z, d] = evaluate();
      if (std::abs(d) < delta_) {
        if (atoms_.size() >= budget_)
          throw BudgetExceeded("projected_atoms: atom budget exceeded at delta " +
                                   std::to_string(delta_),
                               budget_);
        atoms_.push_back({z, m});
      } else {
        descend(m);
      }
      word_.pop_back();
    }
  }

  const Projected1D& proj_;
  std::vector<Poly2> derivs_;
  double delta_;
  double z0_;
  std::size_t budget_;
  Word word_;
  std::vector<Atom1D> atoms_;
};

}  // namespace

std::vector<Atom1D> projected_atoms(const Projected1D& proj, double delta, double z0,
                                    std::size_t budget) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("projected_atoms: delta must lie in (0, 1)");
  return AtomBuilder(proj, delta, z0, budget).run();
}

std::vector<Atom1D> merged_projected_atoms(const Projected1D& proj, double delta, double z0,
                                           int refine, std::size_t budget) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("merged_projected_atoms: delta must lie in (0, 1)");
  if (refine < 1) throw std::invalid_argument("merged_projected_atoms: refine must be positive");
  const double h = delta / refine;
  double c = 0.0;
  for (const Poly2& f : proj.fs) {
    const Interval d = range_bounds(partial(f, Axis::X), Box::unit(), 1e-9);
    c = std::max({c, std::abs(d.lo), std::abs(d.hi)});
  }
  if (!(c < 1.0)) throw SolverError("merged_projected_atoms: maps are not contractions");
  const int depth = static_cast<int>(std::ceil(std::log(h) / std::log(c)));

  std::vector<Atom1D> atoms{{z0, 1.0}};
  std::vector<Atom1D> acc;  // x holds the mass-weighted sum until normalised
  for (int level = 0; level < depth; ++level) {
    detail::CellIndex index(atoms.size() * proj.fs.size());
    acc.clear();
    for (const Atom1D& a : atoms) {
      for (std::size_t i = 0; i < proj.fs.size(); ++i) {
        const double z = proj.fs[i](a.x);
        const double m = a.mass * proj.probs[i];
        bool inserted = false;
        const std::uint32_t slot = index.find_or_insert(
            static_cast<std::uint64_t>(static_cast<std::int64_t>(std::floor(z / h))), inserted);
        if (inserted) {
          if (acc.size() >= budget)
            throw BudgetExceeded("merged_projected_atoms: atom budget exceeded at delta " +
                                     std::to_string(delta),
                                 budget);
          acc.push_back({0.0, 0.0});
        }
        acc[slot].x += m * z;
        acc[slot].mass += m;
      }
    }
    atoms.clear();
    for (const Atom1D& e : acc) atoms.push_back({e.x / e.mass, e.mass});
  }
  return atoms;
}

std::vector<double> interval_moments(std::span<const Atom1D> atoms, double delta,
                                     std::span<const double> qs) {
  std::vector<std::pair<std::int64_t, double>> cells;
  cells.reserve(atoms.size());
  for (const Atom1D& a : atoms)
    cells.emplace_back(static_cast<std::int64_t>(std::floor(a.x / delta)), a.mass);
  std::stable_sort(cells.begin(), cells.end(),
                   [](const auto& l, const auto& r) { return l.first < r.first; });

  std::vector<double> masses;
  for (std::size_t i = 0; i < cells.size();) {
    double m = 0.0;
    std::size_t j = i;
    for (; j < cells.size() && cells[j].first == cells[i].first; ++j) m += cells[j].second;
    masses.push_back(m);
    i = j;
  }

  std::vector<double> out;
  for (double q : qs) {
    double s = 0.0;
    for (double m : masses) s += q == 0.0 ? 1.0 : std::pow(m, q);
    out.push_back(s);
  }
  return out;
}

std::vector<BetaPoint> beta_empirical_curve(const Projected1D& proj, std::span<const double> qs,
                                            std::span<const double> deltas, double z0,
                                            const CloudOptions& opts) {
  for (double q : qs)
    if (!(q >= 0.0)) throw std::invalid_argument("beta_empirical: q must be nonnegative");
  for (double d : deltas)
    if (!(d < 1.0)) throw std::invalid_argument("beta_empirical: empty stopping for delta >= 1");
  check_delta_ladder(deltas, 2);

  std::vector<double> xs;
  std::vector<std::vector<double>> logs(qs.size());
  for (double delta : deltas) {
    const auto atoms = opts.method == CloudMethod::Stopping
                           ? projected_atoms(proj, delta, z0, opts.budget)
                           : merged_projected_atoms(proj, delta, z0, opts.refine, opts.budget);
    const auto moments = interval_moments(atoms, delta, qs);
    xs.push_back(-std::log(delta));
    for (std::size_t k = 0; k < qs.size(); ++k) logs[k].push_back(std::log(moments[k]));
  }

  std::vector<BetaPoint> out;
  for (std::size_t k = 0; k < qs.size(); ++k) {
    const LinearFit fit = fit_line(xs, logs[k]);
    out.push_back({qs[k], fit.slope, fit.r2, deltas.front(), deltas.back()});
  }
  return out;
}

BetaPoint beta_empirical(const Projected1D& proj, double q, std::span<const double> deltas,
                         double z0, const CloudOptions& opts) {
  const double qs[] = {q};
  return beta_empirical_curve(proj, qs, deltas, z0, opts).front();
}

std::optional<double> beta_closed_form(const Projected1D& proj, double q) {
  struct Column {
    double a, t, pi;
  };
  std::vector<Column> cols;
  for (std::size_t i = 0; i < proj.fs.size(); ++i) {
    const Poly2& f = proj.fs[i];
    if (f.degree_x() > 1 || f.depends_on_y()) return std::nullopt;
    const double a = f.coeff(1, 0);
    const double t = f.coeff(0, 0);
    if (!(a > 0.0 && a < 1.0)) return std::nullopt;
    auto same = std::find_if(cols.begin(), cols.end(), [&](const Column& c) {
      return std::abs(c.a - a) <= 1e-12 && std::abs(c.t - t) <= 1e-12;
    });
    if (same != cols.end()) {
      same->pi += proj.probs[i];
    } else {
      cols.push_back({a, t, proj.probs[i]});
    }
  }
  std::sort(cols.begin(), cols.end(), [](const Column& l, const Column& r) { return l.t < r.t; });
  for (std::size_t i = 1; i < cols.size(); ++i)
    if (cols[i].t < cols[i - 1].t + cols[i - 1].a - 1e-12) return std::nullopt;

  // h(beta) = sum pi^q a^beta - 1 is strictly decreasing.
  auto h = [&](double beta) {
    double s = 0.0;
    for (const Column& c : cols) s += std::pow(c.pi, q) * std::pow(c.a, beta);
    return s - 1.0;
  };
  double lo = -1.0, hi = 1.0;
  while (h(lo) < 0.0) {
    lo *= 2.0;
    if (lo < -1e6) return std::nullopt;
  }
  while (h(hi) > 0.0) {
    hi *= 2.0;
    if (hi > 1e6) return std::nullopt;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (h(mid) > 0.0) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace lqspec
