#include "lqspec/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "cell_merge.hpp"
#include "lqspec/conditions.hpp"
#include "lqspec/regression.hpp"

namespace lqspec {

namespace {

class StoppingWalk {
 public:
  StoppingWalk(const Ifs& ifs, double delta, const Point& a, StoppingMode mode,
               const StoppingVisitor& visit, std::size_t budget)
      : ifs_(ifs), delta_(delta), a_(a), mode_(mode), visit_(visit), budget_(budget) {}

  void run() { descend(); }

 private:
  void descend() {
    for (Letter i = 0; i < ifs_.size(); ++i) {
      word_.push_back(i);
      const SingularPair sv = singular_values(jacobian(ifs_, word_, a_));
      const double v = mode_ == StoppingMode::Alpha2 ? sv.a2 : sv.a1;
      if (v < delta_) {
        if (++emitted_ > budget_)
          throw BudgetExceeded("delta_stopping: word budget exceeded at delta " +
                                   std::to_string(delta_),
                               budget_);
        visit_(word_, sv);
      } else {
        descend();
      }
      word_.pop_back();
    }
  }

  const Ifs& ifs_;
  double delta_;
  Point a_;
  StoppingMode mode_;
  const StoppingVisitor& visit_;
  std::size_t budget_;
  std::size_t emitted_ = 0;
  Word word_;
};

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("delta must lie in (0, 1)");
}

}  // namespace

void for_each_stopping_word(const Ifs& ifs, double delta, const Point& a, StoppingMode mode,
                            const StoppingVisitor& visit, std::size_t budget) {
  check_delta(delta);
  StoppingWalk(ifs, delta, a, mode, visit, budget).run();
}

StoppingSet delta_stopping(const Ifs& ifs, double delta, const Point& a, StoppingMode mode,
                           std::size_t budget) {
  StoppingSet set(delta, mode, a);
  for_each_stopping_word(
      ifs, delta, a, mode, [&](WordView w, const SingularPair&) { set.push(w); }, budget);
  return set;
}

AtomCloud atom_cloud(const Ifs& ifs, double delta, const Point& z0, std::size_t budget) {
  AtomCloud cloud;
  cloud.delta = delta;
  for_each_stopping_word(
      ifs, delta, z0, StoppingMode::Diameter,
      [&](WordView w, const SingularPair&) {
        cloud.atoms.push_back({apply(ifs, w, z0), weight(ifs, w)});
      },
      budget);
  return cloud;
}

AtomCloud merged_cloud(const Ifs& ifs, double delta, const Point& z0, int refine,
                       std::size_t budget) {
  check_delta(delta);
  if (refine < 1) throw std::invalid_argument("merged_cloud: refine must be positive");
  const double h = delta / refine;
  const double c = lipschitz_constant(ifs);
  if (!(c < 1.0)) throw SolverError("merged_cloud: maps are not contractions");
  const int depth = static_cast<int>(std::ceil(std::log(h / std::sqrt(2.0)) / std::log(c)));

  struct Acc {
    double mx, my, mass;
  };
  std::vector<Atom> atoms{{z0, 1.0}};
  std::vector<Acc> acc;
  for (int level = 0; level < depth; ++level) {
    detail::CellIndex index(atoms.size() * ifs.size());
    acc.clear();
    for (const Atom& a : atoms) {
      for (std::size_t i = 0; i < ifs.size(); ++i) {
        const Point z = ifs.apply_letter(static_cast<Letter>(i), a.at);
        const double m = a.mass * ifs.prob(i);
        bool inserted = false;
        const std::uint32_t slot =
            index.find_or_insert(detail::cell_key(static_cast<std::int64_t>(std::floor(z.x / h)),
                                                  static_cast<std::int64_t>(std::floor(z.y / h))),
                                 inserted);
        if (inserted) {
          if (acc.size() >= budget)
            throw BudgetExceeded("merged_cloud: atom budget exceeded at delta " +
                                     std::to_string(delta),
                                 budget);
          acc.push_back({0.0, 0.0, 0.0});
        }
        acc[slot].mx += m * z.x;
        acc[slot].my += m * z.y;
        acc[slot].mass += m;
      }
    }
    atoms.clear();
    for (const Acc& e : acc) atoms.push_back({{e.mx / e.mass, e.my / e.mass}, e.mass});
  }
  return {std::move(atoms), delta};
}

AtomCloud build_cloud(const Ifs& ifs, double delta, const Point& z0, const CloudOptions& opts) {
  if (opts.method == CloudMethod::Stopping) return atom_cloud(ifs, delta, z0, opts.budget);
  return merged_cloud(ifs, delta, z0, opts.refine, opts.budget);
}

std::vector<MomentResult> moment_sums(const AtomCloud& cloud, double delta,
                                      std::span<const double> qs) {
  check_delta(delta);
  for (double q : qs)
    if (!(q >= 0.0)) throw std::invalid_argument("moment_sum: q must be nonnegative");

  // Cell keys sorted so the accumulation order is fixed.
  std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, double>> cells;
  cells.reserve(cloud.atoms.size());
  for (const Atom& a : cloud.atoms) {
    cells.push_back({{static_cast<std::int64_t>(std::floor(a.at.x / delta)),
                      static_cast<std::int64_t>(std::floor(a.at.y / delta))},
                     a.mass});
  }
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

  std::vector<MomentResult> out;
  for (double q : qs) {
    MomentResult r;
    r.occupied = masses.size();
    for (double m : masses) r.moment += q == 0.0 ? 1.0 : std::pow(m, q);
    out.push_back(r);
  }
  return out;
}

MomentResult moment_sum(const AtomCloud& cloud, double delta, double q) {
  const double qs[] = {q};
  return moment_sums(cloud, delta, qs).front();
}

std::vector<TauEstimate> tau_curve(const Ifs& ifs, std::span<const double> qs,
                                   std::span<const double> deltas, const Point& z0,
                                   MomentTable* table, const CloudOptions& opts) {
  check_delta_ladder(deltas, 4);
  for (double q : qs)
    if (!(q >= 0.0)) throw std::invalid_argument("tau_empirical: q must be nonnegative");

  std::vector<double> xs;
  std::vector<std::vector<double>> logs(qs.size());
  for (double delta : deltas) {
    const AtomCloud cloud = build_cloud(ifs, delta, z0, opts);
    const auto moments = moment_sums(cloud, delta, qs);
    xs.push_back(-std::log(delta));
    for (std::size_t k = 0; k < qs.size(); ++k) {
      logs[k].push_back(std::log(moments[k].moment));
      if (table) table->push_back({delta, qs[k], moments[k].moment, moments[k].occupied});
    }
  }

  std::vector<TauEstimate> out;
  for (std::size_t k = 0; k < qs.size(); ++k) {
    const LinearFit fit = fit_line(xs, logs[k]);
    out.push_back({qs[k], fit.slope, fit.r2, deltas.front(), deltas.back()});
  }
  return out;
}

TauEstimate tau_empirical(const Ifs& ifs, double q, std::span<const double> deltas,
                          const Point& z0, const CloudOptions& opts) {
  const double qs[] = {q};
  return tau_curve(ifs, qs, deltas, z0, nullptr, opts).front();
}

TauEstimate box_dimension(const Ifs& ifs, std::span<const double> deltas, const Point& z0,
                          const CloudOptions& opts) {
  return tau_empirical(ifs, 0.0, deltas, z0, opts);
}

}  // namespace lqspec
