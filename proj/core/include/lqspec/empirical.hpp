#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lqspec/cloud.hpp"
#include "lqspec/ifs.hpp"

namespace lqspec {

// Alpha2 stops on the smaller singular value, Diameter on the larger one.
enum class StoppingMode { Alpha2, Diameter };

inline constexpr std::size_t kDefaultStoppingBudget = std::size_t{1} << 25;

/// Prefix-free, complete set of words at which the chosen singular value
/// of D_a S_w first drops below delta. Words are stored back to back.
class StoppingSet {
 public:
  StoppingSet(double delta, StoppingMode mode, const Point& base)
      : delta_(delta), mode_(mode), base_(base) {}

  std::size_t size() const { return offsets_.size(); }
  WordView word(std::size_t i) const {
    const std::size_t begin = offsets_[i];
    const std::size_t end = i + 1 < offsets_.size() ? offsets_[i + 1] : letters_.size();
    return WordView(letters_).subspan(begin, end - begin);
  }

  double delta() const { return delta_; }
  StoppingMode mode() const { return mode_; }
  const Point& base_point() const { return base_; }

  void push(WordView w) {
    offsets_.push_back(letters_.size());
    letters_.insert(letters_.end(), w.begin(), w.end());
  }

 private:
  double delta_;
  StoppingMode mode_;
  Point base_;
  std::vector<Letter> letters_;
  std::vector<std::size_t> offsets_;
};

// Visitor form: called once per stopping word, in depth-first order, with
// the singular values of D_a S_w.
using StoppingVisitor = std::function<void(WordView, const SingularPair&)>;
void for_each_stopping_word(const Ifs& ifs, double delta, const Point& a, StoppingMode mode,
                            const StoppingVisitor& visit,
                            std::size_t budget = kDefaultStoppingBudget);

StoppingSet delta_stopping(const Ifs& ifs, double delta, const Point& a, StoppingMode mode,
                           std::size_t budget = kDefaultStoppingBudget);

struct Atom {
  Point at;
  double mass = 0.0;
};

struct AtomCloud {
  std::vector<Atom> atoms;
  double delta = 0.0;
};

// One atom S_w(z0) of mass p(w) per word of the Diameter stopping at z0.
AtomCloud atom_cloud(const Ifs& ifs, double delta, const Point& z0,
                     std::size_t budget = kDefaultStoppingBudget);

// Merged push-forward of delta_{z0}: depth chosen so that every cylinder
// has diameter below delta / refine. Total mass is 1.
AtomCloud merged_cloud(const Ifs& ifs, double delta, const Point& z0, int refine = 16,
                       std::size_t budget = kDefaultStoppingBudget);

AtomCloud build_cloud(const Ifs& ifs, double delta, const Point& z0, const CloudOptions& opts);

struct MomentResult {
  double moment = 0.0;
  std::size_t occupied = 0;
};

// Sum of m(Q)^q over occupied half-open delta-mesh cells anchored at 0.
MomentResult moment_sum(const AtomCloud& cloud, double delta, double q);

// Several q from one binning pass.
std::vector<MomentResult> moment_sums(const AtomCloud& cloud, double delta,
                                      std::span<const double> qs);

struct MomentRow {
  double delta = 0.0;
  double q = 0.0;
  double moment = 0.0;
  std::size_t occupied = 0;
};
using MomentTable = std::vector<MomentRow>;

struct TauEstimate {
  double q = 0.0;
  double tau = 0.0;
  double fit_r2 = 1.0;
  double delta_max = 0.0;
  double delta_min = 0.0;
};

// Least-squares slope of log D_delta^q against -log delta.
TauEstimate tau_empirical(const Ifs& ifs, double q, std::span<const double> deltas,
                          const Point& z0 = {0.5, 0.5}, const CloudOptions& opts = {});

// Shares one atom cloud per scale across all q; optionally records the
// underlying moments.
std::vector<TauEstimate> tau_curve(const Ifs& ifs, std::span<const double> qs,
                                   std::span<const double> deltas, const Point& z0 = {0.5, 0.5},
                                   MomentTable* table = nullptr, const CloudOptions& opts = {});

TauEstimate box_dimension(const Ifs& ifs, std::span<const double> deltas,
                          const Point& z0 = {0.5, 0.5}, const CloudOptions& opts = {});

}  // namespace lqspec
