#pragma once

#include <cstddef>

namespace lqspec {

// Stopping: one atom per word of the delta-stopping. Merged: the measure is
// pushed forward level by level and atoms sharing a fine cell of side
// delta / refine are merged at their centre of mass, which keeps the atom
// count bounded by the number of occupied fine cells.
enum class CloudMethod { Merged, Stopping };

struct CloudOptions {
  CloudMethod method = CloudMethod::Merged;
  int refine = 8;
  std::size_t budget = std::size_t{1} << 25;
};

}  // namespace lqspec
