#pragma once

#include "lqspec/ifs.hpp"

// Reference systems used by tests, benchmarks and the sample configs.
namespace lqspec::systems {

// Three-map polynomial system
//   S1 = (3x/5 + 3x^2/40, x^2/12 + y/6)
//   S2 = (4x/5 - 4x^3/30 + 1/3, x^2/10 + y/4 + 17/50)
//   S3 = (3x/5, x^2/10 + y/5 + y^3/9 + 26/45)
// with uniform weights.
Ifs polynomial_example();

// Three similarities of ratio 1/4 in separate corners, p = (1/2, 1/4, 1/4).
Ifs quarter_similarities();

// Diagonal carpet (x/2 + t, y/3 + u) with three maps, uniform weights.
Ifs diagonal_carpet();

// Four half-scale similarities tiling the unit square.
Ifs square_tiling();

// (x/2, y/3) and (x/2 + 1/2, y/3 + 2/3) with p = (1/2, 1/2); the projection
// is the pair x/2, x/2 + 1/2.
Ifs two_columns();

}  // namespace lqspec::systems
