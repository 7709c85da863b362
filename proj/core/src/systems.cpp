#include "lqspec/systems.hpp"

namespace lqspec::systems {

namespace {

Poly2 poly(std::initializer_list<Term> terms) { return Poly2(std::vector<Term>(terms)); }

MapSpec affine_diag(double a, double t, double c, double u, double p) {
  return {poly({{1, 0, a}, {0, 0, t}}), poly({{0, 1, c}, {0, 0, u}}), p};
}

}  // namespace

Ifs polynomial_example() {
  const double third = 1.0 / 3.0;
  std::vector<MapSpec> maps{
      {poly({{1, 0, 3.0 / 5.0}, {2, 0, 3.0 / 40.0}}),
       poly({{2, 0, 1.0 / 12.0}, {0, 1, 1.0 / 6.0}}), third},
      {poly({{1, 0, 4.0 / 5.0}, {3, 0, -4.0 / 30.0}, {0, 0, 1.0 / 3.0}}),
       poly({{2, 0, 1.0 / 10.0}, {0, 1, 1.0 / 4.0}, {0, 0, 17.0 / 50.0}}), third},
      {poly({{1, 0, 3.0 / 5.0}}),
       poly({{2, 0, 1.0 / 10.0}, {0, 1, 1.0 / 5.0}, {0, 3, 1.0 / 9.0}, {0, 0, 26.0 / 45.0}}),
       third},
  };
  return Ifs(std::move(maps), "polynomial-example");
}

Ifs quarter_similarities() {
  return Ifs({affine_diag(0.25, 0.0, 0.25, 0.0, 0.5),
              affine_diag(0.25, 0.75, 0.25, 0.0, 0.25),
              affine_diag(0.25, 0.0, 0.25, 0.75, 0.25)},
             "quarter-similarities");
}

Ifs diagonal_carpet() {
  const double third = 1.0 / 3.0;
  return Ifs({affine_diag(0.5, 0.0, third, 0.0, third),
              affine_diag(0.5, 0.5, third, third, third),
              affine_diag(0.5, 0.0, third, 2.0 * third, third)},
             "diagonal-carpet");
}

Ifs square_tiling() {
  return Ifs({affine_diag(0.5, 0.0, 0.5, 0.0, 0.25),
              affine_diag(0.5, 0.5, 0.5, 0.0, 0.25),
              affine_diag(0.5, 0.0, 0.5, 0.5, 0.25),
              affine_diag(0.5, 0.5, 0.5, 0.5, 0.25)},
             "square-tiling");
}

Ifs two_columns() {
  const double third = 1.0 / 3.0;
  return Ifs({affine_diag(0.5, 0.0, third, 0.0, 0.5),
              affine_diag(0.5, 0.5, third, 2.0 * third, 0.5)},
             "two-columns");
}

}  // namespace lqspec::systems
