#include "qdsim/grid.hpp"

#include <cmath>
#include <string>

#include "qdsim/constants.hpp"
#include "qdsim/error.hpp"

namespace qdsim {

namespace {

// Number of steps across [-half, +half]; must be an even integer so the
// origin lands on a node.
int axis_steps(double half_width_nm, double step_nm, const char* axis) {
  if (half_width_nm <= 0.0 || step_nm <= 0.0) {
    throw ConfigError(std::string("make_grid: non-positive extent or step on ") +
                      axis + " axis");
  }
  const double extent = 2.0 * half_width_nm;
  const double steps = extent / step_nm;
  const double rounded = std::round(steps);
  if (rounded < 1.0 || std::abs(steps - rounded) > 1e-9 * steps) {
    throw ConfigError("make_grid: " + std::string(axis) + " extent " +
                      std::to_string(extent) + " nm not divisible by step " +
                      std::to_string(step_nm) + " nm");
  }
  const long n = static_cast<long>(rounded);
  if (n % 2 != 0) {
    throw ConfigError("make_grid: " + std::string(axis) + " extent " +
                      std::to_string(extent) + " nm / step " +
                      std::to_string(step_nm) +
                      " nm gives an odd step count; the origin must lie on a node");
  }
  return static_cast<int>(n);
}

}  // namespace

Grid Grid::from_nm(double half_width_x_nm, double half_width_y_nm,
                   double step_nm) {
  const int kx = axis_steps(half_width_x_nm, step_nm, "x");
  const int ky = axis_steps(half_width_y_nm, step_nm, "y");
  const double step = step_nm * constants::nm;
  return Grid(half_width_x_nm * constants::nm, half_width_y_nm * constants::nm,
              step, kx + 1, ky + 1);
}

}  // namespace qdsim
