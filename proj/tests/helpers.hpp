#ifndef QDSIM_TEST_HELPERS_HPP
#define QDSIM_TEST_HELPERS_HPP

#include <cmath>
#include <functional>
#include <random>

#include "qdsim/constants.hpp"
#include "qdsim/field.hpp"

namespace qdsim::test {

// Builds an amplitude field from a formula, forces the boundary to exact
// zeros (analytic profiles only decay there), and normalizes.
inline ScalarField amplitude_from(
    const Grid& grid, const std::function<double(double, double)>& f) {
  ScalarField out = ScalarField::from_function(grid, FieldKind::Amplitude, f);
  const int nx = grid.nx(), ny = grid.ny();
  for (int i = 0; i < nx; ++i) {
    out.at(i, 0) = 0.0;
    out.at(i, ny - 1) = 0.0;
  }
  for (int j = 0; j < ny; ++j) {
    out.at(0, j) = 0.0;
    out.at(nx - 1, j) = 0.0;
  }
  out.normalize();
  return out;
}

// Dirichlet box mode sin(p pi x'/Lx) sin(q pi y'/Ly), x' from the left edge.
inline ScalarField box_mode(const Grid& grid, int p, int q) {
  const double lx = 2.0 * grid.half_width_x();
  const double ly = 2.0 * grid.half_width_y();
  return amplitude_from(grid, [&](double x, double y) {
    return std::sin(p * constants::pi * (x + grid.half_width_x()) / lx) *
           std::sin(q * constants::pi * (y + grid.half_width_y()) / ly);
  });
}

// Normalized Gaussian blob amplitude centered at (cx, cy).
inline ScalarField gaussian_blob(const Grid& grid, double cx, double cy,
                                 double sigma) {
  return amplitude_from(grid, [&](double x, double y) {
    const double dx = x - cx, dy = y - cy;
    return std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma));
  });
}

// Deterministic random zero-boundary amplitude field.
inline ScalarField random_amplitude(const Grid& grid, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  ScalarField out(grid, FieldKind::Amplitude);
  for (int j = 1; j < grid.ny() - 1; ++j) {
    for (int i = 1; i < grid.nx() - 1; ++i) {
      out.at(i, j) = uni(rng);
    }
  }
  out.normalize();
  return out;
}

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace qdsim::test

#endif
