#include "qdsim/field.hpp"

#include <cmath>

#include "qdsim/error.hpp"

namespace qdsim {

ScalarField ScalarField::from_function(
    const Grid& grid, FieldKind kind,
    const std::function<double(double, double)>& f) {
  ScalarField out(grid, kind);
  for (int j = 0; j < grid.ny(); ++j) {
    const double y = grid.y(j);
    for (int i = 0; i < grid.nx(); ++i) {
      out.at(i, j) = f(grid.x(i), y);
    }
  }
  return out;
}

bool ScalarField::all_finite() const {
  for (double v : values_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

bool ScalarField::zero_boundary() const {
  const int nx = grid_.nx();
  const int ny = grid_.ny();
  for (int i = 0; i < nx; ++i) {
    if ((*this)(i, 0) != 0.0 || (*this)(i, ny - 1) != 0.0) return false;
  }
  for (int j = 0; j < ny; ++j) {
    if ((*this)(0, j) != 0.0 || (*this)(nx - 1, j) != 0.0) return false;
  }
  return true;
}

double ScalarField::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double ScalarField::squared_norm() const {
  double s = 0.0;
  for (double v : values_) s += v * v;
  return s * grid_.step() * grid_.step();
}

void ScalarField::normalize() {
  const double n2 = squared_norm();
  if (n2 <= 0.0) throw Error("normalize: zero field");
  const double inv = 1.0 / std::sqrt(n2);
  for (double& v : values_) v *= inv;
}

}  // namespace qdsim
