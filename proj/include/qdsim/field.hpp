#ifndef QDSIM_FIELD_HPP
#define QDSIM_FIELD_HPP

#include <functional>
#include <vector>

#include "qdsim/grid.hpp"

namespace qdsim {

// Unit tag of a field: potentials carry J, amplitudes 1/m (2D
// wavefunctions normalized to h^2 * sum v^2 = 1), densities 1/m^2.
enum class FieldKind { Potential, Amplitude, Density };

// Real scalar values on grid nodes, row-major by y then x.
// Immutable in spirit once filled; all operations on fields are pure.
class ScalarField {
 public:
  ScalarField(const Grid& grid, FieldKind kind)
      : grid_(grid), kind_(kind), values_(grid.size(), 0.0) {}

  // Fill from f(x, y) with x, y in meters.
  static ScalarField from_function(const Grid& grid, FieldKind kind,
                                   const std::function<double(double, double)>& f);

  const Grid& grid() const { return grid_; }
  FieldKind kind() const { return kind_; }

  double operator()(int i, int j) const { return values_[grid_.index(i, j)]; }
  double& at(int i, int j) { return values_[grid_.index(i, j)]; }

  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  bool all_finite() const;
  bool zero_boundary() const;
  double max_abs() const;

  // h^2 * sum v^2
  double squared_norm() const;
  // Scale so that squared_norm() == 1. Throws on a zero field.
  void normalize();

 private:
  Grid grid_;
  FieldKind kind_;
  std::vector<double> values_;
};

}  // namespace qdsim

#endif
