#include "qdsim/operators.hpp"

#include <cmath>

#include "qdsim/constants.hpp"
#include "qdsim/error.hpp"

namespace qdsim {

double inner_product(const ScalarField& f, const ScalarField& g) {
  if (f.grid() != g.grid()) {
    throw Error("inner_product: fields live on different grids");
  }
  const auto& a = f.values();
  const auto& b = g.values();
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  const double h = f.grid().step();
  return s * h * h;
}

ScalarField apply_hamiltonian(const ScalarField& V, const ScalarField& psi,
                              double m_eff) {
  const Grid& grid = psi.grid();
  if (V.grid() != grid) {
    throw Error("apply_hamiltonian: potential and state grids differ");
  }
  if (!psi.zero_boundary()) {
    throw Error("apply_hamiltonian: state has nonzero boundary values");
  }
  const double h = grid.step();
  const double kin = constants::hbar * constants::hbar / (2.0 * m_eff * h * h);

  ScalarField out(grid, FieldKind::Amplitude);
  const int nx = grid.nx();
  const int ny = grid.ny();
  const auto& p = psi.values();
  const auto& v = V.values();
  auto& o = out.values();
  for (int j = 1; j < ny - 1; ++j) {
    const std::size_t row = grid.index(0, j);
    for (int i = 1; i < nx - 1; ++i) {
      const std::size_t c = row + i;
      const double lap =
          (p[c - 1] + p[c + 1]) + (p[c - nx] + p[c + nx]) - 4.0 * p[c];
      o[c] = -kin * lap + v[c] * p[c];
    }
  }
  return out;
}

double energy_expectation(const ScalarField& V, const ScalarField& psi,
                          double m_eff) {
  const double n2 = psi.squared_norm();
  if (std::abs(n2 - 1.0) > 1e-6) {
    throw Error("energy_expectation: state is not normalized (h^2 sum = " +
                std::to_string(n2) + ")");
  }
  return inner_product(psi, apply_hamiltonian(V, psi, m_eff));
}

}  // namespace qdsim
