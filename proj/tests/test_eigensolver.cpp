#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "qdsim/constants.hpp"
#include "qdsim/error.hpp"
#include "qdsim/operators.hpp"
#include "qdsim/potentials.hpp"

using namespace qdsim;
namespace k = qdsim::constants;

namespace {

const DoubleWellParams defaults = DoubleWellParams::defaults();

void check_orthonormal(const SpectrumResult& sp, double tol = 1e-8) {
  for (std::size_t i = 0; i < sp.states.size(); ++i) {
    for (std::size_t j = i; j < sp.states.size(); ++j) {
      const double expect = i == j ? 1.0 : 0.0;
      CHECK(std::abs(inner_product(sp.states[i], sp.states[j]) - expect) < tol);
    }
  }
}

double x_parity_overlap(const ScalarField& psi) {
  const Grid& g = psi.grid();
  double s = 0.0;
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      s += psi(i, j) * psi(g.nx() - 1 - i, j);
    }
  }
  return s * g.step() * g.step();
}

// Frobenius distance between the projectors onto the spanned subspaces,
// computed from the cross-overlap matrix.
double projector_distance(const SpectrumResult& a, const SpectrumResult& b) {
  const std::size_t n = a.states.size();
  double cross = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double m = inner_product(a.states[i], b.states[j]);
      cross += m * m;
    }
  }
  const double d2 = 2.0 * n - 2.0 * cross;
  return std::sqrt(std::max(0.0, d2));
}

}  // namespace

TEST_CASE("pure oscillator spectrum matches hw {1,2,2,3}") {
  const Grid g = Grid::from_nm(30, 20, 0.5);
  DoubleWellParams p = defaults;
  const ScalarField v = ScalarField::from_function(
      g, FieldKind::Potential, [&](double x, double y) {
        return 0.5 * p.m_eff * p.omega * p.omega * (x * x + y * y);
      });
  const SpectrumResult sp = lowest_states(v, p.m_eff);
  const double hw = k::hbar * p.omega;
  const double expect[4] = {1, 2, 2, 3};
  for (int i = 0; i < 4; ++i) {
    CHECK(test::rel_diff(sp.energies[i], expect[i] * hw) < 0.005);
  }
  // the degenerate pair splits only at grid-truncation level
  CHECK(std::abs(sp.energies[2] - sp.energies[1]) < 1e-6 * hw);
  check_orthonormal(sp);
  for (int i = 0; i < 4; ++i) {
    CHECK(sp.residuals[i] < 1e-8 * std::abs(sp.energies[i]) * 1.01);
  }
  // parity alternates: ground even in x, first excited odd
  CHECK(x_parity_overlap(sp.states[0]) > 0.999);
  CHECK(x_parity_overlap(sp.states[1]) < -0.999);
}

TEST_CASE("double well doublet merges below the next level") {
  const Grid g = Grid::from_nm(30, 20, 0.5);
  const ScalarField v = double_well_potential(defaults.with_w(0.2), g);
  const SpectrumResult sp = lowest_states(v, defaults.m_eff);
  const double ratio = (sp.energies[1] - sp.energies[0]) /
                       (sp.energies[2] - sp.energies[1]);
  CHECK(ratio > 0.0);
  CHECK(ratio < 0.1);
  // ground even, first excited odd, sign convention positive at +x peak
  CHECK(x_parity_overlap(sp.states[0]) > 1.0 - 1e-8);
  CHECK(x_parity_overlap(sp.states[1]) < -(1.0 - 1e-8));
}

TEST_CASE("iterative solver agrees with the dense oracle") {
  const Grid g = Grid::from_nm(30, 20, 2);  // 31 x 21 nodes
  const ScalarField v = double_well_potential(defaults.with_w(0.2), g);
  const SpectrumResult it = lowest_states(v, defaults.m_eff);
  const SpectrumResult oracle = dense_oracle(v, defaults.m_eff, 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(test::rel_diff(it.energies[i], oracle.energies[i]) < 1e-10);
  }
  CHECK(projector_distance(it, oracle) < 1e-6);
  check_orthonormal(oracle);
}

TEST_CASE("solver handles an asymmetric potential like the oracle") {
  const Grid g = Grid::from_nm(30, 20, 2);
  ScalarField v = double_well_potential(defaults.with_w(0.2), g);
  // tilt that breaks the x symmetry outright
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      v.at(i, j) += 2e-21 * (g.x(i) / g.half_width_x());
    }
  }
  const SpectrumResult it = lowest_states(v, defaults.m_eff);
  const SpectrumResult oracle = dense_oracle(v, defaults.m_eff, 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(test::rel_diff(it.energies[i], oracle.energies[i]) < 1e-10);
  }
  CHECK(projector_distance(it, oracle) < 1e-6);
}

TEST_CASE("dense oracle reproduces the discrete box spectrum on a strip") {
  // 3 interior rows: quasi-1D, exact discrete eigenvalues known
  const Grid g = Grid::from_nm(15, 2, 1);
  REQUIRE(g.ny() == 5);
  ScalarField v(g, FieldKind::Potential);
  const double m = defaults.m_eff;
  const SpectrumResult sp = dense_oracle(v, m, 3);

  const double h = g.step();
  const double kin = k::hbar * k::hbar / (2.0 * m * h * h);
  auto lambda = [&](int p, int nodes_plus_1) {
    return kin * (2.0 - 2.0 * std::cos(p * k::pi / nodes_plus_1));
  };
  for (int p = 1; p <= 3; ++p) {
    const double exact = lambda(p, g.nx() - 1) + lambda(1, g.ny() - 1);
    CHECK(test::rel_diff(sp.energies[p - 1], exact) < 1e-10);
    // and the continuum limit within the O(h^2) discretization error
    const double cont = k::hbar * k::hbar * k::pi * k::pi / (2.0 * m) *
                        (p * p / (30e-9 * 30e-9) + 1.0 / (4e-9 * 4e-9));
    CHECK(test::rel_diff(sp.energies[p - 1], cont) < 0.06);
  }
}

TEST_CASE("dense oracle oscillator energies within discretization error") {
  const Grid g = Grid::from_nm(30, 20, 2);
  DoubleWellParams p = defaults;
  const ScalarField v = ScalarField::from_function(
      g, FieldKind::Potential, [&](double x, double y) {
        return 0.5 * p.m_eff * p.omega * p.omega * (x * x + y * y);
      });
  const SpectrumResult sp = dense_oracle(v, p.m_eff, 4);
  const double hw = k::hbar * p.omega;
  const double expect[4] = {1, 2, 2, 3};
  for (int i = 0; i < 4; ++i) {
    // (h / l_osc)^2 ~ 25%: second-order discretization leaves a few percent
    CHECK(test::rel_diff(sp.energies[i], expect[i] * hw) < 0.05);
  }
}

TEST_CASE("variational bound: trial energies sit above the oracle ground state") {
  const Grid g = Grid::from_nm(30, 20, 2);
  const ScalarField v = double_well_potential(defaults.with_w(0.2), g);
  const double e0 = dense_oracle(v, defaults.m_eff, 1).energies[0];
  for (unsigned seed : {7u, 8u, 9u, 10u}) {
    const ScalarField trial = test::random_amplitude(g, seed);
    CHECK(energy_expectation(v, trial, defaults.m_eff) >=
          e0 - 1e-12 * std::abs(e0));
  }
  // a smooth trial close to the ground state still sits above
  const ScalarField smooth = test::gaussian_blob(g, 5e-9, 0, 4e-9);
  CHECK(energy_expectation(v, smooth, defaults.m_eff) >=
        e0 - 1e-12 * std::abs(e0));
}

TEST_CASE("solver error paths") {
  const Grid g = Grid::from_nm(30, 20, 2);
  const ScalarField v = double_well_potential(defaults, g);

  SolverOptions tiny;
  tiny.max_iter = 3;
  tiny.check_interval = 1;
  CHECK_THROWS_AS(lowest_states(v, defaults.m_eff, tiny), ConvergenceError);
  CHECK_THROWS_WITH_AS(lowest_states(v, defaults.m_eff, tiny),
                       doctest::Contains("residual"), ConvergenceError);

  SolverOptions bad_k;
  bad_k.k = 9;
  CHECK_THROWS_AS(lowest_states(v, defaults.m_eff, bad_k), Error);

  const Grid tiny_grid = Grid::from_nm(2, 2, 1);
  const ScalarField v_tiny(tiny_grid, FieldKind::Potential);
  SolverOptions k6;
  k6.k = 8;
  CHECK_NOTHROW(lowest_states(v_tiny, defaults.m_eff, k6));

  const Grid big = Grid::from_nm(30, 20, 0.5);
  const ScalarField v_big(big, FieldKind::Potential);
  CHECK_THROWS_AS(dense_oracle(v_big, defaults.m_eff, 4), Error);
}
