#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "qdsim/constants.hpp"
#include "qdsim/error.hpp"
#include "qdsim/operators.hpp"

using namespace qdsim;
namespace k = qdsim::constants;

namespace {
const double m_eff = 0.065 * k::electron_mass;

double box_energy(double lx, double ly, int p = 1, int q = 1) {
  const double f = k::hbar * k::hbar * k::pi * k::pi / (2.0 * m_eff);
  return f * (p * p / (lx * lx) + q * q / (ly * ly));
}
}  // namespace

TEST_CASE("make_grid node counts and coordinates") {
  const Grid g = Grid::from_nm(30, 20, 0.5);
  CHECK(g.nx() == 121);
  CHECK(g.ny() == 81);
  CHECK(g.size() == 121u * 81u);

  const Grid coarse = Grid::from_nm(30, 20, 10);
  CHECK(coarse.nx() == 7);
  CHECK(coarse.ny() == 5);

  // x_i = -half_width + i*step, symmetric about the origin
  for (int i = 0; i < g.nx(); ++i) {
    CHECK(g.x(i) == doctest::Approx(-30e-9 + i * 0.5e-9).epsilon(1e-12));
    CHECK(g.x(i) == -g.x(g.nx() - 1 - i));
  }
  CHECK(g.x((g.nx() - 1) / 2) == 0.0);
  CHECK(g.y((g.ny() - 1) / 2) == 0.0);
}

TEST_CASE("make_grid rejects bad extents") {
  CHECK_THROWS_WITH_AS(Grid::from_nm(30, 20, 0.7),
                       doctest::Contains("x extent"), ConfigError);
  // divisible extent but no origin node (odd step count)
  CHECK_THROWS_AS(Grid::from_nm(25, 20, 10), ConfigError);
  CHECK_THROWS_AS(Grid::from_nm(-5, 20, 1), ConfigError);
}

TEST_CASE("inner_product basics") {
  const Grid g = Grid::from_nm(30, 20, 1);
  ScalarField f = test::gaussian_blob(g, 3e-9, 0, 5e-9);
  CHECK(inner_product(f, f) == doctest::Approx(1.0).epsilon(1e-12));

  // even-in-x against odd-in-x vanishes
  ScalarField even = test::amplitude_from(
      g, [](double x, double y) { return std::exp(-(x * x + y * y) / 5e-17); });
  ScalarField odd = test::amplitude_from(g, [](double x, double y) {
    return x * std::exp(-(x * x + y * y) / 5e-17);
  });
  CHECK(std::abs(inner_product(even, odd)) < 1e-12);

  // constant field over the 60x40 nm^2 area gives the area (2400 nm^2)
  ScalarField one(g, FieldKind::Density);
  for (double& v : one.values()) v = 1.0;
  CHECK(inner_product(one, one) ==
        doctest::Approx(2400.0 * 1e-18).epsilon(1e-12));

  const Grid other = Grid::from_nm(30, 20, 0.5);
  ScalarField f2(other, FieldKind::Amplitude);
  CHECK_THROWS_AS(inner_product(f, f2), Error);
}

TEST_CASE("apply_hamiltonian zero input and potential linearity") {
  const Grid g = Grid::from_nm(15, 10, 0.5);
  const ScalarField v = ScalarField::from_function(
      g, FieldKind::Potential,
      [](double x, double y) { return 1e-21 * (x * x + y * y) / 1e-16; });
  ScalarField zero(g, FieldKind::Amplitude);
  const ScalarField hz = apply_hamiltonian(v, zero, m_eff);
  CHECK(hz.max_abs() == 0.0);

  const ScalarField psi = test::gaussian_blob(g, 2e-9, -1e-9, 3e-9);
  const double c = 2.5e-21;
  ScalarField v_shift = v;
  for (double& val : v_shift.values()) val += c;
  const ScalarField h1 = apply_hamiltonian(v, psi, m_eff);
  const ScalarField h2 = apply_hamiltonian(v_shift, psi, m_eff);
  const double scale = h1.max_abs();
  for (std::size_t i = 0; i < h1.values().size(); ++i) {
    const double expect = h1.values()[i] + c * psi.values()[i];
    CHECK(std::abs(h2.values()[i] - expect) <= 1e-13 * scale);
  }

  ScalarField bad = psi;
  bad.at(0, 0) = 1.0;
  CHECK_THROWS_AS(apply_hamiltonian(v, bad, m_eff), Error);
}

TEST_CASE("apply_hamiltonian reproduces the analytic box mode") {
  const Grid g = Grid::from_nm(30, 20, 0.5);
  ScalarField v(g, FieldKind::Potential);  // zero potential
  const ScalarField psi = test::box_mode(g, 1, 1);
  const double e = box_energy(60e-9, 40e-9);
  const ScalarField hp = apply_hamiltonian(v, psi, m_eff);

  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < hp.values().size(); ++i) {
    const double d = hp.values()[i] - e * psi.values()[i];
    num += d * d;
    den += e * e * psi.values()[i] * psi.values()[i];
  }
  // discrete-vs-continuum eigenvalue mismatch is O(h^2) ~ 1e-5 here
  CHECK(std::sqrt(num / den) < 1e-3);
}

TEST_CASE("energy_expectation against analytic references") {
  const Grid g = Grid::from_nm(30, 20, 0.5);
  ScalarField v0(g, FieldKind::Potential);
  const ScalarField box = test::box_mode(g, 1, 1);
  const double e_box = box_energy(60e-9, 40e-9);
  CHECK(test::rel_diff(energy_expectation(v0, box, m_eff), e_box) < 0.005);

  // constant shift is exact
  const double c = 3e-22;
  ScalarField vc = v0;
  for (double& val : vc.values()) val += c;
  const double e1 = energy_expectation(v0, box, m_eff);
  const double e2 = energy_expectation(vc, box, m_eff);
  CHECK(e2 - e1 == doctest::Approx(c).epsilon(1e-12));

  // harmonic ground state: E = hbar omega for the 2D oscillator
  const double omega = std::sqrt(2.0 * 1.5e-19 / m_eff) / 20e-9;
  const double l_osc = std::sqrt(k::hbar / (m_eff * omega));
  const ScalarField vh = ScalarField::from_function(
      g, FieldKind::Potential, [&](double x, double y) {
        return 0.5 * m_eff * omega * omega * (x * x + y * y);
      });
  const ScalarField ground = test::amplitude_from(g, [&](double x, double y) {
    return std::exp(-(x * x + y * y) / (2.0 * l_osc * l_osc));
  });
  CHECK(test::rel_diff(energy_expectation(vh, ground, m_eff), k::hbar * omega) <
        0.005);

  ScalarField unnorm = box;
  for (double& val : unnorm.values()) val *= 1.001;
  CHECK_THROWS_AS(energy_expectation(v0, unnorm, m_eff), Error);
}

TEST_CASE("hamiltonian is symmetric and commutes with x-parity") {
  const Grid g = Grid::from_nm(12, 8, 1);
  const ScalarField v = ScalarField::from_function(
      g, FieldKind::Potential, [](double x, double y) {
        return 1e-20 * std::exp(-x * x / 1e-17) + 5e-21 * y * y / 1e-16;
      });
  for (unsigned seed : {1u, 2u, 3u}) {
    const ScalarField f = test::random_amplitude(g, seed);
    const ScalarField h = test::random_amplitude(g, seed + 100);
    const double a = inner_product(f, apply_hamiltonian(v, h, m_eff));
    const double b = inner_product(apply_hamiltonian(v, f, m_eff), h);
    CHECK(test::rel_diff(a, b) < 1e-10);
  }

  const ScalarField even = test::amplitude_from(g, [](double x, double y) {
    return (1.0 + x * x / 1e-16) * std::exp(-(x * x + 2 * y * y) / 4e-17);
  });
  const ScalarField odd = test::amplitude_from(g, [](double x, double y) {
    return x * std::exp(-(x * x + 2 * y * y) / 4e-17) / 1e-9;
  });
  for (double parity : {1.0, -1.0}) {
    const ScalarField& f = parity > 0 ? even : odd;
    const ScalarField hf = apply_hamiltonian(v, f, m_eff);
    const double scale = hf.max_abs();
    for (int j = 0; j < g.ny(); ++j) {
      for (int i = 0; i < g.nx(); ++i) {
        CHECK(std::abs(hf(i, j) - parity * hf(g.nx() - 1 - i, j)) <=
              1e-12 * scale);
      }
    }
  }
}

TEST_CASE("discretization order of the box ground energy is two") {
  const double e_exact = box_energy(60e-9, 40e-9);
  auto error_at = [&](double step_nm) {
    const Grid g = Grid::from_nm(30, 20, step_nm);
    ScalarField v(g, FieldKind::Potential);
    return std::abs(energy_expectation(v, test::box_mode(g, 1, 1), m_eff) -
                    e_exact);
  };
  const double order = std::log2(error_at(2.0) / error_at(1.0));
  CHECK(order > 1.7);
  CHECK(order < 2.3);
}
