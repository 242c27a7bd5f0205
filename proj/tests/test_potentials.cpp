#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "qdsim/constants.hpp"
#include "qdsim/error.hpp"
#include "qdsim/potentials.hpp"

using namespace qdsim;
namespace k = qdsim::constants;

TEST_CASE("double-well potential values and symmetry") {
  const DoubleWellParams p = DoubleWellParams::defaults();
  const Grid g = Grid::from_nm(30, 20, 0.5);
  const ScalarField v = double_well_potential(p, g);

  const int ic = (g.nx() - 1) / 2;
  const int jc = (g.ny() - 1) / 2;
  CHECK(v(ic, jc) == doctest::Approx(1.5e-19).epsilon(1e-14));

  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      CHECK(v(i, j) == v(g.nx() - 1 - i, j));
      CHECK(v(i, j) == v(i, g.ny() - 1 - j));
    }
  }

  // value at x = w*l (a grid node for w = 0.2, l = 20 nm)
  const double wl = p.w * p.l;
  const int i_wl = ic + static_cast<int>(std::round(wl / g.step()));
  const double expect =
      0.5 * p.m_eff * p.omega * p.omega * wl * wl + p.v_b / std::exp(1.0);
  CHECK(v(i_wl, jc) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("double-well minima sit off-center on the x axis") {
  const DoubleWellParams p = DoubleWellParams::defaults();
  const Grid g = Grid::from_nm(30, 20, 0.5);
  const ScalarField v = double_well_potential(p, g);

  double vmin = v(0, 0);
  int imin = 0, jmin = 0;
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      if (v(i, j) < vmin) {
        vmin = v(i, j);
        imin = i;
        jmin = j;
      }
    }
  }
  CHECK(g.y(jmin) == 0.0);
  CHECK(std::abs(g.x(imin)) > 0.0);
  CHECK(vmin < v((g.nx() - 1) / 2, (g.ny() - 1) / 2));
  // the mirrored node is an equal minimum
  CHECK(v(g.nx() - 1 - imin, jmin) == vmin);
}

TEST_CASE("quartic potential") {
  QuarticParams p;
  p.m = 0.065 * k::electron_mass;
  p.omega = 5e13;
  p.a = 10e-9;
  const Grid g = Grid::from_nm(30, 20, 0.5);
  const ScalarField v = quartic_potential(p, g);

  const int ic = (g.nx() - 1) / 2;
  const int jc = (g.ny() - 1) / 2;
  const int ia = ic + static_cast<int>(std::round(p.a / g.step()));
  CHECK(v(ia, jc) == doctest::Approx(0.0).epsilon(1e-30));
  CHECK(v(2 * ic - ia, jc) == doctest::Approx(0.0).epsilon(1e-30));

  const double v00 = p.m * p.omega * p.omega * p.a * p.a / 8.0;
  CHECK(v(ic, jc) == doctest::Approx(v00).epsilon(1e-12));

  // separable in y: V(x,y) - V(x,0) = m omega^2 y^2 / 2
  const double half_m_omega2 = 0.5 * p.m * p.omega * p.omega;
  for (int j = 0; j < g.ny(); ++j) {
    const double expect = half_m_omega2 * g.y(j) * g.y(j);
    for (int i = 0; i < g.nx(); i += 7) {
      CHECK(v(i, j) - v(i, jc) == doctest::Approx(expect).epsilon(1e-10));
    }
  }
}

TEST_CASE("coulomb_point_estimate") {
  // effective distance 10 nm at kappa = 12.8 is about 11 meV
  const CnotGeometry geom{10e-9, 15e-9, 12.8};
  const double v = coulomb_point_estimate(0.0, geom, -1);  // 15 - 5 = 10 nm
  const double mev = v / k::elementary_charge * 1e3;
  CHECK(std::abs(mev - 11.0) / 11.0 < 0.03);

  // s = +1 and s = -1 distances differ by exactly r
  const double vp = coulomb_point_estimate(3e-9, geom, +1);
  const double vm = coulomb_point_estimate(3e-9, geom, -1);
  const double dp = k::coulomb * k::elementary_charge * k::elementary_charge /
                    (geom.kappa * vp);
  const double dm = k::coulomb * k::elementary_charge * k::elementary_charge /
                    (geom.kappa * vm);
  CHECK(dp - dm == doctest::Approx(geom.r).epsilon(1e-12));

  // strictly decreasing in R
  double prev = coulomb_point_estimate(0.0, CnotGeometry{10e-9, 20e-9, 12.8}, +1);
  for (double rr : {30e-9, 40e-9, 60e-9, 100e-9}) {
    const double cur = coulomb_point_estimate(0.0, CnotGeometry{10e-9, rr, 12.8}, +1);
    CHECK(cur < prev);
    prev = cur;
  }

  CHECK_THROWS_AS(coulomb_point_estimate(-20e-9, geom, -1), Error);
  CHECK_THROWS_AS(coulomb_point_estimate(0.0, CnotGeometry{30e-9, 10e-9, 12.8}, +1),
                  ConfigError);
}

TEST_CASE("coulomb field of a point density matches the bare kernel") {
  const Grid cg = Grid::from_nm(12, 8, 1);
  const Grid tg = Grid::from_nm(12, 8, 1);
  const CnotGeometry geom{8e-9, 50e-9, 12.8};

  ScalarField density(cg, FieldKind::Density);
  const double h = cg.step();
  density.at((cg.nx() - 1) / 2, (cg.ny() - 1) / 2) = 1.0 / (h * h);
  const ScalarField vc = coulomb_field_from_density(density, geom, tg);

  const double pref =
      k::coulomb * k::elementary_charge * k::elementary_charge / geom.kappa;
  for (int j = 0; j < tg.ny(); ++j) {
    for (int i = 0; i < tg.nx(); ++i) {
      const double d = std::hypot(tg.x(i), tg.y(j) + geom.R);
      CHECK(vc(i, j) == doctest::Approx(pref / d).epsilon(1e-12));
    }
  }
}

TEST_CASE("coulomb field far-field approaches the monopole") {
  const Grid cg = Grid::from_nm(12, 8, 1);
  const Grid tg = Grid::from_nm(12, 8, 2);
  const double sigma = 3e-9;  // dot extent ~ 6 sigma = 18 nm
  const CnotGeometry geom{8e-9, 200e-9, 12.8};

  const ScalarField blob = test::gaussian_blob(cg, 0, 0, sigma);
  ScalarField density(cg, FieldKind::Density);
  for (std::size_t i = 0; i < blob.values().size(); ++i) {
    density.values()[i] = blob.values()[i] * blob.values()[i];
  }
  const ScalarField vc = coulomb_field_from_density(density, geom, tg);
  const double pref =
      k::coulomb * k::elementary_charge * k::elementary_charge / geom.kappa;
  for (int j = 0; j < tg.ny(); ++j) {
    for (int i = 0; i < tg.nx(); ++i) {
      const double d = std::hypot(tg.x(i), tg.y(j) + geom.R);
      CHECK(test::rel_diff(vc(i, j), pref / d) < 0.01);
    }
  }
}

TEST_CASE("coulomb field symmetry, bound, and point-estimate agreement") {
  const Grid cg = Grid::from_nm(12, 8, 1);
  const Grid tg = Grid::from_nm(12, 8, 1);
  const double r_sep = 8e-9;
  const CnotGeometry geom{r_sep, 50e-9, 12.8};

  // control |0> density: blob at control x = +r/2, even in control y
  const ScalarField blob = test::gaussian_blob(cg, r_sep / 2.0, 0, 2.5e-9);
  ScalarField density(cg, FieldKind::Density);
  for (std::size_t i = 0; i < blob.values().size(); ++i) {
    density.values()[i] = blob.values()[i] * blob.values()[i];
  }
  const ScalarField vc = coulomb_field_from_density(density, geom, tg);

  // even in target x
  double vmax = vc.max_abs();
  for (int j = 0; j < tg.ny(); ++j) {
    for (int i = 0; i < tg.nx(); ++i) {
      CHECK(std::abs(vc(i, j) - vc(tg.nx() - 1 - i, j)) <= 1e-12 * vmax);
    }
  }

  // positive and bounded by the closest-pair kernel value
  double d_min = 1e9;
  for (int j = 0; j < tg.ny(); ++j) {
    for (int i = 0; i < tg.nx(); ++i) {
      for (int cj = 0; cj < cg.ny(); ++cj) {
        for (int ci = 0; ci < cg.nx(); ++ci) {
          const double d = std::hypot(tg.x(i) + cg.y(cj),
                                      tg.y(j) + geom.R + cg.x(ci));
          d_min = std::min(d_min, d);
        }
      }
    }
  }
  const double bound = k::coulomb * k::elementary_charge *
                       k::elementary_charge / (geom.kappa * d_min);
  for (double v : vc.values()) {
    CHECK(v > 0.0);
    CHECK(v <= bound * (1.0 + 1e-12));
  }

  // electron pinned at the |0> maximum reproduces the s = +1 point estimate
  // along the target symmetry axis within 2%
  ScalarField point(cg, FieldKind::Density);
  const double h = cg.step();
  const int i_peak = (cg.nx() - 1) / 2 +
                     static_cast<int>(std::round(r_sep / 2.0 / h));
  point.at(i_peak, (cg.ny() - 1) / 2) = 1.0 / (h * h);
  const ScalarField vc_point = coulomb_field_from_density(point, geom, tg);
  const int ic = (tg.nx() - 1) / 2;
  for (int j = 0; j < tg.ny(); ++j) {
    const double estimate = coulomb_point_estimate(tg.y(j), geom, +1);
    CHECK(test::rel_diff(vc_point(ic, j), estimate) < 0.02);
  }
}

TEST_CASE("coulomb field rejects unnormalized density and overlapping dots") {
  const Grid cg = Grid::from_nm(12, 8, 1);
  const Grid tg = Grid::from_nm(12, 8, 1);
  ScalarField density(cg, FieldKind::Density);
  density.at(5, 5) = 3.0;  // not normalized
  CHECK_THROWS_AS(
      coulomb_field_from_density(density, CnotGeometry{8e-9, 50e-9, 12.8}, tg),
      Error);

  // R far smaller than the dot extents makes the grids overlap
  const ScalarField blob = test::gaussian_blob(cg, 0, 0, 4e-9);
  ScalarField dens(cg, FieldKind::Density);
  for (std::size_t i = 0; i < blob.values().size(); ++i) {
    dens.values()[i] = blob.values()[i] * blob.values()[i];
  }
  CHECK_THROWS_AS(
      coulomb_field_from_density(dens, CnotGeometry{8e-9, 5e-9, 12.8}, tg),
      ConfigError);
}
