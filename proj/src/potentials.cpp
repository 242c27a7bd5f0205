#include "qdsim/potentials.hpp"

#include <cmath>
#include <string>

#include "qdsim/constants.hpp"
#include "qdsim/error.hpp"

namespace qdsim {

namespace {
constexpr double kMe = constants::electron_mass;
}

double DoubleWellParams::default_omega(double m_eff, double l, double v_b) {
  return std::sqrt(2.0 * v_b / m_eff) / l;
}

DoubleWellParams DoubleWellParams::defaults() {
  DoubleWellParams p;
  p.m_eff = 0.065 * kMe;
  p.l = 20.0 * constants::nm;
  p.v_b = 1.5e-19;
  p.w = 0.2;
  p.omega = default_omega(p.m_eff, p.l, p.v_b);
  return p;
}

DoubleWellParams DoubleWellParams::with_w(double w_new) const {
  DoubleWellParams p = *this;
  p.w = w_new;
  return p;
}

DoubleWellParams DoubleWellParams::with_v_b(double v_b_new) const {
  DoubleWellParams p = *this;  // omega deliberately kept
  p.v_b = v_b_new;
  return p;
}

void DoubleWellParams::validate() const {
  if (m_eff <= 0 || l <= 0 || v_b <= 0 || omega <= 0) {
    throw ConfigError("double-well params: all of m_eff, l, v_b, omega must be positive");
  }
  if (w <= 0.0 || w >= 1.0) {
    throw ConfigError("double-well params: w must lie in (0, 1), got " +
                      std::to_string(w));
  }
}

void QuarticParams::validate() const {
  if (m <= 0 || omega <= 0 || a <= 0) {
    throw ConfigError("quartic params: all of m, omega, a must be positive");
  }
}

void CnotGeometry::validate() const {
  if (!(R > r / 2.0 && r > 0.0)) {
    throw ConfigError("cnot geometry: requires R > r/2 > 0");
  }
  if (kappa <= 0.0) {
    throw ConfigError("cnot geometry: kappa must be positive");
  }
}

ScalarField double_well_potential(const DoubleWellParams& p, const Grid& grid) {
  p.validate();
  const double half_m_omega2 = 0.5 * p.m_eff * p.omega * p.omega;
  const double wl = p.w * p.l;
  return ScalarField::from_function(
      grid, FieldKind::Potential, [&](double x, double y) {
        return half_m_omega2 * (x * x + y * y) +
               p.v_b * std::exp(-(x * x) / (wl * wl));
      });
}

ScalarField quartic_potential(const QuarticParams& p, const Grid& grid) {
  p.validate();
  const double half_m_omega2 = 0.5 * p.m * p.omega * p.omega;
  const double a2 = p.a * p.a;
  return ScalarField::from_function(
      grid, FieldKind::Potential, [&](double x, double y) {
        const double d = x * x - a2;
        return half_m_omega2 * (d * d / (4.0 * a2) + y * y);
      });
}

double coulomb_point_estimate(double y, const CnotGeometry& geom, int s) {
  geom.validate();
  if (s != 1 && s != -1) {
    throw Error("coulomb_point_estimate: s must be +1 or -1");
  }
  const double d = y + geom.R + s * geom.r / 2.0;
  if (d <= 0.0) {
    throw Error("coulomb_point_estimate: nonpositive charge distance " +
                std::to_string(d));
  }
  const double e = constants::elementary_charge;
  return constants::coulomb * e * e / (geom.kappa * d);
}

ScalarField coulomb_field_from_density(const ScalarField& control_density,
                                       const CnotGeometry& geom,
                                       const Grid& target_grid) {
  geom.validate();
  const double total = [&] {
    double s = 0.0;
    for (double v : control_density.values()) s += v;
    const double hc = control_density.grid().step();
    return s * hc * hc;
  }();
  if (std::abs(total - 1.0) > 1e-6) {
    throw Error("coulomb_field_from_density: control density not normalized "
                "(h^2 sum = " + std::to_string(total) + ")");
  }

  const Grid& cg = control_density.grid();
  const double hc = cg.step();
  const double cutoff = 0.5 * std::max(hc, target_grid.step());
  const double coupling =
      constants::coulomb * constants::elementary_charge *
      constants::elementary_charge / geom.kappa;

  // Control node charges; near-zero weights are dropped up front, which cuts
  // the O(N^2) sum down to the populated region.
  struct Charge { double u_off; double v; double q; };
  std::vector<Charge> charges;
  charges.reserve(cg.size() / 4);
  const double weight_floor = 1e-18 / (hc * hc);  // fraction 1e-18 of an electron
  for (int cj = 0; cj < cg.ny(); ++cj) {
    for (int ci = 0; ci < cg.nx(); ++ci) {
      const double rho = control_density(ci, cj);
      if (rho <= weight_floor) continue;
      // control frame rotated into the target frame: u = -cx, v = cy
      charges.push_back({geom.R + cg.x(ci), cg.y(cj), rho * hc * hc});
    }
  }

  ScalarField out(target_grid, FieldKind::Potential);
  double worst_skipped = 0.0;  // largest density weight excluded at one node
  for (int j = 0; j < target_grid.ny(); ++j) {
    const double y = target_grid.y(j);
    for (int i = 0; i < target_grid.nx(); ++i) {
      const double x = target_grid.x(i);
      double sum = 0.0;
      double skipped = 0.0;
      for (const Charge& c : charges) {
        const double dx = x + c.v;
        const double dy = y + c.u_off;
        const double d = std::sqrt(dx * dx + dy * dy);
        if (d < cutoff) {
          skipped += c.q;
          continue;
        }
        sum += c.q / d;
      }
      worst_skipped = std::max(worst_skipped, skipped);
      out.at(i, j) = coupling * sum;
    }
  }
  if (worst_skipped > 1e-9) {
    throw ConfigError(
        "coulomb_field_from_density: control and target grids overlap "
        "(excluded density weight " + std::to_string(worst_skipped) + ")");
  }
  return out;
}

}  // namespace qdsim
