#ifndef QDSIM_POTENTIALS_HPP
#define QDSIM_POTENTIALS_HPP

#include "qdsim/field.hpp"

namespace qdsim {

// Double-well dot model: V = m w^2 (x^2+y^2)/2 + V_B exp(-x^2/(w l)^2).
// omega is stored explicitly; the default ties the harmonic rim to the
// barrier height, m omega^2 l^2 / 2 = V_B, so V_harmonic(l) = V_B.
// Pulsing the barrier (changing v_b) leaves omega untouched.
struct DoubleWellParams {
  double m_eff;   // kg
  double l;       // m, characteristic size
  double v_b;     // J, barrier height
  double w;       // relative barrier width, in (0, 1)
  double omega;   // rad/s

  static DoubleWellParams defaults();
  static double default_omega(double m_eff, double l, double v_b);

  DoubleWellParams with_w(double w_new) const;
  DoubleWellParams with_v_b(double v_b_new) const;
  void validate() const;
};

// Quartic alternative with minima at x = +-a:
// V = (m omega^2 / 2) * ((x^2 - a^2)^2 / (4 a^2) + y^2).
struct QuarticParams {
  double m;      // kg
  double omega;  // rad/s
  double a;      // m

  void validate() const;
};

// Control/target pair layout. R separates the dot centers; r separates
// the control's logical density maxima; kappa is the static dielectric
// constant entering every Coulomb energy.
struct CnotGeometry {
  double r;      // m
  double R;      // m
  double kappa;  // dimensionless

  void validate() const;  // requires R > r/2 > 0
};

ScalarField double_well_potential(const DoubleWellParams& p, const Grid& grid);
ScalarField quartic_potential(const QuarticParams& p, const Grid& grid);

// Point-charge estimate of the control electron's Coulomb energy on the
// target symmetry axis: e^2/(4 pi eps0 kappa (y + R + s r/2)).
// s = +1 for control |0>, -1 for control |1>.
double coulomb_point_estimate(double y, const CnotGeometry& geom, int s);

// Coulomb field of a frozen control-dot charge density on the target grid.
// The control frame is rotated 90 degrees: a control node (cx, cy) sits at
// target-frame distance sqrt((x+cy)^2 + (y+R+cx)^2), which places the
// control |1> density maximum (cx = -r/2) nearest the target (R - r/2).
// Node pairs closer than half a step are excluded; if the excluded density
// weight is significant the dots overlap and a ConfigError is thrown.
ScalarField coulomb_field_from_density(const ScalarField& control_density,
                                       const CnotGeometry& geom,
                                       const Grid& target_grid);

}  // namespace qdsim

#endif
