#ifndef QDSIM_DECOHERENCE_HPP
#define QDSIM_DECOHERENCE_HPP

#include <array>
#include <complex>
#include <string>

#include "qdsim/eigensolver.hpp"

namespace qdsim {

// GaAs material constants used by the emission channels.
struct Materials {
  double m_eff;    // kg
  double s;        // m/s, acoustic sound speed
  double rho;      // kg/m^3, mass density
  double e14;      // C/m^2, piezoelectric constant (T_d crystals; 0 in Si)
  double kappa0;   // static dielectric constant entering the piezo coupling
  double xi;       // J, deformation potential constant
  double kappa;    // static dielectric constant for Coulomb energies
  double c;        // m/s, light speed

  static Materials gaas();
  void validate() const;
};

enum class Mechanism { Photon, Deformation, Piezoelectric };
std::string mechanism_name(Mechanism m);

struct QuadratureSpec {
  int n_theta = 64;           // Gauss-Legendre nodes over [-pi/2, pi/2]
  int n_phi = 128;            // uniform (trapezoid) nodes over [0, 2 pi)
  double check_tol = 0.005;   // node-doubling self-consistency bound
};

struct RateBreakdown {
  double w_photon;        // 1/s, exact dipole rate
  double w_photon_bound;  // 1/s, upper estimate from |d_x| <= 2 e r
  double w_da;            // 1/s, deformation acoustic phonon
  double w_pa_t;          // 1/s, piezoelectric, transverse polarizations
  double w_pa_l;          // 1/s, piezoelectric, longitudinal polarization
  double total;           // sum of exact channels (bound excluded)
  Mechanism dominant;
};

// Transition form factor I(q) = h^2 sum psi0 psi1 e^{i(qx x + qy y)}.
std::complex<double> form_factor(const ScalarField& psi_ground,
                                 const ScalarField& psi_excited, double qx,
                                 double qy);

// Transition dipole moment d_x = e h^2 sum x psi0 psi1 (C m). The y moment
// must vanish by parity; |d_y| > 1e-6 |d_x| raises an error.
double dipole_moment_x(const ScalarField& psi_ground,
                       const ScalarField& psi_excited);

// Spontaneous photon emission, W = omega^3 |d|^2 / (3 pi eps0 hbar c^3)
// with omega = eps10/hbar.
double photon_rate(double eps10, double d_x, double c_light);
// Upper estimate with |d_x| <= 2 e r: W <= 4 eps10^3 e^2 r^2 / (3 pi eps0 hbar^4 c^3).
double photon_rate_bound(double eps10, double r, double c_light);

// Deformation acoustic phonon emission,
//   W_DA = Xi^2 eps10^3 / (8 pi^2 rho hbar^4 s^5) * Int cos(th) |I(q_par)|^2,
// with the in-plane phonon momentum q_par = (eps10 / hbar s) cos(th) (cos(ph), sin(ph)).
// Every rate is evaluated at the given and at doubled node counts; a
// relative difference above check_tol raises ConvergenceError.
double deformation_phonon_rate(const SpectrumResult& spectrum,
                               const Materials& mat,
                               const QuadratureSpec& quad = {});

// Piezoelectric acoustic phonon emission. The angular coupling factors come
// from the two transverse and the longitudinal polarization vectors of a
// zinc-blende lattice; the Gaussian-unit combination 4 pi beta_bar is
// replaced by e14/(eps0 kappa0) throughout.
double piezo_transverse_rate(const SpectrumResult& spectrum,
                             const Materials& mat,
                             const QuadratureSpec& quad = {});
// The longitudinal integrand carries cos^5(th) sin^2(th) cos^2(ph) sin^2(ph)
// (polar Jacobian included). longitudinal_cos4 = true drops one cos(th)
// factor, reproducing the literal printed form of the source formula.
double piezo_longitudinal_rate(const SpectrumResult& spectrum,
                               const Materials& mat,
                               const QuadratureSpec& quad = {},
                               bool longitudinal_cos4 = false);

// All channels, their sum, and the dominant mechanism tag (photon vs
// deformation vs combined piezoelectric). r is the logical density maxima
// separation used by the photon bound.
RateBreakdown rate_breakdown(const SpectrumResult& spectrum,
                             const Materials& mat, double r,
                             const QuadratureSpec& quad = {},
                             bool longitudinal_cos4 = false);

// --- polarization algebra, exposed for verification ---

using Vec3 = std::array<double, 3>;

// Unit displacement vectors for a phonon of wave vector q (requires
// qx^2 + qy^2 > 0 for the transverse pair).
Vec3 transverse1_displacement(double qx, double qy, double qz);
Vec3 transverse2_displacement(double qx, double qy, double qz);
Vec3 longitudinal_displacement(double qx, double qy, double qz);

// Angular part of the piezo coupling for unit propagation vector e and
// displacement d: e_x e_y d_z + e_y e_z d_x + e_z e_x d_y. The physical
// coupling is this value times e14/(eps0 kappa0).
double piezo_angular_coupling(const Vec3& e_unit, const Vec3& d);

// Closed form of the polarization-summed squared transverse coupling, in
// units of (e14/(eps0 kappa0))^2:
//   (1/64) cos^2(th) (4 (7 - 9 cos 2th) cos 4ph cos^2 th - 28 cos 2th + 9 cos 4th + 27).
double transverse_coupling_sq_closed(double theta, double phi);

// Same quantity assembled from the two per-polarization couplings.
double transverse_coupling_sq_summed(double theta, double phi);

}  // namespace qdsim

#endif
