#include "qdsim/decoherence.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "qdsim/constants.hpp"
#include "qdsim/error.hpp"
#include "qdsim/quadrature.hpp"

namespace qdsim {

namespace {
using constants::elementary_charge;
using constants::hbar;
using constants::pi;
using constants::vacuum_permittivity;
}  // namespace

Materials Materials::gaas() {
  Materials m;
  m.m_eff = 0.065 * constants::electron_mass;
  m.s = 5.2e3;
  m.rho = 5317.0;
  m.e14 = 0.16;
  m.kappa0 = 12.8;
  m.xi = 7.0 * constants::electron_volt;
  m.kappa = 12.8;
  m.c = constants::light_speed;
  return m;
}

void Materials::validate() const {
  if (m_eff <= 0 || s <= 0 || rho <= 0 || e14 < 0 || kappa0 <= 0 || xi < 0 ||
      kappa <= 0 || c <= 0) {
    throw ConfigError("materials: constants must be positive (e14, xi may be zero)");
  }
}

std::string mechanism_name(Mechanism m) {
  switch (m) {
    case Mechanism::Photon: return "photon";
    case Mechanism::Deformation: return "deformation";
    default: return "piezoelectric";
  }
}

std::complex<double> form_factor(const ScalarField& psi_ground,
                                 const ScalarField& psi_excited, double qx,
                                 double qy) {
  if (psi_ground.grid() != psi_excited.grid()) {
    throw Error("form_factor: states live on different grids");
  }
  const Grid& g = psi_ground.grid();
  const double h = g.step();
  const std::complex<double> step_x = std::polar(1.0, qx * h);
  const auto& a = psi_ground.values();
  const auto& b = psi_excited.values();

  std::complex<double> sum = 0.0;
  for (int j = 0; j < g.ny(); ++j) {
    const std::complex<double> row_phase = std::polar(1.0, qy * g.y(j));
    std::complex<double> px = std::polar(1.0, qx * g.x(0));
    std::complex<double> row_sum = 0.0;
    const std::size_t row = g.index(0, j);
    for (int i = 0; i < g.nx(); ++i) {
      row_sum += a[row + i] * b[row + i] * px;
      px *= step_x;
    }
    sum += row_phase * row_sum;
  }
  return sum * h * h;
}

double dipole_moment_x(const ScalarField& psi_ground,
                       const ScalarField& psi_excited) {
  if (psi_ground.grid() != psi_excited.grid()) {
    throw Error("dipole_moment_x: states live on different grids");
  }
  const Grid& g = psi_ground.grid();
  double sx = 0.0, sy = 0.0;
  for (int j = 0; j < g.ny(); ++j) {
    const double y = g.y(j);
    for (int i = 0; i < g.nx(); ++i) {
      const double p = psi_ground(i, j) * psi_excited(i, j);
      sx += g.x(i) * p;
      sy += y * p;
    }
  }
  const double h2 = g.step() * g.step();
  const double dx = elementary_charge * sx * h2;
  const double dy = elementary_charge * sy * h2;
  if (std::abs(dy) > 1e-6 * std::abs(dx)) {
    throw Error("dipole_moment_x: transition carries a y moment (" +
                std::to_string(dy) + " C m); parity violated");
  }
  return dx;
}

double photon_rate(double eps10, double d_x, double c_light) {
  if (eps10 <= 0.0) throw Error("photon_rate: eps10 must be positive");
  const double omega = eps10 / hbar;
  return omega * omega * omega * d_x * d_x /
         (3.0 * pi * vacuum_permittivity * hbar * c_light * c_light * c_light);
}

double photon_rate_bound(double eps10, double r, double c_light) {
  if (eps10 <= 0.0) throw Error("photon_rate_bound: eps10 must be positive");
  const double e = elementary_charge;
  const double h4 = hbar * hbar * hbar * hbar;
  return 4.0 * eps10 * eps10 * eps10 * e * e * r * r /
         (3.0 * pi * vacuum_permittivity * h4 * c_light * c_light * c_light);
}

// --- polarization algebra ---

Vec3 transverse1_displacement(double qx, double qy, double qz) {
  (void)qz;
  const double qp = std::sqrt(qx * qx + qy * qy);
  if (qp <= 0.0) {
    throw Error("transverse1_displacement: undefined for in-plane momentum 0");
  }
  return {qy / qp, -qx / qp, 0.0};
}

Vec3 transverse2_displacement(double qx, double qy, double qz) {
  // q_hat x d_T1, completing the right-handed triad.
  const double q = std::sqrt(qx * qx + qy * qy + qz * qz);
  const double qp = std::sqrt(qx * qx + qy * qy);
  if (qp <= 0.0 || q <= 0.0) {
    throw Error("transverse2_displacement: undefined for in-plane momentum 0");
  }
  return {qx * qz / (q * qp), qy * qz / (q * qp), -qp / q};
}

Vec3 longitudinal_displacement(double qx, double qy, double qz) {
  const double q = std::sqrt(qx * qx + qy * qy + qz * qz);
  if (q <= 0.0) throw Error("longitudinal_displacement: undefined for q = 0");
  return {qx / q, qy / q, qz / q};
}

double piezo_angular_coupling(const Vec3& e_unit, const Vec3& d) {
  return e_unit[0] * e_unit[1] * d[2] + e_unit[1] * e_unit[2] * d[0] +
         e_unit[2] * e_unit[0] * d[1];
}

double transverse_coupling_sq_closed(double theta, double phi) {
  const double ct = std::cos(theta);
  const double bracket = 4.0 * (7.0 - 9.0 * std::cos(2.0 * theta)) *
                             std::cos(4.0 * phi) * ct * ct -
                         28.0 * std::cos(2.0 * theta) +
                         9.0 * std::cos(4.0 * theta) + 27.0;
  return ct * ct * bracket / 64.0;
}

double transverse_coupling_sq_summed(double theta, double phi) {
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  const double qx = ct * std::cos(phi);
  const double qy = ct * std::sin(phi);
  const double qz = st;
  const Vec3 e{qx, qy, qz};
  const double b1 = piezo_angular_coupling(e, transverse1_displacement(qx, qy, qz));
  const double b2 = piezo_angular_coupling(e, transverse2_displacement(qx, qy, qz));
  return b1 * b1 + b2 * b2;
}

// --- angular quadrature over the emission sphere ---

namespace {

// Integrates cos(th) * angular(th, ph) * |I(q cos th (cos ph, sin ph))|^2
// over th in [-pi/2, pi/2], ph in [0, 2 pi): Gauss-Legendre in theta,
// trapezoid (exact for periodic integrands) in phi.
double emission_integral(const ScalarField& psi0, const ScalarField& psi1,
                         double q, int n_theta, int n_phi,
                         const std::function<double(double, double)>& angular) {
  std::vector<double> gx, gw;
  gauss_legendre(n_theta, gx, gw);
  const double dphi = 2.0 * pi / n_phi;

  double total = 0.0;
  for (int a = 0; a < n_theta; ++a) {
    const double theta = gx[a] * (pi / 2.0);
    const double w_theta = gw[a] * (pi / 2.0);
    const double ct = std::cos(theta);
    const double q_par = q * ct;
    double phi_sum = 0.0;
    for (int b = 0; b < n_phi; ++b) {
      const double phi = b * dphi;
      const std::complex<double> I = form_factor(
          psi0, psi1, q_par * std::cos(phi), q_par * std::sin(phi));
      phi_sum += angular(theta, phi) * std::norm(I);
    }
    total += w_theta * ct * phi_sum * dphi;
  }
  return total;
}

// Runs the integral at the requested and at doubled node counts; errors if
// the two disagree beyond quad.check_tol instead of returning a stale value.
double checked_emission_integral(
    const ScalarField& psi0, const ScalarField& psi1, double q,
    const QuadratureSpec& quad,
    const std::function<double(double, double)>& angular, const char* what) {
  const double coarse =
      emission_integral(psi0, psi1, q, quad.n_theta, quad.n_phi, angular);
  const double fine = emission_integral(psi0, psi1, q, 2 * quad.n_theta,
                                        2 * quad.n_phi, angular);
  if (fine == 0.0 && coarse == 0.0) return 0.0;
  if (std::abs(fine - coarse) > quad.check_tol * std::abs(fine)) {
    throw ConvergenceError(std::string(what) +
                           ": angular quadrature not converged (" +
                           std::to_string(coarse) + " vs " +
                           std::to_string(fine) + " under node doubling)");
  }
  return fine;
}

void check_spectrum(const SpectrumResult& sp, const char* what) {
  if (sp.states.size() < 2) {
    throw Error(std::string(what) + ": need the lowest two states");
  }
  if (sp.eps10() <= 0.0) {
    throw Error(std::string(what) + ": eps10 must be positive");
  }
}

}  // namespace

double deformation_phonon_rate(const SpectrumResult& spectrum,
                               const Materials& mat,
                               const QuadratureSpec& quad) {
  check_spectrum(spectrum, "deformation_phonon_rate");
  if (mat.xi == 0.0) return 0.0;
  const double eps10 = spectrum.eps10();
  const double q = eps10 / (hbar * mat.s);
  const double integral = checked_emission_integral(
      spectrum.states[0], spectrum.states[1], q, quad,
      [](double, double) { return 1.0; }, "deformation_phonon_rate");
  const double h4 = hbar * hbar * hbar * hbar;
  const double s5 = std::pow(mat.s, 5);
  return mat.xi * mat.xi * eps10 * eps10 * eps10 /
         (8.0 * pi * pi * mat.rho * h4 * s5) * integral;
}

namespace {

// Shared prefactor of both piezo channels:
// eps10 (e Pi)^2 / (8 pi^2 rho hbar^2 s^3), Pi = e14/(eps0 kappa0).
double piezo_prefactor(double eps10, const Materials& mat) {
  const double coupling =
      elementary_charge * mat.e14 / (vacuum_permittivity * mat.kappa0);
  return eps10 * coupling * coupling /
         (8.0 * pi * pi * mat.rho * hbar * hbar * mat.s * mat.s * mat.s);
}

}  // namespace

double piezo_transverse_rate(const SpectrumResult& spectrum,
                             const Materials& mat, const QuadratureSpec& quad) {
  check_spectrum(spectrum, "piezo_transverse_rate");
  if (mat.e14 == 0.0) return 0.0;
  const double eps10 = spectrum.eps10();
  const double q = eps10 / (hbar * mat.s);
  // per-polarization couplings, summed over the two transverse branches
  const double integral = checked_emission_integral(
      spectrum.states[0], spectrum.states[1], q, quad,
      [](double theta, double phi) {
        return transverse_coupling_sq_summed(theta, phi);
      },
      "piezo_transverse_rate");
  return piezo_prefactor(eps10, mat) * integral;
}

double piezo_longitudinal_rate(const SpectrumResult& spectrum,
                               const Materials& mat, const QuadratureSpec& quad,
                               bool longitudinal_cos4) {
  check_spectrum(spectrum, "piezo_longitudinal_rate");
  if (mat.e14 == 0.0) return 0.0;
  const double eps10 = spectrum.eps10();
  const double q = eps10 / (hbar * mat.s);
  // (3 e_x e_y e_z)^2 = 9 cos^4(th) sin^2(th) cos^2(ph) sin^2(ph); the cos4
  // variant drops the polar Jacobian contribution from one cos factor.
  const double integral = checked_emission_integral(
      spectrum.states[0], spectrum.states[1], q, quad,
      [longitudinal_cos4](double theta, double phi) {
        const double ct = std::cos(theta);
        const double st = std::sin(theta);
        const double cp = std::cos(phi);
        const double sp = std::sin(phi);
        const double f = 9.0 * ct * ct * ct * st * st * cp * cp * sp * sp;
        return longitudinal_cos4 ? f : f * ct;
      },
      "piezo_longitudinal_rate");
  return piezo_prefactor(eps10, mat) * integral;
}

RateBreakdown rate_breakdown(const SpectrumResult& spectrum,
                             const Materials& mat, double r,
                             const QuadratureSpec& quad,
                             bool longitudinal_cos4) {
  check_spectrum(spectrum, "rate_breakdown");
  mat.validate();
  const double eps10 = spectrum.eps10();
  const double d_x = dipole_moment_x(spectrum.states[0], spectrum.states[1]);

  RateBreakdown out;
  out.w_photon = photon_rate(eps10, d_x, mat.c);
  out.w_photon_bound = photon_rate_bound(eps10, r, mat.c);
  out.w_da = deformation_phonon_rate(spectrum, mat, quad);
  out.w_pa_t = piezo_transverse_rate(spectrum, mat, quad);
  out.w_pa_l = piezo_longitudinal_rate(spectrum, mat, quad, longitudinal_cos4);
  out.total = out.w_photon + out.w_da + out.w_pa_t + out.w_pa_l;

  const double piezo = out.w_pa_t + out.w_pa_l;
  if (piezo >= out.w_da && piezo >= out.w_photon) {
    out.dominant = Mechanism::Piezoelectric;
  } else if (out.w_da >= out.w_photon) {
    out.dominant = Mechanism::Deformation;
  } else {
    out.dominant = Mechanism::Photon;
  }
  return out;
}

}  // namespace qdsim
