#ifndef QDSIM_QUBIT_HPP
#define QDSIM_QUBIT_HPP

#include <complex>

#include "qdsim/eigensolver.hpp"
#include "qdsim/field.hpp"

namespace qdsim {

// Two-component logical state c0|0> + c1|1>.
struct LogicalState {
  std::complex<double> c0;
  std::complex<double> c1;

  double norm_sq() const { return std::norm(c0) + std::norm(c1); }
};

struct LogicalBasis {
  ScalarField zero;  // localizes in x > 0
  ScalarField one;   // localizes in x < 0
};

enum class HalfPlane { PositiveX, NegativeX };

// |0> = (psi1 + psi2)/sqrt(2), |1> = (psi1 - psi2)/sqrt(2) from the
// orthonormal opposite-x-parity doublet; signs arranged so |0> localizes
// in x > 0.
LogicalBasis logical_basis(const ScalarField& psi1, const ScalarField& psi2);

// Probability fraction in a half-plane; the x = 0 column contributes half
// of its weight to each side.
double localization(const ScalarField& psi, HalfPlane half);

// Distance in meters between the density maxima of |0> and |1>, refined by
// per-axis quadratic interpolation around the maximum node. Errors if both
// maxima fall on the same side of x = 0.
double density_maxima_separation(const ScalarField& zero,
                                 const ScalarField& one);

// Closed-form two-level evolution in the logical basis for state
// frequencies omega1 <= omega2:
//   c0' = e^{-i(w1+w2)t/2} (c0 cos(dw t/2) + i c1 sin(dw t/2)),
// and symmetrically for c1'.
LogicalState evolve(const LogicalState& state, double omega1, double omega2,
                    double t);

struct QubitCharacterization {
  double eps10;        // J, tunnel splitting
  double delta_omega;  // rad/s
  double t_not;        // s, pi / delta_omega
  double r;            // m, separation of logical density maxima
  double loc0;         // |0> weight in x > 0
  double loc1;         // |1> weight in x < 0
};

// Derives the gate-relevant numbers from a solved spectrum. Errors if the
// doublet splitting is non-positive or below the trustworthy floating-point
// resolution of the energies.
QubitCharacterization characterize(const SpectrumResult& spectrum);

}  // namespace qdsim

#endif
