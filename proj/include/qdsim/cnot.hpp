#ifndef QDSIM_CNOT_HPP
#define QDSIM_CNOT_HPP

#include <functional>
#include <utility>

#include "qdsim/eigensolver.hpp"
#include "qdsim/potentials.hpp"

namespace qdsim {

struct CnotSchedule {
  double t_cnot;    // s, t0 t1 / (t1 - t0)
  double n_real;    // t1 / (2 (t1 - t0))
  bool relabeled;   // true if inputs were swapped to enforce t1 > t0
};

struct CnotTimings {
  double t_not0;      // s, NOT duration with control in |0>
  double t_not1;      // s, NOT duration with control in |1>
  double t_cnot;      // s
  double n_real;
  long n;             // nearest integer after tuning
  double v_b_tuned;   // J, pulse barrier height achieving integer n
  bool relabeled;     // conditional durations swapped to make t_not1 > t_not0
};

// Pulse length and half-oscillation count from the two conditional NOT
// durations. Equal durations carry no conditional contrast and error out.
CnotSchedule cnot_schedule(double t_not0, double t_not1);

// NOT duration of the target dot under the frozen control charge density:
// solves the doublet of H = -hbar^2/(2m) Lap + V + V_C and returns
// pi hbar / eps10. control_state (0 or 1) only labels the density.
double conditional_not_duration(const DoubleWellParams& dw,
                                const CnotGeometry& geom, int control_state,
                                const ScalarField& control_density,
                                const Grid& target_grid,
                                const SolverOptions& opts = {});

struct IntegerTuneResult {
  double v_b;      // root
  double n_real;   // n_real at the root
  long n;          // target integer
  long evaluations;
};

// Bisection of f(v) = n_real(v) - N to |f| < tol, N fixed to the nearest
// integer of n_real at the interval midpoint. Endpoints already within tol
// of an integer are returned directly with no further evaluations.
IntegerTuneResult tune_to_integer(const std::function<double(double)>& n_real_of,
                                  double lo, double hi, double tol = 1e-6);

// Full amplitude tuning: varies the pulsed barrier height of the target dot
// over v_b_interval until the half-oscillation ratio is an integer,
// recomputing both conditional spectra per evaluation.
CnotTimings tune_amplitude(const DoubleWellParams& dw, const CnotGeometry& geom,
                           const ScalarField& control_density0,
                           const ScalarField& control_density1,
                           std::pair<double, double> v_b_interval,
                           const Grid& target_grid,
                           const SolverOptions& opts = {});

// Simulates the closed-form evolution for t_cnot on both control branches.
// Returns (identity fidelity for control |0>, NOT fidelity for control |1>),
// squared overlap magnitudes ignoring global phase.
std::pair<double, double> verify_cnot(const CnotTimings& timings);

}  // namespace qdsim

#endif
