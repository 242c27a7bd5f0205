#include "qdsim/cnot.hpp"

#include <cmath>
#include <string>

#include "qdsim/constants.hpp"
#include "qdsim/error.hpp"
#include "qdsim/qubit.hpp"

namespace qdsim {

CnotSchedule cnot_schedule(double t_not0, double t_not1) {
  if (!(t_not0 > 0.0) || !(t_not1 > 0.0)) {
    throw Error("cnot_schedule: durations must be positive");
  }
  bool relabeled = false;
  if (t_not1 == t_not0) {
    throw Error("cnot_schedule: equal conditional durations carry no contrast");
  }
  if (t_not1 < t_not0) {
    std::swap(t_not0, t_not1);
    relabeled = true;
  }
  CnotSchedule s;
  s.t_cnot = t_not0 * t_not1 / (t_not1 - t_not0);
  s.n_real = t_not1 / (2.0 * (t_not1 - t_not0));
  s.relabeled = relabeled;
  return s;
}

double conditional_not_duration(const DoubleWellParams& dw,
                                const CnotGeometry& geom, int control_state,
                                const ScalarField& control_density,
                                const Grid& target_grid,
                                const SolverOptions& opts) {
  if (control_state != 0 && control_state != 1) {
    throw Error("conditional_not_duration: control_state must be 0 or 1");
  }
  ScalarField v = double_well_potential(dw, target_grid);
  const ScalarField vc =
      coulomb_field_from_density(control_density, geom, target_grid);
  for (std::size_t i = 0; i < v.values().size(); ++i) {
    v.values()[i] += vc.values()[i];
  }
  SolverOptions doublet = opts;
  doublet.k = 2;
  const SpectrumResult sp = lowest_states(v, dw.m_eff, doublet);
  const double eps10 = sp.eps10();
  if (eps10 <= 0.0) {
    throw Error("conditional_not_duration: perturbed doublet unresolved");
  }
  return constants::pi * constants::hbar / eps10;
}

IntegerTuneResult tune_to_integer(const std::function<double(double)>& n_real_of,
                                  double lo, double hi, double tol) {
  if (!(lo < hi)) throw Error("tune_to_integer: empty interval");
  long evals = 0;
  auto eval = [&](double v) {
    ++evals;
    return n_real_of(v);
  };

  const double n_lo = eval(lo);
  if (std::abs(n_lo - std::round(n_lo)) < tol) {
    return {lo, n_lo, static_cast<long>(std::llround(n_lo)), evals};
  }
  const double n_hi = eval(hi);
  if (std::abs(n_hi - std::round(n_hi)) < tol) {
    return {hi, n_hi, static_cast<long>(std::llround(n_hi)), evals};
  }

  double mid = 0.5 * (lo + hi);
  const double n_mid = eval(mid);
  const long target = std::llround(n_mid);
  double f_lo = n_lo - target;
  double f_hi = n_hi - target;
  double f_mid = n_mid - target;
  if (std::abs(f_mid) < tol) {
    return {mid, n_mid, target, evals};
  }

  double a, b, fa;
  if (f_lo * f_mid < 0.0) {
    a = lo; b = mid; fa = f_lo;
  } else if (f_mid * f_hi < 0.0) {
    a = mid; b = hi; fa = f_mid;
  } else {
    throw Error("tune_to_integer: no integer crossing in interval; "
                "n_real(lo) = " + std::to_string(n_lo) +
                ", n_real(hi) = " + std::to_string(n_hi));
  }

  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (a + b);
    const double nm = eval(mid);
    const double fm = nm - target;
    if (std::abs(fm) < tol) {
      return {mid, nm, target, evals};
    }
    if (fa * fm < 0.0) {
      b = mid;
    } else {
      a = mid;
      fa = fm;
    }
    if (b - a <= 1e-15 * std::abs(b)) break;
  }
  throw ConvergenceError("tune_to_integer: bisection exhausted the interval "
                         "without reaching |n_real - n| < " + std::to_string(tol));
}

CnotTimings tune_amplitude(const DoubleWellParams& dw, const CnotGeometry& geom,
                           const ScalarField& control_density0,
                           const ScalarField& control_density1,
                           std::pair<double, double> v_b_interval,
                           const Grid& target_grid, const SolverOptions& opts) {
  ScalarField base = double_well_potential(dw, target_grid);
  const ScalarField vc0 =
      coulomb_field_from_density(control_density0, geom, target_grid);
  const ScalarField vc1 =
      coulomb_field_from_density(control_density1, geom, target_grid);

  SolverOptions doublet = opts;
  doublet.k = 2;

  // Conditional durations at pulse height v_b; the confinement omega stays
  // fixed while the barrier is pulsed.
  auto durations = [&](double v_b) {
    const DoubleWellParams pulsed = dw.with_v_b(v_b);
    ScalarField v = double_well_potential(pulsed, target_grid);
    ScalarField v0 = v;
    ScalarField v1 = std::move(v);
    for (std::size_t i = 0; i < v0.values().size(); ++i) {
      v0.values()[i] += vc0.values()[i];
      v1.values()[i] += vc1.values()[i];
    }
    const double e10_0 = lowest_states(v0, dw.m_eff, doublet).eps10();
    const double e10_1 = lowest_states(v1, dw.m_eff, doublet).eps10();
    return std::pair<double, double>{constants::pi * constants::hbar / e10_0,
                                     constants::pi * constants::hbar / e10_1};
  };

  auto n_real_of = [&](double v_b) {
    const auto [t0, t1] = durations(v_b);
    return cnot_schedule(t0, t1).n_real;
  };

  const IntegerTuneResult root =
      tune_to_integer(n_real_of, v_b_interval.first, v_b_interval.second, 1e-6);

  const auto [t0, t1] = durations(root.v_b);
  const CnotSchedule sched = cnot_schedule(t0, t1);
  CnotTimings out;
  out.t_not0 = t0;
  out.t_not1 = t1;
  out.t_cnot = sched.t_cnot;
  out.n_real = sched.n_real;
  out.n = root.n;
  out.v_b_tuned = root.v_b;
  out.relabeled = sched.relabeled;
  if (sched.relabeled) std::swap(out.t_not0, out.t_not1);
  return out;
}

std::pair<double, double> verify_cnot(const CnotTimings& timings) {
  const double dw0 = constants::pi / timings.t_not0;
  const double dw1 = constants::pi / timings.t_not1;
  const LogicalState start{1.0, 0.0};
  // Only the frequency difference matters for the populations.
  const LogicalState branch0 = evolve(start, 0.0, dw0, timings.t_cnot);
  const LogicalState branch1 = evolve(start, 0.0, dw1, timings.t_cnot);
  const double identity_fidelity = std::norm(branch0.c0);
  const double not_fidelity = std::norm(branch1.c1);
  return {identity_fidelity, not_fidelity};
}

}  // namespace qdsim
