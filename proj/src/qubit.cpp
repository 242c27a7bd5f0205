#include "qdsim/qubit.hpp"

#include <cmath>
#include <string>

#include "qdsim/constants.hpp"
#include "qdsim/error.hpp"
#include "qdsim/operators.hpp"

namespace qdsim {

namespace {

// <psi(-x,y), psi(x,y)>: +1 for even, -1 for odd x-parity.
double x_parity(const ScalarField& psi) {
  const Grid& g = psi.grid();
  double s = 0.0;
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      s += psi(i, j) * psi(g.nx() - 1 - i, j);
    }
  }
  return s * g.step() * g.step();
}

struct RefinedMax {
  double x;
  double y;
};

// Density maximum with per-axis quadratic refinement around the max node.
RefinedMax refined_density_max(const ScalarField& psi) {
  const Grid& g = psi.grid();
  int bi = 0, bj = 0;
  double best = -1.0;
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      const double d = psi(i, j) * psi(i, j);
      if (d > best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  }
  auto vertex_offset = [](double f0, double f1, double f2) {
    const double den = f0 - 2.0 * f1 + f2;
    return den == 0.0 ? 0.0 : 0.5 * (f0 - f2) / den;
  };
  double dx = 0.0, dy = 0.0;
  if (bi > 0 && bi < g.nx() - 1) {
    auto d = [&](int i) { return psi(i, bj) * psi(i, bj); };
    dx = vertex_offset(d(bi - 1), d(bi), d(bi + 1));
  }
  if (bj > 0 && bj < g.ny() - 1) {
    auto d = [&](int j) { return psi(bi, j) * psi(bi, j); };
    dy = vertex_offset(d(bj - 1), d(bj), d(bj + 1));
  }
  return {g.x(bi) + dx * g.step(), g.y(bj) + dy * g.step()};
}

}  // namespace

LogicalBasis logical_basis(const ScalarField& psi1, const ScalarField& psi2) {
  if (psi1.grid() != psi2.grid()) {
    throw Error("logical_basis: states live on different grids");
  }
  if (std::abs(psi1.squared_norm() - 1.0) > 1e-6 ||
      std::abs(psi2.squared_norm() - 1.0) > 1e-6) {
    throw Error("logical_basis: states must be normalized");
  }
  if (std::abs(inner_product(psi1, psi2)) > 1e-8) {
    throw Error("logical_basis: states must be orthogonal");
  }
  const double p1 = x_parity(psi1);
  const double p2 = x_parity(psi2);
  if (p1 * p2 >= 0.0 || std::min(std::abs(p1), std::abs(p2)) < 0.999) {
    throw Error("logical_basis: states do not have opposite x-parity (" +
                std::to_string(p1) + ", " + std::to_string(p2) + ")");
  }

  const Grid& g = psi1.grid();
  ScalarField zero(g, FieldKind::Amplitude);
  ScalarField one(g, FieldKind::Amplitude);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < zero.values().size(); ++i) {
    zero.values()[i] = inv_sqrt2 * (psi1.values()[i] + psi2.values()[i]);
    one.values()[i] = inv_sqrt2 * (psi1.values()[i] - psi2.values()[i]);
  }
  // The eigensolver sign convention makes the sum the x > 0 state; inputs
  // from elsewhere may carry the opposite sign of psi2.
  if (localization(zero, HalfPlane::PositiveX) <
      localization(one, HalfPlane::PositiveX)) {
    std::swap(zero.values(), one.values());
  }
  return {std::move(zero), std::move(one)};
}

double localization(const ScalarField& psi, HalfPlane half) {
  const Grid& g = psi.grid();
  const int ic = (g.nx() - 1) / 2;  // x = 0 column
  double s = 0.0;
  for (int j = 0; j < g.ny(); ++j) {
    if (half == HalfPlane::PositiveX) {
      for (int i = ic + 1; i < g.nx(); ++i) s += psi(i, j) * psi(i, j);
    } else {
      for (int i = 0; i < ic; ++i) s += psi(i, j) * psi(i, j);
    }
    s += 0.5 * psi(ic, j) * psi(ic, j);
  }
  return s * g.step() * g.step();
}

double density_maxima_separation(const ScalarField& zero,
                                 const ScalarField& one) {
  if (zero.grid() != one.grid()) {
    throw Error("density_maxima_separation: grids differ");
  }
  const RefinedMax mz = refined_density_max(zero);
  const RefinedMax mo = refined_density_max(one);
  if (mz.x * mo.x >= 0.0) {
    throw Error("density_maxima_separation: basis not localized; density "
                "maxima on the same side of x = 0");
  }
  const double dx = mz.x - mo.x;
  const double dy = mz.y - mo.y;
  return std::sqrt(dx * dx + dy * dy);
}

LogicalState evolve(const LogicalState& state, double omega1, double omega2,
                    double t) {
  if (omega2 < omega1) {
    throw Error("evolve: requires omega2 >= omega1");
  }
  const double dw = omega2 - omega1;
  const std::complex<double> phase =
      std::exp(std::complex<double>(0.0, -(omega1 + omega2) * t / 2.0));
  const double c = std::cos(dw * t / 2.0);
  const double s = std::sin(dw * t / 2.0);
  const std::complex<double> is(0.0, s);
  return {phase * (state.c0 * c + is * state.c1),
          phase * (state.c1 * c + is * state.c0)};
}

QubitCharacterization characterize(const SpectrumResult& spectrum) {
  if (spectrum.states.size() < 2) {
    throw Error("characterize: need at least the lowest two states");
  }
  const double e0 = spectrum.energies[0];
  const double e1 = spectrum.energies[1];
  const double eps10 = e1 - e0;
  const double resolution =
      std::numeric_limits<double>::epsilon() * std::max(std::abs(e0), std::abs(e1));
  if (eps10 <= 0.0 || eps10 < 1e3 * resolution) {
    throw Error("characterize: doublet splitting " + std::to_string(eps10) +
                " J is not resolved above the energy resolution");
  }
  QubitCharacterization out;
  out.eps10 = eps10;
  out.delta_omega = eps10 / constants::hbar;
  out.t_not = constants::pi / out.delta_omega;

  const LogicalBasis basis = logical_basis(spectrum.states[0], spectrum.states[1]);
  out.r = density_maxima_separation(basis.zero, basis.one);
  out.loc0 = localization(basis.zero, HalfPlane::PositiveX);
  out.loc1 = localization(basis.one, HalfPlane::NegativeX);
  return out;
}

}  // namespace qdsim
