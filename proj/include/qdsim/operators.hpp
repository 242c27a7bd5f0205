#ifndef QDSIM_OPERATORS_HPP
#define QDSIM_OPERATORS_HPP

#include "qdsim/field.hpp"

namespace qdsim {

// Discrete L2 pairing, h^2 * sum f_i g_i. Fields must share a grid.
double inner_product(const ScalarField& f, const ScalarField& g);

// H psi = -hbar^2/(2 m_eff) * Laplacian_5pt(psi) + V * psi with Dirichlet
// zero boundary. psi must have an exactly zero boundary.
ScalarField apply_hamiltonian(const ScalarField& V, const ScalarField& psi,
                              double m_eff);

// <psi|H|psi> for a normalized psi (norm enforced within 1e-6).
double energy_expectation(const ScalarField& V, const ScalarField& psi,
                          double m_eff);

}  // namespace qdsim

#endif
