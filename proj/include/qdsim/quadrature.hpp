#ifndef QDSIM_QUADRATURE_HPP
#define QDSIM_QUADRATURE_HPP

#include <vector>

namespace qdsim {

// Gauss-Legendre abscissas and weights on [-1, 1], Newton iteration on the
// Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

}  // namespace qdsim

#endif
