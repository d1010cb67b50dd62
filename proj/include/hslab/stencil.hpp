// Finite-difference weights on arbitrary node sets (Fornberg's recursion).

#ifndef HSLAB_STENCIL_HPP
#define HSLAB_STENCIL_HPP

#include <vector>

namespace hslab {

/// Weights w such that sum_i w[i] f(x[i]) approximates f^{(m)}(x0).
/// Exact whenever f is a polynomial of degree < x.size().  Nodes need not
/// be ordered or include x0.
std::vector<double> fd_weights(double x0, const std::vector<double>& x, int m);

} // namespace hslab

#endif // HSLAB_STENCIL_HPP
