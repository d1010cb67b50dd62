// The variational objects of the constrained minimization: the penalized
// Rayleigh quotient
//
//   I_alpha(u) = ( |grad u|_2^2 + alpha |u|_2^2 ) / ||u||_{2*(s),s}^2,
//
// the pointwise Euler-Lagrange residual of
//
//   D_g u + alpha u = lambda u^{2*(s)-1} / r^s,   D_g = -div grad,
//
// and the two-constant inequality verdict
//   ||u||_{2*(s),s}^2 <= A |grad u|_2^2 + B |u|_2^2.

#ifndef HSLAB_FUNCTIONAL_HPP
#define HSLAB_FUNCTIONAL_HPP

#include "hslab/constants.hpp"
#include "hslab/geometry.hpp"
#include "hslab/radial.hpp"

namespace hslab {

struct QuotientValue {
    double energy = 0.0;          // |grad u|_2^2
    double mass2 = 0.0;           // |u|_2^2
    double constraint_norm = 0.0; // ||u||_{2*(s),s}
    double lambda = 0.0;          // (energy + alpha mass2) / constraint_norm^2
};

/// Quotient of u itself (the denominator carries u's own weighted norm).
/// Throws std::invalid_argument for the zero function.
QuotientValue quotient(const RadialFunction& u, const Params& p);

struct ElResidual {
    double weighted = 0.0; // max |residual_j| / (1 + u_j), tames the peak
    double raw = 0.0;      // max |residual_j|
};

/// Max node residual of the radial Laplace-Beltrami form
///   [A u]_j / V_j + alpha u_j - lambda u_j^{2*(s)-1} r_j^{-s}
/// using the grid's flux-form operator, measured over the window
/// r in [window_lo * r_max, r_max).  Radii below the window carry mesh
/// ratios h/r of order one, where the pointwise form multiplied by r^{-s}
/// is not informative; the default window excludes that sub-resolution
/// core.  Requires u > 0 on interior nodes.
ElResidual el_residual(const RadialFunction& u, const Params& p, double lambda,
                       const ManifoldModel& m, double window_lo = 0.01);

struct InequalityVerdict {
    double margin = 0.0; // A energy + B mass2 - constraint_norm^2
    bool holds = false;  // margin >= 0
};

/// Verdict of the two-constant inequality for this u.
InequalityVerdict inequality_holds(const RadialFunction& u, const Params& p, double A, double B);

} // namespace hslab

#endif // HSLAB_FUNCTIONAL_HPP
