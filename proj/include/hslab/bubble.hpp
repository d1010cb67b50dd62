// The explicit Euclidean extremal profiles of the weighted critical
// Sobolev quotient ("bubbles"):
//
//   u(r) = ( a^{(2-s)/2} k^{(2-s)/2} / (a^{2-s} + r^{2-s}) )^{(n-2)/(2-s)},
//   k^{2-s} = (n-2)(n-s) K(n,s),  a > 0.
//
// Every member of the scale family satisfies, with D = -div grad,
//
//   D u = K(n,s)^{-1} u^{2*(s)-1} / r^s,
//   integral of u^{2*(s)} / r^s over R^n = 1,
//   integral of |grad u|^2 over R^n = K(n,s)^{-1},
//
// which makes the bubble the ground truth for the solver and blow-up
// analyses.  Integrals over R^n are evaluated as the grid quadrature on
// [0, r_max] plus a convergent power-series tail, so truncation is not an
// error source.

#ifndef HSLAB_BUBBLE_HPP
#define HSLAB_BUBBLE_HPP

#include "hslab/constants.hpp"
#include "hslab/radial.hpp"

namespace hslab {

struct BubbleProfile {
    Params p;
    double a = 1.0;              // scale
    double center_offset = 0.0;  // radial offset of the center; 0 in all shipped uses
    double k = 0.0;              // bubble_scale_constant(p), cached

    BubbleProfile(const Params& params, double scale, double offset = 0.0);
};

/// u(r) at radial distance r >= 0 from the bubble center.
double bubble_eval(const BubbleProfile& b, double r);

/// Analytic radial derivative u'(r).
double bubble_deriv(const BubbleProfile& b, double r);

/// integral over R^n of u^{2*(s)} |X|^{-s}: quadrature on the grid's chart
/// plus the closed-form tail.  The grid must be flat and wide enough
/// (r_max > 2a).  Throws QuadratureError when the internal error estimate
/// (coarse/fine comparison) exceeds tol * value.
double bubble_weighted_mass(const BubbleProfile& b, const GridPtr& quad, double tol = 1e-6);

/// integral over R^n of |grad u|^2, same scheme (analytic u', not
/// differences).
double bubble_dirichlet_energy(const BubbleProfile& b, const GridPtr& quad, double tol = 1e-6);

struct PdeResidualOptions {
    double window_lo = 0.05;  // fraction of r_max: measurement window start
    double window_hi = 0.95;  // fraction of r_max: measurement window end
    double kinv_override = 0; // 0 means use 1/k_opt(p)
    bool check_refinement = false; // re-run on the half grid and require decrease
};

/// Max over nodes in the measurement window of
///   |(-u'' - (n-1) u'/r) - K^{-1} u^{2*(s)-1} r^{-s}|
/// with 5-point finite-difference stencils (4th order) on the graded grid.
/// Endpoint neighbourhoods are excluded because the derivative of the
/// profile is not smooth at r = 0 for non-integer 2-s.
/// With check_refinement set, throws QuadratureError ("grid too coarse")
/// if the half-resolution residual is not larger.
double bubble_pde_residual(const BubbleProfile& b, const GridPtr& grid,
                           const PdeResidualOptions& opts = {});

} // namespace hslab

#endif // HSLAB_BUBBLE_HPP
