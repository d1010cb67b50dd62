// Concentration diagnostics for converged minimizers: rescaling by the
// blow-up scale mu = (max u)^{-2/(n-2)}, C^0 comparison against the unit
// bubble, weighted-mass tails outside shrinking balls, the uniform
// pointwise bound sup r^{n/2-1} u, and trend checks for alpha mu^2 -> 0.

#ifndef HSLAB_BLOWUP_HPP
#define HSLAB_BLOWUP_HPP

#include <vector>

#include "hslab/constants.hpp"
#include "hslab/radial.hpp"
#include "hslab/solver.hpp"

namespace hslab {

struct BlowupReport {
    double mu = 0.0;
    double alpha_mu2 = 0.0;
    double sup_deviation = 0.0;      // C^0 distance to the unit bubble on |X| <= R
    double concentration_tail = 0.0; // weighted-mass fraction outside B_{R mu}
    double pointwise_bound = 0.0;    // sup r^{n/2-1} u
    double peak_offset_ratio = 0.0;  // peak_radius / mu
    double window_R = 0.0;
};

/// Rescaled profile uhat(X) = mu^{n/2-1} u(mu X) on a uniform grid over
/// [0, R] (flat model), resampled with the even-extension monotone cubic.
/// Requires R * mu < r_max.
RadialFunction rescale(const RadialFunction& u, double mu, double R, int count = 1024);

/// mu^{n/2-1} * max u: the rescaled center value; equals 1 when mu is the
/// blow-up scale of u.
double rescaled_center_value(const RadialFunction& u, const Params& p, double mu);

/// sup over |X| <= R of |uhat - unit bubble| (scale a = k, centered).
double bubble_deviation(const RadialFunction& uhat, const Params& p, double R);

/// Fraction of the singular-weighted critical mass outside radius R*mu.
double concentration_tail(const RadialFunction& u, const Params& p, double mu, double R);

/// sup over nodes of r^{n/2-1} u(r).
double pointwise_bound(const RadialFunction& u, const Params& p);

struct VanishingAReport {
    double last_alpha_mu2 = 0.0;
    double slope = 0.0; // log-log slope of alpha mu^2 against alpha
};

/// Fit of the alpha mu^2 trend along a sweep; needs >= 4 points.
VanishingAReport vanishing_A_check(const std::vector<double>& alphas,
                                   const std::vector<double>& mus);
VanishingAReport vanishing_A_check(const std::vector<MinimizationResult>& sweep);

/// (sup of u on [r1+d, r2-d]) / (L2 norm of u on [r1, r2], volume measure),
/// d = (r2-r1)/4.  The local elliptic-estimate ratio away from the
/// singular point.
double local_sup_diagnostic(const RadialFunction& u, double r1, double r2);

/// Dirichlet energy of a profile over the window [0, X_hi] of its own grid
/// (no boundary condition assumed; used on rescaled windows).
double window_energy(const RadialFunction& u, double x_hi);

/// Weighted critical mass of a profile over [0, X_hi] of its own grid.
double window_mass(const RadialFunction& u, const Params& p, double x_hi);

/// All diagnostics for one converged sweep entry.
BlowupReport blowup_report(const MinimizationResult& r, const Params& p, double R_deviation,
                           double R_tail, int rescale_count = 1024);

} // namespace hslab

#endif // HSLAB_BLOWUP_HPP
