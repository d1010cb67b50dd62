// Test-function machinery for the second constant: truncated peaks
//
//   u_eps(r) = ( eps^{1-s/2} / (eps^{2-s} + r^{2-s}) )^{(n-2)/(2-s)} * cutoff(r),
//
// the least-squares fit of the quotient expansion
//
//   I_{B/K}(u_eps) = 1/K + c * theta_eps + o(theta_eps),
//   theta_eps = eps^2 (n >= 5),  eps^2 ln(1/eps) (n = 4),
//
// whose coefficient changes sign at the critical
//
//   B_crit = K(n,s) (n-2)(6-s) / (12(2n-2-s)) * Scal(x0),
//
// and a bisection search for the empirical second constant: the smallest B
// at which the minimized quotient stops dipping below (1 - tol)/K.

#ifndef HSLAB_EXPANSION_HPP
#define HSLAB_EXPANSION_HPP

#include <vector>

#include "hslab/constants.hpp"
#include "hslab/geometry.hpp"
#include "hslab/radial.hpp"
#include "hslab/solver.hpp"

namespace hslab {

/// theta_eps rule per dimension: eps^2 for n >= 5, eps^2 ln(1/eps) for
/// n = 4.  n = 3 follows a different (Green's function) expansion and is
/// rejected.
double theta_rule(int n, double eps);

/// Truncated peak profile at scale eps, cut off with a C^2 quintic
/// smoothstep between r_max/2 and 3 r_max/4.  Requires n >= 4 and
/// 0 < eps < r_max/10.
RadialFunction test_function(const ManifoldModel& m, const Params& p, double eps,
                             const GridPtr& grid);

struct ExpansionFit {
    std::vector<double> epsilons;
    std::vector<double> thetas;
    std::vector<double> values;  // I_{B/K}(u_eps)
    double k_inv = 0.0;
    double fitted_coeff = 0.0;  // c in value ~ 1/K + c theta
    double fit_residual = 0.0;  // rms misfit
    double nuisance_coeff = 0.0;
    bool used_nuisance = false;
    bool trend_ok = true; // |value - 1/K| shrank from the first to the last eps
};

struct ExpansionOptions {
    int grid_count = 4096;
    double grading = 2.0;
    int min_peak_nodes = 20;  // refine the per-eps grid until the peak spans this
    bool include_remainder = false; // add an eps^{2+delta} nuisance term to the fit
    double remainder_delta = 0.5;
    int jobs = 1;
};

/// Evaluate I_{B/K}(u_eps) over the ladder and fit value ~ 1/K + c theta.
/// Requires n >= 4 and a strictly decreasing ladder of >= 4 entries.
ExpansionFit expansion_fit(const ManifoldModel& m, const Params& p, double B,
                           const std::vector<double>& epsilons,
                           const ExpansionOptions& opts = {});

/// Closed-form critical second constant on this model:
/// K(n,s) (n-2)(6-s)/(12(2n-2-s)) * Scal(x0); zero on the flat model.
double critical_b(const ManifoldModel& m, const Params& p);

struct B0Estimate {
    double B_low = 0.0;     // largest tested B that still failed
    double B_high = 0.0;    // smallest tested B that passed
    double lambda_at_B = 0.0; // minimized quotient at B_high
    int iterations = 0;     // number of minimize calls spent
};

struct B0SearchOptions {
    double tol = 1e-4;          // pass when lambda >= (1 - tol)/K
    double bracket_rel = 0.02;  // stop when B_high - B_low <= bracket_rel * B_high
    int grid_count = 4096;
    double grading = 2.0;
    SolverOptions solve;
};

/// Bisection for the empirical second constant in the radial class.  Each
/// candidate B runs the minimizer with alpha = B/K from both the bubble
/// and the constant seed and takes the smaller quotient.  Throws
/// std::runtime_error when no passing B is found.
B0Estimate b0_search(const ManifoldModel& m, const Params& p, const B0SearchOptions& opts = {});

} // namespace hslab

#endif // HSLAB_EXPANSION_HPP
