// Constrained minimization of the penalized quotient over the radial
// Dirichlet class: damped nonlinear inverse iteration.  Each step solves
// the coercive linear problem
//
//   (D_g + alpha) w = u_k^{2*(s)-1} / r^s
//
// as the tridiagonal flux-form system (A + alpha V) w = V f, renormalizes
// in the singular critical norm, and blends with the previous iterate.
// The fixed point is the discrete Euler-Lagrange equation; the reported
// multiplier is the quadrature quotient of the final normalized profile,
// so lambda == energy + alpha * mass2 holds by construction.

#ifndef HSLAB_SOLVER_HPP
#define HSLAB_SOLVER_HPP

#include <vector>

#include "hslab/constants.hpp"
#include "hslab/functional.hpp"
#include "hslab/geometry.hpp"
#include "hslab/radial.hpp"

namespace hslab {

enum class SeedProfile { bubble, constant, custom };

struct SolverOptions {
    int max_iterations = 400;
    double tolerance = 1e-8; // relative lambda change between iterates
    double damping = 0.7;    // blend weight of the new iterate, in (0, 1]
    SeedProfile initial_profile = SeedProfile::bubble;
    double bubble_seed_scale = 0.0;   // 0: use the natural scale a = k
    std::vector<double> custom_seed;  // nodal values for SeedProfile::custom
};

struct MinimizationResult {
    RadialFunction u;          // normalized: ||u||_{2*(s),s} = 1
    double alpha = 0.0;
    double lambda = 0.0;       // energy + alpha * mass2 of the normalized u
    double energy = 0.0;
    double mass2 = 0.0;
    double l2 = 0.0;
    double mu = 0.0;           // (max u)^{-2/(n-2)}
    double peak_radius = 0.0;  // smallest argmax radius
    int iterations = 0;
    double el_residual = 0.0;      // weighted EL residual at the reported lambda
    double el_residual_raw = 0.0;
    bool converged = false;
    bool diverging = false;          // lambda rose for 10 consecutive steps
    bool lambda_below_kinv = false;  // diagnostic against 1/K(n,s), not asserted
};

/// Minimize I_alpha over the radial Dirichlet class on the given grid.
/// alpha = 0 is only admitted on the flat model (the chart's Dirichlet
/// condition stands in for decay at infinity there).
MinimizationResult minimize(const ManifoldModel& m, const Params& p, const GridPtr& grid,
                            const SolverOptions& opts = {});

struct SweepGridPolicy {
    int base_count = 2048;
    double grading = 2.0;
    int min_cells_in_mu = 10; // refine when mu is resolved by fewer origin cells
    int max_count = 1 << 16;
};

/// Run minimize for each alpha in increasing order, warm-starting each
/// solve from the previous profile and refining the grid per the policy.
/// Per-alpha failures are recorded (converged = false) without aborting
/// the sweep.
std::vector<MinimizationResult> sweep_alpha(const ManifoldModel& m, const Params& p_base,
                                            const std::vector<double>& alphas,
                                            const SweepGridPolicy& policy,
                                            const SolverOptions& opts = {});

} // namespace hslab

#endif // HSLAB_SOLVER_HPP
