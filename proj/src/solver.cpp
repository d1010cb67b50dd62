#include "hslab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hslab/bubble.hpp"
#include "hslab/interp.hpp"

namespace hslab {

namespace {

// Thomas solve of (A + alpha V) w = b over the interior nodes 0..N-2
// (the outer node is the Dirichlet boundary).  A is the flux-form
// stiffness, an irreducible M-matrix, so pivots stay positive.
std::vector<double> solve_linear(const RadialOperator& op, double alpha,
                                 const std::vector<double>& b) {
    const int n = static_cast<int>(b.size()); // interior unknowns
    std::vector<double> diag(n), rhs(b), upper(n - 1);
    for (int j = 0; j < n; ++j) {
        double d = op.flux[j] + alpha * op.cellv[j];
        if (j > 0) {
            d += op.flux[j - 1];
        }
        diag[j] = d;
        if (j < n - 1) {
            upper[j] = -op.flux[j];
        }
    }
    // forward sweep
    for (int j = 1; j < n; ++j) {
        if (!(diag[j - 1] > 0.0) || !std::isfinite(diag[j - 1])) {
            throw std::runtime_error("minimize: tridiagonal solve lost positivity (pivot)");
        }
        const double f = -op.flux[j - 1] / diag[j - 1]; // subdiagonal over pivot
        diag[j] -= f * upper[j - 1];
        rhs[j] -= f * rhs[j - 1];
    }
    if (!(diag[n - 1] > 0.0) || !std::isfinite(diag[n - 1])) {
        throw std::runtime_error("minimize: tridiagonal solve lost positivity (pivot)");
    }
    std::vector<double> w(n);
    w[n - 1] = rhs[n - 1] / diag[n - 1];
    for (int j = n - 2; j >= 0; --j) {
        w[j] = (rhs[j] - upper[j] * w[j + 1]) / diag[j];
    }
    return w;
}

std::vector<double> seed_values(const ManifoldModel& m, const Params& p, const RadialGrid& g,
                                const SolverOptions& opts) {
    std::vector<double> v(g.count, 0.0);
    switch (opts.initial_profile) {
        case SeedProfile::bubble: {
            const double a =
                opts.bubble_seed_scale > 0.0 ? opts.bubble_seed_scale : bubble_scale_constant(p);
            const BubbleProfile b(p, a);
            for (int i = 0; i < g.count; ++i) {
                v[i] = bubble_eval(b, g.nodes[i]);
            }
            break;
        }
        case SeedProfile::constant:
            std::fill(v.begin(), v.end(), 1.0);
            break;
        case SeedProfile::custom:
            if (opts.custom_seed.size() != static_cast<std::size_t>(g.count)) {
                throw std::invalid_argument("minimize: custom seed size mismatch");
            }
            v = opts.custom_seed;
            break;
    }
    (void)m;
    v.back() = 0.0;
    return v;
}

void normalize(std::vector<double>& v, const GridPtr& grid, const Params& p, double tstar) {
    RadialFunction u(grid, v, true);
    const double norm = weighted_norm(u, p, tstar);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw std::runtime_error("minimize: degenerate normalization");
    }
    for (auto& x : v) {
        x /= norm;
    }
}

} // namespace

MinimizationResult minimize(const ManifoldModel& m, const Params& p, const GridPtr& grid,
                            const SolverOptions& opts) {
    if (opts.max_iterations < 1 || !(opts.tolerance > 0.0)) {
        throw std::invalid_argument("minimize: bad solver options");
    }
    if (!(opts.damping > 0.0 && opts.damping <= 1.0)) {
        throw std::invalid_argument("minimize: damping must lie in (0, 1]");
    }
    if (grid->n != p.n || grid->s != p.s || grid->model_label != m.label) {
        throw std::invalid_argument("minimize: grid/model/Params mismatch");
    }
    if (p.alpha == 0.0 && !m.is_flat()) {
        throw std::invalid_argument("minimize: alpha = 0 is admitted on the flat model only");
    }

    const RadialGrid& g = *grid;
    const int interior = g.count - 1;
    const double tstar = p.critical_exponent();
    const RadialOperator op = radial_operator(g);

    std::vector<double> u = seed_values(m, p, g, opts);
    normalize(u, grid, p, tstar);

    MinimizationResult out;
    out.alpha = p.alpha;
    double lambda_prev = quotient(RadialFunction(grid, u, true), p).lambda;
    int rising = 0;
    int iter = 0;
    for (; iter < opts.max_iterations; ++iter) {
        std::vector<double> b(interior);
        for (int j = 0; j < interior; ++j) {
            b[j] = op.cells[j] * std::pow(u[j], tstar - 1.0);
        }
        std::vector<double> w = solve_linear(op, p.alpha, b);
        // discrete maximum principle: the update must stay positive
        for (int j = 0; j < interior; ++j) {
            if (!(w[j] > 0.0)) {
                throw std::runtime_error("minimize: positivity lost in linear update");
            }
        }
        w.push_back(0.0);
        normalize(w, grid, p, tstar);
        for (int j = 0; j < g.count; ++j) {
            u[j] = (1.0 - opts.damping) * u[j] + opts.damping * w[j];
        }
        normalize(u, grid, p, tstar);

        const double lambda = quotient(RadialFunction(grid, u, true), p).lambda;
        const double rel = std::abs(lambda - lambda_prev) / std::abs(lambda);
        rising = (lambda > lambda_prev) ? rising + 1 : 0;
        lambda_prev = lambda;
        if (rel < opts.tolerance) {
            out.converged = true;
            ++iter;
            break;
        }
        if (rising >= 10) {
            out.diverging = true;
            ++iter;
            break;
        }
    }
    out.iterations = iter;

    normalize(u, grid, p, tstar);
    out.u = RadialFunction(grid, u, true);
    const QuotientValue q = quotient(out.u, p);
    out.energy = q.energy;
    out.mass2 = q.mass2;
    out.l2 = std::sqrt(q.mass2);
    out.lambda = q.energy + p.alpha * q.mass2; // constraint_norm == 1 by normalization
    out.lambda_below_kinv = out.lambda < 1.0 / k_opt(p);

    // peak diagnostics: smallest radius attaining the max within 1e-12 relative
    double umax = 0.0;
    for (int j = 0; j < g.count; ++j) {
        umax = std::max(umax, u[j]);
    }
    int jpeak = 0;
    for (int j = 0; j < g.count; ++j) {
        if (u[j] >= umax * (1.0 - 1e-12)) {
            jpeak = j;
            break;
        }
    }
    out.peak_radius = g.nodes[jpeak];
    out.mu = std::pow(umax, -2.0 / (p.n - 2.0));

    const ElResidual res = el_residual(out.u, p, out.lambda, m);
    out.el_residual = res.weighted;
    out.el_residual_raw = res.raw;
    return out;
}

std::vector<MinimizationResult> sweep_alpha(const ManifoldModel& m, const Params& p_base,
                                            const std::vector<double>& alphas,
                                            const SweepGridPolicy& policy,
                                            const SolverOptions& opts) {
    if (alphas.empty()) {
        throw std::invalid_argument("sweep_alpha: need at least one alpha");
    }
    for (std::size_t i = 1; i < alphas.size(); ++i) {
        if (!(alphas[i] > alphas[i - 1])) {
            throw std::invalid_argument("sweep_alpha: alphas must be increasing");
        }
    }

    std::vector<MinimizationResult> results;
    results.reserve(alphas.size());

    int count = policy.base_count;
    GridPtr grid = build_grid(m, p_base.with_alpha(alphas[0]), count, policy.grading);
    SolverOptions current = opts;

    double mu_estimate = 0.0;
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        const Params p = p_base.with_alpha(alphas[i]);
        // refine until the previous concentration scale spans the required
        // number of origin cells
        if (mu_estimate > 0.0) {
            while (count < policy.max_count &&
                   m.r_max * std::pow(static_cast<double>(policy.min_cells_in_mu) / count,
                                      policy.grading) > mu_estimate) {
                count *= 2;
            }
        }
        if (count != grid->count) {
            // re-interpolate the warm start onto the refined grid
            if (current.initial_profile == SeedProfile::custom) {
                const GridPtr refined = build_grid(m, p, count, policy.grading);
                MonotoneCubic interp = even_extension_interpolant(grid->nodes, current.custom_seed);
                std::vector<double> v(refined->count);
                for (int j = 0; j < refined->count; ++j) {
                    v[j] = interp(std::min(refined->nodes[j], grid->nodes.back()));
                }
                v.back() = 0.0;
                current.custom_seed = std::move(v);
            }
            grid = build_grid(m, p, count, policy.grading);
        } else if (grid->s != p.s || grid->n != p.n) {
            grid = build_grid(m, p, count, policy.grading);
        }

        try {
            MinimizationResult r = minimize(m, p, grid, current);
            mu_estimate = r.mu;
            current.initial_profile = SeedProfile::custom;
            current.custom_seed = r.u.values;
            results.push_back(std::move(r));
        } catch (const std::exception&) {
            MinimizationResult failed;
            failed.alpha = alphas[i];
            failed.converged = false;
            results.push_back(std::move(failed));
            // cold-start the next alpha
            current.initial_profile = opts.initial_profile;
            current.custom_seed.clear();
        }
    }
    return results;
}

} // namespace hslab
