#include "hslab/bubble.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hslab/stencil.hpp"

namespace hslab {

BubbleProfile::BubbleProfile(const Params& params, double scale, double offset)
    : p(params), a(scale), center_offset(offset), k(bubble_scale_constant(params)) {
    if (!(a > 0.0)) {
        throw std::invalid_argument("BubbleProfile: scale must be positive");
    }
    if (!(center_offset >= 0.0)) {
        throw std::invalid_argument("BubbleProfile: center offset must be >= 0");
    }
}

double bubble_eval(const BubbleProfile& b, double r) {
    if (!(r >= 0.0)) {
        throw std::domain_error("bubble_eval: r must be >= 0");
    }
    const double beta = 2.0 - b.p.s;
    const double m = (b.p.n - 2.0) / beta;
    const double A = std::pow(b.a * b.k, 0.5 * beta);
    return std::pow(A / (std::pow(b.a, beta) + std::pow(r, beta)), m);
}

double bubble_deriv(const BubbleProfile& b, double r) {
    const double beta = 2.0 - b.p.s;
    const double w = std::pow(b.a, beta) + std::pow(r, beta);
    return -(b.p.n - 2.0) * std::pow(r, beta - 1.0) * bubble_eval(b, r) / w;
}

namespace {

void require_flat_wide(const BubbleProfile& b, const RadialGrid& g, const char* who) {
    if (g.model_label != "flat") {
        throw std::invalid_argument(std::string(who) + ": grid must use the flat model");
    }
    if (g.n != b.p.n || g.s != b.p.s) {
        throw std::invalid_argument(std::string(who) + ": grid Params mismatch");
    }
    if (!(g.r_max > 2.0 * b.a)) {
        throw std::invalid_argument(std::string(who) + ": chart must extend past 2a");
    }
}

// Tail of integral_R^inf r^{p0 - 1} (a^beta + r^beta)^{-T} ... expressed as
// integral_R^inf r^{-1-decay} (1 + (a/r)^beta)^{-T} dr expanded binomially:
//   sum_l (-1)^l binom(T+l-1, l) a^{beta l} R^{-decay-beta l} / (decay + beta l).
// Geometric convergence for R > a.
double binomial_tail(double a, double beta, double T, double decay, double R) {
    double coef = 1.0;
    double acc = 0.0;
    const double x = std::pow(a / R, beta);
    double xl = 1.0;
    for (int l = 0; l < 100000; ++l) {
        const double term = coef * xl / (decay + beta * l);
        acc += term;
        if (std::abs(term) < 1e-18 * std::abs(acc) && l > 2) {
            break;
        }
        coef *= -(T + l) / (l + 1.0);
        xl *= x;
    }
    return acc * std::pow(R, -decay);
}

double mass_tail(const BubbleProfile& b, double R) {
    const int n = b.p.n;
    const double s = b.p.s;
    const double beta = 2.0 - s;
    const double T = 2.0 * (n - s) / beta; // 2*(s) * (n-2)/beta
    const double omega = unit_sphere_volume(n);
    // integrand = (a k)^{n-s} r^{s-n-1} (1 + (a/r)^beta)^{-T}
    return omega * std::pow(b.a * b.k, n - s) * binomial_tail(b.a, beta, T, n - s, R);
}

double energy_tail(const BubbleProfile& b, double R) {
    const int n = b.p.n;
    const double s = b.p.s;
    const double beta = 2.0 - s;
    const double m = (n - 2.0) / beta;
    const double T = 2.0 * (m + 1.0);
    const double omega = unit_sphere_volume(n);
    // u'(r)^2 r^{n-1} = (n-2)^2 (a k)^{n-2} r^{1-n} (1 + (a/r)^beta)^{-T}
    return omega * (n - 2.0) * (n - 2.0) * std::pow(b.a * b.k, n - 2.0) *
           binomial_tail(b.a, beta, T, n - 2.0, R);
}

double quad_mass(const BubbleProfile& b, const RadialGrid& g) {
    const double tstar = b.p.critical_exponent();
    double acc = 0.0;
    for (int i = 0; i < g.count; ++i) {
        acc += g.w_sing[i] * std::pow(bubble_eval(b, g.nodes[i]), tstar);
    }
    return g.omega * acc + mass_tail(b, g.r_max);
}

double quad_energy(const BubbleProfile& b, const RadialGrid& g) {
    double acc = 0.0;
    for (int i = 0; i < g.count; ++i) {
        const double d = bubble_deriv(b, g.nodes[i]);
        acc += g.w_vol[i] * d * d;
    }
    return g.omega * acc + energy_tail(b, g.r_max);
}

GridPtr half_grid(const RadialGrid& g) {
    const ManifoldModel m = flat_disk(g.n, g.r_max);
    return build_grid(m, Params(g.n, g.s), g.count / 2, g.grading);
}

} // namespace

double bubble_weighted_mass(const BubbleProfile& b, const GridPtr& quad, double tol) {
    require_flat_wide(b, *quad, "bubble_weighted_mass");
    const double fine = quad_mass(b, *quad);
    const double coarse = quad_mass(b, *half_grid(*quad));
    if (std::abs(fine - coarse) > tol * std::abs(fine)) {
        throw QuadratureError("bubble_weighted_mass: estimated quadrature error " +
                              std::to_string(std::abs(fine - coarse)) + " exceeds tolerance");
    }
    return fine;
}

double bubble_dirichlet_energy(const BubbleProfile& b, const GridPtr& quad, double tol) {
    require_flat_wide(b, *quad, "bubble_dirichlet_energy");
    const double fine = quad_energy(b, *quad);
    const double coarse = quad_energy(b, *half_grid(*quad));
    if (std::abs(fine - coarse) > tol * std::abs(fine)) {
        throw QuadratureError("bubble_dirichlet_energy: estimated quadrature error " +
                              std::to_string(std::abs(fine - coarse)) + " exceeds tolerance");
    }
    return fine;
}

namespace {

double residual_on(const BubbleProfile& b, const RadialGrid& g, const PdeResidualOptions& opts) {
    const int n = b.p.n;
    const double s = b.p.s;
    const double tstar = b.p.critical_exponent();
    const double kinv = (opts.kinv_override > 0.0) ? opts.kinv_override : 1.0 / k_opt(b.p);
    const double lo = opts.window_lo * g.r_max;
    const double hi = opts.window_hi * g.r_max;

    std::vector<double> u(g.count);
    for (int i = 0; i < g.count; ++i) {
        u[i] = bubble_eval(b, g.nodes[i]);
    }

    double worst = 0.0;
    for (int j = 2; j + 2 < g.count; ++j) {
        const double r = g.nodes[j];
        if (r < lo || r > hi) {
            continue;
        }
        const std::vector<double> xs(g.nodes.begin() + j - 2, g.nodes.begin() + j + 3);
        const std::vector<double> w1 = fd_weights(r, xs, 1);
        const std::vector<double> w2 = fd_weights(r, xs, 2);
        double d1 = 0.0, d2 = 0.0;
        for (int t = 0; t < 5; ++t) {
            d1 += w1[t] * u[j - 2 + t];
            d2 += w2[t] * u[j - 2 + t];
        }
        const double lap = -d2 - (n - 1.0) * d1 / r;
        const double rhs = kinv * std::pow(u[j], tstar - 1.0) * std::pow(r, -s);
        worst = std::max(worst, std::abs(lap - rhs));
    }
    return worst;
}

} // namespace

double bubble_pde_residual(const BubbleProfile& b, const GridPtr& grid,
                           const PdeResidualOptions& opts) {
    if (grid->model_label != "flat") {
        throw std::invalid_argument("bubble_pde_residual: grid must use the flat model");
    }
    const double res = residual_on(b, *grid, opts);
    if (opts.check_refinement) {
        const double coarse = residual_on(b, *half_grid(*grid), opts);
        if (!(coarse > res)) {
            throw QuadratureError("bubble_pde_residual: grid too coarse, residual not "
                                  "decreasing under refinement");
        }
    }
    return res;
}

} // namespace hslab
