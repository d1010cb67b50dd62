#include "hslab/blowup.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hslab/bubble.hpp"
#include "hslab/interp.hpp"

namespace hslab {

RadialFunction rescale(const RadialFunction& u, double mu, double R, int count) {
    const RadialGrid& g = *u.grid;
    if (!(mu > 0.0) || !(R > 0.0)) {
        throw std::invalid_argument("rescale: mu and R must be positive");
    }
    if (!(R * mu < g.r_max)) {
        throw std::invalid_argument("rescale: window R*mu exceeds the chart radius");
    }
    const Params p(g.n, g.s);
    const GridPtr target = build_grid(flat_disk(g.n, R), p, count, 1.0);
    const MonotoneCubic interp = even_extension_interpolant(g.nodes, u.values);
    const double scale = std::pow(mu, 0.5 * g.n - 1.0);
    std::vector<double> v(target->count);
    for (int j = 0; j < target->count; ++j) {
        v[j] = scale * interp(mu * target->nodes[j]);
    }
    return RadialFunction(target, std::move(v), false);
}

double rescaled_center_value(const RadialFunction& u, const Params& p, double mu) {
    const double umax = *std::max_element(u.values.begin(), u.values.end());
    return std::pow(mu, 0.5 * p.n - 1.0) * umax;
}

double bubble_deviation(const RadialFunction& uhat, const Params& p, double R) {
    const RadialGrid& g = *uhat.grid;
    if (g.nodes.back() < R * (1.0 - 1e-12)) {
        throw std::invalid_argument("bubble_deviation: window larger than the rescaled grid");
    }
    const BubbleProfile b(p, bubble_scale_constant(p));
    double worst = 0.0;
    for (int j = 0; j < g.count; ++j) {
        if (g.nodes[j] > R) {
            break;
        }
        worst = std::max(worst, std::abs(uhat.values[j] - bubble_eval(b, g.nodes[j])));
    }
    return worst;
}

double concentration_tail(const RadialFunction& u, const Params& p, double mu, double R) {
    const RadialGrid& g = *u.grid;
    const double tstar = p.critical_exponent();
    const double cut = R * mu;
    double outside = 0.0, total = 0.0;
    for (int i = 0; i < g.count; ++i) {
        const double contrib = g.w_sing[i] * std::pow(std::abs(u.values[i]), tstar);
        total += contrib;
        if (g.nodes[i] > cut) {
            outside += contrib;
        }
    }
    if (total == 0.0) {
        throw std::invalid_argument("concentration_tail: zero function");
    }
    return outside / total;
}

double pointwise_bound(const RadialFunction& u, const Params& p) {
    const RadialGrid& g = *u.grid;
    double worst = 0.0;
    for (int i = 0; i < g.count; ++i) {
        worst = std::max(worst, std::pow(g.nodes[i], 0.5 * p.n - 1.0) * std::abs(u.values[i]));
    }
    return worst;
}

VanishingAReport vanishing_A_check(const std::vector<double>& alphas,
                                   const std::vector<double>& mus) {
    if (alphas.size() != mus.size() || alphas.size() < 4) {
        throw std::invalid_argument("vanishing_A_check: need >= 4 sweep points");
    }
    const std::size_t n = alphas.size();
    // least squares for log(alpha mu^2) = slope * log(alpha) + c
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = std::log(alphas[i]);
        const double y = std::log(alphas[i] * mus[i] * mus[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    VanishingAReport rep;
    rep.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    rep.last_alpha_mu2 = alphas.back() * mus.back() * mus.back();
    return rep;
}

VanishingAReport vanishing_A_check(const std::vector<MinimizationResult>& sweep) {
    std::vector<double> alphas, mus;
    for (const auto& r : sweep) {
        if (r.converged) {
            alphas.push_back(r.alpha);
            mus.push_back(r.mu);
        }
    }
    return vanishing_A_check(alphas, mus);
}

double local_sup_diagnostic(const RadialFunction& u, double r1, double r2) {
    const RadialGrid& g = *u.grid;
    if (!(r1 >= 0.0 && r2 > r1 && r2 <= g.r_max)) {
        throw std::invalid_argument("local_sup_diagnostic: bad annulus");
    }
    const double d = 0.25 * (r2 - r1);
    double sup = -1.0;
    double mass = 0.0;
    for (int i = 0; i < g.count; ++i) {
        const double r = g.nodes[i];
        if (r >= r1 && r <= r2) {
            mass += g.w_vol[i] * u.values[i] * u.values[i];
            if (r >= r1 + d && r <= r2 - d) {
                sup = std::max(sup, std::abs(u.values[i]));
            }
        }
    }
    if (sup < 0.0) {
        throw std::invalid_argument("local_sup_diagnostic: annulus contains no nodes");
    }
    return sup / std::sqrt(g.omega * mass);
}

double window_energy(const RadialFunction& u, double x_hi) {
    const RadialGrid& g = *u.grid;
    double acc = 0.0;
    for (int i = 0; i + 1 < g.count; ++i) {
        if (g.nodes[i + 1] > x_hi) {
            break;
        }
        const double h = g.nodes[i + 1] - g.nodes[i];
        const double d = (u.values[i + 1] - u.values[i]) / h;
        acc += g.seg_vol[i] * d * d;
    }
    return g.omega * acc;
}

double window_mass(const RadialFunction& u, const Params& p, double x_hi) {
    const RadialGrid& g = *u.grid;
    const double tstar = p.critical_exponent();
    double acc = 0.0;
    for (int i = 0; i < g.count; ++i) {
        if (g.nodes[i] > x_hi) {
            break;
        }
        acc += g.w_sing[i] * std::pow(std::abs(u.values[i]), tstar);
    }
    return g.omega * acc;
}

BlowupReport blowup_report(const MinimizationResult& r, const Params& p, double R_deviation,
                           double R_tail, int rescale_count) {
    BlowupReport rep;
    rep.mu = r.mu;
    rep.alpha_mu2 = r.alpha * r.mu * r.mu;
    rep.window_R = R_deviation;
    const RadialFunction uhat = rescale(r.u, r.mu, R_deviation, rescale_count);
    rep.sup_deviation = bubble_deviation(uhat, p, R_deviation);
    rep.concentration_tail = concentration_tail(r.u, p, r.mu, R_tail);
    rep.pointwise_bound = pointwise_bound(r.u, p);
    rep.peak_offset_ratio = r.peak_radius / r.mu;
    return rep;
}

} // namespace hslab
