#include "hslab/functional.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hslab {

QuotientValue quotient(const RadialFunction& u, const Params& p) {
    bool all_zero = true;
    for (double v : u.values) {
        if (v != 0.0) {
            all_zero = false;
            break;
        }
    }
    if (all_zero) {
        throw std::invalid_argument("quotient: zero function");
    }
    QuotientValue q;
    q.energy = dirichlet_energy(u);
    const double l2 = l2_norm(u);
    q.mass2 = l2 * l2;
    q.constraint_norm = weighted_norm(u, p, p.critical_exponent());
    q.lambda = (q.energy + p.alpha * q.mass2) / (q.constraint_norm * q.constraint_norm);
    return q;
}

ElResidual el_residual(const RadialFunction& u, const Params& p, double lambda,
                       const ManifoldModel& m, double window_lo) {
    const RadialGrid& g = *u.grid;
    if (g.n != p.n || g.s != p.s || g.model_label != m.label) {
        throw std::invalid_argument("el_residual: grid/model/Params mismatch");
    }
    const int last = g.count - 1; // Dirichlet node, excluded
    for (int j = 0; j < last; ++j) {
        if (!(u.values[j] > 0.0)) {
            throw std::domain_error("el_residual: u must be positive on interior nodes");
        }
    }
    const RadialOperator op = radial_operator(g);
    const double tstar = p.critical_exponent();
    const double r_lo = window_lo * g.r_max;

    ElResidual out;
    for (int j = 0; j < last; ++j) {
        const double r = g.nodes[j];
        if (r < r_lo) {
            continue;
        }
        double au = op.flux[j] * (u.values[j] - u.values[j + 1]);
        if (j > 0) {
            au += op.flux[j - 1] * (u.values[j] - u.values[j - 1]);
        }
        const double lap = au / op.cellv[j];
        const double resid = lap + p.alpha * u.values[j] -
                             lambda * std::pow(u.values[j], tstar - 1.0) * std::pow(r, -p.s);
        out.raw = std::max(out.raw, std::abs(resid));
        out.weighted = std::max(out.weighted, std::abs(resid) / (1.0 + u.values[j]));
    }
    return out;
}

InequalityVerdict inequality_holds(const RadialFunction& u, const Params& p, double A, double B) {
    bool all_zero = true;
    for (double v : u.values) {
        if (v != 0.0) {
            all_zero = false;
            break;
        }
    }
    InequalityVerdict verdict;
    if (all_zero) {
        verdict.margin = 0.0;
        verdict.holds = true;
        return verdict;
    }
    const QuotientValue q = quotient(u, p);
    verdict.margin = A * q.energy + B * q.mass2 - q.constraint_norm * q.constraint_norm;
    verdict.holds = verdict.margin >= 0.0;
    return verdict;
}

} // namespace hslab
