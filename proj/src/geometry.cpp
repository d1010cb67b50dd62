#include "hslab/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hslab {

namespace {

// sin(r)/r with a series branch so the value is exactly 1 at r = 0 and
// smooth through the switch point.
double sinc(double r) {
    if (std::abs(r) < 1e-4) {
        const double r2 = r * r;
        return 1.0 - r2 / 6.0 * (1.0 - r2 / 20.0);
    }
    return std::sin(r) / r;
}

} // namespace

ManifoldModel round_sphere(int n, double margin) {
    if (n < 3) {
        throw std::invalid_argument("round_sphere: need n >= 3");
    }
    if (!(margin > 0.0 && margin < M_PI)) {
        throw std::invalid_argument("round_sphere: margin must lie in (0, pi)");
    }
    ManifoldModel m;
    m.n = n;
    m.r_max = M_PI - margin;
    m.density = [n](double r) { return std::pow(sinc(r), n - 1); };
    m.scalar_curvature_at_base = static_cast<double>(n) * (n - 1);
    m.label = "sphere";
    return m;
}

ManifoldModel flat_disk(int n, double r_max) {
    if (n < 3) {
        throw std::invalid_argument("flat_disk: need n >= 3");
    }
    if (!(r_max > 0.0)) {
        throw std::invalid_argument("flat_disk: r_max must be positive");
    }
    ManifoldModel m;
    m.n = n;
    m.r_max = r_max;
    m.density = [](double) { return 1.0; };
    m.scalar_curvature_at_base = 0.0;
    m.label = "flat";
    return m;
}

ManifoldModel model_by_label(const std::string& label, int n, double flat_r_max) {
    if (label == "sphere") {
        return round_sphere(n);
    }
    if (label == "flat") {
        return flat_disk(n, flat_r_max);
    }
    throw std::invalid_argument("model_by_label: unknown model \"" + label + "\"");
}

double volume_density(const ManifoldModel& m, double r) {
    if (!(r >= 0.0 && r < m.r_max)) {
        throw std::domain_error("volume_density: r outside chart [0, r_max)");
    }
    return m.density(r);
}

double fit_density_coefficient(const ManifoldModel& m, const std::vector<double>& radii) {
    if (radii.size() < 3) {
        throw std::invalid_argument("fit_density_coefficient: need at least 3 radii");
    }
    // One-parameter least squares for theta(r) - 1 = c r^2.
    double num = 0.0, den = 0.0;
    for (double r : radii) {
        if (!(r > 0.0 && r < m.r_max / 4.0)) {
            throw std::domain_error("fit_density_coefficient: radii must lie in (0, r_max/4)");
        }
        const double r2 = r * r;
        num += r2 * (m.density(r) - 1.0);
        den += r2 * r2;
    }
    return num / den;
}

double cartan_check(const ManifoldModel& m, const std::vector<double>& radii) {
    const double c_fit = fit_density_coefficient(m, radii);
    const double c_curv = -m.scalar_curvature_at_base / (6.0 * m.n);
    return std::abs(c_fit - c_curv);
}

} // namespace hslab
