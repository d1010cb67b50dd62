#include "hslab/constants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hslab {

Params::Params(int n_, double s_, double alpha_) : n(n_), s(s_), alpha(alpha_) {
    if (n < 3) {
        throw std::invalid_argument("Params: n must be >= 3, got " + std::to_string(n));
    }
    if (!(s >= 0.0 && s < 2.0)) {
        throw std::invalid_argument("Params: s must lie in [0,2), got " + std::to_string(s));
    }
    if (!(alpha >= 0.0)) {
        throw std::invalid_argument("Params: alpha must be >= 0, got " + std::to_string(alpha));
    }
}

double Params::critical_exponent() const {
    return 2.0 * (n - s) / (n - 2.0);
}

double critical_exponent(const Params& p) {
    return p.critical_exponent();
}

namespace {

// Lanczos g = 7, 9-term coefficients (Godfrey; the set popularized by
// Numerical Recipes and Boost.Math).  Good to ~1e-15 relative in Gamma
// on the positive real axis.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kHalfLogTwoPi = 0.91893853320467274178; // log(2 pi)/2

double log_gamma_lanczos(double x) {
    // Valid for x >= 0.5; callers handle the reflection branch.
    const double z = x - 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) {
        acc += kLanczos[i] / (z + i);
    }
    const double t = z + 7.5;
    return kHalfLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

} // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("log_gamma: argument must be positive, got " + std::to_string(x));
    }
    if (x < 0.5) {
        // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
        return std::log(M_PI / std::sin(M_PI * x)) - log_gamma_lanczos(1.0 - x);
    }
    return log_gamma_lanczos(x);
}

double unit_sphere_volume(int n) {
    if (n < 2) {
        throw std::domain_error("unit_sphere_volume: need n >= 2, got " + std::to_string(n));
    }
    return std::exp(std::log(2.0) + 0.5 * n * std::log(M_PI) - log_gamma(0.5 * n));
}

double k_opt(const Params& p) {
    const double n = p.n;
    const double s = p.s;
    const double q = (n - s) / (2.0 - s);
    // log of (1/(2-s)) w_{n-1} Gamma(q)^2 / Gamma(2q)
    const double log_inner = -std::log(2.0 - s) + std::log(unit_sphere_volume(p.n)) +
                             2.0 * log_gamma(q) - log_gamma(2.0 * q);
    return std::exp(-std::log((n - 2.0) * (n - s)) - (2.0 - s) / (n - s) * log_inner);
}

double bubble_scale_constant(const Params& p) {
    const double n = p.n;
    const double s = p.s;
    return std::pow((n - 2.0) * (n - s) * k_opt(p), 1.0 / (2.0 - s));
}

} // namespace hslab
