// Independent numerical oracles used by the tests.  Nothing here shares an
// implementation path with the library: integration is adaptive Simpson,
// special functions go through std::lgamma, and optimization is golden
// section.

#ifndef HSLAB_TESTS_ORACLES_HPP
#define HSLAB_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>
#include <stdexcept>

namespace oracles {

inline double simpson(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    return (b - a) / 6.0 * (f(a) + 4.0 * f(c) + f(b));
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double whole, double tol, int depth) {
    const double c = 0.5 * (a + b);
    const double left = simpson(f, a, c);
    const double right = simpson(f, c, b);
    if (depth <= 0) {
        return left + right;
    }
    if (std::abs(left + right - whole) < 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return adaptive_simpson_rec(f, a, c, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, c, b, right, 0.5 * tol, depth - 1);
}

/// Adaptive Simpson on [a, b].
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12, int depth = 48) {
    return adaptive_simpson_rec(f, a, b, simpson(f, a, b), tol, depth);
}

/// Integral over [a, infinity) via the substitution r = a + t/(1-t).
inline double integrate_to_infinity(const std::function<double(double)>& f, double a,
                                    double tol = 1e-12) {
    auto g = [&](double t) {
        const double om = 1.0 - t;
        const double r = a + t / om;
        return f(r) / (om * om);
    };
    return integrate(g, 0.0, 1.0 - 1e-9, tol);
}

/// Golden-section maximizer of f on [a, b].
inline double maximize(const std::function<double(double)>& f, double a, double b,
                       double tol = 1e-12) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        }
    }
    return f(0.5 * (a + b));
}

/// Best classical Sobolev constant (squared-norm convention), evaluated
/// through std::lgamma: 1/(n(n-2)pi) * (Gamma(n)/Gamma(n/2))^{2/n}.
inline double talenti_sobolev(int n) {
    return std::exp(-std::log(n * (n - 2.0) * M_PI) +
                    2.0 / n * (std::lgamma(static_cast<double>(n)) - std::lgamma(0.5 * n)));
}

/// The bubble profile evaluated from scratch (no library calls).
struct RawBubble {
    int n;
    double s, a, k;
    double operator()(double r) const {
        const double beta = 2.0 - s;
        const double m = (n - 2.0) / beta;
        return std::pow(std::pow(a * k, 0.5 * beta) / (std::pow(a, beta) + std::pow(r, beta)), m);
    }
    double deriv(double r) const {
        const double beta = 2.0 - s;
        return -(n - 2.0) * std::pow(r, beta - 1.0) * (*this)(r) /
               (std::pow(a, beta) + std::pow(r, beta));
    }
};

} // namespace oracles

#endif // HSLAB_TESTS_ORACLES_HPP
