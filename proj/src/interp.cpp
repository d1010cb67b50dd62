#include "hslab/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hslab {

namespace {

// PCHIP endpoint slope: one-sided three-point estimate with the usual
// shape-preserving clamps.
double edge_slope(double h0, double h1, double d0, double d1) {
    double d = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (d * d0 <= 0.0) {
        return 0.0;
    }
    if (d0 * d1 < 0.0 && std::abs(d) > 3.0 * std::abs(d0)) {
        return 3.0 * d0;
    }
    return d;
}

} // namespace

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n) {
        throw std::invalid_argument("MonotoneCubic: need >= 2 matching points");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(x_[i] > x_[i - 1])) {
            throw std::invalid_argument("MonotoneCubic: abscissae must increase strictly");
        }
    }
    d_.resize(n);
    if (n == 2) {
        d_[0] = d_[1] = (y_[1] - y_[0]) / (x_[1] - x_[0]);
        return;
    }
    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x_[i + 1] - x_[i];
        delta[i] = (y_[i + 1] - y_[i]) / h[i];
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            d_[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            d_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    d_[0] = edge_slope(h[0], h[1], delta[0], delta[1]);
    d_[n - 1] = edge_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
}

double MonotoneCubic::operator()(double xq) const {
    xq = std::clamp(xq, x_.front(), x_.back());
    const auto it = std::upper_bound(x_.begin(), x_.end(), xq);
    const std::size_t i = std::min<std::size_t>(
        x_.size() - 2, static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, it - x_.begin() - 1)));
    const double h = x_[i + 1] - x_[i];
    const double t = (xq - x_[i]) / h;
    const double h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
    const double h10 = t * (1.0 - t) * (1.0 - t);
    const double h01 = t * t * (3.0 - 2.0 * t);
    const double h11 = t * t * (t - 1.0);
    return h00 * y_[i] + h * h10 * d_[i] + h01 * y_[i + 1] + h * h11 * d_[i + 1];
}

MonotoneCubic even_extension_interpolant(const std::vector<double>& r,
                                         const std::vector<double>& y) {
    if (r.empty() || r.size() != y.size() || !(r.front() > 0.0)) {
        throw std::invalid_argument("even_extension_interpolant: bad radial data");
    }
    std::vector<double> x2;
    std::vector<double> y2;
    x2.reserve(r.size() + 1);
    y2.reserve(r.size() + 1);
    x2.push_back(-r.front());
    y2.push_back(y.front());
    x2.insert(x2.end(), r.begin(), r.end());
    y2.insert(y2.end(), y.begin(), y.end());
    return MonotoneCubic(std::move(x2), std::move(y2));
}

} // namespace hslab
