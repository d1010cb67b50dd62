// Rotationally symmetric model manifolds in geodesic polar coordinates
// around the base point: the Riemannian volume element is
//   dv_g = theta(r) r^{n-1} dr dsigma,
// with theta the polar volume density (theta(0) = 1).  Only (theta, r^{n-1})
// is ever used downstream; the metric tensor is never materialized.
//
// Shipped models: the unit round sphere, theta(r) = (sin r / r)^{n-1} with
// scalar curvature n(n-1) at the base point, and a flat disk (theta = 1,
// zero curvature) for Euclidean cross-checks.

#ifndef HSLAB_GEOMETRY_HPP
#define HSLAB_GEOMETRY_HPP

#include <functional>
#include <string>
#include <vector>

namespace hslab {

struct ManifoldModel {
    int n = 3;
    double r_max = 1.0;               // polar chart radius, <= injectivity radius
    std::function<double(double)> density; // theta(r), smooth, theta(0) = 1
    double scalar_curvature_at_base = 0.0;
    std::string label;

    bool is_flat() const { return label == "flat"; }
};

/// Unit round sphere S^n: theta(r) = (sin r / r)^{n-1}, chart up to the
/// antipode minus a fixed margin, Scal = n(n-1).
ManifoldModel round_sphere(int n, double margin = 1e-3);

/// Flat disk of radius r_max: theta = 1, Scal = 0.
ManifoldModel flat_disk(int n, double r_max);

/// Model by label ("sphere" or "flat").
ManifoldModel model_by_label(const std::string& label, int n, double flat_r_max);

/// theta(r); domain error outside [0, r_max).
double volume_density(const ManifoldModel& m, double r);

/// Least-squares fit of c in theta(r) = 1 + c r^2 over the given radii.
/// Needs >= 3 radii, all inside (0, r_max/4).
double fit_density_coefficient(const ManifoldModel& m, const std::vector<double>& radii);

/// |c_fit - (-Scal(x0)/(6n))|: deviation of the fitted quadratic density
/// coefficient from the curvature prediction of the normal-coordinate
/// metric expansion.  On the sphere c_fit = -(n-1)/6.
double cartan_check(const ManifoldModel& m, const std::vector<double>& radii);

} // namespace hslab

#endif // HSLAB_GEOMETRY_HPP
