// Sharp-constant arithmetic for the weighted critical Sobolev embedding:
// the critical exponent 2*(s) = 2(n-s)/(n-2), unit-sphere measures, the
// optimal Euclidean constant
//
//   K(n,s) = [(n-2)(n-s)]^{-1} ( (1/(2-s)) w_{n-1} G(q)^2 / G(2q) )^{-(2-s)/(n-s)},
//   q = (n-s)/(2-s),  w_{n-1} = |S^{n-1}|,  G = Gamma,
//
// and the profile scale k = ((n-2)(n-s)K(n,s))^{1/(2-s)} entering the
// extremal bubble.  At s=0, K(n,0) reproduces the classical best Sobolev
// constant of Aubin/Talenti, which serves as an independent cross-check.

#ifndef HSLAB_CONSTANTS_HPP
#define HSLAB_CONSTANTS_HPP

namespace hslab {

/// Problem parameters: dimension n >= 3, singularity exponent s in [0,2),
/// zeroth-order penalty alpha >= 0.  Validated on construction.
struct Params {
    int n = 3;
    double s = 1.0;
    double alpha = 0.0;

    Params() = default;
    Params(int n_, double s_, double alpha_ = 0.0);

    /// 2*(s) = 2(n-s)/(n-2).
    double critical_exponent() const;

    /// Same Params with a different penalty.
    Params with_alpha(double a) const { return Params(n, s, a); }
};

/// 2*(s) = 2(n-s)/(n-2).
double critical_exponent(const Params& p);

/// Natural log of the Gamma function for x > 0.
/// Lanczos approximation (g = 7, 9 terms, Godfrey's coefficient set);
/// relative error below 1e-13 on [0.1, 50].  Throws std::domain_error
/// for x <= 0.
double log_gamma(double x);

/// w_{n-1}: the (n-1)-measure of the unit sphere in R^n, 2 pi^{n/2} / Gamma(n/2).
/// Requires n >= 2.
double unit_sphere_volume(int n);

/// The optimal constant K(n,s) of the Euclidean weighted Sobolev inequality.
double k_opt(const Params& p);

/// k = ((n-2)(n-s) K(n,s))^{1/(2-s)}: the scale constant of the extremal bubble.
double bubble_scale_constant(const Params& p);

} // namespace hslab

#endif // HSLAB_CONSTANTS_HPP
