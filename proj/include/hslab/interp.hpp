// Monotone cubic (Fritsch-Carlson) interpolation: preserves positivity and
// monotonicity of concentrating profiles under resampling.

#ifndef HSLAB_INTERP_HPP
#define HSLAB_INTERP_HPP

#include <vector>

namespace hslab {

class MonotoneCubic {
  public:
    /// x strictly increasing, same length as y (>= 2 points).
    MonotoneCubic(std::vector<double> x, std::vector<double> y);

    /// Evaluate; arguments are clamped to the data range.
    double operator()(double xq) const;

  private:
    std::vector<double> x_, y_, d_;
};

/// Interpolant of radial data extended evenly through r = 0 (ghost node at
/// -x[0] with value y[0]), so the interpolant has zero slope at the origin
/// and evaluates to the first value there for monotone data.
MonotoneCubic even_extension_interpolant(const std::vector<double>& r,
                                         const std::vector<double>& y);

} // namespace hslab

#endif // HSLAB_INTERP_HPP
