// Graded radial grids and singular-weight quadrature: the discrete function
// space for radial profiles on a model manifold.
//
// Nodes r_i = r_max (i/count)^grading, i = 1..count; the last node sits on
// the outer boundary and carries the Dirichlet value.  Two quadrature rules
// are attached to every grid, one per measure:
//
//   volume    ~ integral of f(r) theta(r) r^{n-1} dr
//   singular  ~ integral of f(r) theta(r) r^{n-1-s} dr
//
// Weights come from composite 5-node product panels: on each panel the
// smooth factor is interpolated by the quartic through the panel nodes and
// the monomial r^c (c = n-1 or n-1-s) is integrated exactly via stable
// moment series, so panel-polynomial integrands are exact up to the panel
// degree.  Panels whose interpolatory weights would go negative (strongly
// skewed node spacing near the origin) fall back to product-linear
// sub-panels, which keeps every weight nonnegative.  The head interval
// [0, r_1] uses the constant rule; its measure is O(r_1^{c+1}) of the total.
// Nominal composite order on smooth integrands: 5.

#ifndef HSLAB_RADIAL_HPP
#define HSLAB_RADIAL_HPP

#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "hslab/constants.hpp"
#include "hslab/geometry.hpp"

namespace hslab {

class QuadratureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct RadialGrid {
    int n = 3;
    double s = 0.0;
    std::string model_label;
    int count = 0;        // number of nodes
    double grading = 2.0; // node clustering exponent at r = 0
    double r_max = 0.0;
    double omega = 0.0; // unit_sphere_volume(n)

    std::vector<double> nodes;   // strictly increasing, nodes.back() == r_max
    std::vector<double> w_vol;   // per-node weights, volume measure (theta included)
    std::vector<double> w_sing;  // per-node weights, singular measure (theta included)
    std::vector<double> theta;   // theta(r_i)
    std::vector<double> seg_vol; // theta(m_i) m_i^{n-1} h_i per segment [r_i, r_{i+1}]

    int size() const { return count; }
};

using GridPtr = std::shared_ptr<const RadialGrid>;

struct RadialFunction {
    GridPtr grid;
    std::vector<double> values;
    bool dirichlet = false; // value at the outer node is pinned to 0

    RadialFunction() = default;
    RadialFunction(GridPtr g, std::vector<double> v, bool dirichlet_tag);
};

/// Build a graded grid with quadrature rules for both measures.
/// Requires count >= 16 and grading > 0.
GridPtr build_grid(const ManifoldModel& m, const Params& p, int count, double grading);

/// Sample f(r) at the grid nodes.
template <typename F>
RadialFunction sample(GridPtr grid, F&& f, bool dirichlet_tag = false) {
    std::vector<double> v(grid->nodes.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = f(grid->nodes[i]);
    }
    if (dirichlet_tag) {
        v.back() = 0.0;
    }
    return RadialFunction(std::move(grid), std::move(v), dirichlet_tag);
}

/// ( omega * sum w_sing |u|^q )^{1/q}: the weighted Lebesgue norm ||u||_{q,s}
/// of the radial representative.  Requires q >= 1.
double weighted_norm(const RadialFunction& u, const Params& p, double q);

/// omega * sum over segments of theta(m) m^{n-1} h * ((u_{i+1}-u_i)/h)^2.
/// Second-order difference form of the Dirichlet energy; requires the
/// Dirichlet tag (the outer node pins the boundary value).
/// The head segment [0, r_1] contributes zero gradient (radial smoothness).
double dirichlet_energy(const RadialFunction& u);

/// ( omega * sum w_vol u^2 )^{1/2}.
double l2_norm(const RadialFunction& u);

/// Integral of f against the chosen measure using the stored weights
/// (omega factor included).
double integrate_volume(const RadialFunction& u);
double integrate_singular(const RadialFunction& u);

/// Flux form of the radial Laplace-Beltrami operator D = -div grad on the
/// grid: [A u]_j = flux_{j-1}(u_j - u_{j-1}) + flux_j (u_j - u_{j+1}) with
/// flux_i = theta(m_i) m_i^{n-1} / h_i, plus hat-function cell measures for
/// both weights: cellv_j ~ integral of hat_j theta r^{n-1} (volume) and
/// cells_j ~ integral of hat_j theta r^{n-1-s} (singular), both positive
/// and smooth in j.  [A u]_j / cellv_j is the second-order collocation
/// Laplacian with a Neumann ghost at r = 0; the solver's linear step and
/// the EL residual are built from the same three vectors.
/// dirichlet_energy(u) == omega * u^T A u for Dirichlet-tagged u.
struct RadialOperator {
    std::vector<double> flux;  // size count-1
    std::vector<double> cellv; // size count
    std::vector<double> cells; // size count
};
RadialOperator radial_operator(const RadialGrid& g);

// --- CSV persistence ------------------------------------------------------
// Layout: a '#' header line of key=value pairs
//   (n, s, model, count, grading, r_max[, alpha]),
// a column-name row, then per-node rows r,w_vol,w_sing[,u].
// Doubles are written with 17 significant digits so round-trips are exact.

void write_grid_csv(std::ostream& os, const RadialGrid& grid);
void write_profile_csv(std::ostream& os, const RadialFunction& u, double alpha);

struct ProfileCsv {
    RadialFunction u;
    double alpha = 0.0;
};

/// Parse a profile CSV written by write_profile_csv.
ProfileCsv read_profile_csv(std::istream& is);

} // namespace hslab

#endif // HSLAB_RADIAL_HPP
