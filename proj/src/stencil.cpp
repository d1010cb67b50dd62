#include "hslab/stencil.hpp"

#include <stdexcept>

namespace hslab {

// Fornberg, "Generation of finite difference formulas on arbitrarily
// spaced grids", Math. Comp. 51 (1988).  Computes weights for all
// derivative orders 0..m at once; we return the order-m row.
std::vector<double> fd_weights(double x0, const std::vector<double>& x, int m) {
    const int nd = static_cast<int>(x.size());
    if (nd == 0 || m < 0 || m >= nd) {
        throw std::invalid_argument("fd_weights: need 0 <= m < x.size()");
    }
    std::vector<std::vector<double>> c(nd, std::vector<double>(m + 1, 0.0));
    double c1 = 1.0;
    double c4 = x[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i < nd; ++i) {
        const int mn = (i < m) ? i : m;
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k) {
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k) {
                c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(nd);
    for (int i = 0; i < nd; ++i) {
        w[i] = c[i][m];
    }
    return w;
}

} // namespace hslab
