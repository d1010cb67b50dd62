#include "hslab/radial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "hslab/csv.hpp"

namespace hslab {

namespace {

// Moments mu_j = int_a^b ((r - rc)/hw)^j r^c dr, j = 0..P-1, with
// rc = (a+b)/2, hw = (b-a)/2, via the binomial series of (rc + hw t)^c
// around rc.  Converges for every panel with a > 0 since hw/rc < 1;
// no cancellation (all terms are added at their own scale).
void centered_moments(double a, double b, double c, int P, double* mu) {
    const double rc = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    const double xi = hw / rc;
    for (int j = 0; j < P; ++j) {
        mu[j] = 0.0;
    }
    double term = 1.0; // binom(c, l) xi^l
    for (int l = 0; l < 100000; ++l) {
        double largest = 0.0;
        for (int j = 0; j < P; ++j) {
            if ((j + l) % 2 == 0) {
                const double t = term * 2.0 / (j + l + 1);
                mu[j] += t;
                largest = std::max(largest, std::abs(t));
            }
        }
        term *= (c - l) / (l + 1.0) * xi;
        if (largest < 1e-19 && l > 4) {
            break;
        }
    }
    const double scale = hw * std::pow(rc, c);
    for (int j = 0; j < P; ++j) {
        mu[j] *= scale;
    }
}

// Interpolatory product weights for a panel: w_i = int_a^b l_i(r) r^c dr
// where l_i are the Lagrange polynomials of the P nodes.
void panel_weights(const double* nodes, int P, double a, double b, double c, double* w) {
    const double rc = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    double tau[8];
    for (int i = 0; i < P; ++i) {
        tau[i] = (nodes[i] - rc) / hw;
    }
    double mu[8];
    centered_moments(a, b, c, P, mu);
    for (int i = 0; i < P; ++i) {
        // coefficients of l_i in powers of the scaled variable (low -> high)
        double poly[8] = {1.0, 0, 0, 0, 0, 0, 0, 0};
        int deg = 0;
        double denom = 1.0;
        for (int j = 0; j < P; ++j) {
            if (j == i) {
                continue;
            }
            // multiply by (t - tau[j])
            poly[deg + 1] = poly[deg];
            for (int d = deg; d >= 1; --d) {
                poly[d] = poly[d - 1] - tau[j] * poly[d];
            }
            poly[0] = -tau[j] * poly[0];
            ++deg;
            denom *= tau[i] - tau[j];
        }
        double acc = 0.0;
        for (int d = 0; d <= deg; ++d) {
            acc += poly[d] * mu[d];
        }
        w[i] = acc / denom;
    }
}

// Product-linear weights on [a,b] with its two endpoint nodes; always
// nonnegative for a nonnegative measure.
void linear_weights(double ra, double rb, double c, double* w2) {
    double mu[2];
    centered_moments(ra, rb, c, 2, mu);
    // l_left = (1 - t)/2, l_right = (1 + t)/2 in the scaled variable
    w2[0] = 0.5 * (mu[0] - mu[1]);
    w2[1] = 0.5 * (mu[0] + mu[1]);
}

// Per-node weights for the measure r^c dr over [0, r_max] on the given
// nodes (theta applied by the caller).
std::vector<double> monomial_weights(const std::vector<double>& r, double c) {
    const int N = static_cast<int>(r.size());
    std::vector<double> w(N, 0.0);
    // head [0, r_1]: constant rule (radially smooth integrands are flat
    // to O(r^2) there and the head measure is O(r_1^{c+1}))
    w[0] += std::pow(r[0], c + 1.0) / (c + 1.0);

    int pos = 0;
    while (pos < N - 1) {
        int P = std::min(5, N - pos);
        const int step = P - 1;
        double pw[8];
        panel_weights(&r[pos], P, r[pos], r[pos + step], c, pw);
        bool nonneg = true;
        for (int i = 0; i < P; ++i) {
            if (pw[i] < 0.0) {
                nonneg = false;
                break;
            }
        }
        if (nonneg) {
            for (int i = 0; i < P; ++i) {
                w[pos + i] += pw[i];
            }
        } else {
            // skewed panel: product-trapezoid on each sub-segment
            for (int i = 0; i < step; ++i) {
                double lw[2];
                linear_weights(r[pos + i], r[pos + i + 1], c, lw);
                w[pos + i] += lw[0];
                w[pos + i + 1] += lw[1];
            }
        }
        pos += step;
    }
    return w;
}

} // namespace

RadialFunction::RadialFunction(GridPtr g, std::vector<double> v, bool dirichlet_tag)
    : grid(std::move(g)), values(std::move(v)), dirichlet(dirichlet_tag) {
    if (!grid || values.size() != grid->nodes.size()) {
        throw std::invalid_argument("RadialFunction: values/grid size mismatch");
    }
    for (double x : values) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument("RadialFunction: non-finite value");
        }
    }
    if (dirichlet && values.back() != 0.0) {
        throw std::invalid_argument("RadialFunction: Dirichlet tag requires 0 at the outer node");
    }
}

GridPtr build_grid(const ManifoldModel& m, const Params& p, int count, double grading) {
    if (count < 16) {
        throw std::invalid_argument("build_grid: count must be >= 16");
    }
    if (!(grading > 0.0)) {
        throw std::invalid_argument("build_grid: grading must be positive");
    }
    if (m.n != p.n) {
        throw std::invalid_argument("build_grid: model dimension disagrees with Params");
    }
    auto grid = std::make_shared<RadialGrid>();
    grid->n = p.n;
    grid->s = p.s;
    grid->model_label = m.label;
    grid->count = count;
    grid->grading = grading;
    grid->r_max = m.r_max;
    grid->omega = unit_sphere_volume(p.n);

    grid->nodes.resize(count);
    for (int i = 1; i <= count; ++i) {
        grid->nodes[i - 1] = m.r_max * std::pow(static_cast<double>(i) / count, grading);
    }
    grid->theta.resize(count);
    for (int i = 0; i < count; ++i) {
        const double r = grid->nodes[i];
        grid->theta[i] = (r < m.r_max) ? m.density(r) : m.density(m.r_max * (1.0 - 1e-15));
    }

    grid->w_vol = monomial_weights(grid->nodes, p.n - 1.0);
    grid->w_sing = monomial_weights(grid->nodes, p.n - 1.0 - p.s);
    for (int i = 0; i < count; ++i) {
        grid->w_vol[i] *= grid->theta[i];
        grid->w_sing[i] *= grid->theta[i];
    }

    grid->seg_vol.resize(count - 1);
    for (int i = 0; i + 1 < count; ++i) {
        const double h = grid->nodes[i + 1] - grid->nodes[i];
        const double mid = 0.5 * (grid->nodes[i] + grid->nodes[i + 1]);
        grid->seg_vol[i] = m.density(mid) * std::pow(mid, p.n - 1.0) * h;
    }
    return grid;
}

double weighted_norm(const RadialFunction& u, const Params& p, double q) {
    if (!(q >= 1.0)) {
        throw std::invalid_argument("weighted_norm: exponent must be >= 1");
    }
    const RadialGrid& g = *u.grid;
    if (g.n != p.n || g.s != p.s) {
        throw std::invalid_argument("weighted_norm: grid built for different Params");
    }
    double acc = 0.0;
    for (int i = 0; i < g.count; ++i) {
        acc += g.w_sing[i] * std::pow(std::abs(u.values[i]), q);
    }
    return std::pow(g.omega * acc, 1.0 / q);
}

double dirichlet_energy(const RadialFunction& u) {
    if (!u.dirichlet) {
        throw std::invalid_argument("dirichlet_energy: function not tagged Dirichlet");
    }
    const RadialGrid& g = *u.grid;
    double acc = 0.0;
    for (int i = 0; i + 1 < g.count; ++i) {
        const double h = g.nodes[i + 1] - g.nodes[i];
        const double d = (u.values[i + 1] - u.values[i]) / h;
        acc += g.seg_vol[i] * d * d;
    }
    return g.omega * acc;
}

double l2_norm(const RadialFunction& u) {
    const RadialGrid& g = *u.grid;
    double acc = 0.0;
    for (int i = 0; i < g.count; ++i) {
        acc += g.w_vol[i] * u.values[i] * u.values[i];
    }
    return std::sqrt(g.omega * acc);
}

double integrate_volume(const RadialFunction& u) {
    const RadialGrid& g = *u.grid;
    double acc = 0.0;
    for (int i = 0; i < g.count; ++i) {
        acc += g.w_vol[i] * u.values[i];
    }
    return g.omega * acc;
}

double integrate_singular(const RadialFunction& u) {
    const RadialGrid& g = *u.grid;
    double acc = 0.0;
    for (int i = 0; i < g.count; ++i) {
        acc += g.w_sing[i] * u.values[i];
    }
    return g.omega * acc;
}

RadialOperator radial_operator(const RadialGrid& g) {
    RadialOperator op;
    op.flux.resize(g.count - 1);
    for (int i = 0; i + 1 < g.count; ++i) {
        const double h = g.nodes[i + 1] - g.nodes[i];
        op.flux[i] = g.seg_vol[i] / (h * h);
    }
    op.cellv.assign(g.count, 0.0);
    op.cells.assign(g.count, 0.0);
    const double cv = g.n - 1.0;
    const double cs = g.n - 1.0 - g.s;
    // head cell [0, r_1]
    op.cellv[0] += g.theta[0] * std::pow(g.nodes[0], cv + 1.0) / (cv + 1.0);
    op.cells[0] += g.theta[0] * std::pow(g.nodes[0], cs + 1.0) / (cs + 1.0);
    // product-linear (hat function) weights per segment, theta at nodes
    for (int i = 0; i + 1 < g.count; ++i) {
        double lv[2], ls[2];
        linear_weights(g.nodes[i], g.nodes[i + 1], cv, lv);
        linear_weights(g.nodes[i], g.nodes[i + 1], cs, ls);
        op.cellv[i] += g.theta[i] * lv[0];
        op.cellv[i + 1] += g.theta[i + 1] * lv[1];
        op.cells[i] += g.theta[i] * ls[0];
        op.cells[i + 1] += g.theta[i + 1] * ls[1];
    }
    return op;
}

// --- CSV ------------------------------------------------------------------

namespace {

void write_header(std::ostream& os, const RadialGrid& g, const double* alpha) {
    os << "# n=" << g.n << ",s=" << csv_double(g.s) << ",model=" << g.model_label
       << ",count=" << g.count << ",grading=" << csv_double(g.grading)
       << ",r_max=" << csv_double(g.r_max);
    if (alpha != nullptr) {
        os << ",alpha=" << csv_double(*alpha);
    }
    os << "\n";
}

} // namespace

void write_grid_csv(std::ostream& os, const RadialGrid& grid) {
    write_header(os, grid, nullptr);
    os << "r,w_vol,w_sing\n";
    for (int i = 0; i < grid.count; ++i) {
        os << csv_double(grid.nodes[i]) << ',' << csv_double(grid.w_vol[i]) << ','
           << csv_double(grid.w_sing[i]) << "\n";
    }
}

void write_profile_csv(std::ostream& os, const RadialFunction& u, double alpha) {
    write_header(os, *u.grid, &alpha);
    os << "r,w_vol,w_sing,u\n";
    const RadialGrid& g = *u.grid;
    for (int i = 0; i < g.count; ++i) {
        os << csv_double(g.nodes[i]) << ',' << csv_double(g.w_vol[i]) << ','
           << csv_double(g.w_sing[i]) << ',' << csv_double(u.values[i]) << "\n";
    }
}

ProfileCsv read_profile_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.empty() || line[0] != '#') {
        throw std::invalid_argument("profile csv: missing # header line");
    }
    int n = 0, count = 0;
    double s = 0.0, grading = 0.0, r_max = 0.0, alpha = 0.0;
    std::string model;
    {
        std::stringstream hs(line.substr(1));
        std::string kv;
        while (std::getline(hs, kv, ',')) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) {
                continue;
            }
            std::string key = kv.substr(0, eq);
            key.erase(0, key.find_first_not_of(' '));
            const std::string val = kv.substr(eq + 1);
            if (key == "n") {
                n = std::stoi(val);
            } else if (key == "s") {
                s = std::stod(val);
            } else if (key == "model") {
                model = val;
            } else if (key == "count") {
                count = std::stoi(val);
            } else if (key == "grading") {
                grading = std::stod(val);
            } else if (key == "r_max") {
                r_max = std::stod(val);
            } else if (key == "alpha") {
                alpha = std::stod(val);
            }
        }
    }
    if (n < 3 || count < 16 || model.empty()) {
        throw std::invalid_argument("profile csv: malformed header");
    }
    if (!std::getline(is, line)) {
        throw std::invalid_argument("profile csv: missing column header");
    }

    auto grid = std::make_shared<RadialGrid>();
    grid->n = n;
    grid->s = s;
    grid->model_label = model;
    grid->count = count;
    grid->grading = grading;
    grid->r_max = r_max;
    grid->omega = unit_sphere_volume(n);
    std::vector<double> values;
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        std::stringstream row(line);
        std::string field;
        double v[4];
        int got = 0;
        while (std::getline(row, field, ',') && got < 4) {
            v[got++] = std::stod(field);
        }
        if (got != 4) {
            throw std::invalid_argument("profile csv: expected 4 columns per row");
        }
        grid->nodes.push_back(v[0]);
        grid->w_vol.push_back(v[1]);
        grid->w_sing.push_back(v[2]);
        values.push_back(v[3]);
    }
    if (static_cast<int>(grid->nodes.size()) != count) {
        throw std::invalid_argument("profile csv: row count disagrees with header");
    }
    // theta and segment volumes are re-derived from the model label
    const ManifoldModel m = model_by_label(model, n, r_max);
    grid->theta.resize(count);
    for (int i = 0; i < count; ++i) {
        const double r = std::min(grid->nodes[i], r_max * (1.0 - 1e-15));
        grid->theta[i] = m.density(r);
    }
    grid->seg_vol.resize(count - 1);
    for (int i = 0; i + 1 < count; ++i) {
        const double h = grid->nodes[i + 1] - grid->nodes[i];
        const double mid = 0.5 * (grid->nodes[i] + grid->nodes[i + 1]);
        grid->seg_vol[i] = m.density(mid) * std::pow(mid, n - 1.0) * h;
    }

    const bool dirichlet = values.back() == 0.0;
    ProfileCsv out{RadialFunction(grid, std::move(values), dirichlet), alpha};
    return out;
}

} // namespace hslab
