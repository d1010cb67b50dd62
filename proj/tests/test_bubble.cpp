#include "hslab/bubble.hpp"

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"

using namespace hslab;

namespace {

GridPtr wide_flat_grid(const Params& p, double a, int count, double radii = 60.0) {
    return build_grid(flat_disk(p.n, radii * a), p, count, 2.0);
}

} // namespace

TEST_CASE("bubble pointwise values") {
    for (auto [n, s] : std::vector<std::pair<int, double>>{{3, 1.0}, {4, 1.0}, {5, 0.5}}) {
        const Params p(n, s);
        const double k = bubble_scale_constant(p);
        const BubbleProfile b(p, k);

        CHECK(bubble_eval(b, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
        // r = k: value (1/2)^{(n-2)/(2-s)}
        CHECK(bubble_eval(b, k) ==
              doctest::Approx(std::pow(0.5, (n - 2.0) / (2.0 - s))).epsilon(1e-14));
        // r -> infinity: u r^{n-2} -> (a k)^{(n-2)/2}
        const double r = 1e7 * k;
        CHECK(bubble_eval(b, r) * std::pow(r, n - 2.0) ==
              doctest::Approx(std::pow(k * k, 0.5 * (n - 2.0))).epsilon(1e-5));
    }
}

TEST_CASE("center value of the scale family") {
    const Params p(4, 1.0);
    const double k = bubble_scale_constant(p);
    for (double a : {0.3, 1.0, 2.9}) {
        const BubbleProfile b(p, a);
        CHECK(bubble_eval(b, 0.0) ==
              doctest::Approx(std::pow(k / a, (p.n - 2.0) / 2.0)).epsilon(1e-13));
    }
}

TEST_CASE("monotone decrease and maximum at the center") {
    const Params p(5, 0.5);
    const BubbleProfile b(p, 0.8);
    double prev = bubble_eval(b, 0.0);
    for (double r = 0.05; r < 20.0; r += 0.05) {
        const double v = bubble_eval(b, r);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("scaling family pointwise identity") {
    const Params p(4, 1.0);
    const BubbleProfile b1(p, 1.0);
    for (double lambda : {0.5, 2.0, 7.0}) {
        const BubbleProfile bl(p, lambda);
        for (double r : {0.1, 0.7, 3.0, 11.0}) {
            CHECK(bl.a == lambda);
            CHECK(bubble_eval(bl, lambda * r) ==
                  doctest::Approx(std::pow(lambda, -(p.n - 2.0) / 2.0) * bubble_eval(b1, r))
                      .epsilon(1e-14));
        }
    }
}

TEST_CASE("analytic derivative agrees with a difference quotient") {
    const Params p(4, 1.0);
    const BubbleProfile b(p, 1.3);
    for (double r : {0.2, 1.0, 4.0}) {
        const double h = 1e-6;
        const double fd = (bubble_eval(b, r + h) - bubble_eval(b, r - h)) / (2.0 * h);
        CHECK(bubble_deriv(b, r) == doctest::Approx(fd).epsilon(1e-8));
    }
}

TEST_CASE("weighted mass is the unit normalization") {
    for (auto [n, s] : std::vector<std::pair<int, double>>{{3, 1.0}, {4, 1.0}, {5, 0.5}}) {
        const Params p(n, s);
        const double k = bubble_scale_constant(p);
        const BubbleProfile b(p, k);
        const auto g = wide_flat_grid(p, k, 2048);
        CHECK(bubble_weighted_mass(b, g) == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("weighted mass is scale invariant") {
    const Params p(4, 1.0);
    const double k = bubble_scale_constant(p);
    const auto g = wide_flat_grid(p, 2.0 * k, 2048);
    const double m1 = bubble_weighted_mass(BubbleProfile(p, k), g);
    const double m2 = bubble_weighted_mass(BubbleProfile(p, 2.0 * k), g);
    CHECK(m1 == doctest::Approx(m2).epsilon(1e-7));
}

TEST_CASE("dirichlet energy equals the inverse optimal constant") {
    for (auto [n, s] : std::vector<std::pair<int, double>>{{3, 1.0}, {4, 1.0}, {5, 0.5}}) {
        const Params p(n, s);
        const double k = bubble_scale_constant(p);
        const BubbleProfile b(p, k);
        const auto g = wide_flat_grid(p, k, 2048);
        const double kinv = 1.0 / k_opt(p);
        CHECK(bubble_dirichlet_energy(b, g) == doctest::Approx(kinv).epsilon(1e-6));
    }
}

TEST_CASE("energy is scale invariant") {
    const Params p(5, 0.5);
    const double k = bubble_scale_constant(p);
    const auto g = wide_flat_grid(p, 3.0 * k, 4096);
    const double e1 = bubble_dirichlet_energy(BubbleProfile(p, k), g);
    const double e2 = bubble_dirichlet_energy(BubbleProfile(p, 3.0 * k), g);
    CHECK(e1 == doctest::Approx(e2).epsilon(1e-6));
}

TEST_CASE("quotient identity: energy over mass^{2/2*} attains 1/K") {
    const Params p(4, 1.0);
    const double k = bubble_scale_constant(p);
    const BubbleProfile b(p, k);
    const auto g = wide_flat_grid(p, k, 2048);
    const double E = bubble_dirichlet_energy(b, g);
    const double M = bubble_weighted_mass(b, g);
    const double quotient = E / std::pow(M, 2.0 / p.critical_exponent());
    CHECK(quotient == doctest::Approx(1.0 / k_opt(p)).epsilon(2e-6));
}

TEST_CASE("independent quadrature oracle confirms k_opt via the bubble quotient") {
    // (n, s) = (3, 1): K comes out of the quotient of independently
    // integrated energy and mass of the raw closed form.
    const int n = 3;
    const double s = 1.0;
    const Params p(n, s);
    const oracles::RawBubble rb{n, s, bubble_scale_constant(p), bubble_scale_constant(p)};
    const double omega = unit_sphere_volume(n);
    const double tstar = 2.0 * (n - s) / (n - 2.0);

    auto mass_f = [&](double r) { return std::pow(rb(r), tstar) * std::pow(r, n - 1.0 - s); };
    auto energy_f = [&](double r) {
        const double d = rb.deriv(r);
        return d * d * std::pow(r, n - 1.0);
    };
    const double mass = omega * (oracles::integrate(mass_f, 0.0, 50.0, 1e-13) +
                                 oracles::integrate_to_infinity(mass_f, 50.0, 1e-13));
    const double energy = omega * (oracles::integrate(energy_f, 0.0, 50.0, 1e-13) +
                                   oracles::integrate_to_infinity(energy_f, 50.0, 1e-13));
    const double kinv_oracle = energy / std::pow(mass, 2.0 / tstar);
    CHECK(kinv_oracle == doctest::Approx(1.0 / k_opt(p)).epsilon(1e-8));
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("quadrature failure is reported") {
    const Params p(4, 1.0);
    const double k = bubble_scale_constant(p);
    const BubbleProfile b(p, k);
    const auto g = wide_flat_grid(p, k, 64);
    CHECK_THROWS_AS(bubble_weighted_mass(b, g, 1e-12), QuadratureError);
}

TEST_CASE("pde residual: magnitude and refinement order") {
    for (auto [n, s] : std::vector<std::pair<int, double>>{{3, 1.0}, {4, 1.0}, {5, 0.5}}) {
        const Params p(n, s);
        const double k = bubble_scale_constant(p);
        const BubbleProfile b(p, k);
        auto res = [&](int count) {
            return bubble_pde_residual(b, build_grid(flat_disk(n, 40.0 * k), p, count, 2.0));
        };
        const double r512 = res(512);
        const double r1024 = res(1024);
        const double r2048 = res(2048);
        CHECK(std::log2(r512 / r1024) >= 3.0);
        CHECK(std::log2(r1024 / r2048) >= 3.0);
        if (n == 4) {
            CHECK(r2048 <= 1e-6);
        }
    }
}

TEST_CASE("pde residual pins the constant") {
    const Params p(4, 1.0);
    const double k = bubble_scale_constant(p);
    const BubbleProfile b(p, k);
    PdeResidualOptions wrong;
    wrong.kinv_override = 1.1 / k_opt(p);
    const double rA = bubble_pde_residual(b, build_grid(flat_disk(4, 40.0 * k), p, 1024, 2.0), wrong);
    const double rB = bubble_pde_residual(b, build_grid(flat_disk(4, 40.0 * k), p, 2048, 2.0), wrong);
    CHECK(rA > 1e-3);
    CHECK(rB > 1e-3);
    CHECK(rB == doctest::Approx(rA).epsilon(0.05)); // stuck at the model error, not shrinking
}

TEST_CASE("pde residual refinement check reports a too-coarse grid") {
    const Params p(4, 1.0);
    const double k = bubble_scale_constant(p);
    const BubbleProfile b(p, k);
    PdeResidualOptions opts;
    opts.check_refinement = true;
    // fine grid passes
    CHECK_NOTHROW(bubble_pde_residual(b, build_grid(flat_disk(4, 40.0 * k), p, 1024, 2.0), opts));
    // wrong-constant residual does not shrink: flagged
    opts.kinv_override = 1.1 / k_opt(p);
    CHECK_THROWS_AS(bubble_pde_residual(b, build_grid(flat_disk(4, 40.0 * k), p, 1024, 2.0), opts),
                    QuadratureError);
}
