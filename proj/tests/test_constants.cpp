#include "hslab/constants.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"

using namespace hslab;

TEST_CASE("Params validation") {
    CHECK_NOTHROW(Params(3, 0.0, 0.0));
    CHECK_NOTHROW(Params(3, 1.9999, 10.0));
    CHECK_THROWS_AS(Params(2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Params(4, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(Params(4, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(Params(4, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("critical exponent") {
    CHECK(critical_exponent(Params(3, 1.0)) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(critical_exponent(Params(4, 0.0)) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(critical_exponent(Params(5, 0.5)) == doctest::Approx(3.0).epsilon(1e-15));

    // 2 < 2*(s) <= 2n/(n-2), equality iff s = 0
    for (int n = 3; n <= 9; ++n) {
        for (double s : {0.0, 0.3, 1.0, 1.7, 1.99}) {
            const double t = critical_exponent(Params(n, s));
            CHECK(t > 2.0);
            CHECK(t <= 2.0 * n / (n - 2.0) + 1e-15);
            if (s > 0.0) {
                CHECK(t < 2.0 * n / (n - 2.0));
            }
        }
    }
}

TEST_CASE("log_gamma basics") {
    CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(log_gamma(0.5) == doctest::Approx(std::log(std::sqrt(M_PI))).epsilon(1e-14));
    CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
}

TEST_CASE("log_gamma recurrence and reflection") {
    for (double x : {0.5, 1.3, 7.7, 23.1}) {
        CHECK(std::abs(log_gamma(x + 1.0) - log_gamma(x) - std::log(x)) <= 1e-11);
    }
    // Gamma(x) Gamma(1-x) = pi / sin(pi x)
    for (double x : {0.1, 0.25, 0.4}) {
        const double lhs = log_gamma(x) + log_gamma(1.0 - x);
        const double rhs = std::log(M_PI / std::sin(M_PI * x));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("log_gamma accuracy against std::lgamma on [0.1, 50]") {
    for (int i = 0; i <= 500; ++i) {
        const double x = 0.1 + i * (50.0 - 0.1) / 500.0;
        const double ref = std::lgamma(x);
        const double got = log_gamma(x);
        const double scale = std::max(1.0, std::abs(ref));
        CHECK(std::abs(got - ref) <= 1e-12 * scale);
    }
}

TEST_CASE("unit sphere volumes") {
    CHECK(unit_sphere_volume(2) == doctest::Approx(2.0 * M_PI).epsilon(1e-14));
    CHECK(unit_sphere_volume(3) == doctest::Approx(4.0 * M_PI).epsilon(1e-14));
    CHECK(unit_sphere_volume(4) == doctest::Approx(2.0 * M_PI * M_PI).epsilon(1e-14));
    CHECK_THROWS_AS(unit_sphere_volume(1), std::domain_error);
}

TEST_CASE("k_opt at s=0 matches the classical best Sobolev constant") {
    for (int n = 3; n <= 8; ++n) {
        const double got = k_opt(Params(n, 0.0));
        const double ref = oracles::talenti_sobolev(n);
        CHECK(std::abs(got - ref) <= 1e-10 * ref);
    }
}

TEST_CASE("k_opt positivity and reciprocal identity") {
    for (int n = 3; n <= 8; ++n) {
        for (double s : {0.0, 0.5, 1.0, 1.5, 1.9}) {
            const double K = k_opt(Params(n, s));
            CHECK(K > 0.0);
            CHECK(K * (1.0 / K) == doctest::Approx(1.0).epsilon(1e-15));
        }
    }
}

TEST_CASE("k_opt regression pins") {
    // frozen from the closed form evaluated in extended precision
    CHECK(k_opt(Params(3, 1.0)) == doctest::Approx(0.34549414947133547927).epsilon(1e-13));
    CHECK(k_opt(Params(4, 1.0)) == doctest::Approx(0.19162224362768024215).epsilon(1e-13));
    CHECK(k_opt(Params(5, 0.5)) == doctest::Approx(0.088575628690410775465).epsilon(1e-13));
    CHECK(k_opt(Params(5, 1.0)) == doctest::Approx(0.12655626332680269315).epsilon(1e-13));
}

TEST_CASE("bubble scale constant") {
    for (int n = 3; n <= 6; ++n) {
        for (double s : {0.0, 0.5, 1.0, 1.5}) {
            const Params p(n, s);
            const double k = bubble_scale_constant(p);
            CHECK(k > 0.0);
            CHECK(std::isfinite(k));
            // k^{2-s} / K = (n-2)(n-s)
            CHECK(std::pow(k, 2.0 - s) / k_opt(p) ==
                  doctest::Approx((n - 2.0) * (n - s)).epsilon(1e-12));
        }
    }
    // s -> 0 limit: the classical instanton scale (n(n-2))^{1/2} K^{1/2}
    for (int n : {3, 4, 5}) {
        const Params p(n, 0.0);
        const double k = bubble_scale_constant(p);
        const double classical = std::sqrt(n * (n - 2.0) * k_opt(p));
        CHECK(k == doctest::Approx(classical).epsilon(1e-13));
    }
}
