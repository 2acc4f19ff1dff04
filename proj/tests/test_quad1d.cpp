#include <doctest.h>

#include <cmath>

#include "lgf/quad1d.hpp"
#include "lgf/series.hpp"

using namespace lgf;

TEST_CASE("integrand closed form at theta = 0") {
    // phi(0) = 2 + c^2 independently of alpha1; with c^2 = 1,
    // K = (3 + sqrt 5)/2 and K - 1/K = sqrt 5.
    const double K = (3.0 + std::sqrt(5.0)) / 2.0;
    for (double a1 : {0.3, 1.0}) {
        const LatticeConfig cfg(a1, 1.0);
        for (int m = 0; m <= 3; ++m)
            CHECK(integrand(0.0, cfg, m) ==
                  doctest::Approx(1.0 / (std::pow(K, m) * std::sqrt(5.0))).epsilon(1e-14));
    }
}

TEST_CASE("integrand is even and positive") {
    const LatticeConfig cfg(0.7, 0.25);
    for (double th : {0.3, 1.1, 2.9}) {
        CHECK(integrand(th, cfg, 2) == doctest::Approx(integrand(-th, cfg, 2)).epsilon(1e-15));
        CHECK(integrand(th, cfg, 2) > 0.0);
    }
}

TEST_CASE("forty samples per half circle reach 1e-7 at c = 0.3") {
    // sample counts follow the half-circle convention of the batch
    // algorithm: 40 samples = 80 full-circle trapezoid nodes
    const LatticeConfig cfg = LatticeConfig::from_c(1.0, 0.3);
    const LatticePoint p{1, 1};
    const double ref = trapezoid_eval(cfg, p, 4000);
    const double err = std::abs(trapezoid_eval(cfg, p, 80) - ref);
    CHECK(err < 1e-7);
    CHECK(err <= quad_error_bound(cfg, p.n, 80, (0.99 * 0.99) * cfg.c2()));
}

TEST_CASE("stable strip half-width") {
    CHECK(gamma_eta(0.009801) == doctest::Approx(0.0989596153877511).epsilon(1e-12));
    // tiny eta: gamma ~ sqrt(eta), must not underflow to zero
    CHECK(gamma_eta(1e-300) == doctest::Approx(1e-150).epsilon(1e-6));
    CHECK(m_eta(LatticeConfig(1.0, 0.01), 0.009801) ==
          doctest::Approx(0.5 / std::sqrt(0.01 - 0.009801)).epsilon(1e-13));
}

TEST_CASE("point-count formula reproduces pinned cases") {
    const double cases[][3] = {
        {0.001, 1e-14, 41518}, {0.1, 1e-14, 369}, {1.0, 1e-8, 22},
    };
    for (const auto& tc : cases) {
        const LatticeConfig cfg = LatticeConfig::from_c(1.0, tc[0]);
        CHECK(n_quad_points(cfg, Tolerance(tc[1]), 0) == static_cast<int>(tc[2]));
    }
}

TEST_CASE("optimized count is never worse and close to pinned values") {
    const LatticeConfig a = LatticeConfig::from_c(1.0, 0.1);
    CHECK(std::abs(n_opt_scan(a, Tolerance(1e-14)) - 369) <= 1);
    const LatticeConfig b = LatticeConfig::from_c(1.0, 1.0);
    CHECK(std::abs(n_opt_scan(b, Tolerance(1e-14)) - 36) <= 1);
    for (double c : {0.01, 0.3, 1.0}) {
        const LatticeConfig cfg = LatticeConfig::from_c(0.5, c);
        const Tolerance tol(1e-11);
        CHECK(n_opt_scan(cfg, tol) <= n_quad_points(cfg, tol, 0));
    }
}

TEST_CASE("error bound decreases in N and the plan honors eps") {
    const LatticeConfig cfg = LatticeConfig::from_c(0.8, 0.2);
    const Tolerance tol(1e-10);
    const QuadPlan plan = make_quad_plan(cfg, tol, 5);
    CHECK(quad_error_bound(cfg, 5, plan.n_pts, plan.eta) <= tol.eps());
    double prev = 1e300;
    for (int N = 64; N <= 1024; N *= 2) {
        const double b = quad_error_bound(cfg, 5, N, plan.eta);
        CHECK(b < prev);
        prev = b;
    }
}

TEST_CASE("observed convergence is geometric at the predicted rate") {
    const LatticeConfig cfg = LatticeConfig::from_c(1.0, 0.5);
    const LatticePoint p{2, 1};
    const double ref = trapezoid_eval(cfg, p, 8000);
    const double eta = (0.99 * 0.99) * cfg.c2();
    const double g = gamma_eta(eta);

    // fit log(err) vs N over a range where err is well above roundoff
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (int N = 20; N <= 60; N += 8) {
        const double err = std::abs(trapezoid_eval(cfg, p, N) - ref);
        REQUIRE(err > 1e-14);
        sx += N;
        sy += std::log(err);
        sxx += static_cast<double>(N) * N;
        sxy += N * std::log(err);
        ++cnt;
    }
    const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    CHECK(-slope >= 0.95 * g);
}

TEST_CASE("unscreened difference values") {
    CHECK(unscreened_diff(1.0, {0, 0}, 4096) == doctest::Approx(0.0));
    CHECK(unscreened_diff(1.0, {1, 0}, 1 << 16) == doctest::Approx(-0.25).epsilon(1e-8));
    CHECK(unscreened_diff(1.0, {0, 1}, 1 << 16) == doctest::Approx(-0.25).epsilon(1e-8));
    CHECK(unscreened_diff(1.0, {1, 1}, 1 << 16) ==
          doctest::Approx(-1.0 / M_PI).epsilon(1e-8));
}

TEST_CASE("unscreened difference converges at second order") {
    const LatticePoint p{3, 2};
    const double ref = unscreened_diff(0.6, p, 1 << 20);
    const double e1 = std::abs(unscreened_diff(0.6, p, 1 << 10) - ref);
    const double e2 = std::abs(unscreened_diff(0.6, p, 1 << 11) - ref);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.25));
}
