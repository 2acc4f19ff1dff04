#include <doctest.h>

#include <cmath>
#include <vector>

#include "lgf/quad1d.hpp"
#include "lgf/series.hpp"

using namespace lgf;

namespace {

// Independent g_k oracle: coefficients of (rho(xi)/lambda)^k obtained by
// repeated convolution with the 5-point symbol, no factorials involved.
double g_k_by_convolution(int k, LatticePoint p, const LatticeConfig& cfg) {
    const double a1 = cfg.alpha1();
    const double lam = cfg.lambda();
    const int R = k + 1;
    const int side = 2 * R + 1;
    auto idx = [=](int n, int m) { return (n + R) * side + (m + R); };

    std::vector<double> cur(side * side, 0.0), next(side * side);
    cur[idx(0, 0)] = 1.0;
    for (int step = 0; step < k; ++step) {
        std::fill(next.begin(), next.end(), 0.0);
        for (int n = -R + 1; n <= R - 1; ++n)
            for (int m = -R + 1; m <= R - 1; ++m) {
                const double v = cur[idx(n, m)];
                if (v == 0.0) continue;
                next[idx(n + 1, m)] += a1 / lam * v;
                next[idx(n - 1, m)] += a1 / lam * v;
                next[idx(n, m + 1)] += 1.0 / lam * v;
                next[idx(n, m - 1)] += 1.0 / lam * v;
            }
        cur.swap(next);
    }
    return cur[idx(p.n, p.m)];
}

}  // namespace

TEST_CASE("g_k closed forms at small k") {
    for (double a1 : {0.25, 0.6, 1.0}) {
        const LatticeConfig cfg(a1, 1.0);
        const double lam = cfg.lambda();
        CHECK(g_k(0, {0, 0}, cfg) == doctest::Approx(1.0));
        CHECK(g_k(1, {1, 0}, cfg) == doctest::Approx(a1 / lam));
        CHECK(g_k(1, {0, 1}, cfg) == doctest::Approx(1.0 / lam));
        CHECK(g_k(2, {0, 0}, cfg) == doctest::Approx((2.0 + 2.0 * a1 * a1) / (lam * lam)));
    }
}

TEST_CASE("g_k matches the convolution oracle") {
    const LatticeConfig cfg(0.75, 0.5);
    CHECK(g_k(5, {2, 1}, cfg) ==
          doctest::Approx(g_k_by_convolution(5, {2, 1}, cfg)).epsilon(1e-13));
    for (int k = 0; k <= 9; ++k)
        for (int n = 0; n <= k; ++n)
            for (int m = 0; m + n <= k; ++m)
                CHECK(g_k(k, {n, m}, cfg) ==
                      doctest::Approx(g_k_by_convolution(k, {n, m}, cfg)).epsilon(1e-12));
}

TEST_CASE("g_k vanishes off-support and off-parity") {
    const LatticeConfig cfg(0.5, 1.0);
    for (int k = 0; k <= 12; ++k)
        for (int n = 0; n <= 13; ++n)
            for (int m = 0; m <= 13; ++m)
                if (k < n + m || (k - n - m) % 2 != 0)
                    CHECK(g_k(k, {n, m}, cfg) == 0.0);
}

TEST_CASE("truncation bound is honored on a grid") {
    const Tolerance tol(1e-12);
    for (double a1 : {0.3, 1.0}) {
        for (double c2 : {4.0, 25.0, 100.0}) {
            const LatticeConfig cfg(a1, c2);
            const SeriesPlan plan = make_series_plan(cfg, tol);
            // reference: many more terms
            const SeriesPlan ref{plan.n_terms + 40, 0.0};
            for (int n = 0; n <= 3; ++n)
                for (int m = 0; m <= 3; ++m) {
                    const double approx = series_eval(cfg, {n, m}, plan);
                    const double exact = series_eval(cfg, {n, m}, ref);
                    CHECK(std::abs(approx - exact) <= plan.bound);
                    CHECK(plan.bound <= tol.eps());
                }
        }
    }
}

TEST_CASE("terms_needed is the minimal count") {
    const Tolerance tol(1e-14);
    CHECK(terms_needed(LatticeConfig(1.0, 100.0), tol) == 9);
    for (double c2 : {5.0, 10.0, 50.0}) {
        const LatticeConfig cfg(0.8, c2);
        const int N = terms_needed(cfg, tol);
        CHECK(truncation_bound(cfg, N) <= tol.eps());
        CHECK(truncation_bound(cfg, N - 1) > tol.eps());
    }
}

TEST_CASE("square-lattice symmetry in n and m") {
    const LatticeConfig cfg(1.0, 9.0);
    const SeriesPlan plan = make_series_plan(cfg, Tolerance(1e-14));
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m < n; ++m)
            CHECK(series_eval(cfg, {n, m}, plan) ==
                  doctest::Approx(series_eval(cfg, {m, n}, plan)).epsilon(1e-13));
}

TEST_CASE("decay bound dominates the value") {
    const LatticeConfig cfg(0.6, 2.0);
    const SeriesPlan plan = make_series_plan(cfg, Tolerance(1e-14));
    for (int n = 0; n <= 6; ++n)
        for (int m = 0; m <= 6; ++m)
            CHECK(series_eval(cfg, {n, m}, plan) <= decay_bound(cfg, {n, m}) + 1e-14);
}

TEST_CASE("far-field asymptotic approaches the true value along a ray") {
    // first-order form: needs c * r well above 1; quadrature supplies truth
    const LatticeConfig cfg = LatticeConfig::from_c(1.0, 0.1);
    const Tolerance tol(1e-13);
    double prev_rel = 1.0;
    for (int r : {20, 40, 80}) {
        const LatticePoint p{r, r / 2};
        const double truth = trapezoid_eval(cfg, p, n_quad_points(cfg, tol, p.n));
        const double rel = std::abs(asymptotic_far_field(0.1, p) - truth) / std::abs(truth);
        CHECK(rel < prev_rel);
        prev_rel = rel;
    }
    CHECK(prev_rel < 2e-2);
}

TEST_CASE("far-field asymptotic is poor near the origin") {
    const LatticeConfig cfg = LatticeConfig::from_c(1.0, 0.1);
    const Tolerance tol(1e-12);
    const double truth = trapezoid_eval(cfg, {1, 0}, n_quad_points(cfg, tol, 1));
    const double rel = std::abs(asymptotic_far_field(0.1, {1, 0}) - truth) / std::abs(truth);
    CHECK(rel > 1e-3);  // diagnostic quality only
}
