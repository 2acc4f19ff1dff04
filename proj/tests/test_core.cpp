#include <doctest.h>

#include <cmath>

#include "lgf/core.hpp"
#include "lgf/fft_batch.hpp"
#include "lgf/oracles.hpp"
#include "lgf/quad1d.hpp"
#include "lgf/series.hpp"

using namespace lgf;

TEST_CASE("config validation") {
    CHECK_THROWS_AS(LatticeConfig(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(LatticeConfig(1.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(LatticeConfig(1.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(Tolerance(1e-16), std::invalid_argument);
    CHECK(LatticeConfig(0.25, 0.0).lambda() == doctest::Approx(2.5));
    CHECK(LatticeConfig::from_c(1.0, 3.0).c2() == doctest::Approx(9.0));
    CHECK_THROWS_AS(LatticeConfig(1.0, 0.0).require_screened(), std::invalid_argument);
}

TEST_CASE("canonicalize folds to the first quadrant") {
    CHECK(canonicalize({-3, 2}) == LatticePoint{3, 2});
    CHECK(canonicalize({0, -7}) == LatticePoint{0, 7});
    CHECK(canonicalize({4, 5}).canonical());
}

TEST_CASE("method selection: large screening goes to the series") {
    const LatticeConfig cfg(1.0, 100.0);
    const MethodChoice mc = select_method(cfg, Tolerance(1e-14));
    CHECK(mc.tag == Method::Series);
    CHECK(mc.work == 9);
    CHECK(mc.certificate <= 1e-14);
}

TEST_CASE("method selection: small screening goes to quadrature") {
    const LatticeConfig cfg(1.0, 0.01);
    const MethodChoice single = select_method(cfg, Tolerance(1e-12));
    CHECK(single.tag == Method::Quad1D);
    CHECK(single.certificate <= 1e-12);

    const MethodChoice row = select_method(cfg, Tolerance(1e-12), 64);
    CHECK(row.tag == Method::FftBatch);
    CHECK(row.work >= single.work);
}

TEST_CASE("backends agree pairwise") {
    const LatticeConfig cfg(0.75, 2.0);
    const Tolerance tol(1e-13);
    const int n_pts = n_quad_points(cfg, tol, 6);
    const SeriesPlan plan = make_series_plan(cfg, tol);
    const LgfRow row0 = batch_row(cfg, 2, 7, tol);
    for (int n = 0; n <= 6; ++n) {
        const LatticePoint p{n, 2};
        const double s = series_eval(cfg, p, plan);
        const double q = trapezoid_eval(cfg, p, n_pts);
        const double f = row0.values[n];
        CHECK(std::abs(s - q) <= 2e-13);
        CHECK(std::abs(s - f) <= 2e-13);
        CHECK(s > 0.0);
    }
}

TEST_CASE("values sum to 1/c^2 over the lattice") {
    const LatticeConfig cfg(1.0, 1.0);
    const Tolerance tol(1e-13);
    const int L = 60;
    const LgfTable table = batch_table(cfg, L, L + 1, tol);

    double sum = 0.0;
    for (int m = 0; m <= L; ++m)
        for (int n = 0; n <= L; ++n) {
            const double w = (n > 0 ? 2.0 : 1.0) * (m > 0 ? 2.0 : 1.0);
            sum += w * table.at(n, m);
        }

    // everything beyond the box decays at least geometrically
    double tail = 0.0;
    for (int r = L + 1; r <= 4 * L; ++r)
        tail += 4.0 * (r + 1) * decay_bound(cfg, {r, 0});
    CHECK(std::abs(sum - 1.0 / cfg.c2()) <= tail + 1e-9);
}
