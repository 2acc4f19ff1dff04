#include <doctest.h>

#include <cmath>

#include "lgf/fft_batch.hpp"
#include "lgf/quad1d.hpp"

using namespace lgf;

TEST_CASE("batch row reduces to the trapezoidal rule") {
    const LatticeConfig cfg = LatticeConfig::from_c(0.5, 0.4);
    const Tolerance tol(1e-12);
    const LgfRow row = batch_row(cfg, 1, 0, tol);
    // the transform over N_pts half-circle samples equals the full-circle
    // trapezoidal rule on 2 N_pts nodes
    const double trap = trapezoid_eval(cfg, {0, 1}, 2 * row.n_pts_used);
    CHECK(row.values[0] == doctest::Approx(trap).epsilon(1e-13));
}

TEST_CASE("whole rows match the trapezoidal rule to roundoff") {
    for (double c : {0.1, 0.7}) {
        const LatticeConfig cfg = LatticeConfig::from_c(0.8, c);
        const Tolerance tol(1e-12);
        const int L = 24;
        const LgfRow row = batch_row(cfg, 3, L, tol);
        const double lim = 10.0 * 2.22e-16 / cfg.c2();
        for (int n = 0; n <= L; ++n) {
            const double trap = trapezoid_eval(cfg, {n, 3}, 2 * row.n_pts_used);
            CHECK(std::abs(row.values[n] - trap) <= lim);
        }
    }
}

TEST_CASE("dropping the endpoint sample breaks the quadrature") {
    // coarse tolerance keeps N_pts small, so the endpoint carries weight
    const LatticeConfig cfg(1.0, 4.0);
    const Tolerance tol(1e-6);
    const LgfRow with = batch_row(cfg, 0, 4, tol);
    const LgfRow without = batch_row_no_nyquist(cfg, 0, 4, tol);
    double max_dev = 0.0;
    for (int n = 0; n <= 4; ++n)
        max_dev = std::max(max_dev, std::abs(with.values[n] - without.values[n]));
    CHECK(max_dev > tol.eps());
    // and with it the row is accurate
    for (int n = 0; n <= 4; ++n)
        CHECK(std::abs(with.values[n] - trapezoid_eval(cfg, {n, 0}, 4096)) <= tol.eps());
}

TEST_CASE("rows meet the requested tolerance") {
    for (double c : {0.1, 0.01}) {
        const LatticeConfig cfg = LatticeConfig::from_c(0.5, c);
        const Tolerance tol(1e-9);
        const int L = 99;
        const LgfRow row = batch_row(cfg, 2, L, tol);
        // reference: rerun at a much tighter tolerance
        const LgfRow ref = batch_row(cfg, 2, L, Tolerance(1e-13));
        for (int n = 0; n <= L; ++n)
            CHECK(std::abs(row.values[n] - ref.values[n]) <= tol.eps());
        CHECK(row.method.certificate <= tol.eps());
    }
}

TEST_CASE("table is symmetric on the square lattice") {
    const LatticeConfig cfg(1.0, 0.5);
    const LgfTable t = batch_table(cfg, 10, 10, Tolerance(1e-12));
    for (int m = 0; m <= 10; ++m)
        for (int n = 0; n < m; ++n)
            CHECK(t.at(n, m) == doctest::Approx(t.at(m, n)).epsilon(1e-12));
}

TEST_CASE("sample cap is enforced") {
    const LatticeConfig cfg = LatticeConfig::from_c(1.0, 0.001);
    CHECK_THROWS_AS(batch_row(cfg, 0, 10, Tolerance(1e-14), kDeltaDefault, 1 << 10),
                    std::length_error);
}

TEST_CASE("unscreened batch row matches the pointwise rule") {
    const int half = 1 << 14;
    const std::vector<double> row = unscreened_diff_row(0.75, 2, 8, half);
    for (int n = 0; n <= 8; ++n)
        CHECK(row[n] ==
              doctest::Approx(unscreened_diff(0.75, {n, 2}, 2 * half)).epsilon(1e-11));
}
