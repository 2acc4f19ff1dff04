#include "lgf/periodic3d.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include <fftw3.h>

#include "fft_internal.hpp"
#include "lgf/fft_batch.hpp"
#include "lgf/quad1d.hpp"

namespace lgf {

namespace {

// Full-circle node count backing the algebraically convergent zero mode.
constexpr int kZeroModeHalfPts = 1 << 15;

}  // namespace

Periodic3DConfig::Periodic3DConfig(double dx1, double dx2, double dx3, int n_p)
    : dx1_(dx1), dx2_(dx2), dx3_(dx3), n_p_(n_p) {
    if (!(dx1 > 0.0) || !(dx2 > 0.0) || !(dx3 > 0.0))
        throw std::invalid_argument("Periodic3DConfig: spacings must be > 0");
    if (n_p <= 0 || n_p % 2 != 0)
        throw std::invalid_argument("Periodic3DConfig: n_p must be even and positive");

    const double a1 = 1.0 / (dx1 * dx1);
    const double a2 = 1.0 / (dx2 * dx2);
    const double a3 = 1.0 / (dx3 * dx3);
    swapped_ = a1 > a2;  // normalize so the in-plane unit weight is the larger one
    a_norm_ = swapped_ ? a1 : a2;
    alpha1_ = (swapped_ ? a2 : a1) / a_norm_;
    alpha3_ = a3 / a_norm_;
}

double kappa_mode(int k, const Periodic3DConfig& cfg3d) {
    if (k < 0 || k >= cfg3d.n_p())
        throw std::invalid_argument("kappa_mode: k out of range");
    const double a3 = cfg3d.alpha3();
    return std::sqrt(2.0 * a3 - 2.0 * a3 * std::cos(2.0 * M_PI * k / cfg3d.n_p()));
}

double lgf3d_periodic(int n1, int n2, int n3, const Periodic3DConfig& cfg3d, Tolerance tol) {
    const int np = cfg3d.n_p();
    // B(n, m): n indexes the alpha1-weighted in-plane axis, m the unit one
    const LatticePoint p = cfg3d.axes_swapped()
                               ? canonicalize({n2, n1})
                               : canonicalize({n1, n2});
    const double eps_mode = std::max(tol.eps() / np, 1e-15);
    const Tolerance tol_mode(eps_mode);

    double sum = unscreened_diff(cfg3d.alpha1(), p, 2 * kZeroModeHalfPts);
    for (int k = 1; k <= np / 2; ++k) {
        const double kap = kappa_mode(k, cfg3d);
        const LatticeConfig cfg(cfg3d.alpha1(), kap * kap);
        const int n_pts = n_quad_points(cfg, tol_mode, p.n);
        const double b = trapezoid_eval(cfg, p, n_pts);
        const double weight = (k < np - k) ? 2.0 : 1.0;  // modes k and np-k pair up
        sum += weight * std::cos(2.0 * M_PI * k * n3 / np) * b;
    }
    return sum / (np * cfg3d.normalizer());
}

Grid3 make_grid(int n1, int n2, int np) {
    Grid3 g;
    g.n1 = n1;
    g.n2 = n2;
    g.np = np;
    g.v.assign(static_cast<std::size_t>(n1) * n2 * np, 0.0);
    return g;
}

Lgf3Table::Lgf3Table(const Periodic3DConfig& cfg3d, int n1, int n2, Tolerance tol)
    : n1_(n1), n2_(n2), np_(cfg3d.n_p()) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("Lgf3Table: sizes must be >= 1");

    // canonical extents along the B(n, m) axes
    const bool sw = cfg3d.axes_swapped();
    const int ext_n = sw ? n2 : n1;  // alpha1 axis
    const int ext_m = sw ? n1 : n2;  // unit axis
    const int np = np_;
    const double eps_mode = std::max(tol.eps() / np, 1e-15);
    const Tolerance tol_mode(eps_mode);

    v_.assign(static_cast<std::size_t>(n1_) * n2_ * np, 0.0);
    const double scale = 1.0 / (np * cfg3d.normalizer());

    std::vector<double> mode_weight(static_cast<std::size_t>(np), 0.0);
    for (int k = 0; k <= np / 2; ++k) {
        std::vector<std::vector<double>> rows(static_cast<std::size_t>(ext_m));
        if (k == 0) {
            for (int m = 0; m < ext_m; ++m)
                rows[m] = unscreened_diff_row(cfg3d.alpha1(), m, ext_n - 1, kZeroModeHalfPts);
        } else {
            const double kap = kappa_mode(k, cfg3d);
            const LatticeConfig cfg(cfg3d.alpha1(), kap * kap);
            for (int m = 0; m < ext_m; ++m)
                rows[m] = batch_row(cfg, m, ext_n - 1, tol_mode).values;
        }

        const double mult = (k == 0 || k == np - k) ? 1.0 : 2.0;
        for (int d3 = 0; d3 < np; ++d3)
            mode_weight[d3] = mult * scale * std::cos(2.0 * M_PI * k * d3 / np);

        for (int i1 = 0; i1 < n1_; ++i1) {
            for (int i2 = 0; i2 < n2_; ++i2) {
                const double b = sw ? rows[i1][i2] : rows[i2][i1];
                double* dst = &v_[(static_cast<std::size_t>(i1) * n2_ + i2) * np];
                for (int d3 = 0; d3 < np; ++d3) dst[d3] += mode_weight[d3] * b;
            }
        }
    }
}

double Lgf3Table::at(int d1, int d2, int d3) const {
    const int i1 = std::abs(d1);
    const int i2 = std::abs(d2);
    int i3 = d3 % np_;
    if (i3 < 0) i3 += np_;
    return v_[(static_cast<std::size_t>(i1) * n2_ + i2) * np_ + i3];
}

namespace {

struct C2RPlanGuard {
    fftw_plan plan;
    explicit C2RPlanGuard(fftw_plan p) : plan(p) {}
    ~C2RPlanGuard() {
        std::lock_guard<std::mutex> lock(detail::fftw_mutex());
        fftw_destroy_plan(plan);
    }
};

}  // namespace

Grid3 solve_poisson3d(const Grid3& source, const Periodic3DConfig& cfg3d, Tolerance tol) {
    const int N1 = source.n1, N2 = source.n2, np = source.np;
    if (np != cfg3d.n_p())
        throw std::invalid_argument("solve_poisson3d: grid/config period mismatch");

    // truncation sanity: the source must be negligible at the unbounded-
    // direction boundary or the free-space convolution is meaningless
    double src_max = 0.0, boundary_max = 0.0;
    for (int i1 = 0; i1 < N1; ++i1)
        for (int i2 = 0; i2 < N2; ++i2)
            for (int i3 = 0; i3 < np; ++i3) {
                const double a = std::abs(source.at(i1, i2, i3));
                src_max = std::max(src_max, a);
                if (i1 == 0 || i1 == N1 - 1 || i2 == 0 || i2 == N2 - 1)
                    boundary_max = std::max(boundary_max, a);
            }
    if (src_max > 0.0 && boundary_max > 1e-3 * src_max)
        throw std::invalid_argument("solve_poisson3d: source not negligible at the boundary");

    const Lgf3Table lgf(cfg3d, N1, N2, tol);

    // zero-padded circular convolution; the periodic direction needs no pad
    const int P1 = 2 * N1, P2 = 2 * N2;
    const std::size_t real_len = static_cast<std::size_t>(P1) * P2 * np;
    const std::size_t cplx_len = static_cast<std::size_t>(P1) * P2 * (np / 2 + 1);

    std::vector<double> a(real_len, 0.0), b(real_len, 0.0);
    std::vector<std::complex<double>> fa(cplx_len), fb(cplx_len);

    auto ridx = [P2, np](int i1, int i2, int i3) {
        return (static_cast<std::size_t>(i1) * P2 + i2) * np + i3;
    };

    for (int i1 = 0; i1 < N1; ++i1)
        for (int i2 = 0; i2 < N2; ++i2)
            for (int i3 = 0; i3 < np; ++i3) a[ridx(i1, i2, i3)] = source.at(i1, i2, i3);

    for (int d1 = -(N1 - 1); d1 <= N1 - 1; ++d1)
        for (int d2 = -(N2 - 1); d2 <= N2 - 1; ++d2)
            for (int d3 = 0; d3 < np; ++d3)
                b[ridx((d1 + P1) % P1, (d2 + P2) % P2, d3)] = lgf.at(d1, d2, d3);

    fftw_plan pf_a, pf_b, pi;
    {
        std::lock_guard<std::mutex> lock(detail::fftw_mutex());
        pf_a = fftw_plan_dft_r2c_3d(P1, P2, np, a.data(),
                                    reinterpret_cast<fftw_complex*>(fa.data()), FFTW_ESTIMATE);
        pf_b = fftw_plan_dft_r2c_3d(P1, P2, np, b.data(),
                                    reinterpret_cast<fftw_complex*>(fb.data()), FFTW_ESTIMATE);
        pi = fftw_plan_dft_c2r_3d(P1, P2, np, reinterpret_cast<fftw_complex*>(fa.data()),
                                  b.data(), FFTW_ESTIMATE);
    }
    C2RPlanGuard ga(pf_a), gb(pf_b), gi(pi);

    fftw_execute(pf_a);
    fftw_execute(pf_b);
    const double scale = 1.0 / static_cast<double>(real_len);
    for (std::size_t i = 0; i < cplx_len; ++i) fa[i] *= fb[i] * scale;
    fftw_execute(pi);  // result lands in b

    Grid3 u = make_grid(N1, N2, np);
    for (int i1 = 0; i1 < N1; ++i1)
        for (int i2 = 0; i2 < N2; ++i2)
            for (int i3 = 0; i3 < np; ++i3) u.at(i1, i2, i3) = b[ridx(i1, i2, i3)];
    return u;
}

namespace {

double phi_exact(double x, double y, double z) {
    return std::exp(-64.0 * x * x - 4.0 * y * y) / (2.0 - std::cos(z));
}

// f = -lap(phi) for phi = exp(-64 x^2 - 4 y^2) / (2 - cos z)
double source_exact(double x, double y, double z) {
    const double X = std::exp(-64.0 * x * x);
    const double Y = std::exp(-4.0 * y * y);
    const double d = 2.0 - std::cos(z);
    const double Z = 1.0 / d;
    const double Xpp = (16384.0 * x * x - 128.0) * X;
    const double Ypp = (64.0 * y * y - 8.0) * Y;
    const double s = std::sin(z);
    const double Zpp = (-std::cos(z) * d + 2.0 * s * s) / (d * d * d);
    return -(Xpp * Y * Z + X * Ypp * Z + X * Y * Zpp);
}

}  // namespace

ConvergenceResult convergence_study(double dx1_over_dx2, int coarsest_np, int n_levels,
                                    Tolerance tol) {
    if (n_levels < 2) throw std::invalid_argument("convergence_study: need >= 2 levels");

    ConvergenceResult result;
    for (int lev = 0; lev < n_levels; ++lev) {
        const int np = coarsest_np << lev;
        const double dx3 = 2.0 * M_PI / np;
        const double dx2 = dx3 / (2.0 * M_PI);  // dx3/dx2 = 2 pi held fixed
        const double dx1 = dx1_over_dx2 * dx2;
        const int N1 = static_cast<int>(std::lround(2.0 / dx1));
        const int N2 = static_cast<int>(std::lround(8.0 / dx2));

        const Periodic3DConfig cfg3d(dx1, dx2, dx3, np);
        Grid3 f = make_grid(N1, N2, np);
        for (int i1 = 0; i1 < N1; ++i1) {
            const double x = -1.0 + (i1 + 0.5) * dx1;  // cell centers in x, y
            for (int i2 = 0; i2 < N2; ++i2) {
                const double y = -4.0 + (i2 + 0.5) * dx2;
                for (int i3 = 0; i3 < np; ++i3)
                    f.at(i1, i2, i3) = source_exact(x, y, i3 * dx3);
            }
        }

        const Grid3 u = solve_poisson3d(f, cfg3d, tol);

        // the zero-mode convention leaves an additive constant; fix it by
        // matching means, then take the max norm
        double mean_diff = 0.0;
        for (int i1 = 0; i1 < N1; ++i1)
            for (int i2 = 0; i2 < N2; ++i2)
                for (int i3 = 0; i3 < np; ++i3)
                    mean_diff += phi_exact(-1.0 + (i1 + 0.5) * dx1, -4.0 + (i2 + 0.5) * dx2,
                                           i3 * dx3) -
                                 u.at(i1, i2, i3);
        mean_diff /= static_cast<double>(N1) * N2 * np;

        double err = 0.0;
        for (int i1 = 0; i1 < N1; ++i1)
            for (int i2 = 0; i2 < N2; ++i2)
                for (int i3 = 0; i3 < np; ++i3) {
                    const double phi = phi_exact(-1.0 + (i1 + 0.5) * dx1,
                                                 -4.0 + (i2 + 0.5) * dx2, i3 * dx3);
                    err = std::max(err, std::abs(u.at(i1, i2, i3) + mean_diff - phi));
                }

        result.levels.push_back({N1, N2, np, dx2, err});
    }

    // least-squares slope of log(err) against log(dx2)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int n = static_cast<int>(result.levels.size());
    for (const auto& lv : result.levels) {
        const double lx = std::log(lv.dx2), ly = std::log(lv.max_error);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    result.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return result;
}

}  // namespace lgf
