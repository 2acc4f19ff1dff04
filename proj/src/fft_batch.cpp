#include "lgf/fft_batch.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include <fftw3.h>

#include "fft_internal.hpp"

namespace lgf {

namespace detail {

std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace detail

using detail::fftw_mutex;

namespace {

// Unnormalized inverse of a real-coefficient half-complex spectrum:
// out[j] = in[0] + 2 sum_{k=1}^{N-1} in[k] cos(2 pi j k / (2N)) + in[N] (-1)^j
// with 2N outputs, via FFTW's halfcomplex-to-real transform. `in` holds
// N+1 real cosine coefficients (imaginary parts are zero by evenness).
std::vector<double> inverse_real_fft(const std::vector<double>& coef, int out_len) {
    const int n_half = static_cast<int>(coef.size()) - 1;
    if (out_len != 2 * n_half)
        throw std::invalid_argument("inverse_real_fft: output length must be 2 N_pts");

    std::vector<double> in(static_cast<std::size_t>(out_len), 0.0);
    for (int k = 0; k <= n_half; ++k) in[k] = coef[k];  // r_k; i_k stay zero

    std::vector<double> out(static_cast<std::size_t>(out_len));
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        plan = fftw_plan_r2r_1d(out_len, in.data(), out.data(), FFTW_HC2R, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

LgfRow batch_row_impl(const LatticeConfig& cfg, int m, int L, Tolerance tol, double delta,
                      std::int64_t sample_cap, bool nyquist_correction) {
    cfg.require_screened();
    if (m < 0 || L < 0) throw std::invalid_argument("batch_row: m, L must be >= 0");

    const double c_over_sa = std::sqrt(cfg.c2() / cfg.alpha1());
    const double eta = (1.0 - delta) * (1.0 - delta) * c_over_sa * c_over_sa;
    const double g = gamma_eta(eta);
    const double log_arg =
        std::log(1.0 / (tol.eps() * c_over_sa * std::sqrt(2.0 * delta - delta * delta)));
    const int n_pts_bound = static_cast<int>(std::ceil(0.5 * (log_arg / g + L)));
    const int n_pts = std::max(n_pts_bound, L + 1);

    if (2 * static_cast<std::int64_t>(n_pts) > sample_cap)
        throw std::length_error("batch_row: transform exceeds the sample cap; chunk the row");

    std::vector<double> coef(static_cast<std::size_t>(n_pts) + 1, 0.0);
    for (int k = 0; k < n_pts; ++k) coef[k] = integrand(M_PI * k / n_pts, cfg, m);
    // coef[n_pts] (the Nyquist slot) deliberately stays 0; the f(pi) term
    // enters as an explicit correction below so it can be toggled off in
    // the regression variant.

    std::vector<double> out = inverse_real_fft(coef, 2 * n_pts);

    const double scale = 1.0 / (2.0 * n_pts);
    const double f_pi = integrand(M_PI, cfg, m);

    LgfRow row;
    row.m = m;
    row.alpha1 = cfg.alpha1();
    row.c2 = cfg.c2();
    row.eps = tol.eps();
    row.n_pts_used = n_pts;
    row.method = {Method::FftBatch, quad_error_bound(cfg, L, 2 * n_pts, eta), n_pts};
    row.values.resize(static_cast<std::size_t>(L) + 1);
    for (int n = 0; n <= L; ++n) {
        double v = out[n] * scale;
        if (nyquist_correction) v += (n % 2 == 0 ? 1.0 : -1.0) * f_pi * scale;
        row.values[n] = v;
    }
    return row;
}

}  // namespace

LgfRow batch_row(const LatticeConfig& cfg, int m, int L, Tolerance tol, double delta,
                 std::int64_t sample_cap) {
    return batch_row_impl(cfg, m, L, tol, delta, sample_cap, true);
}

LgfRow batch_row_no_nyquist(const LatticeConfig& cfg, int m, int L, Tolerance tol,
                            double delta) {
    return batch_row_impl(cfg, m, L, tol, delta, kFftSampleCapDefault, false);
}

LgfTable batch_table(const LatticeConfig& cfg, int m_max, int L, Tolerance tol, double delta) {
    if (m_max < 0) throw std::invalid_argument("batch_table: m_max must be >= 0");
    LgfTable table;
    table.rows.reserve(static_cast<std::size_t>(m_max) + 1);
    for (int m = 0; m <= m_max; ++m) table.rows.push_back(batch_row(cfg, m, L, tol, delta));
    return table;
}

std::vector<double> unscreened_diff_row(double alpha1, int m, int L, int n_half_pts) {
    if (!(alpha1 > 0.0) || !(alpha1 <= 1.0))
        throw std::invalid_argument("unscreened_diff_row: alpha1 must be in (0, 1]");
    if (m < 0 || L < 0) throw std::invalid_argument("unscreened_diff_row: m, L must be >= 0");
    if (n_half_pts <= L) throw std::invalid_argument("unscreened_diff_row: too few nodes");

    const double lam = 2.0 + 2.0 * alpha1;
    const int N = n_half_pts;

    // Split the integrand (cos(n t)/K^m - 1)/(K - 1/K) into an FFT-able part
    // f0 = 1/(K^m (K - 1/K)) and an n-independent part g = 1/(K - 1/K);
    // both diverge at t = 0, where the combined node takes the limit -m/2.
    std::vector<double> coef(static_cast<std::size_t>(N) + 1, 0.0);
    double g_sum = 0.0;
    for (int k = 1; k <= N; ++k) {
        const double theta = M_PI * k / N;
        const double phi = lam - 2.0 * alpha1 * std::cos(theta);
        const double K = 0.5 * (phi + std::sqrt(std::max(phi * phi - 4.0, 0.0)));
        const double g = 1.0 / (K - 1.0 / K);
        coef[k] = g / std::pow(K, m);
        g_sum += (k < N ? 2.0 : 1.0) * g;  // theta = pi appears once per circle
    }

    std::vector<double> out = inverse_real_fft(coef, 2 * N);
    const double scale = 1.0 / (2.0 * N);

    std::vector<double> row(static_cast<std::size_t>(L) + 1);
    for (int n = 0; n <= L; ++n) row[n] = (out[n] - g_sum - 0.5 * m) * scale;
    return row;
}

}  // namespace lgf
