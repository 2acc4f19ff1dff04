#include "lgf/quad1d.hpp"

#include <cmath>
#include <limits>

namespace lgf {

double gamma_eta(double eta) {
    // log(1 + eta/2 + sqrt((1+eta/2)^2 - 1)) = log1p(eta/2 + sqrt(eta + eta^2/4))
    return std::log1p(0.5 * eta + std::sqrt(eta + 0.25 * eta * eta));
}

double m_eta(const LatticeConfig& cfg, double eta) {
    const double c2a = cfg.c2() / cfg.alpha1();
    if (!(eta > 0.0) || !(eta < c2a))
        throw std::invalid_argument("m_eta: eta must be in (0, c^2/alpha1)");
    return 0.5 / std::sqrt(c2a - eta);
}

double integrand(double theta, const LatticeConfig& cfg, int m) {
    cfg.require_screened();
    const double phi = cfg.lambda() + cfg.c2() - 2.0 * cfg.alpha1() * std::cos(theta);
    const double K = 0.5 * (phi + std::sqrt(phi * phi - 4.0));
    return 1.0 / (std::pow(K, m) * (K - 1.0 / K));
}

double trapezoid_eval(const LatticeConfig& cfg, LatticePoint p, int n_pts) {
    cfg.require_screened();
    if (n_pts < 1) throw std::invalid_argument("trapezoid_eval: n_pts must be >= 1");
    p = canonicalize(p);

    const double lam_c2 = cfg.lambda() + cfg.c2();
    const double a1 = cfg.alpha1();
    double sum = 0.0;
    for (int k = 1; k <= n_pts; ++k) {
        const double theta = 2.0 * M_PI * k / n_pts - M_PI;
        const double phi = lam_c2 - 2.0 * a1 * std::cos(theta);
        const double K = 0.5 * (phi + std::sqrt(phi * phi - 4.0));
        sum += std::cos(p.n * theta) / (std::pow(K, p.m) * (K - 1.0 / K));
    }
    return sum / n_pts;
}

double quad_error_bound(const LatticeConfig& cfg, int n, int n_pts, double eta) {
    if (n < 0) throw std::invalid_argument("quad_error_bound: n must be >= 0");
    if (n_pts <= n) throw std::invalid_argument("quad_error_bound: n_pts must exceed n");
    const double g = gamma_eta(eta);
    const double M = m_eta(cfg, eta);  // validates eta
    return 2.0 * M / (std::exp(g * (n_pts - n)) - std::exp(-g * n));
}

int n_quad_points(const LatticeConfig& cfg, Tolerance tol, int n_max, double delta) {
    cfg.require_screened();
    if (!(delta > 0.0) || !(delta < 1.0))
        throw std::invalid_argument("n_quad_points: delta must be in (0,1)");
    if (n_max < 0) throw std::invalid_argument("n_quad_points: n_max must be >= 0");

    const double c_over_sa = std::sqrt(cfg.c2() / cfg.alpha1());
    const double eta = (1.0 - delta) * (1.0 - delta) * c_over_sa * c_over_sa;
    const double g = gamma_eta(eta);
    const double arg = 1.0 / (tol.eps() * c_over_sa * std::sqrt(2.0 * delta - delta * delta));
    if (!(arg > 1.0))
        throw std::domain_error("n_quad_points: tolerance already met with no points");
    return static_cast<int>(std::ceil(std::log(arg) / g + n_max));
}

QuadPlan make_quad_plan(const LatticeConfig& cfg, Tolerance tol, int n_max, double delta) {
    const double eta = (1.0 - delta) * (1.0 - delta) * cfg.c2() / cfg.alpha1();
    const int n_pts = n_quad_points(cfg, tol, n_max, delta);
    return {n_pts, eta, gamma_eta(eta), m_eta(cfg, eta), delta};
}

namespace {

// Point count as a real number for a given eta (before the ceiling).
double n_for_eta(const LatticeConfig& cfg, double eps, double eta) {
    const double M = 0.5 / std::sqrt(cfg.c2() / cfg.alpha1() - eta);
    return std::log(2.0 * M / eps) / gamma_eta(eta);
}

}  // namespace

int n_opt_scan(const LatticeConfig& cfg, Tolerance tol) {
    cfg.require_screened();
    const double eps = tol.eps();
    const double c2a = cfg.c2() / cfg.alpha1();
    const double lo = std::numeric_limits<double>::epsilon();
    const double hi = c2a * (1.0 - 1e-9);
    constexpr int kGrid = 4096;

    double best = std::numeric_limits<double>::infinity();
    int best_i = 0;
    const double step = std::log(hi / lo) / (kGrid - 1);
    for (int i = 0; i < kGrid; ++i) {
        const double eta = lo * std::exp(step * i);
        const double v = n_for_eta(cfg, eps, eta);
        if (v < best) {
            best = v;
            best_i = i;
        }
    }

    // Golden-section refinement between the grid neighbors of the minimum;
    // the grid alone can land a few points high when N is large.
    double a = lo * std::exp(step * std::max(0, best_i - 1));
    double b = lo * std::exp(step * std::min(kGrid - 1, best_i + 1));
    constexpr double kGold = 0.6180339887498949;
    for (int it = 0; it < 200; ++it) {
        const double c1 = b - kGold * (b - a);
        const double c2 = a + kGold * (b - a);
        if (n_for_eta(cfg, eps, c1) < n_for_eta(cfg, eps, c2))
            b = c2;
        else
            a = c1;
    }
    best = std::min(best, n_for_eta(cfg, eps, 0.5 * (a + b)));
    return static_cast<int>(std::ceil(best));
}

double unscreened_diff(double alpha1, LatticePoint p, int n_pts) {
    if (!(alpha1 > 0.0) || !(alpha1 <= 1.0))
        throw std::invalid_argument("unscreened_diff: alpha1 must be in (0, 1]");
    if (n_pts < 16) throw std::invalid_argument("unscreened_diff: n_pts must be >= 16");
    p = canonicalize(p);
    if (p.n == 0 && p.m == 0) return 0.0;

    const double lam = 2.0 + 2.0 * alpha1;
    const double h = 2.0 * M_PI / n_pts;
    double sum = 0.0;
    for (int k = 1; k <= n_pts; ++k) {
        const double theta = 2.0 * M_PI * k / n_pts - M_PI;
        if (std::abs(theta) < 0.5 * h) {
            // removable singularity: (cos(n theta)/K^m - 1)/(K - 1/K) -> -m/2
            sum += -0.5 * p.m;
            continue;
        }
        const double phi = lam - 2.0 * alpha1 * std::cos(theta);
        const double disc = std::max(phi * phi - 4.0, 0.0);
        const double K = 0.5 * (phi + std::sqrt(disc));
        sum += (std::cos(p.n * theta) / std::pow(K, p.m) - 1.0) / (K - 1.0 / K);
    }
    return sum / n_pts;
}

}  // namespace lgf
