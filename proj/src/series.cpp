#include "lgf/series.hpp"

#include <cassert>
#include <cmath>

namespace lgf {

double g_k(int k, LatticePoint p, const LatticeConfig& cfg) {
    if (k < 0) throw std::invalid_argument("g_k: k must be >= 0");
    if (!p.canonical()) throw std::invalid_argument("g_k: point must be canonical");

    const int n = p.n, m = p.m;
    if (k < n + m || (k - n - m) % 2 != 0) return 0.0;

    const double log_a1 = std::log(cfg.alpha1());
    const double log_lam = std::log(cfg.lambda());
    const double lg_k = std::lgamma(k + 1.0);

    // Kahan summation; all terms nonnegative and <= 1.
    double sum = 0.0, comp = 0.0;
    for (int l = 0; l <= (k - n - m) / 2; ++l) {
        const int c = (k - n - 2 * l - m) / 2;
        const int d = (k - n - 2 * l + m) / 2;
        const double log_term = lg_k - std::lgamma(l + 1.0) - std::lgamma(n + l + 1.0) -
                                std::lgamma(c + 1.0) - std::lgamma(d + 1.0) +
                                (n + 2.0 * l) * log_a1 - k * log_lam;
        const double term = std::exp(log_term);
        assert(term <= 1.0 + 1e-12);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double series_eval(const LatticeConfig& cfg, LatticePoint p, const SeriesPlan& plan) {
    cfg.require_screened();
    if (plan.n_terms < 1) throw std::invalid_argument("series_eval: n_terms must be >= 1");
    p = canonicalize(p);

    const double lam = cfg.lambda();
    const double ratio = lam / (lam + cfg.c2());
    const int start = p.n + p.m;  // g_k = 0 below the support

    double sum = 0.0;
    double weight = std::pow(ratio, start);
    for (int k = start; k < plan.n_terms; ++k, weight *= ratio) {
        if ((k - start) % 2 == 0) sum += weight * g_k(k, p, cfg);
    }
    return sum / (lam + cfg.c2());
}

double truncation_bound(const LatticeConfig& cfg, int n_terms) {
    cfg.require_screened();
    if (n_terms < 0) throw std::invalid_argument("truncation_bound: n_terms must be >= 0");
    const double lam = cfg.lambda();
    return std::pow(lam / (lam + cfg.c2()), n_terms) / cfg.c2();
}

int terms_needed(const LatticeConfig& cfg, Tolerance tol) {
    cfg.require_screened();
    if (tol.eps() >= 1.0 / cfg.c2()) return 0;
    const double lam = cfg.lambda();
    const double inv_log_ratio = 1.0 / std::log((lam + cfg.c2()) / lam);
    int n = static_cast<int>(std::ceil(std::log(1.0 / (tol.eps() * cfg.c2())) * inv_log_ratio));
    if (n < 0) n = 0;
    // guard the ceiling against rounding in the closed form
    while (truncation_bound(cfg, n) > tol.eps()) ++n;
    while (n > 0 && truncation_bound(cfg, n - 1) <= tol.eps()) --n;
    return n;
}

SeriesPlan make_series_plan(const LatticeConfig& cfg, Tolerance tol) {
    const int n = terms_needed(cfg, tol);
    return {n < 1 ? 1 : n, truncation_bound(cfg, n)};
}

double decay_bound(const LatticeConfig& cfg, LatticePoint p) {
    p = canonicalize(p);
    return truncation_bound(cfg, p.n + p.m);
}

double asymptotic_far_field(double c, LatticePoint p) {
    if (!(c > 0.0)) throw std::invalid_argument("asymptotic_far_field: c must be > 0");
    p = canonicalize(p);
    if (p.n == 0 && p.m == 0)
        throw std::invalid_argument("asymptotic_far_field: undefined at the origin");

    const double r = std::hypot(static_cast<double>(p.n), static_cast<double>(p.m));
    const double mu = p.m / r;
    const double nu = p.n / r;
    const double a = 2.0 + c * c / 2.0;
    const double d = mu * mu - nu * nu;
    const double x = (a * a - 4.0) / (1.0 + std::sqrt(1.0 - (1.0 - 4.0 / (a * a)) * d * d));

    const double pre = 0.5 / std::sqrt(2.0 * M_PI * r) / std::pow(x, 0.25) /
                       std::sqrt(mu * mu * std::sqrt(1.0 + nu * nu * x) +
                                 nu * nu * std::sqrt(1.0 + mu * mu * x));
    const double expo = mu * std::acosh(std::sqrt(1.0 + mu * mu * x)) +
                        nu * std::acosh(std::sqrt(1.0 + nu * nu * x));
    return pre * std::exp(-r * expo);
}

}  // namespace lgf
