#ifndef LGF_QUAD1D_HPP
#define LGF_QUAD1D_HPP

#include "lgf/core.hpp"

namespace lgf {

/// Quadrature-point count plus the (eta, gamma_eta, M_eta) certificate
/// that justifies it.
struct QuadPlan {
    int n_pts;
    double eta;
    double gamma_eta;
    double m_eta;
    double delta;
};

/// Default offset used to place eta = (1-delta)^2 c^2/alpha1.
inline constexpr double kDeltaDefault = 0.01;

/// Strip half-width gamma_eta = log(1 + eta/2 + sqrt((1+eta/2)^2 - 1)),
/// evaluated in a form stable for tiny eta.
double gamma_eta(double eta);

/// Integrand bound M_eta = 1 / (2 sqrt(c^2/alpha1 - eta)).
double m_eta(const LatticeConfig& cfg, double eta);

/// f(theta) = 1 / (K^m (K - 1/K)) with K = (phi + sqrt(phi^2-4))/2 and
/// phi = lambda + c^2 - 2 alpha1 cos(theta). Finite and positive on the
/// real path when c^2 > 0.
double integrand(double theta, const LatticeConfig& cfg, int m);

/// Full-period trapezoidal sum (1/N) sum_k cos(n theta_k) f(theta_k) with
/// theta_k = 2 pi k / N - pi, k = 1..N.
double trapezoid_eval(const LatticeConfig& cfg, LatticePoint p, int n_pts);

/// A priori bound 2 M_eta / (e^{gamma_eta (N-n)} - e^{-gamma_eta n}) on the
/// trapezoidal error; requires 0 < eta < c^2/alpha1 and n_pts > n.
double quad_error_bound(const LatticeConfig& cfg, int n, int n_pts, double eta);

/// Closed-form point count N_ap meeting eps at indices up to n_max, using
/// eta = (1-delta)^2 c^2/alpha1.
int n_quad_points(const LatticeConfig& cfg, Tolerance tol, int n_max,
                  double delta = kDeltaDefault);

QuadPlan make_quad_plan(const LatticeConfig& cfg, Tolerance tol, int n_max,
                        double delta = kDeltaDefault);

/// Minimal point count over admissible eta (geometric scan plus a local
/// golden-section refinement around the best grid point).
int n_opt_scan(const LatticeConfig& cfg, Tolerance tol);

/// Difference LGF of the unscreened operator, B_0(n,m) - B_0(0,0), by the
/// same trapezoidal rule. The theta = 0 node takes the removable-singularity
/// limit -m/2. Converges algebraically, not exponentially.
double unscreened_diff(double alpha1, LatticePoint p, int n_pts);

}  // namespace lgf

#endif
