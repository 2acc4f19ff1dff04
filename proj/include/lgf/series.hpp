#ifndef LGF_SERIES_HPP
#define LGF_SERIES_HPP

#include "lgf/core.hpp"

namespace lgf {

/// Number of expansion terms together with the truncation bound
/// (1/c^2) (lambda/(lambda+c^2))^N that certifies it.
struct SeriesPlan {
    int n_terms;
    double bound;
};

/// Fourier coefficient of (rho(xi)/lambda)^k at (n,m): a finite nonnegative
/// multinomial sum, zero unless k >= n+m with matching parity. Evaluated in
/// log space per summand; every summand is <= 1 after the lambda^k division.
double g_k(int k, LatticePoint p, const LatticeConfig& cfg);

/// N-term partial sum G_N(c, p). Skips k < n+m and wrong-parity k.
double series_eval(const LatticeConfig& cfg, LatticePoint p, const SeriesPlan& plan);

/// |B_c(p) - G_N(c,p)| <= (1/c^2) (lambda/(lambda+c^2))^N for every p.
double truncation_bound(const LatticeConfig& cfg, int n_terms);

/// Smallest N with truncation_bound(cfg, N) <= eps.
int terms_needed(const LatticeConfig& cfg, Tolerance tol);

SeriesPlan make_series_plan(const LatticeConfig& cfg, Tolerance tol);

/// |B_c(n,m)| <= (1/c^2) (lambda/(lambda+c^2))^(n+m).
double decay_bound(const LatticeConfig& cfg, LatticePoint p);

/// Far-field closed form for the square lattice (alpha1 = 1). Diagnostic
/// only: O(1/r) relative error, not tolerance-certified, p != (0,0).
double asymptotic_far_field(double c, LatticePoint p);

}  // namespace lgf

#endif
