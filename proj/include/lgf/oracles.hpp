#ifndef LGF_ORACLES_HPP
#define LGF_ORACLES_HPP

#include <vector>

#include "lgf/core.hpp"
#include "lgf/fft_batch.hpp"

namespace lgf {

/// Tensor-product trapezoidal sum of the defining 2D integral over
/// [-pi,pi]^2 with n_grid nodes per axis. Exponentially convergent for
/// c^2 > 0.
double oracle_2d_quadrature(const LatticeConfig& cfg, LatticePoint p, int n_grid);

/// Dense solution of L_c u = delta on [-R,R]^2 with zero Dirichlet values
/// outside the box.
class TruncatedSolve {
  public:
    TruncatedSolve(int radius, std::vector<double> values)
        : radius_(radius), values_(std::move(values)) {}

    int radius() const { return radius_; }
    double at(int n, int m) const {
        return values_[static_cast<std::size_t>(n + radius_) * (2 * radius_ + 1) + (m + radius_)];
    }

  private:
    int radius_;
    std::vector<double> values_;
};

inline constexpr int kSolveRadiusCap = 160;

/// difference_mode subtracts u(0,0), which is the meaningful quantity when
/// c = 0 (the unscreened LGF is defined only up to a constant).
TruncatedSolve oracle_truncated_solve(const LatticeConfig& cfg, int radius,
                                      bool difference_mode = false);

/// Exponentially scaled modified Bessel function e^{-x} I_n(x), x >= 0,
/// by downward (Miller) recurrence with sum normalization.
double scaled_bessel_i(int n, double x);

struct BesselQuadResult {
    double value = 0.0;
    double tail_bound = 0.0;  // e^{-c^2 t_max} / c^2
    bool tail_ok = false;     // tail_bound <= requested tolerance
};

/// Composite-Simpson quadrature of the Bessel-product representation on
/// [0, t_max]. Oracle-grade: flags (without failing) the small-c regime
/// where the truncation tail cannot meet the tolerance.
BesselQuadResult oracle_bessel(const LatticeConfig& cfg, LatticePoint p, double t_max,
                               int n_nodes, double tol_for_flag);

struct BesselTableResult {
    std::vector<std::vector<double>> values;  // [m][n]
    double tail_bound = 0.0;
    bool tail_ok = false;
};

/// Whole-rectangle version of oracle_bessel, sharing the Bessel recurrences
/// across points: one pass per node yields every order at once.
BesselTableResult oracle_bessel_table(const LatticeConfig& cfg, int n_max, int m_max,
                                      double t_max, int n_nodes, double tol_for_flag);

struct ResidualReport {
    double max_interior_residual = 0.0;   // off-origin
    double origin_residual_minus_one = 0.0;
    int boundary_skipped = 0;
};

/// Applies the operator stencil to a canonical-quadrant table, fetching
/// across-axis neighbors by symmetry. Requires at least a 3x3 table.
ResidualReport residual_check(const LgfTable& table, const LatticeConfig& cfg);

}  // namespace lgf

#endif
